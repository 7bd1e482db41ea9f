//! Command implementations and their JSON, CSV and table renderings.
//!
//! Every command returns an [`Outcome`] holding all three renderings, so
//! the output for a fixed configuration never depends on scheduling: all
//! parallel searches sort their results before they reach this layer.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::codim3::{
    pell_family, pell_members_up_to, search_b1_equals_2, search_b2_equals_2, search_sum_lt_12,
    DEFAULT_B1_BOUND, DEFAULT_SUM_BOUND,
};
use crate::dioph::{
    check_component, integer_point_search, Component, ComponentVerdict, Generator,
    ProductEquation,
};
use crate::error::{Error, Result};
use crate::exact::{brace_list, DegreeSequence};
use crate::gorenstein::{
    candidate_pairs, gor_search, gorenstein_betti, selfdual_search, verify_fixture_components,
    ComponentReport, FixtureCertificate, DEFAULT_GOR_BOUND,
};
use crate::herzog_kuhl::{
    b_vector, conjecture_report, parity_check, pi_vector, render_betti_diagram, BettiVector,
    ObstructionRecord,
};
use crate::rules::{is_excluded, min_multiplier, rule_total_rank, MultiplierCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// Completed, and found a violation or a mismatch.
    Flagged,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Flagged => 2,
        }
    }

    fn flag_if(cond: bool) -> Status {
        if cond {
            Status::Flagged
        } else {
            Status::Ok
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub command: &'static str,
    pub status: Status,
    pub result: Value,
    pub table: String,
    pub csv: String,
}

impl Outcome {
    pub fn json_document(&self) -> Value {
        json!({
            "command": self.command,
            "version": env!("CARGO_PKG_VERSION"),
            "status": self.status,
            "result": self.result,
        })
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json_document()).expect("serializable");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.csv.clone(),
            OutputFormat::Table => self.table.clone(),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub const RECORD_COLUMNS: [&str; 7] = ["c", "D", "B", "total", "conj1_violations", "conj2_violated", "min_L"];

/// Records in the fixed column layout.
pub fn records_csv(records: &[ObstructionRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(RECORD_COLUMNS).expect("in-memory write");
    for r in records {
        w.write_record([
            r.d.codim().to_string(),
            r.d.to_string(),
            r.b.to_string(),
            r.report.total.to_string(),
            brace_list(&r.report.conj1_violations),
            r.report.conj2_violated.to_string(),
            r.min_l.map(|l| l.to_string()).unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn rows_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

/// Left-aligned columns separated by two spaces.
fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn record_rows(records: &[ObstructionRecord]) -> Vec<Vec<String>> {
    records
        .iter()
        .map(|r| {
            vec![
                r.d.codim().to_string(),
                r.d.to_string(),
                r.b.to_string(),
                r.report.total.to_string(),
                brace_list(&r.report.conj1_violations),
                r.report.conj2_violated.to_string(),
                r.min_l.map(|l| l.to_string()).unwrap_or_default(),
            ]
        })
        .collect()
}

fn records_table(records: &[ObstructionRecord]) -> String {
    text_table(&RECORD_COLUMNS, &record_rows(records))
}

fn with_min_l(mut rec: ObstructionRecord, gorenstein: bool, l_max: u64) -> ObstructionRecord {
    rec.min_l = min_multiplier(&rec.d, gorenstein, l_max).min_l();
    rec
}

pub const DEFAULT_L_MAX: u64 = 10;

pub fn cmd_betti(d: &DegreeSequence) -> Result<Outcome> {
    let pi = pi_vector(d);
    let b = b_vector(d);
    let report = conjecture_report(&b);
    let diagram = render_betti_diagram(d, &b, true)?;
    let mut table = String::new();
    let _ = writeln!(table, "D  = {d}");
    let _ = writeln!(table, "pi = {}", brace_list(&pi.strings()));
    let _ = writeln!(table, "B  = {b}");
    table.push('\n');
    table.push_str(&diagram);
    table.push('\n');
    let _ = writeln!(table, "total = {}", report.total);
    if report.is_ci_pattern {
        let _ = writeln!(table, "complete intersection pattern (c choose i)");
    }
    if report.conj1_ok {
        let _ = writeln!(table, "B_i >= (c choose i): holds");
    } else {
        let _ = writeln!(
            table,
            "B_i >= (c choose i): fails at i in {}",
            brace_list(&report.conj1_violations)
        );
    }
    let _ = writeln!(
        table,
        "total >= {}: {}",
        report.conj2_threshold,
        if report.conj2_violated {
            "fails"
        } else if report.is_ci_pattern {
            "exempt"
        } else {
            "holds"
        }
    );
    let record = ObstructionRecord {
        d: d.clone(),
        b: b.clone(),
        report: report.clone(),
        min_l: None,
    };
    Ok(Outcome {
        command: "betti",
        status: Status::flag_if(report.any_violation()),
        result: json!({
            "D": to_value(d),
            "pi": to_value(&pi),
            "B": to_value(&b),
            "report": to_value(&report),
            "diagram": diagram,
        }),
        table,
        csv: records_csv(&[record]),
    })
}

pub fn cmd_dual(d: &DegreeSequence) -> Result<Outcome> {
    let dual = d.dual();
    let b = b_vector(d);
    let b_dual = b_vector(&dual);
    let reversed = b.reversed() == b_dual;
    let table = format!(
        "D      = {d}\nD*     = {dual}\nB(D)   = {b}\nB(D*)  = {b_dual}\nB(D*) is B(D) reversed: {reversed}\nself-dual: {}\n",
        d.is_self_dual()
    );
    let rows = vec![
        vec![d.to_string(), b.to_string()],
        vec![dual.to_string(), b_dual.to_string()],
    ];
    Ok(Outcome {
        command: "dual",
        status: Status::flag_if(!reversed),
        result: json!({
            "D": to_value(d),
            "dual": to_value(&dual),
            "B": to_value(&b),
            "B_dual": to_value(&b_dual),
            "reversed": reversed,
            "self_dual": d.is_self_dual(),
        }),
        table,
        csv: rows_csv(&["D", "B"], &rows),
    })
}

pub fn cmd_pell_family(n: usize) -> Result<Outcome> {
    let members = pell_family(n);
    let rows: Vec<Vec<String>> = members
        .iter()
        .map(|m| {
            let (u, v) = m.pell_pair();
            vec![
                m.n.to_string(),
                m.d.to_string(),
                m.b.to_string(),
                format!("({u}, {v})"),
                m.satisfies_pell().to_string(),
            ]
        })
        .collect();
    let header = ["n", "D", "B", "(u, v)", "v^2 - 2u^2 = 1"];
    let records: Vec<ObstructionRecord> = members.iter().map(|m| ObstructionRecord::new(m.d.clone())).collect();
    Ok(Outcome {
        command: "pell-family",
        status: Status::Ok,
        result: json!({ "members": to_value(&members) }),
        table: text_table(&header, &rows),
        csv: records_csv(&records),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum C3Kind {
    /// `B_1(D) = 2`
    B1,
    /// `B_2(D) = 2`
    B2,
    /// `sum B(D) < 12`
    Sum,
}

pub fn cmd_classify_c3(kind: C3Kind, bound: Option<i64>) -> Result<Outcome> {
    let (seqs, exact_checks, bound) = match kind {
        C3Kind::B1 => {
            let bound = bound.unwrap_or(DEFAULT_B1_BOUND);
            (search_b1_equals_2(bound)?, None, bound)
        }
        C3Kind::B2 => {
            let bound = bound.unwrap_or(DEFAULT_B1_BOUND);
            (search_b2_equals_2(bound)?, None, bound)
        }
        C3Kind::Sum => {
            let bound = bound.unwrap_or(DEFAULT_SUM_BOUND);
            let scan = search_sum_lt_12(bound)?;
            (scan.rows.into_iter().map(|r| r.d).collect(), Some(scan.exact_checks), bound)
        }
    };
    let records: Vec<ObstructionRecord> = seqs
        .into_iter()
        .map(|d| with_min_l(ObstructionRecord::new(d), false, DEFAULT_L_MAX))
        .collect();
    let mut table = format!(
        "bounded certificate: all nondegenerate D = (0, x, y, z) with z <= {bound}\n\n"
    );
    table.push_str(&records_table(&records));
    let mut result = json!({
        "kind": to_value(&kind),
        "bound": bound,
        "bounded_certificate": true,
        "records": to_value(&records),
    });
    if let Some(n) = exact_checks {
        result["exact_checks"] = json!(n);
    }
    Ok(Outcome {
        command: "classify-c3",
        status: Status::flag_if(records.iter().any(|r| r.report.any_violation())),
        result,
        table,
        csv: records_csv(&records),
    })
}

pub fn cmd_dioph_search(eq: &ProductEquation, bound: u64) -> Result<Outcome> {
    let points = integer_point_search(eq, bound)?;
    let mut rows = Vec::new();
    let mut found = Vec::new();
    for p in &points {
        let d = DegreeSequence::from_tail(p)?;
        let b = b_vector(&d);
        let realizes = *b.get(0) == eq.l && *b.get(eq.i) == eq.alpha;
        rows.push(vec![brace_list(p), b.to_string(), realizes.to_string()]);
        found.push(json!({
            "point": p.iter().map(|v| Value::Number(v.to_string().parse().expect("integer"))).collect::<Vec<_>>(),
            "B": to_value(&b),
            "realizes": realizes,
        }));
    }
    let header = ["point", "B", "realizes"];
    let mut table = format!("{eq}, bound {bound}: {} primitive solutions\n\n", points.len());
    table.push_str(&text_table(&header, &rows));
    Ok(Outcome {
        command: "dioph-search",
        status: Status::Ok,
        result: json!({
            "equation": to_value(eq),
            "bound": bound,
            "bounded_certificate": true,
            "solutions": found,
        }),
        table,
        csv: rows_csv(&header, &rows),
    })
}

/// Samples of the real curve `2(y - x)(1 - x) = y`, i.e.
/// `y = 2x(1 - x) / (1 - 2x)`, on a uniform grid of `[x_min, x_max]`.
/// Grid points too close to the pole `x = 1/2` are skipped.
pub fn curve_samples(x_min: f64, x_max: f64, samples: usize) -> Vec<(f64, f64)> {
    let steps = samples.max(2) - 1;
    (0..=steps)
        .map(|k| x_min + (x_max - x_min) * k as f64 / steps as f64)
        .filter(|x| (1.0 - 2.0 * x).abs() > 1e-3)
        .map(|x| (x, 2.0 * x * (1.0 - x) / (1.0 - 2.0 * x)))
        .collect()
}

pub fn curve_csv(samples: &[(f64, f64)]) -> String {
    let rows: Vec<Vec<String>> = samples
        .iter()
        .map(|(x, y)| vec![format!("{x:.6}"), format!("{y:.6}")])
        .collect();
    rows_csv(&["x", "y"], &rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub pair: (u64, u64),
    pub betti: Option<BettiVector>,
    pub candidate: bool,
    pub bound: u64,
    pub points_found: Vec<[u64; 3]>,
    pub fixture_verdicts: Vec<ComponentReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub c: usize,
    pub bound: u64,
    pub bounded_certificate: bool,
    pub pairs: Vec<PairReport>,
    pub fixtures: Option<FixtureCertificate>,
}

impl GorensteinReport {
    pub fn all_empty(&self) -> bool {
        self.pairs.iter().all(|p| p.points_found.is_empty())
            && self.fixtures.as_ref().is_none_or(FixtureCertificate::all_empty)
    }
}

/// Runs the bounded search on every candidate pair, or on the given pair,
/// and classifies the stored fixture components.
pub fn gorenstein_report(
    c: usize,
    bound: u64,
    only: Option<(u64, u64)>,
    fixtures: Option<&std::path::Path>,
) -> Result<GorensteinReport> {
    let candidates: Vec<(u64, u64)> = candidate_pairs(c)?.iter().map(|p| (p.a, p.b)).collect();
    let pairs = match only {
        Some(p) => vec![p],
        None => candidates.clone(),
    };
    let certificate = verify_fixture_components(c, fixtures)?;
    let mut reports = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let verdicts: Vec<ComponentReport> = certificate
            .components
            .iter()
            .filter(|r| r.pair == Some((a, b)))
            .cloned()
            .collect();
        reports.push(PairReport {
            pair: (a, b),
            betti: gorenstein_betti(c, a, b)?,
            candidate: candidates.contains(&(a, b)),
            bound,
            points_found: gor_search(c, a, b, bound)?,
            fixture_verdicts: verdicts,
        });
    }
    Ok(GorensteinReport {
        c,
        bound,
        bounded_certificate: true,
        pairs: reports,
        fixtures: only.is_none().then_some(certificate),
    })
}

fn verdict_text(v: &ComponentVerdict) -> String {
    match v {
        ComponentVerdict::CoordinateDegenerate { .. } => "coordinate-degenerate".into(),
        ComponentVerdict::NoAdmissiblePoint { rational_points } => {
            format!("no admissible point ({rational_points} rational points on z = 1)")
        }
        ComponentVerdict::Admissible { points } => {
            let pts: Vec<String> = points.iter().map(|p| brace_list(p)).collect();
            format!("admissible: {}", pts.join(" "))
        }
    }
}

pub fn cmd_gorenstein(
    c: usize,
    bound: u64,
    only: Option<(u64, u64)>,
    fixtures: Option<&std::path::Path>,
) -> Result<Outcome> {
    let report = gorenstein_report(c, bound, only, fixtures)?;
    let header = ["pair", "betti", "candidate", "points <= bound", "fixture components"];
    let rows: Vec<Vec<String>> = report
        .pairs
        .iter()
        .map(|p| {
            vec![
                format!("({}, {})", p.pair.0, p.pair.1),
                p.betti.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into()),
                p.candidate.to_string(),
                if p.points_found.is_empty() {
                    "none".into()
                } else {
                    p.points_found.iter().map(|t| brace_list(t)).collect::<Vec<_>>().join(" ")
                },
                p.fixture_verdicts.len().to_string(),
            ]
        })
        .collect();
    let mut table = format!(
        "codimension {c}, bounded certificate for 0 < x < y < z <= {bound}\n\n"
    );
    table.push_str(&text_table(&header, &rows));
    if let Some(cert) = &report.fixtures {
        let _ = writeln!(table, "\nfixture components ({}):", cert.source);
        for comp in &cert.components {
            let label = comp.pair.map(|(a, b)| format!("X_{{{a},{b}}}")).unwrap_or_default();
            let _ = writeln!(table, "  {label} {}: {}", comp.component, verdict_text(&comp.verdict));
        }
    }
    Ok(Outcome {
        command: "gorenstein",
        status: Status::flag_if(!report.all_empty()),
        result: to_value(&report),
        table,
        csv: rows_csv(&header, &rows),
    })
}

pub fn cmd_selfdual(c: usize, d_max: u64) -> Result<Outcome> {
    let records: Vec<ObstructionRecord> = selfdual_search(c, d_max)?
        .into_iter()
        .map(|r| with_min_l(r, true, DEFAULT_L_MAX))
        .collect();
    let mut table = format!(
        "self-dual D with d_c <= {d_max}, B_0 = 1, B_1 >= {}: {} violating\n\n",
        c + 2,
        records.len()
    );
    table.push_str(&records_table(&records));
    Ok(Outcome {
        command: "selfdual",
        status: Status::flag_if(!records.is_empty()),
        result: json!({
            "c": c,
            "d_max": d_max,
            "bounded_certificate": true,
            "records": to_value(&records),
        }),
        table,
        csv: records_csv(&records),
    })
}

pub fn cmd_min_multiplier(d: &DegreeSequence, gorenstein: bool, l_max: u64) -> Result<Outcome> {
    let cert: MultiplierCertificate = min_multiplier(d, gorenstein, l_max);
    let mut table = format!("D = {d}\nB = {}\ngorenstein: {gorenstein}\n\n", cert.b);
    for (l, verdicts) in &cert.verdicts_per_l {
        let excluded: Vec<String> = verdicts
            .iter()
            .filter(|v| v.excluded)
            .map(|v| format!("{} ({})", v.rule_id, v.detail))
            .collect();
        if excluded.is_empty() {
            let _ = writeln!(table, "L = {l}: not excluded");
        } else {
            let _ = writeln!(table, "L = {l}: excluded by {}", excluded.join("; "));
        }
    }
    match cert.min_l() {
        Some(l) => {
            let _ = writeln!(table, "\nminimal L = {l}");
        }
        None => {
            let _ = writeln!(table, "\nno admissible L <= {l_max}");
        }
    }
    let mut record = ObstructionRecord::new(d.clone());
    record.min_l = cert.min_l();
    Ok(Outcome {
        command: "min-multiplier",
        status: Status::Ok,
        result: to_value(&cert),
        table,
        csv: records_csv(&[record]),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Section {
    #[value(name = "c3-b1")]
    C3B1,
    #[value(name = "c3-sum")]
    C3Sum,
    #[value(name = "c4-table")]
    C4Table,
    Gor5,
    Gor6,
    #[value(name = "selfdual15")]
    SelfDual15,
    All,
}

impl Section {
    pub fn tag(self) -> &'static str {
        match self {
            Section::C3B1 => "c3-b1",
            Section::C3Sum => "c3-sum",
            Section::C4Table => "c4-table",
            Section::Gor5 => "gor5",
            Section::Gor6 => "gor6",
            Section::SelfDual15 => "selfdual15",
            Section::All => "all",
        }
    }

    pub const EACH: [Section; 6] = [
        Section::C3B1,
        Section::C3Sum,
        Section::C4Table,
        Section::Gor5,
        Section::Gor6,
        Section::SelfDual15,
    ];
}

impl std::str::FromStr for Section {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Section::EACH
            .iter()
            .chain([Section::All].iter())
            .find(|sec| sec.tag() == s)
            .copied()
            .ok_or_else(|| Error::InvalidParameters(format!("unknown section {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub section: &'static str,
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

struct Checks {
    section: &'static str,
    items: Vec<Check>,
}

impl Checks {
    fn new(section: &'static str) -> Self {
        Checks {
            section,
            items: Vec::new(),
        }
    }

    fn eq(&mut self, name: impl Into<String>, expected: impl ToString, got: impl ToString) {
        let (expected, got) = (expected.to_string(), got.to_string());
        self.items.push(Check {
            section: self.section,
            name: name.into(),
            pass: expected == got,
            expected,
            got,
        });
    }
}

fn seq_list(seqs: &[DegreeSequence]) -> String {
    seqs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// The codimension 4 `B_1 = 2` rows, with the two entries that the
/// alternating sum forces.
pub const C4_ROWS: [(&[i64], &[i64]); 5] = [
    (&[0, 1, 4, 5, 6], &[1, 2, 5, 6, 2]),
    (&[0, 3, 13, 15, 16], &[1, 2, 12, 26, 15]),
    (&[0, 9, 42, 44, 45], &[1, 2, 90, 243, 154]),
    (&[0, 20, 95, 96, 100], &[1, 2, 512, 625, 114]),
    (&[0, 35, 168, 170, 171], &[1, 2, 1275, 3724, 2450]),
];

/// The rows of the codimension 3 table of `D` with `sum B(D) < 12`.
pub const C3_SUM_ROWS: [(&[i64], &[i64]); 4] = [
    (&[0, 1, 2, 3], &[1, 3, 3, 1]),
    (&[0, 1, 3, 4], &[1, 2, 2, 1]),
    (&[0, 1, 5, 6], &[2, 3, 3, 2]),
    (&[0, 3, 5, 8], &[1, 4, 4, 1]),
];

pub const SELFDUAL15_D: [i64; 16] = [0, 2, 3, 4, 5, 6, 7, 9, 11, 13, 14, 15, 16, 17, 18, 20];
pub const SELFDUAL15_B: [i64; 16] = [
    1, 85, 630, 2295, 4998, 6630, 4590, 2210, 2210, 4590, 6630, 4998, 2295, 630, 85, 1,
];

pub const CODIM5_PAIRS: [(u64, u64); 16] = [
    (7, 9), (7, 10), (7, 11), (7, 12), (7, 13), (7, 14), (7, 15), (8, 10),
    (8, 11), (8, 12), (8, 13), (8, 14), (9, 11), (9, 12), (9, 13), (10, 12),
];

/// The component `(5y - 2z, 10x - 3z)` of `X_{10,11}`, which carries `(3, 4, 10)`.
pub fn x10_11_component() -> Component {
    Component {
        generators: vec![Generator::linear(0, 5, -2), Generator::linear(10, 0, -3)],
    }
}

fn ds(v: &[i64]) -> DegreeSequence {
    DegreeSequence::from_i64s(v).expect("valid table row")
}

fn bv(v: &[i64]) -> BettiVector {
    BettiVector::from_i64s(v).expect("valid table row")
}

fn section_checks(section: Section, fixtures: Option<&std::path::Path>) -> Result<Vec<Check>> {
    let mut ck = Checks::new(section.tag());
    match section {
        Section::C3B1 => {
            let bound = DEFAULT_B1_BOUND;
            let found = search_b1_equals_2(bound)?;
            let pell: Vec<DegreeSequence> = pell_members_up_to(&BigInt::from(bound))
                .into_iter()
                .map(|m| m.d)
                .collect();
            ck.eq(format!("B1 = 2 scan up to {bound} equals the Pell family"), seq_list(&pell), seq_list(&found));
            let mut duals: Vec<DegreeSequence> = found.iter().map(DegreeSequence::dual).collect();
            duals.sort_by(|a, b| a.entries().iter().rev().cmp(b.entries().iter().rev()));
            let b2 = search_b2_equals_2(bound)?;
            ck.eq(format!("B2 = 2 scan up to {bound} equals the duals"), seq_list(&duals), seq_list(&b2));
        }
        Section::C3Sum => {
            let scan = search_sum_lt_12(DEFAULT_SUM_BOUND)?;
            let got: Vec<String> = scan.rows.iter().map(|r| format!("{} -> {}", r.d, r.b)).collect();
            let expected: Vec<String> = C3_SUM_ROWS
                .iter()
                .map(|(d, b)| format!("{} -> {}", ds(d), bv(b)))
                .collect();
            ck.eq(
                format!("sum B < 12 scan up to {DEFAULT_SUM_BOUND}"),
                expected.join("; "),
                got.join("; "),
            );
        }
        Section::C4Table => {
            for (d, b) in C4_ROWS {
                let d = ds(d);
                ck.eq(format!("B({d})"), bv(b), b_vector(&d));
            }
            for (d, printed) in [(&[0i64, 1, 4, 5, 6][..], &[1i64, 2, 5, 6, 23][..]), (&[0, 9, 42, 44, 45], &[1, 2, 90, 243, 1543])] {
                ck.eq(
                    format!("printed {} for {} fails parity", bv(printed), ds(d)),
                    false,
                    parity_check(&bv(printed)),
                );
            }
        }
        Section::Gor5 | Section::Gor6 => {
            let c = if section == Section::Gor5 { 5 } else { 6 };
            let report = gorenstein_report(c, DEFAULT_GOR_BOUND, None, fixtures)?;
            let pairs: Vec<(u64, u64)> = report.pairs.iter().map(|p| p.pair).collect();
            if c == 5 {
                ck.eq("candidate pairs", format!("{CODIM5_PAIRS:?}"), format!("{pairs:?}"));
            } else {
                ck.eq("candidate pair count", 63, pairs.len());
            }
            let with_points: Vec<(u64, u64)> = report
                .pairs
                .iter()
                .filter(|p| !p.points_found.is_empty())
                .map(|p| p.pair)
                .collect();
            ck.eq(
                format!("pairs with points up to {DEFAULT_GOR_BOUND}"),
                "[]",
                format!("{with_points:?}"),
            );
            let cert = report.fixtures.as_ref().expect("full run has fixtures");
            ck.eq("admissible fixture points", 0, cert.admissible_points);
            if c == 5 {
                ck.eq("fixture curve components", 16, cert.curve_components);
                ck.eq("fixture pairs", format!("{CODIM5_PAIRS:?}"), format!("{:?}", cert.pairs));
                let by_search = gor_search(5, 10, 11, 20)?;
                ck.eq("search finds (3,4,10) on X_{10,11}", "[[3, 4, 10]]", format!("{by_search:?}"));
                let by_roots = check_component(&x10_11_component())?;
                ck.eq(
                    "rational roots find (3,4,10) on (5y-2z, 10x-3z)",
                    "[[3, 4, 10]]",
                    format!("{:?}", by_roots.admissible_points()),
                );
            } else {
                ck.eq("X_{16,20} components", 7, cert.components.len());
                // no codimension 6 palindromic vector with b < 16 passes the total rank rule
                let mut survivors = Vec::new();
                for a in 7..96u64 {
                    for b in 1..16u64 {
                        if let Some(betti) = gorenstein_betti(6, a, b)? {
                            if !is_excluded(&[rule_total_rank(&betti)]) {
                                survivors.push((a, b));
                            }
                        }
                    }
                }
                ck.eq("non-CI pairs with b < 16 surviving the total rank rule", "[]", format!("{survivors:?}"));
            }
        }
        Section::SelfDual15 => {
            let records = selfdual_search(15, 20)?;
            let d = ds(&SELFDUAL15_D);
            let hit = records.iter().find(|r| r.d == d);
            ck.eq(format!("selfdual search finds {d}"), true, hit.is_some());
            if let Some(r) = hit {
                ck.eq("B", bv(&SELFDUAL15_B), &r.b);
                ck.eq("B_7 < (15 choose 7) = 6435", true, r.report.conj1_violations.contains(&7));
                ck.eq("total", 42_878, &r.report.total);
                ck.eq("total < 49152", true, r.report.conj2_violated);
            }
        }
        Section::All => {
            let mut all = Vec::new();
            for s in Section::EACH {
                all.extend(section_checks(s, fixtures)?);
            }
            return Ok(all);
        }
    }
    Ok(ck.items)
}

pub fn cmd_reproduce(section: Section, fixtures: Option<&std::path::Path>) -> Result<Outcome> {
    let checks = section_checks(section, fixtures)?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    let mut table = String::new();
    for c in &checks {
        let _ = writeln!(table, "{} [{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.section, c.name);
        if !c.pass {
            let _ = writeln!(table, "    expected: {}\n    got:      {}", c.expected, c.got);
        }
    }
    let _ = writeln!(table, "\n{} checks, {failed} failed", checks.len());
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| vec![c.section.to_string(), c.name.clone(), c.pass.to_string(), c.expected.clone(), c.got.clone()])
        .collect();
    Ok(Outcome {
        command: "reproduce",
        status: Status::flag_if(failed > 0),
        result: json!({
            "section": section.tag(),
            "checks": to_value(&checks),
            "failed": failed,
        }),
        table,
        csv: rows_csv(&["section", "check", "pass", "expected", "got"], &rows),
    })
}
