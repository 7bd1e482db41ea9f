//! Pure Gorenstein candidates in codimension 5 and 6, and self-dual
//! obstructions in any codimension.
//!
//! A pure Gorenstein quotient `R/I` has a self-dual degree sequence and
//! `B(D) = beta`, so `beta` is palindromic:
//!
//! * `c = 5`: `beta = (1, a, b, b, a, 1)`, `D = (0, x, y, z, z+y-x, y+z)`.
//! * `c = 6`: `beta = (1, a, b, 2b-2a+2, b, a, 1)`, `D = (0, x, y, z, 2z-y, 2z-x, 2z)`.
//!
//! The candidate pairs `(a, b)` are those that survive the structural rules
//! while violating the total-sum bound. Each pair gives two equations in
//! `(x, y, z)`; [`gor_search`] scans them and [`verify_fixture_components`]
//! runs the rational root test on stored components.

use std::collections::BTreeSet;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::dioph::{check_component, parse_fixtures, ComponentVerdict, FixtureComponent};
use crate::error::{Error, Result};
use crate::exact::DegreeSequence;
use crate::herzog_kuhl::{b_vector, conjecture_report, BettiVector, ObstructionRecord};
use crate::rules::{all_verdicts, is_excluded, rule_b1_lower, rule_kunz, rule_syzygy_ranks, rule_total_rank};

pub const DEFAULT_GOR_BOUND: u64 = 300;

/// Environment variable naming a directory that overrides the built-in fixtures.
pub const FIXTURE_DIR_ENV: &str = "PURE_BETTI_FIXTURES";

const CODIM5_FIXTURE: &str = include_str!("../fixtures/codim5.txt");
const CODIM6_FIXTURE: &str = include_str!("../fixtures/codim6_x16_20.txt");

pub fn fixture_file_name(c: usize) -> Result<&'static str> {
    match c {
        5 => Ok("codim5.txt"),
        6 => Ok("codim6_x16_20.txt"),
        _ => Err(Error::UnsupportedCodim(c)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorCandidate {
    pub c: usize,
    pub a: u64,
    pub b: u64,
    pub betti: BettiVector,
}

fn check_codim(c: usize) -> Result<()> {
    if c == 5 || c == 6 {
        Ok(())
    } else {
        Err(Error::UnsupportedCodim(c))
    }
}

/// The palindromic Betti vector for `(a, b)`, or `None` when the middle
/// entry of the codimension 6 shape is not positive.
pub fn gorenstein_betti(c: usize, a: u64, b: u64) -> Result<Option<BettiVector>> {
    check_codim(c)?;
    let (a, b) = (a as i64, b as i64);
    let values: Vec<i64> = if c == 5 {
        vec![1, a, b, b, a, 1]
    } else {
        vec![1, a, b, 2 * b - 2 * a + 2, b, a, 1]
    };
    Ok(BettiVector::from_i64s(&values).ok())
}

/// All `(a, b)` whose palindromic vector passes every structural rule and
/// still has total below `2^c + 2^(c-1)`.
pub fn candidate_pairs(c: usize) -> Result<Vec<GorCandidate>> {
    check_codim(c)?;
    let threshold: u64 = (1 << c) + (1 << (c - 1));
    let mut out = Vec::new();
    // every entry is at most the total, which is below the threshold
    // a = c generators of a height c ideal form a complete intersection
    for a in (c as u64 + 1)..threshold {
        for b in 1..threshold {
            let Some(betti) = gorenstein_betti(c, a, b)? else { continue };
            let verdicts = [
                rule_b1_lower(&betti),
                rule_kunz(&betti, true),
                rule_syzygy_ranks(&betti),
                rule_total_rank(&betti),
            ];
            if is_excluded(&verdicts) || !conjecture_report(&betti).conj2_violated {
                continue;
            }
            out.push(GorCandidate { c, a, b, betti });
        }
    }
    Ok(out)
}

/// The symmetric degree-sequence template of codimension 5 or 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GorShape {
    pub c: usize,
}

impl GorShape {
    pub fn new(c: usize) -> Result<Self> {
        check_codim(c)?;
        Ok(GorShape { c })
    }

    pub fn template(&self) -> &'static str {
        if self.c == 5 {
            "(0, x, y, z, z+y-x, y+z)"
        } else {
            "(0, x, y, z, 2z-y, 2z-x, 2z)"
        }
    }

    /// Instantiates the template at `0 < x < y < z`.
    pub fn instantiate(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> Result<DegreeSequence> {
        check_ordered(x, y, z)?;
        let entries = if self.c == 5 {
            vec![BigInt::from(0), x.clone(), y.clone(), z.clone(), z + y - x, y + z]
        } else {
            let two_z = z * 2u32;
            vec![BigInt::from(0), x.clone(), y.clone(), z.clone(), &two_z - y, &two_z - x, two_z]
        };
        DegreeSequence::new(entries)
    }
}

fn check_ordered(x: &BigInt, y: &BigInt, z: &BigInt) -> Result<()> {
    if *x <= BigInt::from(0) || x >= y || y >= z {
        return Err(Error::InvalidParameters(format!(
            "need 0 < x < y < z, got ({x}, {y}, {z})"
        )));
    }
    Ok(())
}

/// The two Herzog-Kühl conditions `pi_1 = a`, `pi_2 = b` on the shape,
/// with common factors cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorConstraints {
    pub c: usize,
    pub a: u64,
    pub b: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSides {
    pub a_equation: (BigInt, BigInt),
    pub b_equation: (BigInt, BigInt),
}

impl ConstraintSides {
    pub fn holds(&self) -> bool {
        self.a_equation.0 == self.a_equation.1 && self.b_equation.0 == self.b_equation.1
    }
}

pub fn gor_constraints(c: usize, a: u64, b: u64) -> Result<GorConstraints> {
    check_codim(c)?;
    Ok(GorConstraints { c, a, b })
}

impl GorConstraints {
    pub fn display_equations(&self) -> [String; 2] {
        let (a, b) = (self.a, self.b);
        if self.c == 5 {
            [
                format!("yz(y+z) = {a}(y-x)(z-x)(z+y-2x)"),
                format!("x(z+y-x)(y+z) = {b}(y-x)(z-y)(z-x)"),
            ]
        } else {
            [
                format!("yz^2(2z-y) = {a}(y-x)(z-x)^2(2z-x-y)"),
                format!("xz^2(2z-x) = {b}(y-x)(z-y)^2(2z-x-y)"),
            ]
        }
    }

    pub fn sides(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> Result<ConstraintSides> {
        check_ordered(x, y, z)?;
        let (a, b) = (BigInt::from(self.a), BigInt::from(self.b));
        let sides = if self.c == 5 {
            let yz = y + z;
            ConstraintSides {
                a_equation: (y * z * &yz, a * (y - x) * (z - x) * (z + y - x * 2u32)),
                b_equation: (x * (z + y - x) * &yz, b * (y - x) * (z - y) * (z - x)),
            }
        } else {
            let zz = z * z;
            let two_z = z * 2u32;
            let m = &two_z - x - y;
            ConstraintSides {
                a_equation: (y * &zz * (&two_z - y), a * (y - x) * (z - x) * (z - x) * &m),
                b_equation: (x * &zz * (&two_z - x), b * (y - x) * (z - y) * (z - y) * &m),
            }
        };
        Ok(sides)
    }

    pub fn holds(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> Result<bool> {
        Ok(self.sides(x, y, z)?.holds())
    }
}

// i128 forms of the cancelled equations; factors are at most 2 z_max.
fn a_sides(c: usize, a: i128, x: i128, y: i128, z: i128) -> (i128, i128) {
    if c == 5 {
        (y * z * (y + z), a * (y - x) * (z - x) * (z + y - 2 * x))
    } else {
        (y * z * z * (2 * z - y), a * (y - x) * (z - x) * (z - x) * (2 * z - x - y))
    }
}

fn b_sides(c: usize, b: i128, x: i128, y: i128, z: i128) -> (i128, i128) {
    if c == 5 {
        (x * (z + y - x) * (y + z), b * (y - x) * (z - y) * (z - x))
    } else {
        (x * z * z * (2 * z - x), b * (y - x) * (z - y) * (z - y) * (2 * z - x - y))
    }
}

/// Largest bound for which the `i128` scan cannot overflow.
pub const MAX_GOR_BOUND: u64 = 1 << 20;

/// All primitive `0 < x < y < z <= z_max` on `X_{a,b}`, sorted by `(z, y, x)`.
///
/// For fixed `(y, z)` the right side of the `a`-equation is a product of
/// positive factors that all shrink as `x` grows, so `pi_1` is strictly
/// increasing in `x` on `(0, y)` and a bisection finds the only candidate.
/// Each hit is re-checked exactly, including `b_vector` of the instantiated
/// degree sequence.
pub fn gor_search(c: usize, a: u64, b: u64, z_max: u64) -> Result<Vec<[u64; 3]>> {
    check_codim(c)?;
    if z_max > MAX_GOR_BOUND {
        return Err(Error::BoundTooLarge(format!("z_max = {z_max} exceeds {MAX_GOR_BOUND}")));
    }
    if z_max < 3 {
        return Ok(Vec::new());
    }
    let (ai, bi) = (a as i128, b as i128);
    let mut hits: Vec<[u64; 3]> = (3..=z_max as i128)
        .into_par_iter()
        .flat_map_iter(|z| {
            (2..z).filter_map(move |y| {
                // smallest x in [1, y) with a-rhs <= lhs
                let (mut lo, mut hi) = (1i128, y - 1);
                if a_sides(c, ai, hi, y, z).1 > a_sides(c, ai, hi, y, z).0 {
                    return None;
                }
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    let (l, r) = a_sides(c, ai, mid, y, z);
                    if r <= l {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                let x = lo;
                let (l, r) = a_sides(c, ai, x, y, z);
                let (lb, rb) = b_sides(c, bi, x, y, z);
                (l == r && lb == rb && x.gcd(&y).gcd(&z) == 1).then_some([x as u64, y as u64, z as u64])
            })
        })
        .collect();
    hits.sort_by_key(|t| (t[2], t[1], t[0]));
    let expected = gorenstein_betti(c, a, b)?;
    let shape = GorShape::new(c)?;
    for t in &hits {
        let d = shape.instantiate(&t[0].into(), &t[1].into(), &t[2].into())?;
        assert_eq!(Some(b_vector(&d)), expected, "hit {t:?} does not realize ({a}, {b})");
    }
    Ok(hits)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCertificate {
    pub pair: (u64, u64),
    pub betti: BettiVector,
    pub bound: u64,
    pub points_found: Vec<[u64; 3]>,
}

/// Runs [`gor_search`] on every candidate pair.
pub fn search_all_pairs(c: usize, z_max: u64) -> Result<Vec<PairCertificate>> {
    candidate_pairs(c)?
        .into_iter()
        .map(|cand| {
            Ok(PairCertificate {
                pair: (cand.a, cand.b),
                points_found: gor_search(c, cand.a, cand.b, z_max)?,
                betti: cand.betti,
                bound: z_max,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub pair: Option<(u64, u64)>,
    pub line: usize,
    pub component: String,
    pub verdict: ComponentVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureCertificate {
    pub c: usize,
    pub source: String,
    pub components: Vec<ComponentReport>,
    /// Pairs covered by at least one fixture component.
    pub pairs: Vec<(u64, u64)>,
    pub curve_components: usize,
    pub degenerate_components: usize,
    pub admissible_points: usize,
}

impl FixtureCertificate {
    pub fn all_empty(&self) -> bool {
        self.admissible_points == 0
    }
}

/// Loads the fixture text for codimension `c`: from `dir` when given, else
/// from the directory named by [`FIXTURE_DIR_ENV`], else the built-in copy.
pub fn fixture_text(c: usize, dir: Option<&Path>) -> Result<(String, String)> {
    let name = fixture_file_name(c)?;
    let env_dir = std::env::var_os(FIXTURE_DIR_ENV).map(std::path::PathBuf::from);
    if let Some(dir) = dir.map(Path::to_path_buf).or(env_dir) {
        let path = dir.join(name);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Fixture(format!("cannot read {}: {e}", path.display())))?;
        return Ok((text, path.display().to_string()));
    }
    let text = if c == 5 { CODIM5_FIXTURE } else { CODIM6_FIXTURE };
    Ok((text.to_string(), format!("built-in {name}")))
}

/// Classifies every fixture component of codimension `c`.
pub fn verify_fixture_components(c: usize, dir: Option<&Path>) -> Result<FixtureCertificate> {
    let (text, source) = fixture_text(c, dir)?;
    verify_components(c, source, &parse_fixtures(&text)?)
}

pub fn verify_components(c: usize, source: String, fixtures: &[FixtureComponent]) -> Result<FixtureCertificate> {
    check_codim(c)?;
    let mut components = Vec::with_capacity(fixtures.len());
    let mut pairs = BTreeSet::new();
    let (mut curve_components, mut degenerate_components, mut admissible_points) = (0, 0, 0);
    for fc in fixtures {
        let verdict = check_component(&fc.component)?;
        match &verdict {
            ComponentVerdict::CoordinateDegenerate { .. } => degenerate_components += 1,
            ComponentVerdict::Admissible { points } => {
                curve_components += 1;
                admissible_points += points.len();
            }
            ComponentVerdict::NoAdmissiblePoint { .. } => curve_components += 1,
        }
        if let Some(p) = fc.pair {
            pairs.insert(p);
        }
        components.push(ComponentReport {
            pair: fc.pair,
            line: fc.line,
            component: fc.component.to_string(),
            verdict,
        });
    }
    Ok(FixtureCertificate {
        c,
        source,
        components,
        pairs: pairs.into_iter().collect(),
        curve_components,
        degenerate_components,
        admissible_points,
    })
}

/// Palindromic gap vectors `(g_1, ..., g_c)` with `sum g_i <= d_max`.
fn palindromic_gaps(c: usize, d_max: u64) -> Vec<Vec<u64>> {
    let half = c / 2;
    let mut out = Vec::new();
    let mut current = vec![0u64; half];
    fn rec(
        pos: usize,
        used: u64,
        c: usize,
        d_max: u64,
        current: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        let half = current.len();
        if pos == half {
            let mirror = |cur: &[u64], middle: Option<u64>| {
                let mut g = cur.to_vec();
                g.extend(middle);
                g.extend(cur.iter().rev());
                g
            };
            if c % 2 == 0 {
                out.push(mirror(current, None));
            } else {
                for m in 1..=d_max - used {
                    out.push(mirror(current, Some(m)));
                }
            }
            return;
        }
        // leave room for the remaining pairs and the middle gap
        let reserve = 2 * (half - pos - 1) as u64 + (c % 2) as u64;
        let mut g = 1;
        while used + 2 * g + reserve <= d_max {
            current[pos] = g;
            rec(pos + 1, used + 2 * g, c, d_max, current, out);
            g += 1;
        }
    }
    if (c as u64) <= d_max {
        rec(0, 0, c, d_max, &mut current, &mut out);
    }
    out
}

/// Self-dual nondegenerate `D` with `d_c <= d_max`, `B_0 = 1` and
/// `B_1 >= c + 2` whose `B(D)` violates one of the conjectured bounds and
/// is not already ruled out for a Gorenstein quotient by the structural rules.
/// Ordered by `d_c`, then lexicographically.
pub fn selfdual_search(c: usize, d_max: u64) -> Result<Vec<ObstructionRecord>> {
    if c < 3 || d_max < c as u64 {
        return Err(Error::InvalidParameters(format!(
            "need c >= 3 and d_max >= c, got c = {c}, d_max = {d_max}"
        )));
    }
    let gaps = palindromic_gaps(c, d_max);
    let min_b1 = BigInt::from(c as u64 + 2);
    let mut records: Vec<ObstructionRecord> = gaps
        .into_par_iter()
        .filter_map(|g| {
            let mut entries = vec![BigInt::from(0)];
            let mut acc = 0u64;
            for step in g {
                acc += step;
                entries.push(acc.into());
            }
            let d = DegreeSequence::new(entries).expect("positive gaps");
            if !d.is_nondegenerate() {
                return None;
            }
            let rec = ObstructionRecord::new(d);
            let keep = rec.b.get(0).is_one()
                && *rec.b.get(1) >= min_b1
                && rec.report.any_violation()
                && !is_excluded(&all_verdicts(&rec.b, true));
            keep.then_some(rec)
        })
        .collect();
    records.sort_by(|p, q| (p.d.last(), p.d.entries()).cmp(&(q.d.last(), q.d.entries())));
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn codim5_pairs_match_list() {
        let got: Vec<(u64, u64)> = candidate_pairs(5).unwrap().iter().map(|p| (p.a, p.b)).collect();
        let expected = vec![
            (7, 9), (7, 10), (7, 11), (7, 12), (7, 13), (7, 14), (7, 15), (8, 10),
            (8, 11), (8, 12), (8, 13), (8, 14), (9, 11), (9, 12), (9, 13), (10, 12),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn codim6_pairs_count() {
        let pairs = candidate_pairs(6).unwrap();
        assert_eq!(pairs.len(), 63);
        for p in &pairs {
            assert!(p.a >= 8 && (16..=22).contains(&p.b) && p.a + 3 <= p.b, "{p:?}");
        }
        assert!(candidate_pairs(4).is_err());
    }

    #[test]
    fn constraint_examples() {
        let k = gor_constraints(5, 10, 11).unwrap();
        assert!(k.holds(&big(3), &big(4), &big(10)).unwrap());
        let k = gor_constraints(5, 7, 9).unwrap();
        assert!(!k.holds(&big(1), &big(2), &big(3)).unwrap());
        let k6 = gor_constraints(6, 16, 20).unwrap();
        assert!(k6.sides(&big(2), &big(2), &big(5)).is_err());
    }

    #[test]
    fn shape_instantiation() {
        let s = GorShape::new(5).unwrap();
        assert_eq!(
            s.instantiate(&big(3), &big(4), &big(10)).unwrap(),
            DegreeSequence::from_i64s(&[0, 3, 4, 10, 11, 14]).unwrap()
        );
        let s6 = GorShape::new(6).unwrap();
        let d = s6.instantiate(&big(1), &big(2), &big(3)).unwrap();
        assert_eq!(d, DegreeSequence::from_i64s(&[0, 1, 2, 3, 4, 5, 6]).unwrap());
        assert!(d.is_self_dual());
    }

    #[test]
    fn search_finds_point_on_x10_11() {
        assert_eq!(gor_search(5, 10, 11, 20).unwrap(), vec![[3, 4, 10]]);
        assert!(gor_search(5, 7, 9, 60).unwrap().is_empty());
        assert!(gor_search(5, 10, 11, 2).unwrap().is_empty());
    }

    #[test]
    fn builtin_fixtures_classify() {
        let cert = verify_fixture_components(5, None).unwrap();
        assert_eq!(cert.components.len(), 16);
        assert_eq!(cert.curve_components, 16);
        assert!(cert.all_empty());
        let cert6 = verify_fixture_components(6, None).unwrap();
        assert_eq!(cert6.components.len(), 7);
        assert_eq!(cert6.degenerate_components, 4);
        assert!(cert6.all_empty());
        assert!(verify_fixture_components(5, Some(Path::new("/nonexistent"))).is_err());
    }

    #[test]
    fn palindromic_gap_counts() {
        // c = 3: (g, m, g) with 2g + m <= 5
        let gaps = palindromic_gaps(3, 5);
        assert_eq!(gaps.len(), 3 + 1);
        assert!(gaps.iter().all(|g| g[0] == g[2]));
        assert_eq!(palindromic_gaps(4, 4), vec![vec![1, 1, 1, 1]]);
        assert!(palindromic_gaps(4, 3).is_empty());
    }

    #[test]
    fn selfdual_codim15_example() {
        let hits = selfdual_search(15, 20).unwrap();
        let d = DegreeSequence::from_i64s(&[0, 2, 3, 4, 5, 6, 7, 9, 11, 13, 14, 15, 16, 17, 18, 20]).unwrap();
        let hit = hits.iter().find(|r| r.d == d).expect("codimension 15 example present");
        assert_eq!(hit.b.get(7), &BigInt::from(2210));
        for r in &hits {
            assert!(r.d.is_self_dual() && r.b.reversed() == r.b);
        }
    }

    #[test]
    fn selfdual_small_cases_empty() {
        assert!(selfdual_search(3, 20).unwrap().is_empty());
        assert!(selfdual_search(5, 12).unwrap().is_empty());
        assert!(selfdual_search(2, 20).is_err());
    }
}
