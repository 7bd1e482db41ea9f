//! Herzog-Kühl numerics of pure resolutions.
//!
//! For a degree sequence `D = (0, d_1, ..., d_c)` the rational vector
//! `pi(D)` has `pi_0 = 1` and
//!
//! ```text
//! pi_i(D) = prod_{j >= 1, j != i} d_j / |d_i - d_j|
//! ```
//!
//! and `B(D)` is the smallest positive integer point on the ray it spans.
//!
//! Diagrams use the Macaulay2 layout: column `i`, row `d_i - i`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{binomial, brace_list, gcd_all, lcm_all, rational_string, DegreeSequence, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiVector(Vec<Rational>);

impl PiVector {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn strings(&self) -> Vec<String> {
        self.0.iter().map(rational_string).collect()
    }
}

impl Serialize for PiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.strings().serialize(s)
    }
}

/// A vector of positive integers `(B_0, ..., B_c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BettiVector(Vec<BigInt>);

impl BettiVector {
    pub fn new(values: Vec<BigInt>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooShort);
        }
        if let Some((index, v)) = values.iter().enumerate().find(|(_, v)| !v.is_positive()) {
            return Err(Error::NonPositiveBetti {
                index,
                value: v.to_string(),
            });
        }
        Ok(BettiVector(values))
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }

    pub fn codim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn scaled(&self, l: &BigInt) -> BettiVector {
        BettiVector(self.0.iter().map(|b| b * l).collect())
    }

    pub fn reversed(&self) -> BettiVector {
        BettiVector(self.0.iter().rev().cloned().collect())
    }

    pub fn gcd(&self) -> BigInt {
        gcd_all(&self.0)
    }

    /// The Koszul pattern `(c choose i)_i`.
    pub fn binomial_pattern(c: usize) -> BettiVector {
        BettiVector((0..=c as u64).map(|i| binomial(c as u64, i)).collect())
    }

    pub fn is_binomial_pattern(&self) -> bool {
        *self == Self::binomial_pattern(self.codim())
    }

    /// `sum (-1)^i B_i`.
    pub fn alternating_sum(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (i, b)| if i % 2 == 0 { acc + b } else { acc - b })
    }
}

impl std::fmt::Display for BettiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&brace_list(&self.0))
    }
}

impl FromStr for BettiVector {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        BettiVector::new(crate::exact::parse_integer_list(text)?)
    }
}

pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    // arbitrary_precision keeps large entries exact in JSON
    let n = serde_json::Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in &self.0 {
            seq.serialize_element(&BigIntJson(v))?;
        }
        seq.end()
    }
}

pub(crate) struct BigIntJson<'a>(pub &'a BigInt);

impl Serialize for BigIntJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

/// Computes `pi(D)`. Construction of [`DegreeSequence`] already rules out
/// repeated entries, so no factor `|d_i - d_j|` vanishes.
pub fn pi_vector(d: &DegreeSequence) -> PiVector {
    let degs = d.entries();
    let c = d.codim();
    let mut values = Vec::with_capacity(c + 1);
    values.push(Rational::one());
    for i in 1..=c {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for j in 1..=c {
            if j == i {
                continue;
            }
            num *= &degs[j];
            den *= (&degs[i] - &degs[j]).abs();
        }
        values.push(Rational::new(num, den));
    }
    PiVector(values)
}

/// `B(D)`: the lcm of the denominators of `pi(D)` times `pi(D)`.
pub fn b_vector(d: &DegreeSequence) -> BettiVector {
    b_from_pi(&pi_vector(d))
}

pub fn b_from_pi(pi: &PiVector) -> BettiVector {
    let m = lcm_all(pi.values().iter().map(|q| q.denom()));
    let values: Vec<BigInt> = pi
        .values()
        .iter()
        .map(|q| {
            let (quo, rem) = (&m * q.numer()).div_rem(q.denom());
            debug_assert!(rem.is_zero());
            quo
        })
        .collect();
    let b = BettiVector(values);
    assert!(b.gcd().is_one(), "B(D) must be primitive, got {b}");
    b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub conj1_violations: Vec<usize>,
    pub conj1_ok: bool,
    #[serde(serialize_with = "serialize_bigint")]
    pub total: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub conj2_threshold: BigInt,
    pub conj2_violated: bool,
    pub is_ci_pattern: bool,
}

impl ConjectureReport {
    pub fn any_violation(&self) -> bool {
        !self.conj1_ok || self.conj2_violated
    }
}

/// Checks `B_i >= (c choose i)` and `sum B_i >= 2^c + 2^(c-1)`, with the
/// complete-intersection pattern exempt from the second bound.
pub fn conjecture_report(b: &BettiVector) -> ConjectureReport {
    let c = b.codim();
    let conj1_violations: Vec<usize> = (0..=c)
        .filter(|&i| *b.get(i) < binomial(c as u64, i as u64))
        .collect();
    let total = b.total();
    let conj2_threshold = (BigInt::one() << c) + (BigInt::one() << (c - 1));
    let is_ci_pattern = b.is_binomial_pattern();
    let conj2_violated = !is_ci_pattern && total < conj2_threshold;
    ConjectureReport {
        conj1_ok: conj1_violations.is_empty(),
        conj1_violations,
        total,
        conj2_threshold,
        conj2_violated,
        is_ci_pattern,
    }
}

/// True iff the alternating sum of `B` vanishes.
pub fn parity_check(b: &BettiVector) -> bool {
    b.alternating_sum().is_zero()
}

/// Row index `d_i - i` for each column.
pub fn diagram_rows(d: &DegreeSequence) -> Vec<BigInt> {
    d.entries()
        .iter()
        .enumerate()
        .map(|(i, di)| di - BigInt::from(i))
        .collect()
}

/// Renders a pure Betti diagram in Macaulay2 layout.
pub fn render_betti_diagram(d: &DegreeSequence, b: &BettiVector, with_total: bool) -> Result<String> {
    if d.codim() != b.codim() {
        return Err(Error::LengthMismatch {
            expected: d.codim() + 1,
            found: b.codim() + 1,
        });
    }
    let rows = diagram_rows(d);
    let max_row = rows.iter().max().cloned().unwrap_or_default();
    let labels: Vec<String> = b.values().iter().map(|v| v.to_string()).collect();
    let widths: Vec<usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| l.len().max(i.to_string().len()))
        .collect();
    let label_width = if with_total { "total:".len() } else { 0 }.max(format!("{max_row}:").len());

    let mut out = String::new();
    let line = |out: &mut String, head: &str, cells: &mut dyn Iterator<Item = String>| {
        let _ = write!(out, "{head:>label_width$}");
        for (cell, w) in cells.zip(&widths) {
            let _ = write!(out, " {cell:>w$}");
        }
        out.push('\n');
    };
    line(&mut out, "", &mut (0..=d.codim()).map(|i| i.to_string()));
    if with_total {
        line(&mut out, "total:", &mut labels.iter().cloned());
    }
    let mut row = BigInt::zero();
    while row <= max_row {
        let head = format!("{row}:");
        line(
            &mut out,
            &head,
            &mut rows
                .iter()
                .zip(&labels)
                .map(|(r, l)| if *r == row { l.clone() } else { ".".into() }),
        );
        row += 1;
    }
    Ok(out)
}

/// A degree sequence whose `B(D)` breaks one of the conjectured bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionRecord {
    #[serde(rename = "D")]
    pub d: DegreeSequence,
    #[serde(rename = "B")]
    pub b: BettiVector,
    pub report: ConjectureReport,
    #[serde(rename = "min_L", skip_serializing_if = "Option::is_none")]
    pub min_l: Option<u64>,
}

impl ObstructionRecord {
    pub fn new(d: DegreeSequence) -> Self {
        let b = b_vector(&d);
        let report = conjecture_report(&b);
        ObstructionRecord {
            d,
            b,
            report,
            min_l: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::from_i64s(v).unwrap()
    }

    fn bv(v: &[i64]) -> BettiVector {
        BettiVector::from_i64s(v).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn pi_examples() {
        assert_eq!(
            pi_vector(&ds(&[0, 3, 4, 8])).values(),
            &[q(1, 1), q(32, 5), q(6, 1), q(3, 5)]
        );
        assert_eq!(
            pi_vector(&ds(&[0, 1, 2, 3])).values(),
            &[q(1, 1), q(3, 1), q(3, 1), q(1, 1)]
        );
        assert_eq!(
            pi_vector(&ds(&[0, 1, 3, 4])).values(),
            &[q(1, 1), q(2, 1), q(2, 1), q(1, 1)]
        );
        assert_eq!(pi_vector(&ds(&[0, 3, 4, 8])).strings(), ["1", "32/5", "6", "3/5"]);
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_vector(&ds(&[0, 2, 3, 8])), bv(&[5, 20, 16, 1]));
        assert_eq!(b_vector(&ds(&[0, 3, 4, 8])), bv(&[5, 32, 30, 3]));
        assert_eq!(b_vector(&ds(&[0, 3, 4, 10, 11, 14])), bv(&[1, 10, 11, 11, 10, 1]));
        // the alternating sum forces the last entry to be 2
        assert_eq!(b_vector(&ds(&[0, 1, 4, 5, 6])), bv(&[1, 2, 5, 6, 2]));
    }

    #[test]
    fn report_examples() {
        let r = conjecture_report(&bv(&[1, 2, 2, 1]));
        assert_eq!(r.conj1_violations, vec![1, 2]);
        assert_eq!(r.total, 6.into());
        assert!(r.conj2_violated);

        let r = conjecture_report(&bv(&[1, 3, 3, 1]));
        assert!(r.conj1_ok && r.is_ci_pattern && !r.conj2_violated);
        assert_eq!(r.total, 8.into());

        let b15 = bv(&[
            1, 85, 630, 2295, 4998, 6630, 4590, 2210, 2210, 4590, 6630, 4998, 2295, 630, 85, 1,
        ]);
        let r = conjecture_report(&b15);
        assert!(r.conj1_violations.contains(&7) && r.conj1_violations.contains(&8));
        assert_eq!(r.conj1_violations, vec![6, 7, 8, 9]);
        assert_eq!(r.total, 42_878.into());
        assert_eq!(r.conj2_threshold, 49_152.into());
        assert!(r.conj2_violated);
    }

    #[test]
    fn parity_examples() {
        assert!(parity_check(&bv(&[5, 20, 16, 1])));
        assert!(parity_check(&bv(&[1, 3, 3, 1])));
        assert!(!parity_check(&bv(&[1, 2, 2, 2])));
    }

    #[test]
    fn diagram_rows_examples() {
        let to_i = |v: Vec<BigInt>| v.into_iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(to_i(diagram_rows(&ds(&[0, 1, 2, 3]))), vec![0, 0, 0, 0]);
        assert_eq!(to_i(diagram_rows(&ds(&[0, 4, 5, 8]))), vec![0, 3, 3, 5]);
        assert_eq!(to_i(diagram_rows(&ds(&[0, 1, 3, 4]))), vec![0, 0, 1, 1]);
    }

    #[test]
    fn renders_dual_example() {
        let text = render_betti_diagram(&ds(&[0, 4, 5, 8]), &bv(&[3, 30, 32, 5]), true).unwrap();
        let expected = concat!(
            "       0  1  2 3\n",
            "total: 3 30 32 5\n",
            "    0: 3  .  . .\n",
            "    1: .  .  . .\n",
            "    2: .  .  . .\n",
            "    3: . 30 32 .\n",
            "    4: .  .  . .\n",
            "    5: .  .  . 5\n",
        );
        assert_eq!(text, expected);
        let koszul = render_betti_diagram(&ds(&[0, 1, 2, 3]), &bv(&[1, 3, 3, 1]), false).unwrap();
        assert_eq!(koszul, "   0 1 2 3\n0: 1 3 3 1\n");
    }

    #[test]
    fn render_rejects_length_mismatch() {
        assert!(render_betti_diagram(&ds(&[0, 1, 2]), &bv(&[1, 3, 3, 1]), false).is_err());
    }

    #[test]
    fn betti_rejects_nonpositive() {
        assert!(BettiVector::from_i64s(&[1, 0, 1]).is_err());
    }
}
