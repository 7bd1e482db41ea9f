//! Exact integers, rationals and degree sequences.
//!
//! All arithmetic in this crate is arbitrary precision. [`Rational`] is a
//! thin alias over `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Greatest common divisor of a list, always non-negative; zero for an empty list.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

pub fn lcm_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v))
}

/// Binomial coefficient `n choose k` in arbitrary precision.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Brace form used throughout the crate, e.g. `{0,1,3,4}`.
pub fn brace_list<T: fmt::Display>(items: &[T]) -> String {
    let inner: Vec<String> = items.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// A strictly increasing degree sequence `(0, d_1, ..., d_c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    entries: Vec<BigInt>,
}

impl DegreeSequence {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::TooShort);
        }
        if !entries[0].is_zero() {
            return Err(Error::NonZeroStart(entries[0].to_string()));
        }
        for (index, pair) in entries.windows(2).enumerate() {
            if pair[0] >= pair[1] {
                return Err(Error::NotIncreasing {
                    index,
                    prev: pair[0].to_string(),
                    next: pair[1].to_string(),
                });
            }
        }
        Ok(DegreeSequence { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&d| BigInt::from(d)).collect())
    }

    /// Builds `(0, d_1, ..., d_c)` from the nonzero tail.
    pub fn from_tail(tail: &[BigInt]) -> Result<Self> {
        let mut entries = Vec::with_capacity(tail.len() + 1);
        entries.push(BigInt::zero());
        entries.extend(tail.iter().cloned());
        Self::new(entries)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// The nonzero degrees `d_1, ..., d_c`.
    pub fn tail(&self) -> &[BigInt] {
        &self.entries[1..]
    }

    pub fn codim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn last(&self) -> &BigInt {
        self.entries.last().expect("nonempty")
    }

    pub fn gcd(&self) -> BigInt {
        gcd_all(self.tail())
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gcd().is_one()
    }

    /// Divides through by `gcd(d_1, ..., d_c)`.
    pub fn normalize(&self) -> DegreeSequence {
        let g = self.gcd();
        if g.is_one() {
            return self.clone();
        }
        DegreeSequence {
            entries: self.entries.iter().map(|d| d / &g).collect(),
        }
    }

    /// `D* = (0, d_c - d_{c-1}, ..., d_c - d_1, d_c)`, computed on the raw entries.
    pub fn dual(&self) -> DegreeSequence {
        let top = self.last();
        DegreeSequence {
            entries: self.entries.iter().rev().map(|d| top - d).collect(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    pub fn scale(&self, lambda: &BigInt) -> Result<DegreeSequence> {
        if !lambda.is_positive() {
            return Err(Error::InvalidParameters(format!(
                "scale factor must be positive, got {lambda}"
            )));
        }
        Ok(DegreeSequence {
            entries: self.entries.iter().map(|d| d * lambda).collect(),
        })
    }

    /// First differences `d_i - d_{i-1}`.
    pub fn gaps(&self) -> Vec<BigInt> {
        self.entries.windows(2).map(|w| &w[1] - &w[0]).collect()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&brace_list(&self.entries))
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses `{0,1,3,4}` or the bare form `0,1,3,4`. Whitespace is ignored.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let entries = parse_integer_list(text)?;
        DegreeSequence::new(entries)
    }
}

/// Parses a brace-delimited or bare comma-separated list of integers.
pub fn parse_integer_list(text: &str) -> Result<Vec<BigInt>> {
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    let (body, offset) = match (body.strip_prefix('{'), body.ends_with('}')) {
        (Some(rest), true) => (&rest[..rest.len() - 1], trimmed_start + 1),
        (Some(_), false) => {
            return Err(Error::Parse {
                position: text.len(),
                message: "missing closing '}'".into(),
            })
        }
        (None, true) => {
            return Err(Error::Parse {
                position: trimmed_start,
                message: "missing opening '{'".into(),
            })
        }
        (None, false) => (body, trimmed_start),
    };
    if body.trim().is_empty() {
        return Err(Error::Parse {
            position: offset,
            message: "empty list".into(),
        });
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for field in body.split(',') {
        let token = field.trim();
        let lead = field.len() - field.trim_start().len();
        match BigInt::from_str(token) {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(Error::Parse {
                    position: pos + lead,
                    message: format!("expected an integer, found {token:?}"),
                })
            }
        }
        pos += field.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::from_i64s(v).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(ds(&[0, 2, 4, 6]).normalize(), ds(&[0, 1, 2, 3]));
        assert_eq!(ds(&[0, 1, 3, 4]).normalize(), ds(&[0, 1, 3, 4]));
        assert_eq!(
            ds(&[0, 3, 6, 15, 18, 21]).normalize(),
            ds(&[0, 1, 2, 5, 6, 7])
        );
    }

    #[test]
    fn dual_examples() {
        assert_eq!(ds(&[0, 3, 4, 8]).dual(), ds(&[0, 4, 5, 8]));
        assert_eq!(ds(&[0, 1, 2, 3]).dual(), ds(&[0, 1, 2, 3]));
        assert_eq!(ds(&[0, 1, 3, 4]).dual(), ds(&[0, 1, 3, 4]));
    }

    #[test]
    fn self_dual_examples() {
        assert!(ds(&[0, 1, 3, 4]).is_self_dual());
        assert!(!ds(&[0, 2, 3, 8]).is_self_dual());
        assert!(ds(&[0, 2, 3, 4, 5, 6, 7, 9, 11, 13, 14, 15, 16, 17, 18, 20]).is_self_dual());
    }

    #[test]
    fn dual_of_non_normalized_stays_raw() {
        assert_eq!(ds(&[0, 2, 6, 8]).dual(), ds(&[0, 2, 6, 8]));
        assert_eq!(ds(&[0, 6, 8, 16]).dual(), ds(&[0, 8, 10, 16]));
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert!(matches!(
            DegreeSequence::from_i64s(&[0, 3, 3, 8]),
            Err(Error::NotIncreasing { index: 1, .. })
        ));
        assert!(matches!(
            DegreeSequence::from_i64s(&[1, 2, 3]),
            Err(Error::NonZeroStart(_))
        ));
        assert_eq!(DegreeSequence::from_i64s(&[0]), Err(Error::TooShort));
    }

    #[test]
    fn parses_brace_and_bare_forms() {
        assert_eq!("{0,1,3,4}".parse::<DegreeSequence>().unwrap(), ds(&[0, 1, 3, 4]));
        assert_eq!(" 0, 1,3 ,4 ".parse::<DegreeSequence>().unwrap(), ds(&[0, 1, 3, 4]));
        assert_eq!(ds(&[0, 1, 3, 4]).to_string(), "{0,1,3,4}");
    }

    #[test]
    fn parse_errors_carry_position() {
        match "{0,1,x,4}".parse::<DegreeSequence>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "{0,1,3".parse::<DegreeSequence>(),
            Err(Error::Parse { .. })
        ));
        let err = "{0,3,3,8}".parse::<DegreeSequence>().unwrap_err();
        assert!(err.to_string().contains("strictly increasing"));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(15, 7), BigInt::from(6435));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520));
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }
}
