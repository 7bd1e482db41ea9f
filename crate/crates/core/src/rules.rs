//! Commutative-algebra facts that rule out candidate Betti sequences
//! `L * B(D)`, and the smallest multiplier `L` that none of them excludes.
//!
//! The codimension is always read off the vector length.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::exact::DegreeSequence;
use crate::herzog_kuhl::{b_vector, BettiVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RuleId {
    B1Lower,
    KunzAci,
    SyzygyRank,
    TotalRank,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::B1Lower => "B1_LOWER",
            RuleId::KunzAci => "KUNZ_ACI",
            RuleId::SyzygyRank => "SYZYGY_RANK",
            RuleId::TotalRank => "TOTAL_RANK",
        }
    }

    /// Applies only to cyclic Gorenstein candidates.
    pub fn gorenstein_only(self) -> bool {
        matches!(self, RuleId::KunzAci)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleVerdict {
    pub rule_id: RuleId,
    pub excluded: bool,
    pub detail: String,
}

impl RuleVerdict {
    fn pass(rule_id: RuleId, detail: String) -> Self {
        RuleVerdict {
            rule_id,
            excluded: false,
            detail,
        }
    }

    fn fail(rule_id: RuleId, detail: String) -> Self {
        RuleVerdict {
            rule_id,
            excluded: true,
            detail,
        }
    }
}

/// `beta_1 >= beta_0 + (c - 1)`.
pub fn rule_b1_lower(b: &BettiVector) -> RuleVerdict {
    let c = b.codim();
    let bound = b.get(0) + BigInt::from(c - 1);
    let b1 = b.get(1);
    if *b1 < bound {
        RuleVerdict::fail(
            RuleId::B1Lower,
            format!("B1 = {b1} < B0 + (c-1) = {bound}"),
        )
    } else {
        RuleVerdict::pass(RuleId::B1Lower, format!("B1 = {b1} >= {bound}"))
    }
}

/// An almost complete intersection is never Gorenstein: a cyclic
/// Gorenstein candidate cannot have `B1 = c + 1`.
pub fn rule_kunz(b: &BettiVector, gorenstein: bool) -> RuleVerdict {
    if !gorenstein {
        return RuleVerdict::pass(RuleId::KunzAci, "not a Gorenstein candidate".into());
    }
    if !b.get(0).is_one() {
        return RuleVerdict::pass(RuleId::KunzAci, format!("B0 = {} is not cyclic", b.get(0)));
    }
    let c = b.codim();
    let aci = BigInt::from(c + 1);
    if *b.get(1) == aci {
        RuleVerdict::fail(
            RuleId::KunzAci,
            format!("B0 = 1 and B1 = {aci} = c+1: almost complete intersection cannot be Gorenstein"),
        )
    } else {
        RuleVerdict::pass(RuleId::KunzAci, format!("B1 = {} != c+1 = {aci}", b.get(1)))
    }
}

/// `rank(Omega_i) = sum_{j=i}^{c} (-1)^{j-i} B_j` for `1 <= i <= c-1`.
pub fn syzygy_ranks(b: &BettiVector) -> Vec<BigInt> {
    let c = b.codim();
    let mut ranks = vec![BigInt::default(); c + 1];
    // running suffix: rank(Omega_i) = B_i - rank(Omega_{i+1}), rank(Omega_c) = B_c
    let mut acc = BigInt::default();
    for i in (1..=c).rev() {
        acc = b.get(i) - &acc;
        ranks[i] = acc.clone();
    }
    ranks.truncate(c);
    ranks.remove(0);
    ranks
}

/// Evans-Griffith: the i-th syzygy of a non-free module has rank at least i.
pub fn rule_syzygy_ranks(b: &BettiVector) -> RuleVerdict {
    let ranks = syzygy_ranks(b);
    for (k, rank) in ranks.iter().enumerate() {
        let i = k + 1;
        if *rank < BigInt::from(i) {
            return RuleVerdict::fail(
                RuleId::SyzygyRank,
                format!("rank(Omega_{i}) = {rank} < {i}"),
            );
        }
    }
    let listed: Vec<String> = ranks.iter().map(|r| r.to_string()).collect();
    RuleVerdict::pass(
        RuleId::SyzygyRank,
        format!("syzygy ranks [{}] all meet their index", listed.join(",")),
    )
}

/// `sum B_i >= 2^c`, with equality only for the binomial pattern.
pub fn rule_total_rank(b: &BettiVector) -> RuleVerdict {
    let c = b.codim();
    let floor = BigInt::one() << c;
    let total = b.total();
    if total < floor {
        RuleVerdict::fail(RuleId::TotalRank, format!("sum = {total} < 2^c = {floor}"))
    } else if total == floor && !b.is_binomial_pattern() {
        RuleVerdict::fail(
            RuleId::TotalRank,
            format!("sum = 2^c = {floor} but B is not the complete-intersection pattern"),
        )
    } else {
        RuleVerdict::pass(RuleId::TotalRank, format!("sum = {total} >= 2^c = {floor}"))
    }
}

/// Runs every rule on `b`. The Kunz rule sees `gorenstein` only when asked.
pub fn all_verdicts(b: &BettiVector, gorenstein: bool) -> Vec<RuleVerdict> {
    vec![
        rule_b1_lower(b),
        rule_kunz(b, gorenstein),
        rule_syzygy_ranks(b),
        rule_total_rank(b),
    ]
}

pub fn is_excluded(verdicts: &[RuleVerdict]) -> bool {
    verdicts.iter().any(|v| v.excluded)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinMultiplier {
    Found(u64),
    NoneUpTo(u64),
}

impl Serialize for MinMultiplier {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MinMultiplier::Found(l) => s.serialize_u64(*l),
            MinMultiplier::NoneUpTo(max) => s.serialize_str(&format!("none <= {max}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierCertificate {
    #[serde(rename = "D")]
    pub d: DegreeSequence,
    #[serde(rename = "B")]
    pub b: BettiVector,
    pub gorenstein: bool,
    #[serde(rename = "min_L")]
    pub min_l: MinMultiplier,
    pub verdicts_per_l: BTreeMap<u64, Vec<RuleVerdict>>,
}

impl MultiplierCertificate {
    pub fn min_l(&self) -> Option<u64> {
        match self.min_l {
            MinMultiplier::Found(l) => Some(l),
            MinMultiplier::NoneUpTo(_) => None,
        }
    }

    /// Rules that excluded a given multiplier.
    pub fn excluders(&self, l: u64) -> Vec<RuleId> {
        self.verdicts_per_l
            .get(&l)
            .map(|vs| vs.iter().filter(|v| v.excluded).map(|v| v.rule_id).collect())
            .unwrap_or_default()
    }
}

/// Smallest `L <= l_max` such that no rule excludes `L * B(D)`.
///
/// The Gorenstein hypothesis concerns the cyclic candidate itself, so the
/// Kunz rule is only consulted at `L = 1`.
pub fn min_multiplier(d: &DegreeSequence, gorenstein: bool, l_max: u64) -> MultiplierCertificate {
    let b = b_vector(d);
    let mut verdicts_per_l = BTreeMap::new();
    let mut min_l = MinMultiplier::NoneUpTo(l_max);
    for l in 1..=l_max {
        let candidate = b.scaled(&BigInt::from(l));
        let verdicts = all_verdicts(&candidate, gorenstein && l == 1);
        let excluded = is_excluded(&verdicts);
        verdicts_per_l.insert(l, verdicts);
        if !excluded {
            min_l = MinMultiplier::Found(l);
            break;
        }
    }
    MultiplierCertificate {
        d: d.clone(),
        b,
        gorenstein,
        min_l,
        verdicts_per_l,
    }
}
