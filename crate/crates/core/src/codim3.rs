//! Codimension-3 classification.
//!
//! Degree sequences `(0, x, y, z)` with `B_1 = 2` solve `2(y-x)(z-x) = yz`
//! and all have `z = y + 1`; substituting `u = 2x`, `v = 2(y-2x) + 1` turns
//! the equation into `v^2 - 2u^2 = 1`. The scans here re-derive both
//! classification tables by bounded exhaustive search.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{gcd_all, DegreeSequence};
use crate::herzog_kuhl::{b_vector, BettiVector};

/// Largest `z_max` accepted by the machine-word scan filters. Every product
/// the filters form stays below `12 * SCAN_LIMIT^3 < 2^63`.
pub const SCAN_LIMIT: i64 = 200_000;

pub const DEFAULT_B1_BOUND: i64 = 5000;
pub const DEFAULT_SUM_BOUND: i64 = 1000;

fn check_bound(z_max: i64) -> Result<()> {
    if z_max > SCAN_LIMIT {
        Err(Error::BoundTooLarge(format!(
            "z_max = {z_max} exceeds the scan limit {SCAN_LIMIT}"
        )))
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PellMember {
    pub n: usize,
    #[serde(serialize_with = "crate::herzog_kuhl::serialize_bigint")]
    pub x: BigInt,
    #[serde(serialize_with = "crate::herzog_kuhl::serialize_bigint")]
    pub y: BigInt,
    #[serde(rename = "D")]
    pub d: DegreeSequence,
    #[serde(rename = "B")]
    pub b: BettiVector,
}

impl PellMember {
    /// `(u, v) = (2x, 2(y - 2x) + 1)`.
    pub fn pell_pair(&self) -> (BigInt, BigInt) {
        let u = &self.x * 2;
        let v = (&self.y - &self.x * 2) * 2 + 1;
        (u, v)
    }

    pub fn satisfies_pell(&self) -> bool {
        let (u, v) = self.pell_pair();
        &v * &v - &u * &u * 2 == BigInt::one()
    }
}

/// One step of `(x, y) -> (-x + 2y + 1, -4x + 7y + 3)`.
pub fn pell_step(x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
    let two = BigInt::from(2);
    let (four, seven) = (BigInt::from(4), BigInt::from(7));
    (-x + y * &two + 1u32, -(x * &four) + y * &seven + 3u32)
}

/// Members `1..=n_max` of the `B_1 = 2` family, each checked against `b_vector`.
pub fn pell_family(n_max: usize) -> Vec<PellMember> {
    let mut out = Vec::with_capacity(n_max);
    let (mut x, mut y) = (BigInt::zero(), BigInt::zero());
    for n in 1..=n_max {
        (x, y) = pell_step(&x, &y);
        let d = DegreeSequence::from_tail(&[x.clone(), y.clone(), &y + 1])
            .expect("Pell members are strictly increasing");
        let w = &y - &x * 2;
        let closed = BettiVector::new(vec![BigInt::one(), BigInt::from(2), &w + 1, w])
            .expect("Pell members have positive Betti numbers");
        let b = b_vector(&d);
        assert_eq!(b, closed, "Pell member {n} disagrees with b_vector");
        out.push(PellMember {
            n,
            x: x.clone(),
            y: y.clone(),
            d,
            b,
        });
    }
    out
}

/// Members whose last degree `y + 1` is at most `z_max`.
pub fn pell_members_up_to(z_max: &BigInt) -> Vec<PellMember> {
    let mut out = Vec::new();
    let (mut x, mut y) = (BigInt::zero(), BigInt::zero());
    let mut n = 0;
    loop {
        (x, y) = pell_step(&x, &y);
        n += 1;
        if &y + 1 > *z_max {
            break;
        }
        let d = DegreeSequence::from_tail(&[x.clone(), y.clone(), &y + 1]).expect("increasing");
        let b = b_vector(&d);
        out.push(PellMember {
            n,
            x: x.clone(),
            y: y.clone(),
            d,
            b,
        });
    }
    out
}

/// `2(y - x)(z - x) = yz`.
pub fn satisfies_b1_equation(t: &[BigInt; 3]) -> bool {
    let [x, y, z] = t;
    (y - x) * (z - x) * 2 == y * z
}

/// Type 1 integer solutions: `(b(2b-a), a(2b-a), 2b(b-a))` for odd `a`
/// coprime to `b`.
pub fn type1_solution(a: &BigInt, b: &BigInt) -> Result<[BigInt; 3]> {
    if a.is_even() {
        return Err(Error::InvalidParameters(format!("type 1 needs a odd, got a = {a}")));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::InvalidParameters(format!("type 1 needs gcd(a, b) = 1, got ({a}, {b})")));
    }
    let two_b_minus_a = b * 2 - a;
    Ok([
        b * &two_b_minus_a,
        a * &two_b_minus_a,
        b * 2 * (b - a),
    ])
}

/// Type 2 integer solutions (even slope numerator `a = 2A`):
/// `(b^2 - Ab, A(2b - 2A), b(b - 2A))` for odd `b` with `gcd(2A, b) = 1`.
pub fn type2_solution(big_a: &BigInt, b: &BigInt) -> Result<[BigInt; 3]> {
    if b.is_even() {
        return Err(Error::InvalidParameters(format!("type 2 needs b odd, got b = {b}")));
    }
    if !(big_a * BigInt::from(2)).gcd(b).is_one() {
        return Err(Error::InvalidParameters(format!(
            "type 2 needs gcd(2A, b) = 1, got (A, b) = ({big_a}, {b})"
        )));
    }
    Ok([
        b * b - big_a * b,
        big_a * (b * 2 - big_a * 2),
        b * (b - big_a * 2),
    ])
}

/// Negates a raw triple when its `z` coordinate is negative, then keeps it
/// only if it is already ordered `0 < x < y < z`. Divides by the gcd.
pub fn ordered_degree_sequence(t: &[BigInt; 3]) -> Option<DegreeSequence> {
    let mut t = t.clone();
    if t[2].is_negative() {
        t.iter_mut().for_each(|v| *v = -v.clone());
    }
    if !(t[0].is_positive() && t[0] < t[1] && t[1] < t[2]) {
        return None;
    }
    let g = gcd_all(&t);
    let tail: Vec<BigInt> = t.iter().map(|v| v / &g).collect();
    DegreeSequence::from_tail(&tail).ok()
}

fn gcd3(x: i64, y: i64, z: i64) -> i64 {
    x.gcd(&y).gcd(&z)
}

fn seq3(x: i64, y: i64, z: i64) -> DegreeSequence {
    DegreeSequence::from_i64s(&[0, x, y, z]).expect("caller guarantees ordering")
}

fn sort_by_zyx(v: &mut [DegreeSequence]) {
    v.sort_by(|a, b| a.entries().iter().rev().cmp(b.entries().iter().rev()));
}

/// All nondegenerate `(0, x, y, z)` with `z <= z_max` and `B_1(D) = 2`.
///
/// `B_1 = 2` forces `B = pi`, hence `pi_1 = 2`, which for fixed `(x, z)`
/// pins `y = 2x(z - x) / (z - 2x)`. Every candidate is confirmed with the
/// exact `b_vector`.
pub fn search_b1_equals_2(z_max: i64) -> Result<Vec<DegreeSequence>> {
    check_bound(z_max)?;
    let two = BigInt::from(2);
    let mut hits: Vec<DegreeSequence> = (3..=z_max.max(2))
        .into_par_iter()
        .flat_map_iter(|z| {
            let two = two.clone();
            (1..(z + 1) / 2).filter_map(move |x| {
                let den = z - 2 * x;
                let num = 2 * x * (z - x);
                if num % den != 0 {
                    return None;
                }
                let y = num / den;
                if !(x < y && y < z) || gcd3(x, y, z) != 1 {
                    return None;
                }
                let d = seq3(x, y, z);
                (b_vector(&d).get(1) == &two).then_some(d)
            })
        })
        .collect();
    sort_by_zyx(&mut hits);
    Ok(hits)
}

/// Mirror of [`search_b1_equals_2`]: nondegenerate `(0, x, y, z)` with
/// `B_2(D) = 2`. Here `B_3 = 1` and `pi_2 / pi_3 = 2`, so for fixed `(x, y)`
/// the last degree solves `z^2 - xz - 2y(y - x) = 0`.
pub fn search_b2_equals_2(z_max: i64) -> Result<Vec<DegreeSequence>> {
    check_bound(z_max)?;
    let two = BigInt::from(2);
    let mut hits: Vec<DegreeSequence> = (2..z_max.max(1))
        .into_par_iter()
        .flat_map_iter(|y| {
            let two = two.clone();
            (1..y).filter_map(move |x| {
                let disc = x * x + 8 * y * (y - x);
                let root = disc.sqrt();
                if root * root != disc || (x + root) % 2 != 0 {
                    return None;
                }
                let z = (x + root) / 2;
                if z <= y || z > z_max || gcd3(x, y, z) != 1 {
                    return None;
                }
                let d = seq3(x, y, z);
                (b_vector(&d).get(2) == &two).then_some(d)
            })
        })
        .collect();
    sort_by_zyx(&mut hits);
    Ok(hits)
}

/// `sum B(D) >= 2 B_0 + 2 B_3 + 2` for codimension 3.
pub fn sum_lower_bound_holds(b: &BettiVector) -> bool {
    b.codim() == 3 && b.total() >= (b.get(0) + b.get(3)) * 2 + 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumRow {
    #[serde(rename = "D")]
    pub d: DegreeSequence,
    #[serde(rename = "B")]
    pub b: BettiVector,
    #[serde(serialize_with = "crate::herzog_kuhl::serialize_bigint")]
    pub total: BigInt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SumScan {
    pub rows: Vec<SumRow>,
    /// Triples surviving the fixed-width filter whose exact `B` was computed.
    pub exact_checks: usize,
}

/// `sum B(D)` computed in `i128` from reduced fractions, or `None` once it
/// is known to reach `limit`.
fn small_total(x: i64, y: i64, z: i64, limit: i128, lcm_below: i64) -> Option<i128> {
    // B_i >= 1 forces B_0 >= 1 / pi_i, so the total is at least
    // (1 + sum pi) / pi_i; in particular every pi_i exceeds 1 / limit.
    // Also B_i >= pi_i and B_i <= limit - 4.
    let cap = (limit - 4) as i64;
    let lim = limit as i64;
    let (u, v, w) = (y - x, z - y, z - x);
    if x * z * lim <= u * v || x * y * lim <= w * v {
        return None;
    }
    if y * z > cap * u * w || x * z > cap * u * v || x * y > cap * w * v {
        return None;
    }
    // B_0 < limit, so each reduced denominator divides lcm(1, ..., limit - 1)
    if (lcm_below * y * z) % (u * w) != 0
        || (lcm_below * x * z) % (u * v) != 0
        || (lcm_below * x * y) % (w * v) != 0
    {
        return None;
    }
    let (x, y, z) = (x as i128, y as i128, z as i128);
    let reduce = |n: i128, d: i128| {
        let g = n.gcd(&d);
        (n / g, d / g)
    };
    let pis = [
        reduce(y * z, (y - x) * (z - x)),
        reduce(x * z, (y - x) * (z - y)),
        reduce(x * y, (z - x) * (z - y)),
    ];
    let mut m: i128 = 1;
    for (_, d) in &pis {
        m = m.lcm(d);
        if m >= limit {
            return None;
        }
    }
    let mut total = m;
    for (n, d) in &pis {
        total += m / d * n;
        if total >= limit {
            return None;
        }
    }
    Some(total)
}

/// All nondegenerate `(0, x, y, z)` with `z <= z_max` and `sum B(D) < 12`.
///
/// Every `B_i` lies between `pi_i` and 8, and `B_0 >= 1 / pi_i`, which
/// rejects most triples with a few products. `B_0` is the lcm of the reduced
/// denominators of `pi`, so the sum is then computed in `i128`, abandoning
/// a triple as soon as `B_0` or a partial sum reaches 12. Survivors are recomputed with the exact
/// `b_vector` and checked against the `2 B_0 + 2 B_3 + 2` lower bound.
pub fn search_sum_lt_12(z_max: i64) -> Result<SumScan> {
    check_bound(z_max)?;
    let twelve = BigInt::from(12);
    let lcm_below = (1..12i64).fold(1, |acc, k| acc.lcm(&k));
    let per_z: Vec<(Vec<SumRow>, usize)> = (3..=z_max.max(2))
        .into_par_iter()
        .map(|z| {
            let mut rows = Vec::new();
            let mut checks = 0usize;
            for y in 2..z {
                for x in 1..y {
                    if small_total(x, y, z, 12, lcm_below).is_none() || gcd3(x, y, z) != 1 {
                        continue;
                    }
                    checks += 1;
                    let d = seq3(x, y, z);
                    let b = b_vector(&d);
                    assert!(sum_lower_bound_holds(&b), "lower bound fails for {d}");
                    let total = b.total();
                    assert!(total < twelve, "fixed-width total disagrees for {d}");
                    rows.push(SumRow { d, b, total });
                }
            }
            (rows, checks)
        })
        .collect();
    let mut scan = SumScan::default();
    for (rows, checks) in per_z {
        scan.rows.extend(rows);
        scan.exact_checks += checks;
    }
    scan.rows
        .sort_by(|a, b| a.d.entries().iter().rev().cmp(b.d.entries().iter().rev()));
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::from_i64s(v).unwrap()
    }

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn triple(v: [i64; 3]) -> [BigInt; 3] {
        v.map(BigInt::from)
    }

    #[test]
    fn pell_family_first_members() {
        let fam = pell_family(3);
        assert_eq!((fam[0].x.clone(), fam[0].y.clone()), (bi(1), bi(3)));
        assert_eq!(fam[0].d, ds(&[0, 1, 3, 4]));
        assert_eq!(fam[0].b, BettiVector::from_i64s(&[1, 2, 2, 1]).unwrap());
        assert_eq!(fam[1].d, ds(&[0, 6, 20, 21]));
        assert_eq!(fam[1].b, BettiVector::from_i64s(&[1, 2, 9, 8]).unwrap());
        assert_eq!(fam[2].d, ds(&[0, 35, 119, 120]));
        assert_eq!(fam[2].b, BettiVector::from_i64s(&[1, 2, 50, 49]).unwrap());
    }

    #[test]
    fn pell_identity_to_thirty() {
        let fam = pell_family(30);
        assert!(fam.iter().all(PellMember::satisfies_pell));
        assert!(fam[29].y > BigInt::from(u64::MAX));
    }

    #[test]
    fn type1_examples() {
        let t = type1_solution(&bi(3), &bi(1)).unwrap();
        assert_eq!(t, triple([-1, -3, -4]));
        assert!(satisfies_b1_equation(&t));
        assert_eq!(ordered_degree_sequence(&t), Some(ds(&[0, 1, 3, 4])));

        let t = type1_solution(&bi(1), &bi(2)).unwrap();
        assert_eq!(t, triple([6, 3, 4]));
        assert!(satisfies_b1_equation(&t));
        assert_eq!(ordered_degree_sequence(&t), None);

        let t = type1_solution(&bi(1), &bi(1)).unwrap();
        assert_eq!(t, triple([1, 1, 0]));
        assert_eq!(ordered_degree_sequence(&t), None);

        assert!(type1_solution(&bi(2), &bi(1)).is_err());
        assert!(type1_solution(&bi(3), &bi(6)).is_err());
    }

    #[test]
    fn type2_examples() {
        let t = type2_solution(&bi(1), &bi(3)).unwrap();
        assert_eq!(t, triple([6, 4, 3]));
        assert!(satisfies_b1_equation(&t));
        assert_eq!(ordered_degree_sequence(&t), None);

        let t = type2_solution(&bi(3), &bi(1)).unwrap();
        assert_eq!(t, triple([-2, -12, -5]));
        assert!(satisfies_b1_equation(&t));
        assert_eq!(ordered_degree_sequence(&t), None);

        let t = type2_solution(&bi(0), &bi(1)).unwrap();
        assert_eq!(t, triple([1, 0, 1]));
        assert_eq!(ordered_degree_sequence(&t), None);

        assert!(type2_solution(&bi(1), &bi(4)).is_err());
        assert!(type2_solution(&bi(3), &bi(3)).is_err());
    }

    #[test]
    fn b1_search_examples() {
        assert_eq!(
            search_b1_equals_2(25).unwrap(),
            vec![ds(&[0, 1, 3, 4]), ds(&[0, 6, 20, 21])]
        );
        assert_eq!(search_b1_equals_2(4).unwrap(), vec![ds(&[0, 1, 3, 4])]);
        assert!(search_b1_equals_2(3).unwrap().is_empty());
    }

    #[test]
    fn sum_search_examples() {
        let rows = |z| -> Vec<(DegreeSequence, BettiVector)> {
            search_sum_lt_12(z)
                .unwrap()
                .rows
                .into_iter()
                .map(|r| (r.d, r.b))
                .collect()
        };
        let b = |v: &[i64]| BettiVector::from_i64s(v).unwrap();
        let full = vec![
            (ds(&[0, 1, 2, 3]), b(&[1, 3, 3, 1])),
            (ds(&[0, 1, 3, 4]), b(&[1, 2, 2, 1])),
            (ds(&[0, 1, 5, 6]), b(&[2, 3, 3, 2])),
            (ds(&[0, 3, 5, 8]), b(&[1, 4, 4, 1])),
        ];
        assert_eq!(rows(100), full);
        assert_eq!(rows(6), full[..3].to_vec());
        assert_eq!(rows(3), full[..1].to_vec());
    }

    #[test]
    fn rejects_oversized_bounds() {
        assert!(search_sum_lt_12(SCAN_LIMIT + 1).is_err());
    }
}
