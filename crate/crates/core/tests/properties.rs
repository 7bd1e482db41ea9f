use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use pure_betti::codim3::{ordered_degree_sequence, satisfies_b1_equation, type1_solution, type2_solution};
use pure_betti::dioph::{
    eval_product_equation, integer_point_search, primitive_integer_point, rational_point, rational_roots,
    IntPoly, ProductEquation, SecondIntersection,
};
use pure_betti::exact::{DegreeSequence, Rational};
use pure_betti::gorenstein::{gor_constraints, gorenstein_betti, GorShape};
use pure_betti::herzog_kuhl::{b_vector, parity_check, pi_vector};

/// Strictly increasing `(0, d_1, ..., d_c)` with `c <= 8` and `d_c <= 60`.
fn degree_sequence() -> impl Strategy<Value = DegreeSequence> {
    codim_at_least(1)
}

fn codim_at_least(c_min: usize) -> impl Strategy<Value = DegreeSequence> {
    (c_min..=8)
        .prop_flat_map(|c| proptest::sample::subsequence((1i64..=60).collect::<Vec<_>>(), c))
        .prop_map(|tail| {
            let tail: Vec<BigInt> = tail.into_iter().map(BigInt::from).collect();
            DegreeSequence::from_tail(&tail).unwrap()
        })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn slope() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 10_000, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn alternating_sum_vanishes(d in degree_sequence()) {
        prop_assert!(parity_check(&b_vector(&d)));
    }

    #[test]
    fn dual_reverses_b(d in degree_sequence()) {
        let b = b_vector(&d);
        prop_assert_eq!(b_vector(&d.dual()), b.reversed());
        prop_assert_eq!(d.dual().dual(), d);
    }

    #[test]
    fn b1_exceeds_b0(d in codim_at_least(2)) {
        let b = b_vector(&d);
        prop_assert!(b.get(1) > b.get(0));
    }

    #[test]
    fn gorenstein_constraints_round_trip(z in 3u64..=200, y_frac in 0.0f64..1.0, x_frac in 0.0f64..1.0, five in any::<bool>()) {
        let c = if five { 5 } else { 6 };
        let y = 2 + ((z - 2) as f64 * y_frac) as u64;
        let y = y.min(z - 1);
        let x = (1 + ((y - 1) as f64 * x_frac) as u64).min(y - 1);
        prop_assume!(x.gcd(&y).gcd(&z) == 1);
        let d = GorShape::new(c).unwrap().instantiate(&x.into(), &y.into(), &z.into()).unwrap();
        let b = b_vector(&d);
        prop_assert!(b.reversed() == b);
        let a: u64 = b.get(1).try_into().unwrap();
        let bb: u64 = b.get(2).try_into().unwrap();
        let holds = gor_constraints(c, a, bb).unwrap().holds(&x.into(), &y.into(), &z.into()).unwrap();
        prop_assert_eq!(holds, Some(b.clone()) == gorenstein_betti(c, a, bb).unwrap());
        prop_assert_eq!(holds, b.get(0).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1_000, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn rational_point_lies_on_equation(
        c in 3usize..=5,
        i_seed in 0usize..4,
        alpha in 1i64..=5,
        slopes in proptest::collection::vec(slope(), 4),
    ) {
        let i = 1 + i_seed % (c - 1);
        let eq = ProductEquation::new(c, i, 1, alpha).unwrap();
        let slopes = &slopes[..c - 1];
        if let Ok(SecondIntersection::Point(p)) = rational_point(&eq, slopes).unwrap() {
            let ints = primitive_integer_point(&p);
            let (lhs, rhs) = eval_product_equation(&eq, &ints).unwrap();
            prop_assert_eq!(lhs, rhs);
            // homogeneity: any common multiple of the denominators works
            let m = p.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let scaled: Vec<BigInt> = p.iter().map(|r| (r * Rational::from_integer(m.clone())).to_integer()).collect();
            let (lhs, rhs) = eval_product_equation(&eq, &scaled).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn type1_solutions_solve_the_equation(a in -200i64..=200, b in -200i64..=200) {
        prop_assume!(a.rem_euclid(2) == 1 && a.gcd(&b) == 1);
        let t = type1_solution(&a.into(), &b.into()).unwrap();
        prop_assert!(satisfies_b1_equation(&t));
        if let Some(d) = ordered_degree_sequence(&t) {
            let b = b_vector(&d);
            prop_assert_eq!(b.get(1), &(b.get(0) * 2));
        }
    }

    #[test]
    fn type2_solutions_solve_the_equation(big_a in -200i64..=200, b in -200i64..=200) {
        prop_assume!(b.rem_euclid(2) == 1 && (2 * big_a).gcd(&b) == 1);
        let t = type2_solution(&big_a.into(), &b.into()).unwrap();
        prop_assert!(satisfies_b1_equation(&t));
        if let Some(d) = ordered_degree_sequence(&t) {
            let b = b_vector(&d);
            prop_assert_eq!(b.get(1), &(b.get(0) * 2));
        }
    }

    #[test]
    fn pi_is_exact(d in degree_sequence()) {
        // B = B_0 * pi entrywise, and the alternating sum of pi is zero
        let pi = pi_vector(&d);
        let b = b_vector(&d);
        let m = b.get(0).clone();
        for (p, bi) in pi.values().iter().zip(b.values()) {
            prop_assert_eq!(p * Rational::from_integer(m.clone()), Rational::from_integer(bi.clone()));
        }
        let alt = pi.values().iter().enumerate().fold(Rational::zero(), |acc, (i, p)| {
            if i % 2 == 0 { acc + p } else { acc - p }
        });
        prop_assert!(alt.is_zero());
    }

    #[test]
    fn b_is_scale_invariant(d in degree_sequence(), lambda in 2i64..=9) {
        let scaled = d.scale(&lambda.into()).unwrap();
        prop_assert_eq!(b_vector(&scaled), b_vector(&d));
        prop_assert_eq!(pi_vector(&scaled), pi_vector(&d));
        prop_assert_eq!(scaled.normalize(), d.normalize());
    }

    #[test]
    fn b_is_the_first_integer_point_on_the_ray(tail in proptest::sample::subsequence((1i64..=24).collect::<Vec<_>>(), 1..=4)) {
        let d = DegreeSequence::from_i64s(&std::iter::once(0).chain(tail).collect::<Vec<_>>()).unwrap();
        let pi = pi_vector(&d);
        let b = b_vector(&d);
        let m: u64 = b.get(0).try_into().unwrap();
        prop_assume!(m <= 5_000);
        for k in 1..m {
            let k = Rational::from_integer(k.into());
            prop_assert!(pi.values().iter().any(|p| !(p * &k).is_integer()));
        }
        prop_assert!(b.gcd().is_one());
    }

    #[test]
    fn rational_roots_match_dense_scan(coeffs in proptest::collection::vec(-12i64..=12, 1..=5)) {
        let p = IntPoly::from_i64s(&coeffs, "y");
        prop_assume!(!p.is_zero());
        let got = rational_roots(&p).unwrap();
        let lowest = p.coefficients().iter().find(|c| !c.is_zero()).unwrap().abs();
        let lead = p.coefficients().last().unwrap().abs();
        let lowest: i64 = (&lowest).try_into().unwrap();
        let lead: i64 = (&lead).try_into().unwrap();
        let mut expected = Vec::new();
        if p.coefficients()[0].is_zero() {
            expected.push(Rational::zero());
        }
        for num in -lowest..=lowest {
            for den in 1..=lead {
                let r = q(num, den);
                if !r.is_zero() && p.eval(&r).is_zero() {
                    expected.push(r);
                }
            }
        }
        expected.sort();
        expected.dedup();
        prop_assert_eq!(got, expected);
    }
}

#[test]
fn codim3_integer_points_come_from_rational_lines() {
    let eq = ProductEquation::codim3_b1_equals_2();
    let points = integer_point_search(&eq, 200).unwrap();
    assert!(points.len() > 2);
    for p in points {
        // the line through the origin and (x/z, y/z, 1) has slopes (1, y/x)
        let slopes = [q(1, 1), Rational::new(p[1].clone(), p[0].clone())];
        let Ok(SecondIntersection::Point(r)) = rational_point(&eq, &slopes).unwrap() else {
            panic!("no second point for {p:?}");
        };
        assert_eq!(primitive_integer_point(&r), p);
    }
}
