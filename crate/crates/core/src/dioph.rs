//! Product Diophantine equations coming from the Herzog-Kühl formulas.
//!
//! Asking for `B_0(D) = L` and `B_i(D) = alpha` on `D = (0, x_1, ..., x_c)`
//! gives
//!
//! ```text
//! L * prod_{j != i} x_j = alpha * prod_{j < i} (x_i - x_j) * prod_{j > i} (x_j - x_i)
//! ```
//!
//! Both sides are homogeneous of degree `c - 1`. Setting `x_c = 1`, lines
//! through `(0, ..., 0, 1)` with rational slopes meet the hypersurface there
//! with multiplicity `c - 2`, so the residual intersection is rational.
//!
//! The second half of the module checks plane components `{f = g = 0}` in
//! `(x, y, z)` for points with `0 < x < y < z` using the rational root test.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{gcd_all, lcm_all, DegreeSequence, Rational};
use crate::herzog_kuhl::{b_vector, BigIntJson};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductEquation {
    pub c: usize,
    /// Distinguished index, `1 <= i <= c`.
    pub i: usize,
    #[serde(rename = "L", serialize_with = "crate::herzog_kuhl::serialize_bigint")]
    pub l: BigInt,
    #[serde(serialize_with = "crate::herzog_kuhl::serialize_bigint")]
    pub alpha: BigInt,
}

impl ProductEquation {
    pub fn new(c: usize, i: usize, l: impl Into<BigInt>, alpha: impl Into<BigInt>) -> Result<Self> {
        let (l, alpha) = (l.into(), alpha.into());
        if c < 2 {
            return Err(Error::InvalidParameters(format!("need c >= 2, got {c}")));
        }
        if i == 0 || i > c {
            return Err(Error::InvalidParameters(format!("need 1 <= i <= c, got i = {i}, c = {c}")));
        }
        if !l.is_positive() || !alpha.is_positive() {
            return Err(Error::InvalidParameters(format!(
                "L and alpha must be positive, got L = {l}, alpha = {alpha}"
            )));
        }
        Ok(ProductEquation { c, i, l, alpha })
    }

    /// The `B_1(D) = 2` equation of codimension 3, `2(y - x)(z - x) = yz`.
    pub fn codim3_b1_equals_2() -> Self {
        ProductEquation::new(3, 1, 1, 2).expect("valid")
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.c {
            return Err(Error::LengthMismatch {
                expected: self.c,
                found: n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ProductEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={} i={} L={} alpha={}", self.c, self.i, self.l, self.alpha)
    }
}

/// Evaluates both sides exactly at `(x_1, ..., x_c)`.
pub fn eval_product_equation(eq: &ProductEquation, point: &[BigInt]) -> Result<(BigInt, BigInt)> {
    eq.check_len(point.len())?;
    let xi = &point[eq.i - 1];
    let mut lhs = eq.l.clone();
    let mut rhs = eq.alpha.clone();
    for (k, xk) in point.iter().enumerate() {
        let j = k + 1;
        if j == eq.i {
            continue;
        }
        lhs *= xk;
        rhs *= if j < eq.i { xi - xk } else { xk - xi };
    }
    Ok((lhs, rhs))
}

pub fn is_solution(eq: &ProductEquation, point: &[BigInt]) -> bool {
    matches!(eval_product_equation(eq, point), Ok((l, r)) if l == r)
}

/// Ascending-coefficient polynomial in one variable over the rationals.
type QPoly = Vec<Rational>;

fn qpoly_mul(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Outcome of intersecting a rational line through `(0, ..., 0, 1)` with
/// the hypersurface `x_c = 1` slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SecondIntersection {
    Point(Vec<Rational>),
    /// The residual root is `t = 0`: the second point is the origin itself.
    Origin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineDegeneracy {
    /// Every point of the line solves the equation.
    LineInVariety,
    /// The residual linear equation in `t` is inconsistent.
    NoSecondIntersection,
    /// The origin is not a point of multiplicity `c - 2`; the residual is
    /// not linear.
    NonLinearResidual(usize),
}

impl fmt::Display for LineDegeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineDegeneracy::LineInVariety => f.write_str("line lies in the variety"),
            LineDegeneracy::NoSecondIntersection => f.write_str("no second intersection"),
            LineDegeneracy::NonLinearResidual(d) => {
                write!(f, "residual equation has degree {d}, not linear")
            }
        }
    }
}

/// Second intersection of `r(t) = (m_1 t, ..., m_{c-1} t, 1)` with the
/// equation. `slopes` has `c - 1` entries.
pub fn rational_point(
    eq: &ProductEquation,
    slopes: &[Rational],
) -> Result<std::result::Result<SecondIntersection, LineDegeneracy>> {
    if slopes.len() + 1 != eq.c {
        return Err(Error::LengthMismatch {
            expected: eq.c - 1,
            found: slopes.len(),
        });
    }
    // coordinate k as a linear polynomial in t
    let coord = |k: usize| -> QPoly {
        if k == eq.c {
            vec![Rational::one(), Rational::zero()]
        } else {
            vec![Rational::zero(), slopes[k - 1].clone()]
        }
    };
    let sub = |a: &QPoly, b: &QPoly| -> QPoly { a.iter().zip(b).map(|(x, y)| x - y).collect() };

    let xi = coord(eq.i);
    let mut lhs: QPoly = vec![Rational::from_integer(eq.l.clone())];
    let mut rhs: QPoly = vec![Rational::from_integer(eq.alpha.clone())];
    for j in 1..=eq.c {
        if j == eq.i {
            continue;
        }
        let xj = coord(j);
        lhs = qpoly_mul(&lhs, &xj);
        let diff = if j < eq.i { sub(&xi, &xj) } else { sub(&xj, &xi) };
        rhs = qpoly_mul(&rhs, &diff);
    }
    let mut residual: QPoly = sub(&lhs, &rhs);
    while residual.last().is_some_and(Zero::is_zero) {
        residual.pop();
    }
    if residual.is_empty() {
        return Ok(Err(LineDegeneracy::LineInVariety));
    }
    // the origin accounts for at most c - 2 roots
    let lead_zeros = residual.iter().take_while(|q| q.is_zero()).count();
    let residual = &residual[lead_zeros.min(eq.c - 2)..];
    match residual.len() {
        1 => Ok(Err(LineDegeneracy::NoSecondIntersection)),
        2 => {
            let t = -&residual[0] / &residual[1];
            if t.is_zero() {
                return Ok(Ok(SecondIntersection::Origin));
            }
            let mut point: Vec<Rational> = slopes.iter().map(|m| m * &t).collect();
            point.push(Rational::one());
            Ok(Ok(SecondIntersection::Point(point)))
        }
        n => Ok(Err(LineDegeneracy::NonLinearResidual(n - 1))),
    }
}

/// Clears denominators and divides by the content; the last nonzero
/// coordinate becomes positive.
pub fn primitive_integer_point(point: &[Rational]) -> Vec<BigInt> {
    let m = lcm_all(point.iter().map(|q| q.denom()));
    let ints: Vec<BigInt> = point.iter().map(|q| (q * &m).to_integer()).collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().rev().find(|v| !v.is_zero()) {
        Some(v) if v.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.iter().map(|v| v / &g * &sign).collect()
}

/// All primitive `0 < x_1 < ... < x_c <= z_max` solving the equation,
/// sorted lexicographically.
///
/// One coordinate other than `x_i` enters each side linearly, so it is
/// solved for exactly while the other `c - 1` coordinates are enumerated.
/// Candidate arithmetic runs in checked `i128`; every hit is re-verified
/// with [`eval_product_equation`].
pub fn integer_point_search(eq: &ProductEquation, z_max: u64) -> Result<Vec<Vec<BigInt>>> {
    let c = eq.c;
    if (z_max as usize) < c {
        return Ok(Vec::new());
    }
    let z_max = i64::try_from(z_max).map_err(|_| Error::BoundTooLarge(z_max.to_string()))?;
    let l = eq.l.to_i128().ok_or_else(|| Error::BoundTooLarge(format!("L = {}", eq.l)))?;
    let alpha = eq
        .alpha
        .to_i128()
        .ok_or_else(|| Error::BoundTooLarge(format!("alpha = {}", eq.alpha)))?;
    let solved = if eq.i != c { c } else { c - 1 };
    let ctx = SearchCtx {
        c,
        i: eq.i,
        solved,
        z_max,
        l,
        alpha,
    };
    let first_hi = z_max - (c as i64 - 1);
    let results: Vec<Result<Vec<Vec<i64>>>> = (1..=first_hi)
        .into_par_iter()
        .map(|x1| {
            let mut vals = vec![0i64; c + 1];
            let mut out = Vec::new();
            if solved == 1 {
                unreachable!("c >= 2 never solves for x_1");
            }
            vals[1] = x1;
            ctx.recurse(&mut vals, 2, x1 + 1, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut hits = Vec::new();
    for r in results {
        for v in r? {
            let point: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
            debug_assert!(is_solution(eq, &point));
            if !is_solution(eq, &point) {
                return Err(Error::InvalidParameters(format!(
                    "internal: candidate {point:?} failed exact verification"
                )));
            }
            hits.push(point);
        }
    }
    hits.sort();
    Ok(hits)
}

/// The solutions of [`integer_point_search`] whose `B(D)` really has
/// `B_0 = L` and `B_i = alpha`, not just the ratio `alpha / L`.
pub fn realizing_points(eq: &ProductEquation, z_max: u64) -> Result<Vec<Vec<BigInt>>> {
    Ok(integer_point_search(eq, z_max)?
        .into_iter()
        .filter(|p| {
            let d = DegreeSequence::from_tail(p).expect("ordered positive tuple");
            let b = b_vector(&d);
            *b.get(0) == eq.l && *b.get(eq.i) == eq.alpha
        })
        .collect())
}

struct SearchCtx {
    c: usize,
    i: usize,
    solved: usize,
    z_max: i64,
    l: i128,
    alpha: i128,
}

impl SearchCtx {
    fn overflow() -> Error {
        Error::BoundTooLarge("intermediate product exceeds 128 bits".into())
    }

    fn recurse(&self, vals: &mut Vec<i64>, pos: usize, lo: i64, out: &mut Vec<Vec<i64>>) -> Result<()> {
        if pos > self.c {
            return self.solve(vals, out);
        }
        if pos == self.solved {
            return self.recurse(vals, pos + 1, lo + 1, out);
        }
        let hi = self.z_max - (self.c - pos) as i64;
        for v in lo..=hi {
            vals[pos] = v;
            self.recurse(vals, pos + 1, v + 1, out)?;
        }
        Ok(())
    }

    fn solve(&self, vals: &mut [i64], out: &mut Vec<Vec<i64>>) -> Result<()> {
        let (c, i, j) = (self.c, self.i, self.solved);
        let xi = vals[i] as i128;
        let mut p: i128 = self.l;
        let mut q: i128 = self.alpha;
        for k in 1..=c {
            if k == i || k == j {
                continue;
            }
            let xk = vals[k] as i128;
            p = p.checked_mul(xk).ok_or_else(Self::overflow)?;
            let diff = if k < i { xi - xk } else { xk - xi };
            q = q.checked_mul(diff).ok_or_else(Self::overflow)?;
        }
        // L P x_j = Q s (x_j - x_i)  with s = sign(j - i)
        let s: i128 = if j > i { 1 } else { -1 };
        let den = q * s - p;
        if den == 0 {
            return Ok(());
        }
        let num = (q * s).checked_mul(xi).ok_or_else(Self::overflow)?;
        if num % den != 0 {
            return Ok(());
        }
        let xj = num / den;
        let below = vals[j - 1] as i128;
        let above = if j == c { self.z_max as i128 + 1 } else { vals[j + 1] as i128 };
        if xj <= below || xj >= above {
            return Ok(());
        }
        vals[j] = xj as i64;
        let g = vals[1..=c].iter().fold(0i64, |acc, v| acc.gcd(v));
        if g == 1 {
            out.push(vals[1..=c].to_vec());
        }
        Ok(())
    }
}

/// Integer polynomial with ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coefficients: Vec<BigInt>,
    pub variable: String,
}

impl IntPoly {
    pub fn new(mut coefficients: Vec<BigInt>, variable: impl Into<String>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPoly {
            coefficients,
            variable: variable.into(),
        }
    }

    pub fn from_i64s(coefficients: &[i64], variable: impl Into<String>) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect(), variable)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Exact evaluation at a rational, via `sum a_k p^k q^(n-k)`.
    pub fn vanishes_at(&self, r: &Rational) -> bool {
        let Some(n) = self.degree() else { return true };
        let (p, q) = (r.numer(), r.denom());
        let mut acc = BigInt::zero();
        let mut p_pow = BigInt::one();
        let q_pows: Vec<BigInt> = (0..=n).scan(BigInt::one(), |s, k| {
            let cur = s.clone();
            if k < n {
                *s *= q;
            }
            Some(cur)
        }).collect();
        for (k, a) in self.coefficients.iter().enumerate() {
            acc += a * &p_pow * &q_pows[n - k];
            p_pow *= p;
        }
        acc.is_zero()
    }

    pub fn eval(&self, r: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * r + Rational::from_integer(a.clone()))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coefficients.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = a.abs();
            let coeff = if mag.is_one() && k > 0 { String::new() } else { mag.to_string() };
            let var = match k {
                0 => String::new(),
                1 => self.variable.clone(),
                _ => format!("{}^{}", self.variable, k),
            };
            write!(f, "{sign}{coeff}{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// Positive divisors by trial division.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All rational roots, ascending and without multiplicity.
pub fn rational_roots(p: &IntPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let zeros = p.coefficients.iter().take_while(|c| c.is_zero()).count();
    let reduced = IntPoly::new(p.coefficients[zeros..].to_vec(), p.variable.clone());
    let mut roots = Vec::new();
    if zeros > 0 {
        roots.push(Rational::zero());
    }
    if reduced.degree().unwrap_or(0) > 0 {
        let constant = &reduced.coefficients[0];
        let leading = reduced.coefficients.last().expect("nonzero");
        let numerators = positive_divisors(constant);
        let denominators = positive_divisors(leading);
        for num in &numerators {
            for den in &denominators {
                if !num.gcd(den).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let r = Rational::new(num * sign, den.clone());
                    if reduced.vanishes_at(&r) {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveVar {
    X,
    Y,
}

impl fmt::Display for CurveVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveVar::X => "x",
            CurveVar::Y => "y",
        })
    }
}

/// One generator of a plane component in `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `p x + q y + r z`.
    Linear([BigInt; 3]),
    /// A form homogeneous in `(var, z)`, stored dehomogenized at `z = 1`.
    Curve { var: CurveVar, poly: IntPoly },
}

impl Generator {
    pub fn linear(p: i64, q: i64, r: i64) -> Self {
        Generator::Linear([p.into(), q.into(), r.into()])
    }

    pub fn curve(var: CurveVar, ascending: &[i64]) -> Self {
        Generator::Curve {
            var,
            poly: IntPoly::from_i64s(ascending, var.to_string()),
        }
    }

    fn vanishes_at(&self, x: &Rational, y: &Rational) -> bool {
        match self {
            Generator::Linear([p, q, r]) => {
                (Rational::from_integer(p.clone()) * x
                    + Rational::from_integer(q.clone()) * y
                    + Rational::from_integer(r.clone()))
                .is_zero()
            }
            Generator::Curve { var, poly } => poly.vanishes_at(match var {
                CurveVar::X => x,
                CurveVar::Y => y,
            }),
        }
    }

    /// Why no point with `0 < x < y < z` can satisfy this linear form.
    fn degeneracy(&self) -> Option<String> {
        let Generator::Linear(coeffs) = self else { return None };
        let nonzero: Vec<&BigInt> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.len() == 1 {
            return Some(format!("{self} sets a coordinate to zero"));
        }
        if nonzero.iter().all(|c| c.is_positive()) || nonzero.iter().all(|c| c.is_negative()) {
            return Some(format!("{self} has no solution with positive coordinates"));
        }
        if nonzero.len() == 2 && (nonzero[0] + nonzero[1]).is_zero() {
            return Some(format!("{self} sets two coordinates equal"));
        }
        None
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Linear(coeffs) => {
                let mut first = true;
                for (c, v) in coeffs.iter().zip(["x", "y", "z"]) {
                    if c.is_zero() {
                        continue;
                    }
                    let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
                    let mag = c.abs();
                    let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
                    write!(f, "{sign}{coeff}{v}")?;
                    first = false;
                }
                if first {
                    f.write_str("0")?;
                }
                Ok(())
            }
            Generator::Curve { var, poly } => {
                // homogenize back to (var, z)
                let n = poly.degree().unwrap_or(0);
                let mut first = true;
                for (k, a) in poly.coefficients().iter().enumerate().rev() {
                    if a.is_zero() {
                        continue;
                    }
                    let sign = if a.is_negative() { "-" } else if first { "" } else { "+" };
                    let mag = a.abs();
                    let power = |v: &str, e: usize| match e {
                        0 => String::new(),
                        1 => v.to_string(),
                        _ => format!("{v}^{e}"),
                    };
                    let monomial = format!("{}{}", power(&var.to_string(), k), power("z", n - k));
                    let coeff = if mag.is_one() && !monomial.is_empty() { String::new() } else { mag.to_string() };
                    write!(f, "{sign}{coeff}{monomial}")?;
                    first = false;
                }
                if first {
                    f.write_str("0")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub generators: Vec<Generator>,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ComponentVerdict {
    CoordinateDegenerate { reason: String },
    NoAdmissiblePoint {
        /// Rational points of the component on `z = 1` that were examined.
        rational_points: usize,
    },
    Admissible {
        #[serde(serialize_with = "serialize_triples")]
        points: Vec<[BigInt; 3]>,
    },
}

fn serialize_triples<S: serde::Serializer>(
    points: &[[BigInt; 3]],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let as_json: Vec<[BigIntJson<'_>; 3]> = points
        .iter()
        .map(|p| [BigIntJson(&p[0]), BigIntJson(&p[1]), BigIntJson(&p[2])])
        .collect();
    as_json.serialize(s)
}

impl ComponentVerdict {
    pub fn admissible_points(&self) -> &[[BigInt; 3]] {
        match self {
            ComponentVerdict::Admissible { points } => points,
            _ => &[],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.admissible_points().is_empty()
    }
}

fn roots_of(gens: &[Generator], which: CurveVar) -> Result<Option<Vec<Rational>>> {
    let mut acc: Option<Vec<Rational>> = None;
    for g in gens {
        if let Generator::Curve { var, poly } = g {
            if *var != which {
                continue;
            }
            let roots = rational_roots(poly)?;
            acc = Some(match acc {
                None => roots,
                Some(prev) => prev.into_iter().filter(|r| roots.contains(r)).collect(),
            });
        }
    }
    Ok(acc)
}

/// Finds every point of the component with `0 < x < y < z`.
///
/// Points with `z = 0` are never admissible, so the component is sliced at
/// `z = 1`: curve generators contribute their rational roots, linear
/// generators are solved, and every candidate is checked against all
/// generators before being scaled to a primitive integer triple.
pub fn check_component(component: &Component) -> Result<ComponentVerdict> {
    let gens = &component.generators;
    if let Some(reason) = gens.iter().find_map(Generator::degeneracy) {
        return Ok(ComponentVerdict::CoordinateDegenerate { reason });
    }
    let linears: Vec<&[BigInt; 3]> = gens
        .iter()
        .filter_map(|g| match g {
            Generator::Linear(c) => Some(c),
            _ => None,
        })
        .collect();
    let xs = roots_of(gens, CurveVar::X)?;
    let ys = roots_of(gens, CurveVar::Y)?;
    let q = |v: &BigInt| Rational::from_integer(v.clone());

    let candidates: Vec<(Rational, Rational)> = match (xs, ys) {
        (Some(xs), Some(ys)) => xs
            .iter()
            .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
            .collect(),
        (None, Some(ys)) => {
            let Some([p, qc, r]) = linears.iter().find(|c| !c[0].is_zero()).copied() else {
                return Err(Error::UnsupportedComponent(format!(
                    "{component}: no linear form involving x"
                )));
            };
            ys.into_iter()
                .map(|y| (-(q(qc) * &y + q(r)) / q(p), y))
                .collect()
        }
        (Some(xs), None) => {
            let Some([p, qc, r]) = linears.iter().find(|c| !c[1].is_zero()).copied() else {
                return Err(Error::UnsupportedComponent(format!(
                    "{component}: no linear form involving y"
                )));
            };
            xs.into_iter()
                .map(|x| {
                    let y = -(q(p) * &x + q(r)) / q(qc);
                    (x, y)
                })
                .collect()
        }
        (None, None) => {
            let mut solved = None;
            'outer: for (a, f) in linears.iter().enumerate() {
                for g in &linears[a + 1..] {
                    let det = &f[0] * &g[1] - &f[1] * &g[0];
                    if det.is_zero() {
                        continue;
                    }
                    // f0 x + f1 y = -f2 ; g0 x + g1 y = -g2
                    let det = q(&det);
                    let x = (q(&f[1]) * q(&g[2]) - q(&f[2]) * q(&g[1])) / &det;
                    let y = (q(&f[2]) * q(&g[0]) - q(&f[0]) * q(&g[2])) / &det;
                    solved = Some((x, y));
                    break 'outer;
                }
            }
            match solved {
                Some(pt) => vec![pt],
                None => {
                    return Err(Error::UnsupportedComponent(format!(
                        "{component}: not zero-dimensional on z = 1"
                    )))
                }
            }
        }
    };

    let on_component: Vec<(Rational, Rational)> = candidates
        .into_iter()
        .filter(|(x, y)| gens.iter().all(|g| g.vanishes_at(x, y)))
        .collect();
    let rational_points = on_component.len();
    let mut points: Vec<[BigInt; 3]> = on_component
        .iter()
        .filter_map(|(x, y)| {
            let ints = primitive_integer_point(&[x.clone(), y.clone(), Rational::one()]);
            let t: [BigInt; 3] = ints.try_into().ok()?;
            (t[0].is_positive() && t[0] < t[1] && t[1] < t[2]).then_some(t)
        })
        .collect();
    points.sort();
    points.dedup();
    if points.is_empty() {
        Ok(ComponentVerdict::NoAdmissiblePoint { rational_points })
    } else {
        Ok(ComponentVerdict::Admissible { points })
    }
}

/// A linear form `px + qy + rz` together with a curve in `(y, z)`.
pub fn check_curve_component(linear: [BigInt; 3], curve: &IntPoly) -> Result<ComponentVerdict> {
    if linear[0].is_zero() {
        return Err(Error::UnsupportedComponent(
            "linear form has zero x-coefficient".into(),
        ));
    }
    check_component(&Component {
        generators: vec![
            Generator::Linear(linear),
            Generator::Curve {
                var: CurveVar::Y,
                poly: curve.clone(),
            },
        ],
    })
}

/// A fixture component, optionally tagged with the `(a, b)` pair of the
/// variety it was taken from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureComponent {
    pub pair: Option<(u64, u64)>,
    pub line: usize,
    pub component: Component,
}

/// Parses the component fixture format.
///
/// One component per line, generators separated by `;`:
///
/// ```text
/// # X 7 9
/// LIN 14 -15 3 ; POLY -85 204 -75 20
/// LIN 0 2 -3 ; POLY:x 5 -16 8
/// ```
///
/// `LIN p q r` is `px + qy + rz`. `POLY c0 c1 ...` lists the ascending
/// coefficients of a curve dehomogenized at `z = 1`, in `y` unless tagged
/// `POLY:x`. A `# X a b` comment tags the components that follow.
pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureComponent>> {
    let mut out = Vec::new();
    let mut pair = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let words: Vec<&str> = comment.split_whitespace().collect();
            if let ["X", a, b] = words.as_slice() {
                let parse = |s: &str| {
                    s.parse::<u64>().map_err(|_| {
                        Error::Fixture(format!("line {line_no}: bad pair label {comment:?}"))
                    })
                };
                pair = Some((parse(a)?, parse(b)?));
            }
            continue;
        }
        let mut generators = Vec::new();
        for part in line.split(';') {
            generators.push(parse_generator(part.trim(), line_no)?);
        }
        out.push(FixtureComponent {
            pair,
            line: line_no,
            component: Component { generators },
        });
    }
    Ok(out)
}

fn parse_generator(text: &str, line_no: usize) -> Result<Generator> {
    let mut words = text.split_whitespace();
    let head = words
        .next()
        .ok_or_else(|| Error::Fixture(format!("line {line_no}: empty generator")))?;
    let nums: Vec<BigInt> = words
        .map(|w| {
            BigInt::from_str(w)
                .map_err(|_| Error::Fixture(format!("line {line_no}: bad integer {w:?}")))
        })
        .collect::<Result<_>>()?;
    match head {
        "LIN" => {
            let coeffs: [BigInt; 3] = nums.try_into().map_err(|v: Vec<BigInt>| {
                Error::Fixture(format!("line {line_no}: LIN needs 3 coefficients, got {}", v.len()))
            })?;
            Ok(Generator::Linear(coeffs))
        }
        "POLY" | "POLY:y" | "POLY:x" => {
            let var = if head == "POLY:x" { CurveVar::X } else { CurveVar::Y };
            let poly = IntPoly::new(nums, var.to_string());
            if poly.is_zero() {
                return Err(Error::Fixture(format!("line {line_no}: zero polynomial")));
            }
            Ok(Generator::Curve { var, poly })
        }
        other => Err(Error::Fixture(format!("line {line_no}: unknown generator {other:?}"))),
    }
}

pub fn load_fixture_file(path: &Path) -> Result<Vec<FixtureComponent>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Fixture(format!("cannot read {}: {e}", path.display())))?;
    parse_fixtures(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn eval_examples() {
        let eq = ProductEquation::codim3_b1_equals_2();
        assert_eq!(
            eval_product_equation(&eq, &bi(&[1, 3, 4])).unwrap(),
            (12.into(), 12.into())
        );
        assert_eq!(
            eval_product_equation(&eq, &bi(&[1, 2, 3])).unwrap(),
            (6.into(), 4.into())
        );
        let eq4 = ProductEquation::new(4, 1, 1, 2).unwrap();
        assert!(is_solution(&eq4, &bi(&[1, 4, 5, 6])));
        let eq4_2 = ProductEquation::new(4, 2, 1, 2).unwrap();
        assert!(!is_solution(&eq4_2, &bi(&[1, 4, 5, 6])));
        assert!(eval_product_equation(&eq, &bi(&[1, 2])).is_err());
    }

    #[test]
    fn equation_rejects_bad_parameters() {
        assert!(ProductEquation::new(3, 0, 1, 2).is_err());
        assert!(ProductEquation::new(3, 4, 1, 2).is_err());
        assert!(ProductEquation::new(3, 1, 0, 2).is_err());
        assert!(ProductEquation::new(1, 1, 1, 2).is_err());
    }

    #[test]
    fn rational_point_codim3() {
        let eq = ProductEquation::codim3_b1_equals_2();
        let got = rational_point(&eq, &[q(1, 1), q(3, 1)]).unwrap().unwrap();
        assert_eq!(got, SecondIntersection::Point(vec![q(1, 4), q(3, 4), q(1, 1)]));
        let SecondIntersection::Point(p) = got else { unreachable!() };
        assert_eq!(primitive_integer_point(&p), bi(&[1, 3, 4]));
    }

    #[test]
    fn rational_point_matches_closed_form() {
        let eq = ProductEquation::codim3_b1_equals_2();
        for (a, b) in [(3i64, 1i64), (5, 2), (7, 3), (-4, 9), (13, 5)] {
            let m = q(a, b);
            let got = rational_point(&eq, &[q(1, 1), m]).unwrap().unwrap();
            let x = q(1, 1) + q(a, 2 * (b - a));
            let y = q(a * (2 * b - a), 2 * b * (b - a));
            assert_eq!(got, SecondIntersection::Point(vec![x, y, q(1, 1)]), "slope {a}/{b}");
        }
    }

    #[test]
    fn rational_point_codim4_reduction() {
        let eq = ProductEquation::new(4, 1, 1, 2).unwrap();
        // closed form 1 - a2 a3 / (2 (a2 - b2)(a3 - b3)) for m2 = 13/3, m3 = 5
        let (a2, b2, a3, b3) = (13i64, 3i64, 5i64, 1i64);
        let raw_num = BigInt::from(a2 * a3);
        let raw_den = BigInt::from(2 * (a2 - b2) * (a3 - b3));
        assert_eq!(raw_num.gcd(&raw_den), BigInt::from(5));
        let got = rational_point(&eq, &[q(1, 1), q(13, 3), q(5, 1)]).unwrap().unwrap();
        let SecondIntersection::Point(p) = got else { panic!("expected a point") };
        assert_eq!(p[0], q(1, 1) - Rational::new(raw_num, raw_den));
        assert_eq!(p, vec![q(3, 16), q(13, 16), q(15, 16), q(1, 1)]);
        assert_eq!(primitive_integer_point(&p), bi(&[3, 13, 15, 16]));
    }

    #[test]
    fn rational_point_degenerate_lines() {
        let eq = ProductEquation::codim3_b1_equals_2();
        // slope 1: 2(t - t)(1 - t) = t, only t = 0
        assert_eq!(
            rational_point(&eq, &[q(1, 1), q(1, 1)]).unwrap(),
            Err(LineDegeneracy::NoSecondIntersection)
        );
        // slope 2: 2 t (1 - t) = 2t gives t^2 = 0
        assert_eq!(
            rational_point(&eq, &[q(1, 1), q(2, 1)]).unwrap(),
            Ok(SecondIntersection::Origin)
        );
        // x = 0: y = 2y meets only at the origin
        assert_eq!(
            rational_point(&eq, &[q(0, 1), q(1, 1)]).unwrap(),
            Err(LineDegeneracy::NoSecondIntersection)
        );
        // x = y = 0 for all t
        assert_eq!(
            rational_point(&eq, &[q(0, 1), q(0, 1)]).unwrap(),
            Err(LineDegeneracy::LineInVariety)
        );
        let eq_last = ProductEquation::new(3, 3, 1, 2).unwrap();
        assert!(matches!(
            rational_point(&eq_last, &[q(1, 1), q(3, 1)]).unwrap(),
            Err(LineDegeneracy::NonLinearResidual(2))
        ));
        assert!(rational_point(&eq, &[q(1, 1)]).is_err());
    }

    #[test]
    fn no_second_intersection_is_reported() {
        // c = 2, i = 1: L x_2 = alpha (x_2 - x_1); with x_2 = 1, slope 0: L = alpha
        let eq = ProductEquation::new(2, 1, 1, 2).unwrap();
        assert_eq!(
            rational_point(&eq, &[q(0, 1)]).unwrap(),
            Err(LineDegeneracy::NoSecondIntersection)
        );
        let eq = ProductEquation::new(2, 1, 2, 2).unwrap();
        assert_eq!(
            rational_point(&eq, &[q(0, 1)]).unwrap(),
            Err(LineDegeneracy::LineInVariety)
        );
    }

    #[test]
    fn integer_search_examples() {
        let eq = ProductEquation::codim3_b1_equals_2();
        assert_eq!(
            integer_point_search(&eq, 25).unwrap(),
            vec![bi(&[1, 3, 4]), bi(&[2, 5, 12]), bi(&[3, 7, 24]), bi(&[3, 8, 15]), bi(&[6, 20, 21])]
        );
        assert_eq!(
            realizing_points(&eq, 25).unwrap(),
            vec![bi(&[1, 3, 4]), bi(&[6, 20, 21])]
        );
        let eq4 = ProductEquation::new(4, 1, 1, 2).unwrap();
        let hits = integer_point_search(&eq4, 16).unwrap();
        assert!(hits.contains(&bi(&[3, 13, 15, 16])));
        assert!(hits.contains(&bi(&[1, 4, 5, 6])));
        assert!(integer_point_search(&eq, 2).unwrap().is_empty());
    }

    #[test]
    fn integer_search_distinguished_last_index() {
        // i = c solves for x_{c-1}; cross-check with a direct scan
        let eq = ProductEquation::new(3, 3, 1, 1).unwrap();
        let hits = integer_point_search(&eq, 40).unwrap();
        let mut brute = Vec::new();
        for z in 3..=40i64 {
            for y in 2..z {
                for x in 1..y {
                    if x.gcd(&y).gcd(&z) == 1 && is_solution(&eq, &bi(&[x, y, z])) {
                        brute.push(bi(&[x, y, z]));
                    }
                }
            }
        }
        brute.sort();
        assert_eq!(hits, brute);
    }

    #[test]
    fn rational_roots_examples() {
        assert_eq!(
            rational_roots(&IntPoly::from_i64s(&[-1, 0, 1], "y")).unwrap(),
            vec![q(-1, 1), q(1, 1)]
        );
        assert_eq!(
            rational_roots(&IntPoly::from_i64s(&[-3, 2], "y")).unwrap(),
            vec![q(3, 2)]
        );
        assert!(rational_roots(&IntPoly::from_i64s(&[-85, 204, -75, 20], "y"))
            .unwrap()
            .is_empty());
        assert_eq!(
            rational_roots(&IntPoly::from_i64s(&[0, 0, -2, 1], "y")).unwrap(),
            vec![q(0, 1), q(2, 1)]
        );
        assert_eq!(
            rational_roots(&IntPoly::from_i64s(&[0, 0, 0], "y")),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(rational_roots(&IntPoly::from_i64s(&[7], "y")).unwrap(), vec![]);
    }

    #[test]
    fn poly_display() {
        assert_eq!(
            IntPoly::from_i64s(&[-85, 204, -75, 20], "y").to_string(),
            "20y^3-75y^2+204y-85"
        );
        assert_eq!(Generator::linear(14, -15, 3).to_string(), "14x-15y+3z");
        assert_eq!(
            Generator::curve(CurveVar::Y, &[-85, 204, -75, 20]).to_string(),
            "20y^3-75y^2z+204yz^2-85z^3"
        );
        assert_eq!(Generator::curve(CurveVar::X, &[5, -16, 8]).to_string(), "8x^2-16xz+5z^2");
    }

    #[test]
    fn component_examples() {
        let x10_11 = Component {
            generators: vec![Generator::linear(0, 5, -2), Generator::linear(10, 0, -3)],
        };
        assert_eq!(
            check_component(&x10_11).unwrap().admissible_points(),
            &[[3.into(), 4.into(), 10.into()]]
        );

        let first = check_curve_component(
            [14.into(), (-15).into(), 3.into()],
            &IntPoly::from_i64s(&[-85, 204, -75, 20], "y"),
        )
        .unwrap();
        assert_eq!(first, ComponentVerdict::NoAdmissiblePoint { rational_points: 0 });

        let line = Component {
            generators: vec![Generator::linear(1, -1, 0), Generator::linear(0, 0, 1)],
        };
        assert!(matches!(
            check_component(&line).unwrap(),
            ComponentVerdict::CoordinateDegenerate { .. }
        ));
        assert!(check_curve_component(
            [0.into(), 1.into(), 1.into()],
            &IntPoly::from_i64s(&[-1, 1], "y")
        )
        .is_err());
    }

    #[test]
    fn component_with_curve_in_x() {
        let c = Component {
            generators: vec![Generator::linear(0, 2, -3), Generator::curve(CurveVar::X, &[5, -16, 8])],
        };
        assert_eq!(
            check_component(&c).unwrap(),
            ComponentVerdict::NoAdmissiblePoint { rational_points: 0 }
        );
        // a rational point that is not ordered: x = 1/2, y = 3/2
        let c = Component {
            generators: vec![Generator::linear(0, 2, -3), Generator::curve(CurveVar::X, &[-1, 2])],
        };
        assert_eq!(
            check_component(&c).unwrap(),
            ComponentVerdict::NoAdmissiblePoint { rational_points: 1 }
        );
        // ordered: x = 1/4, y = 1/2 -> (1, 2, 4)
        let c = Component {
            generators: vec![Generator::linear(0, 2, -1), Generator::curve(CurveVar::X, &[-1, 4])],
        };
        assert_eq!(
            check_component(&c).unwrap().admissible_points(),
            &[[1.into(), 2.into(), 4.into()]]
        );
    }

    #[test]
    fn component_unsupported_shapes() {
        let c = Component {
            generators: vec![Generator::linear(0, 1, -2), Generator::curve(CurveVar::Y, &[-2, 1])],
        };
        assert!(check_component(&c).is_err());
        let c = Component {
            generators: vec![Generator::linear(1, 2, -5)],
        };
        assert!(check_component(&c).is_err());
    }

    #[test]
    fn fixture_parsing() {
        let text = "# codim 5\n# X 7 9\nLIN 14 -15 3 ; POLY -85 204 -75 20\n\n# X 16 20\nLIN 0 2 -3 ; POLY:x 5 -16 8\n";
        let parsed = parse_fixtures(text).unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].pair, Some((7, 9)));
        assert_eq!(parsed[0].line, 3);
        assert_eq!(parsed[1].pair, Some((16, 20)));
        assert!(parse_fixtures("LIN 1 2\n").is_err());
        assert!(parse_fixtures("QUAD 1 2 3\n").is_err());
        assert!(parse_fixtures("POLY 0 0\n").is_err());
        assert!(load_fixture_file(Path::new("/nonexistent/fixture.txt")).is_err());
    }
}
