//! The algebra of para-quaternions (split quaternions).
//!
//! Multiplication convention: `i² = -1`, `j² = k² = +1`, `ij = -ji = k`, hence
//! `jk = -kj = -i` and `ki = -ik = j`. This is the sign forced by the cyclic
//! relation `J_β J_γ = -ε_α J_α` with `ε = (1, -1, -1)`; the presentation
//! `ij = -k` found in some references differs from it by the substitution `k -> -k`.

use crate::error::{PqError, Result};
use crate::scalar::{Rational, Scalar};
use num_complex::Complex;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Signs `(ε₁, ε₂, ε₃)` with `J_α² = -ε_α`.
pub const EPSILON: [i64; 3] = [1, -1, -1];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitQuaternion<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlowAxis {
    I,
    J,
}

impl<S: Scalar> SplitQuaternion<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(S::from_i64(a), S::from_i64(b), S::from_i64(c), S::from_i64(d))
    }

    pub fn from_array([a, b, c, d]: [S; 4]) -> Self {
        Self { a, b, c, d }
    }

    pub fn to_array(&self) -> [S; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn real(a: S) -> Self {
        Self::new(a, S::zero(), S::zero(), S::zero())
    }

    pub fn zero() -> Self { Self::from_i64(0, 0, 0, 0) }
    pub fn one() -> Self { Self::from_i64(1, 0, 0, 0) }
    pub fn i() -> Self { Self::from_i64(0, 1, 0, 0) }
    pub fn j() -> Self { Self::from_i64(0, 0, 1, 0) }
    pub fn k() -> Self { Self::from_i64(0, 0, 0, 1) }

    /// Imaginary units `(i, j, k)`.
    pub fn units() -> [Self; 3] {
        [Self::i(), Self::j(), Self::k()]
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.a.clone() * s.clone(), self.b.clone() * s.clone(), self.c.clone() * s.clone(), self.d.clone() * s.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    /// `|q|² = a² + b² - c² - d²`.
    pub fn square_norm(&self) -> S {
        self.scalar_product(self)
    }

    /// `⟨q, q′⟩ = aa′ + bb′ - cc′ - dd′ = Re(q q̄′)`.
    pub fn scalar_product(&self, o: &Self) -> S {
        self.a.clone() * o.a.clone() + self.b.clone() * o.b.clone() - self.c.clone() * o.c.clone() - self.d.clone() * o.d.clone()
    }

    pub fn re(&self) -> S {
        self.a.clone()
    }

    pub fn im(&self) -> Self {
        Self::new(S::zero(), self.b.clone(), self.c.clone(), self.d.clone())
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    pub fn is_real(&self) -> bool {
        self.b == S::zero() && self.c == S::zero() && self.d == S::zero()
    }

    /// `[q, q′] = q q′ - q′ q`.
    pub fn bracket(&self, o: &Self) -> Self {
        self.clone() * o.clone() - o.clone() * self.clone()
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max)
    }

    /// Inverse `q̄ / |q|²`; fails on the null cone. `tol` applies in floating mode only.
    pub fn inverse(&self, tol: f64) -> Result<Self> {
        let n = self.square_norm();
        if n.negligible(tol) {
            return Err(PqError::NullQuaternion);
        }
        let inv = S::one().checked_div(&n).ok_or(PqError::NullQuaternion)?;
        Ok(self.conj().scale(&inv))
    }

    /// `(q̄, |q|², ⟨q, q′⟩)`.
    pub fn conj_norm(&self, o: &Self) -> (Self, S, S) {
        (self.conj(), self.square_norm(), self.scalar_product(o))
    }

    /// `z(q) = (a + bi, c - di)`, so that `q = z₁ + j z₂`.
    pub fn complex_rep(&self) -> (Complex<S>, Complex<S>) {
        (Complex::new(self.a.clone(), self.b.clone()), Complex::new(self.c.clone(), -self.d.clone()))
    }

    pub fn from_complex(z1: &Complex<S>, z2: &Complex<S>) -> Self {
        Self::new(z1.re.clone(), z1.im.clone(), z2.re.clone(), -z2.im.clone())
    }

    /// Unit on the `i` or `j` one-parameter group with the given `(cos, sin)` or
    /// `(cosh, sinh)` pair. Useful for exact rational points on the flows.
    pub fn flow_from_pair(axis: FlowAxis, c: S, s: S) -> Self {
        match axis {
            FlowAxis::I => Self::new(c, s, S::zero(), S::zero()),
            FlowAxis::J => Self::new(c, S::zero(), s, S::zero()),
        }
    }

    /// Rational point on the flow parametrized by `u = tan(t/2)` (axis `i`) or `u = tanh(t/2)` (axis `j`).
    pub fn flow_rational(axis: FlowAxis, u: S) -> Self {
        let u2 = u.clone() * u.clone();
        let two_u = u.clone() + u;
        match axis {
            FlowAxis::I => {
                let den = S::one() + u2.clone();
                let c = (S::one() - u2).checked_div(&den).expect("1 + u² > 0");
                let s = two_u.checked_div(&den).expect("1 + u² > 0");
                Self::flow_from_pair(axis, c, s)
            }
            FlowAxis::J => {
                let den = S::one() - u2.clone();
                let c = (S::one() + u2).checked_div(&den).expect("|u| != 1");
                let s = two_u.checked_div(&den).expect("|u| != 1");
                Self::flow_from_pair(axis, c, s)
            }
        }
    }
}

/// `e^{it} = cos t + i sin t`, `e^{jt} = cosh t + j sinh t`.
pub fn unit_flow(axis: FlowAxis, t: f64) -> SplitQuaternion<f64> {
    match axis {
        FlowAxis::I => SplitQuaternion::flow_from_pair(axis, t.cos(), t.sin()),
        FlowAxis::J => SplitQuaternion::flow_from_pair(axis, t.cosh(), t.sinh()),
    }
}

impl<S: Scalar> Mul for SplitQuaternion<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let (e, f, g, h) = (o.a, o.b, o.c, o.d);
        Self::new(
            a.clone() * e.clone() - b.clone() * f.clone() + c.clone() * g.clone() + d.clone() * h.clone(),
            a.clone() * f.clone() + b.clone() * e.clone() - c.clone() * h.clone() + d.clone() * g.clone(),
            a.clone() * g.clone() + c.clone() * e.clone() + d.clone() * f.clone() - b.clone() * h.clone(),
            a * h + d * e + b * g - c * f,
        )
    }
}

impl<S: Scalar> Mul for &SplitQuaternion<S> {
    type Output = SplitQuaternion<S>;
    fn mul(self, o: Self) -> SplitQuaternion<S> {
        self.clone() * o.clone()
    }
}

impl<S: Scalar> Add for SplitQuaternion<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl<S: Scalar> Sub for SplitQuaternion<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl<S: Scalar> Neg for SplitQuaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<S: Scalar> fmt::Display for SplitQuaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)?;
        for (v, unit) in [(&self.b, "i"), (&self.c, "j"), (&self.d, "k")] {
            if v.to_f64() < 0.0 {
                write!(f, " - {} {unit}", -v.clone())?;
            } else {
                write!(f, " + {v} {unit}")?;
            }
        }
        Ok(())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || PqError::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == num_bigint::BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses `a + b i + c j + d k`; terms may be omitted or reordered, coefficients are `p/q`.
impl FromStr for SplitQuaternion<Rational> {
    type Err = PqError;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PqError::Parse("empty input".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (idx, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && idx > 0 {
                terms.push(&compact[start..idx]);
                start = idx;
            }
        }
        terms.push(&compact[start..]);
        let mut coef: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, t.strip_prefix('+').unwrap_or(t)),
            };
            let (slot, num) = match body.chars().last() {
                Some('i') => (1, &body[..body.len() - 1]),
                Some('j') => (2, &body[..body.len() - 1]),
                Some('k') => (3, &body[..body.len() - 1]),
                _ => (0, body),
            };
            let mut v = if num.is_empty() && slot > 0 {
                Rational::one()
            } else {
                parse_rational(num.trim_end_matches('*'))?
            };
            if sign < 0 {
                v = -v;
            }
            coef[slot] = coef[slot].clone() + v;
        }
        Ok(Self::from_array(coef))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = SplitQuaternion<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn unit_table() {
        let (one, i, j, k) = (Q::one(), Q::i(), Q::j(), Q::k());
        assert_eq!(&i * &i, -one.clone());
        assert_eq!(&j * &j, one.clone());
        assert_eq!(&k * &k, one.clone());
        assert_eq!(&i * &j, k.clone());
        assert_eq!(&j * &i, -k.clone());
        assert_eq!(&j * &k, -i.clone());
        assert_eq!(&k * &j, i.clone());
        assert_eq!(&k * &i, j.clone());
        assert_eq!(&i * &k, -j.clone());
    }

    #[test]
    fn zero_divisor() {
        let p = Q::from_i64(1, 0, 1, 0);
        let m = Q::from_i64(1, 0, -1, 0);
        assert!((&p * &m).is_zero());
    }

    #[test]
    fn conj_norm_examples() {
        let (c, n, _) = Q::one().conj_norm(&Q::one());
        assert_eq!((c, n), (Q::one(), r(1, 1)));
        let (c, n, _) = Q::j().conj_norm(&Q::one());
        assert_eq!((c, n), (-Q::j(), r(-1, 1)));
    }

    #[test]
    fn inverses() {
        assert_eq!(Q::j().inverse(0.0).unwrap(), Q::j());
        assert_eq!(&Q::j() * &(-Q::j()), -Q::one());
        assert_eq!(Q::one().inverse(0.0).unwrap(), Q::one());
        assert_eq!(Q::from_i64(1, 0, 1, 0).inverse(0.0), Err(PqError::NullQuaternion));
        let q = Q::from_i64(2, 3, 1, -1);
        assert_eq!(&q * &q.inverse(0.0).unwrap(), Q::one());
        assert_eq!(SplitQuaternion::<f64>::from_i64(1, 0, 1, 0).inverse(1e-12), Err(PqError::NullQuaternion));
    }

    #[test]
    fn complex_rep_examples() {
        use num_complex::Complex;
        let z = |a, b| Complex::new(r(a, 1), r(b, 1));
        assert_eq!(Q::one().complex_rep(), (z(1, 0), z(0, 0)));
        assert_eq!(Q::j().complex_rep(), (z(0, 0), z(1, 0)));
        assert_eq!(Q::k().complex_rep(), (z(0, 0), z(0, -1)));
        let q = Q::from_i64(3, -1, 4, 7);
        let (z1, z2) = q.complex_rep();
        assert_eq!(Q::from_complex(&z1, &z2), q);
        // q = z1 + j z2 with complex numbers embedded as a + b i
        let embed = |c: &Complex<Rational>| Q::new(c.re.clone(), c.im.clone(), r(0, 1), r(0, 1));
        assert_eq!(embed(&z1) + &Q::j() * &embed(&z2), q);
    }

    #[test]
    fn flows() {
        assert_eq!(unit_flow(FlowAxis::J, 0.0), SplitQuaternion::one());
        let t = 0.7;
        assert!((unit_flow(FlowAxis::J, t).square_norm() - 1.0).abs() < 1e-12);
        let p = Q::flow_from_pair(FlowAxis::J, r(5, 4), r(3, 4));
        assert_eq!(p.square_norm(), r(1, 1));
        // tan-half-angle addition u ⊕ v = (u + v)/(1 - uv)
        let (u, v) = (r(1, 3), r(2, 7));
        let sum = (u.clone() + v.clone()) / (r(1, 1) - u.clone() * v.clone());
        let lhs = &Q::flow_rational(FlowAxis::I, u.clone()) * &Q::flow_rational(FlowAxis::I, v.clone());
        assert_eq!(lhs, Q::flow_rational(FlowAxis::I, sum));
        // tanh-half addition u ⊕ v = (u + v)/(1 + uv)
        let sum = (u.clone() + v.clone()) / (r(1, 1) + u.clone() * v.clone());
        let lhs = &Q::flow_rational(FlowAxis::J, u) * &Q::flow_rational(FlowAxis::J, v);
        assert_eq!(lhs, Q::flow_rational(FlowAxis::J, sum));
    }

    #[test]
    fn parse_and_print() {
        let q: Q = "1/2 - 3 i + j + 0 k".parse().unwrap();
        assert_eq!(q, Q::new(r(1, 2), r(-3, 1), r(1, 1), r(0, 1)));
        assert_eq!(q.to_string(), "1/2 - 3 i + 1 j + 0 k");
        assert_eq!(q.to_string().parse::<Q>().unwrap(), q);
        assert_eq!("-k".parse::<Q>().unwrap(), -Q::k());
        assert!("1 + x".parse::<Q>().is_err());
    }
}
