//! Scalar fields: exact rationals and binary floating point.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Num, One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

pub type Rational = BigRational;

/// Arithmetic needed by every generic routine in the crate.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Num
{
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Nearest field element to `x` (exact binary expansion for rationals).
    fn from_f64_lossy(x: f64) -> Self;
    fn checked_div(&self, other: &Self) -> Option<Self>;
    /// Exact square root where one exists in the field.
    fn sqrt(&self) -> Option<Self>;

    fn abs(&self) -> Self {
        if self.to_f64() < 0.0 { -self.clone() } else { self.clone() }
    }

    /// Zero test: exact equality for rationals, `|x| <= tol` for floats.
    fn negligible(&self, tol: f64) -> bool;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self { v as f64 }
    fn from_ratio(num: i64, den: i64) -> Self { num as f64 / den as f64 }
    fn to_f64(&self) -> f64 { *self }
    fn from_f64_lossy(x: f64) -> Self { x }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if *other == 0.0 { None } else { Some(self / other) }
    }
    fn sqrt(&self) -> Option<Self> {
        if *self < 0.0 { None } else { Some(f64::sqrt(*self)) }
    }
    fn abs(&self) -> Self { f64::abs(*self) }
    fn negligible(&self, tol: f64) -> bool { f64::abs(*self) <= tol }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self { BigRational::from_integer(BigInt::from(v)) }
    fn from_ratio(num: i64, den: i64) -> Self { BigRational::new(BigInt::from(num), BigInt::from(den)) }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn from_f64_lossy(x: f64) -> Self {
        BigRational::from_float(x).unwrap_or_else(Zero::zero)
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() { None } else { Some(self / other) }
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
    fn abs(&self) -> Self { Signed::abs(self) }
    fn negligible(&self, _tol: f64) -> bool { self.is_zero() }
}

/// Exact rational on `i128` parts with checked arithmetic; overflow panics instead of wrapping.
/// Suited to high-volume identity checks on small sampled entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmallRational(pub Ratio<i128>);

impl SmallRational {
    pub fn new(num: i128, den: i128) -> Self {
        SmallRational(Ratio::new(num, den))
    }
}

macro_rules! checked_op {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl $tr for SmallRational {
            type Output = Self;
            fn $f(self, o: Self) -> Self {
                SmallRational(self.0.$checked(&o.0).expect(concat!("rational overflow in ", stringify!($f))))
            }
        }
    };
}

checked_op!(Add, add, checked_add);
checked_op!(Sub, sub, checked_sub);
checked_op!(Mul, mul, checked_mul);
checked_op!(Div, div, checked_div);

impl Rem for SmallRational {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        SmallRational(self.0 % o.0)
    }
}

impl Neg for SmallRational {
    type Output = Self;
    fn neg(self) -> Self {
        SmallRational(-self.0)
    }
}

impl Zero for SmallRational {
    fn zero() -> Self {
        SmallRational(Ratio::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for SmallRational {
    fn one() -> Self {
        SmallRational(Ratio::one())
    }
}

impl Num for SmallRational {
    type FromStrRadixErr = <Ratio<i128> as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        Ratio::from_str_radix(s, radix).map(SmallRational)
    }
}

impl Display for SmallRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        Display::fmt(&self.0, f)
    }
}

impl Scalar for SmallRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self { SmallRational(Ratio::from_integer(v as i128)) }
    fn from_ratio(num: i64, den: i64) -> Self { SmallRational::new(num as i128, den as i128) }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }
    fn from_f64_lossy(x: f64) -> Self {
        SmallRational(Ratio::approximate_float(x).unwrap_or_else(Ratio::zero))
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() { None } else { self.0.checked_div(&other.0).map(SmallRational) }
    }
    fn sqrt(&self) -> Option<Self> {
        if self.0 < Ratio::zero() {
            return None;
        }
        let root = |v: i128| {
            let r = num_integer::Roots::sqrt(&v);
            (r * r == v).then_some(r)
        };
        Some(SmallRational::new(root(*self.0.numer())?, root(*self.0.denom())?))
    }
    fn abs(&self) -> Self { SmallRational(Signed::abs(&self.0)) }
    fn negligible(&self, _tol: f64) -> bool { self.0.is_zero() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Floating,
}

/// Which arithmetic to use and how to compare in floating mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarField {
    pub mode: Mode,
    pub tolerance: f64,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

impl Default for ScalarField {
    fn default() -> Self {
        Self { mode: Mode::Exact, tolerance: DEFAULT_TOLERANCE }
    }
}

impl ScalarField {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn floating(tolerance: f64) -> Self {
        Self { mode: Mode::Floating, tolerance }
    }

    /// Relative comparison: `|a - b| <= tol * max(1, |a|, |b|)`. Exact mode ignores the tolerance.
    pub fn approx_eq<S: Scalar>(&self, a: &S, b: &S) -> bool {
        if S::EXACT || self.mode == Mode::Exact {
            return a == b;
        }
        let (x, y) = (a.to_f64(), b.to_f64());
        (x - y).abs() <= self.tolerance * 1f64.max(x.abs()).max(y.abs())
    }

    pub fn is_zero<S: Scalar>(&self, a: &S) -> bool {
        a.negligible(if self.mode == Mode::Exact { 0.0 } else { self.tolerance })
    }
}

/// Rational from an `f64` that is exactly representable (all finite doubles are).
pub fn rational_from_f64(x: f64) -> Rational {
    BigRational::from_float(x).expect("finite float")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rational_matches_big() {
        let pairs = [(3, 4), (-7, 6), (0, 1), (9, 5), (-1, 3)];
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                let (x, y) = (SmallRational::from_ratio(a, b), SmallRational::from_ratio(c, d));
                let (u, v) = (Rational::from_ratio(a, b), Rational::from_ratio(c, d));
                assert_eq!((x * y + x - y).to_string(), (u.clone() * v.clone() + u.clone() - v.clone()).to_string());
            }
        }
        assert_eq!(SmallRational::from_ratio(49, 16).sqrt(), Some(SmallRational::from_ratio(7, 4)));
        assert_eq!(SmallRational::from_ratio(2, 1).sqrt(), None);
    }

    #[test]
    #[should_panic(expected = "rational overflow")]
    fn small_rational_overflow_panics() {
        let big = SmallRational::new(i128::MAX / 2, 1);
        let _ = big * big;
    }

    #[test]
    fn rational_sqrt_is_exact_only_for_squares() {
        assert_eq!(Rational::from_ratio(9, 4).sqrt(), Some(Rational::from_ratio(3, 2)));
        assert_eq!(Rational::from_ratio(2, 1).sqrt(), None);
        assert_eq!(Rational::from_i64(-1).sqrt(), None);
    }

    #[test]
    fn relative_comparison() {
        let f = ScalarField::floating(1e-9);
        assert!(f.approx_eq(&1e6, &(1e6 + 1e-4)));
        assert!(!f.approx_eq(&1.0, &1.001));
        assert!(ScalarField::exact().approx_eq(&Rational::from_ratio(1, 3), &Rational::from_ratio(2, 6)));
    }
}
