//! Fundamental 2-forms, the 4-form Ω, SO(2,1) changes of basis of 𝒢 and the
//! hermitian projector on bilinear forms.

use crate::algebra::EPSILON;
use crate::error::{PqError, Result};
use crate::linalg::{skew_residual, HermitianStructure};
use crate::matrix::Matrix;
use crate::sampling::{self, SampleRng};
use crate::scalar::Scalar;
use rand::RngExt;

/// Matrix of `ω_J(X, Y) = g(JX, Y)`, i.e. `Jᵀ g`.
pub fn two_form<S: Scalar>(j: &Matrix<S>, g: &Matrix<S>, tol: f64) -> Result<Matrix<S>> {
    if j.max_abs() == 0.0 {
        return Err(PqError::Invalid("zero endomorphism has no fundamental form".into()));
    }
    let r = skew_residual(j, g);
    if r > tol || (S::EXACT && r != 0.0) {
        return Err(PqError::NotSkew(r));
    }
    Ok(&j.transpose() * g)
}

/// `α ∧ β` for 2-forms, summed over the six (2,2)-shuffles.
pub fn wedge2<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>, x: [&[S]; 4]) -> S {
    const SHUFFLES: [([usize; 4], i64); 6] = [
        ([0, 1, 2, 3], 1),
        ([0, 2, 1, 3], -1),
        ([0, 3, 1, 2], 1),
        ([1, 2, 0, 3], 1),
        ([1, 3, 0, 2], -1),
        ([2, 3, 0, 1], 1),
    ];
    SHUFFLES.iter().fold(S::zero(), |acc, (p, s)| {
        let term = a.bilinear(x[p[0]], x[p[1]]) * b.bilinear(x[p[2]], x[p[3]]);
        if *s > 0 { acc + term } else { acc - term }
    })
}

/// `Ω = ω₁∧ω₁ - ω₂∧ω₂ - ω₃∧ω₃`.
#[derive(Debug, Clone)]
pub struct FourForm<S> {
    pub omegas: [Matrix<S>; 3],
    /// Values on increasing basis 4-tuples `i<j<k<l`, kept for `dim <= 8`.
    pub coefficients: Option<Vec<S>>,
}

pub const STORED_MAX_DIM: usize = 8;

impl<S: Scalar> FourForm<S> {
    pub fn eval(&self, x: &[S], y: &[S], z: &[S], w: &[S]) -> S {
        let args = [x, y, z, w];
        let mut acc = S::zero();
        for (a, om) in self.omegas.iter().enumerate() {
            let t = wedge2(om, om, args);
            // coefficient of ω_α∧ω_α is ε_α
            acc = if EPSILON[a] > 0 { acc + t } else { acc - t };
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.omegas[0].rows()
    }
}

pub fn increasing_quadruples(dim: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                for l in k + 1..dim {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

fn unit<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    (0..dim).map(|k| if k == i { S::one() } else { S::zero() }).collect()
}

pub fn fundamental_four_form<S: Scalar>(h: &HermitianStructure<S>, tol: f64) -> Result<FourForm<S>> {
    let omegas = [
        two_form(&h.j[0], &h.g, tol)?,
        two_form(&h.j[1], &h.g, tol)?,
        two_form(&h.j[2], &h.g, tol)?,
    ];
    let mut form = FourForm { omegas, coefficients: None };
    let dim = h.dim();
    if dim <= STORED_MAX_DIM {
        let e: Vec<Vec<S>> = (0..dim).map(|i| unit(dim, i)).collect();
        let coeffs = increasing_quadruples(dim)
            .iter()
            .map(|q| form.eval(&e[q[0]], &e[q[1]], &e[q[2]], &e[q[3]]))
            .collect();
        form.coefficients = Some(coeffs);
    }
    Ok(form)
}

/// `η = diag(-1, 1, 1)`.
pub fn eta<S: Scalar>() -> Matrix<S> {
    Matrix::from_i64(3, 3, &[-1, 0, 0, 0, 1, 0, 0, 0, 1])
}

/// Residual of `RᵀηR = η`, plus `|det R - 1|`.
pub fn so21_residual<S: Scalar>(r: &Matrix<S>) -> f64 {
    let e = eta::<S>();
    let rel = (&(&(&r.transpose() * &e) * r) - &e).max_abs();
    rel.max((r.det() - S::one()).to_f64().abs())
}

/// `J′_α = Σ_β R_{αβ} J_β`.
pub fn rotate_structure<S: Scalar>(h: &HermitianStructure<S>, r: &Matrix<S>, tol: f64) -> Result<HermitianStructure<S>> {
    let res = so21_residual(r);
    if res > tol || (S::EXACT && res != 0.0) {
        return Err(PqError::NotInGroup(res));
    }
    let j = std::array::from_fn(|a| {
        (0..3).fold(Matrix::zeros(h.dim(), h.dim()), |acc, b| &acc + &h.j[b].scale(&r[(a, b)]))
    });
    Ok(HermitianStructure::new(j, h.g.clone()))
}

/// 3×3 matrix acting as `[[c, s], [s, c]]` (hyperbolic) or `[[c, -s], [s, c]]` (circular) on the plane `(p, q)`.
pub fn plane_rotation<S: Scalar>(p: usize, q: usize, c: S, s: S, hyperbolic: bool) -> Matrix<S> {
    let mut m = Matrix::identity(3);
    m[(p, p)] = c.clone();
    m[(q, q)] = c;
    m[(q, p)] = s.clone();
    m[(p, q)] = if hyperbolic { s } else { -s };
    m
}

/// Boost with rational `cosh = (1+u²)/(1-u²)`, `sinh = 2u/(1-u²)`.
pub fn rational_boost<S: Scalar>(plane: (usize, usize), u: S) -> Matrix<S> {
    let u2 = u.clone() * u.clone();
    let den = S::one() - u2.clone();
    let c = (S::one() + u2).checked_div(&den).expect("|u| != 1");
    let s = (u.clone() + u).checked_div(&den).expect("|u| != 1");
    plane_rotation(plane.0, plane.1, c, s, true)
}

/// Circular rotation with rational `cos = (1-u²)/(1+u²)`, `sin = 2u/(1+u²)`.
pub fn rational_rotation<S: Scalar>(plane: (usize, usize), u: S) -> Matrix<S> {
    let u2 = u.clone() * u.clone();
    let den = S::one() + u2.clone();
    let c = (S::one() - u2).checked_div(&den).expect("1+u² > 0");
    let s = (u.clone() + u).checked_div(&den).expect("1+u² > 0");
    plane_rotation(plane.0, plane.1, c, s, false)
}

/// Random element of SO(2,1): product of boosts in the (J₁,J₂), (J₁,J₃) planes and a rotation in (J₂,J₃).
pub fn random_so21<S: Scalar>(r: &mut SampleRng) -> Matrix<S> {
    let param = |r: &mut SampleRng| -> S {
        let v: i64 = r.random_range(-4..=4);
        S::from_ratio(v, 5)
    };
    let a = rational_boost((0, 1), param(r));
    let b = rational_rotation((1, 2), param(r));
    let c = rational_boost((0, 2), param(r));
    &(&a * &b) * &c
}

/// Output of [`hermitian_projector`].
#[derive(Debug, Clone, PartialEq)]
pub struct Projection<S> {
    pub herm: Matrix<S>,
    pub mix: Matrix<S>,
    /// `[S²_𝒢, Λ²_𝒢, S²_mix, Λ²_mix]`.
    pub fourway: [Matrix<S>; 4],
}

/// `Π(B) = ¼(B + Σ ε_α J_αᵀ B J_α)`.
pub fn project<S: Scalar>(b: &Matrix<S>, h: &HermitianStructure<S>) -> Matrix<S> {
    let mut acc = b.clone();
    for (a, j) in h.j.iter().enumerate() {
        let t = &(&j.transpose() * b) * j;
        acc = if EPSILON[a] > 0 { &acc + &t } else { &acc - &t };
    }
    acc.scale(&S::from_ratio(1, 4))
}

pub fn hermitian_projector<S: Scalar>(b: &Matrix<S>, h: &HermitianStructure<S>) -> Projection<S> {
    let herm = project(b, h);
    let mix = b - &herm;
    let fourway = [herm.symmetric_part(), herm.antisymmetric_part(), mix.symmetric_part(), mix.antisymmetric_part()];
    Projection { herm, mix, fourway }
}

/// Action of an endomorphism `A` on a 4-form: `-Σ Ω(…, A xᵢ, …)`.
pub fn four_form_derivative<S: Scalar>(omega: &FourForm<S>, a: &Matrix<S>, x: [&[S]; 4]) -> S {
    let mut acc = S::zero();
    for i in 0..4 {
        let ax = a.mul_vec(x[i]);
        let mut args = x;
        args[i] = &ax;
        acc = acc - omega.eval(args[0], args[1], args[2], args[3]);
    }
    acc
}

/// Random 4-tuple of vectors in `ℝ^dim`.
pub fn random_tuple<S: Scalar>(r: &mut SampleRng, dim: usize) -> [Vec<S>; 4] {
    std::array::from_fn(|_| sampling::vector(r, dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn std(n: usize) -> HermitianStructure<Rational> {
        HermitianStructure::standard(n)
    }

    #[test]
    fn two_form_is_antisymmetric_and_nondegenerate() {
        let h = std(1);
        let w = two_form(&h.j[0], &h.g, 0.0).unwrap();
        assert_eq!(w.transpose(), -&w);
        assert_ne!(w.det(), Rational::from_i64(0));
        let zero = Matrix::zeros(4, 4);
        assert!(two_form(&zero, &h.g, 0.0).is_err());
        assert!(matches!(two_form(&Matrix::identity(4), &h.g, 0.0), Err(PqError::NotSkew(_))));
    }

    #[test]
    fn omega_is_volume_multiple_for_n1() {
        let form = fundamental_four_form(&std(1), 0.0).unwrap();
        let c = form.coefficients.as_ref().unwrap();
        assert_eq!(c.len(), 1);
        assert_ne!(c[0], Rational::from_i64(0));
        assert_eq!(fundamental_four_form(&std(2), 0.0).unwrap().coefficients.unwrap().len(), 70);
    }

    #[test]
    fn rotation_membership() {
        let h = std(1);
        assert_eq!(rotate_structure(&h, &Matrix::identity(3), 0.0).unwrap(), h);
        let circ = rational_rotation::<Rational>((1, 2), Rational::from_ratio(1, 2));
        assert_eq!(rotate_structure(&h, &circ, 0.0).unwrap().comrel_residual(), 0.0);
        let boost = plane_rotation(0, 1, Rational::from_ratio(5, 4), Rational::from_ratio(3, 4), true);
        let rotated = rotate_structure(&h, &boost, 0.0).unwrap();
        assert_eq!(rotated.comrel_residual(), 0.0);
        assert_eq!(rotated.skew_residual(), 0.0);
        let bad = plane_rotation(1, 2, Rational::from_ratio(5, 4), Rational::from_ratio(3, 4), true);
        assert!(matches!(rotate_structure(&h, &bad, 0.0), Err(PqError::NotInGroup(_))));
    }

    #[test]
    fn projector_fixes_metric() {
        let h = std(2);
        assert_eq!(project(&h.g, &h), h.g);
        let p = hermitian_projector(&Matrix::zeros(8, 8), &h);
        assert!(p.fourway.iter().all(Matrix::is_zero));
    }
}
