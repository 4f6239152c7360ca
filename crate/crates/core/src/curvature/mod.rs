//! Algebraic curvature tensors of para-quaternionic type.
//!
//! Convention: `R(X,Y)Z` is stored as a dense (1,3) array and
//! `Ric(Y,Z) = Tr(X ↦ R(X,Y)Z)`.

mod bilinear;
mod jacobi;
mod symmetric;

pub use bilinear::{curv_from_bilinear, ricci_of_phi, ricci_split, sp_h_curvature};
pub use jacobi::{
    jacobi_operator, jacobi_osserman, min_poly_degree, restrict_to_complement, DirectionSpectrum, OssermanReport,
};
pub use symmetric::{hpn_pair, solvable_example, sl_example, sym_space_curvature, SymmetricDecomposition};

use crate::algebra::EPSILON;
use crate::linalg::HermitianStructure;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureTensor<S> {
    dim: usize,
    /// `data[((x·d + y)·d + z)·d + w]` is the `w`-component of `R(e_x, e_y)e_z`.
    data: Vec<S>,
    pub g: Matrix<S>,
}

impl<S: Scalar> CurvatureTensor<S> {
    pub fn zeros(g: &Matrix<S>) -> Self {
        let d = g.rows();
        Self { dim: d, data: vec![S::zero(); d * d * d * d], g: g.clone() }
    }

    /// Builds from `f(x, y, z) = R(e_x, e_y)e_z`.
    pub fn from_fn(g: &Matrix<S>, mut f: impl FnMut(usize, usize, usize) -> Vec<S>) -> Self {
        let mut r = Self::zeros(g);
        let d = r.dim;
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let v = f(x, y, z);
                    let base = r.index(x, y, z, 0);
                    r.data[base..base + d].clone_from_slice(&v);
                }
            }
        }
        r
    }

    pub fn from_data(g: &Matrix<S>, data: Vec<S>) -> Self {
        let d = g.rows();
        assert_eq!(data.len(), d * d * d * d);
        Self { dim: d, data, g: g.clone() }
    }

    fn index(&self, x: usize, y: usize, z: usize, w: usize) -> usize {
        ((x * self.dim + y) * self.dim + z) * self.dim + w
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize, z: usize, w: usize) -> &S {
        &self.data[self.index(x, y, z, w)]
    }

    pub fn set(&mut self, x: usize, y: usize, z: usize, w: usize, v: S) {
        let i = self.index(x, y, z, w);
        self.data[i] = v;
    }

    /// `R(e_x, e_y)e_z`.
    pub fn basis_value(&self, x: usize, y: usize, z: usize) -> Vec<S> {
        let b = self.index(x, y, z, 0);
        self.data[b..b + self.dim].to_vec()
    }

    /// The endomorphism `R(X, Y)`.
    pub fn endo(&self, x: &[S], y: &[S]) -> Matrix<S> {
        let d = self.dim;
        let mut m = Matrix::<S>::zeros(d, d);
        for a in 0..d {
            if x[a] == S::zero() {
                continue;
            }
            for b in 0..d {
                let c = x[a].clone() * y[b].clone();
                if c == S::zero() {
                    continue;
                }
                for z in 0..d {
                    for w in 0..d {
                        let v = self.get(a, b, z, w);
                        if *v != S::zero() {
                            m[(w, z)] = m[(w, z)].clone() + c.clone() * v.clone();
                        }
                    }
                }
            }
        }
        m
    }

    /// `R(e_x, e_y)` as a matrix.
    pub fn basis_endo(&self, x: usize, y: usize) -> Matrix<S> {
        let d = self.dim;
        Matrix::from_fn(d, d, |w, z| self.get(x, y, z, w).clone())
    }

    pub fn apply(&self, x: &[S], y: &[S], z: &[S]) -> Vec<S> {
        self.endo(x, y).mul_vec(z)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| *v == S::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_data(&self.g, self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_data(&self.g, self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_data(&self.g, self.data.iter().map(|a| a.clone() * s.clone()).collect())
    }

    pub fn to_f64(&self) -> CurvatureTensor<f64> {
        CurvatureTensor { dim: self.dim, data: self.data.iter().map(|v| v.to_f64()).collect(), g: self.g.to_f64() }
    }

    /// Max-norm of the cyclic sum `R(X,Y)Z + R(Y,Z)X + R(Z,X)Y` over basis triples.
    pub fn bianchi_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    for w in 0..d {
                        let s = self.get(x, y, z, w).clone() + self.get(y, z, x, w).clone() + self.get(z, x, y, w).clone();
                        worst = worst.max(s.to_f64().abs());
                    }
                }
            }
        }
        worst
    }

    /// Max-norm of `R(X,Y) + R(Y,X)`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    for w in 0..d {
                        let s = self.get(x, y, z, w).clone() + self.get(y, x, z, w).clone();
                        worst = worst.max(s.to_f64().abs());
                    }
                }
            }
        }
        worst
    }

    /// `Ric(Y, Z) = Tr(X ↦ R(X, Y)Z)`.
    pub fn ricci(&self) -> Matrix<S> {
        let d = self.dim;
        Matrix::from_fn(d, d, |y, z| (0..d).fold(S::zero(), |acc, x| acc + self.get(x, y, z, x).clone()))
    }
}

/// `(K/4n, max |Ric - (K/4n) g|)` where `K = Tr(g⁻¹ Ric)`.
pub fn einstein_check<S: Scalar>(r: &CurvatureTensor<S>, tol: f64) -> (S, f64) {
    let ric = r.ricci();
    let ginv = r.g.inverse(tol).expect("metric is nondegenerate");
    let k = (&ginv * &ric).trace();
    let c = k.checked_div(&S::from_i64(r.dim() as i64)).expect("dim > 0");
    let resid = (&ric - &r.g.scale(&c)).max_abs();
    (c, resid)
}

/// Max over basis pairs and cyclic `(α,β,γ)` of
/// `|[R(X,Y), J_α] - (ε_α/2n)(Tr(J_γ R)J_β - Tr(J_β R)J_γ)|`.
pub fn autg_residual<S: Scalar>(r: &CurvatureTensor<S>, h: &HermitianStructure<S>) -> f64 {
    let d = r.dim();
    let two_n = S::from_i64((d / 2) as i64);
    let mut worst: f64 = 0.0;
    for x in 0..d {
        for y in 0..d {
            let m = r.basis_endo(x, y);
            let traces: Vec<S> = h.j.iter().map(|j| (j * &m).trace()).collect();
            for a in 0..3 {
                let (b, c) = ((a + 1) % 3, (a + 2) % 3);
                let lhs = m.commutator(&h.j[a]);
                let coef = S::from_i64(EPSILON[a]).checked_div(&two_n).expect("n > 0");
                let rhs = (&h.j[b].scale(&traces[c]) - &h.j[c].scale(&traces[b])).scale(&coef);
                worst = worst.max((&lhs - &rhs).max_abs());
            }
        }
    }
    worst
}

pub fn autg_membership<S: Scalar>(r: &CurvatureTensor<S>, h: &HermitianStructure<S>, tol: f64) -> (bool, f64) {
    let res = autg_residual(r, h);
    (if S::EXACT { res == 0.0 } else { res <= tol }, res)
}

/// Max over basis pairs of `|Tr(J_α R(X,Y))|`.
pub fn g_trace_residual<S: Scalar>(r: &CurvatureTensor<S>, h: &HermitianStructure<S>) -> f64 {
    let d = r.dim();
    let mut worst: f64 = 0.0;
    for x in 0..d {
        for y in 0..d {
            let m = r.basis_endo(x, y);
            for j in &h.j {
                worst = worst.max((j * &m).trace().to_f64().abs());
            }
        }
    }
    worst
}

/// Max over basis pairs of `|[R(X,Y), J_α]|`.
pub fn commutes_with_structure<S: Scalar>(r: &CurvatureTensor<S>, h: &HermitianStructure<S>) -> f64 {
    let d = r.dim();
    let mut worst: f64 = 0.0;
    for x in 0..d {
        for y in 0..d {
            worst = worst.max(h.commutator_residual(&r.basis_endo(x, y)));
        }
    }
    worst
}

/// `R(A,B)C = g(B,C)A - g(A,C)B + Σ ε_α (g(J_αB,C)J_αA - g(J_αA,C)J_αB) - 2 Σ ε_α g(J_αA,B)J_αC`.
pub fn hpn_curvature<S: Scalar>(h: &HermitianStructure<S>) -> CurvatureTensor<S> {
    let d = h.dim();
    let g = &h.g;
    // ω_α = J_αᵀ g, so g(J_α e_a, e_b) = ω_α[a][b]
    let om: Vec<Matrix<S>> = h.j.iter().map(|j| &j.transpose() * g).collect();
    let two = S::from_i64(2);
    CurvatureTensor::from_fn(g, |a, b, c| {
        let mut v = vec![S::zero(); d];
        v[a] = v[a].clone() + g[(b, c)].clone();
        v[b] = v[b].clone() - g[(a, c)].clone();
        for (al, j) in h.j.iter().enumerate() {
            let e = S::from_i64(EPSILON[al]);
            let cb = e.clone() * om[al][(b, c)].clone();
            let ca = e.clone() * om[al][(a, c)].clone();
            let cc = e * two.clone() * om[al][(a, b)].clone();
            for w in 0..d {
                v[w] = v[w].clone() + cb.clone() * j[(w, a)].clone() - ca.clone() * j[(w, b)].clone() - cc.clone() * j[(w, c)].clone();
            }
        }
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn zero_tensor_properties() {
        let h = HermitianStructure::<Rational>::standard(1);
        let z = CurvatureTensor::zeros(&h.g);
        assert_eq!(z.bianchi_residual(), 0.0);
        let (c, r) = einstein_check(&z, 0.0);
        assert_eq!((c, r), (Rational::from_i64(0), 0.0));
    }

    #[test]
    fn hpn_is_einstein_and_autg() {
        for n in 1..=2 {
            let h = HermitianStructure::<Rational>::standard(n);
            let r = hpn_curvature(&h);
            assert_eq!(r.bianchi_residual(), 0.0);
            assert_eq!(r.antisymmetry_residual(), 0.0);
            let (c, res) = einstein_check(&r, 0.0);
            assert_eq!(res, 0.0);
            assert_eq!(c, Rational::from_i64(4 * n as i64 + 8));
            assert_eq!(autg_residual(&r, &h), 0.0);
        }
    }

    #[test]
    fn perturbed_entry_breaks_bianchi() {
        let h = HermitianStructure::<Rational>::standard(1);
        let mut r = hpn_curvature(&h);
        let v = r.get(0, 1, 2, 3).clone() + Rational::from_i64(1);
        r.set(0, 1, 2, 3, v);
        assert!(r.bianchi_residual() > 0.0);
    }
}
