//! The action `φ_{p,q}(t)[u₀, u₁, u₂] = [e^{jqt}u₀, e^{jpt}u₁, e^{jpt}u₂]` on H̃P².

use super::{gauss_newton, numeric_kernel, ImValue};
use crate::algebra::SplitQuaternion;
use crate::curvature::{einstein_check, hpn_curvature};
use crate::error::{PqError, Result};
use crate::linalg::{HermitianStructure, PQMatrix, PQVector};
use crate::matrix::Matrix;
use crate::projspace::{transitive_element, SpherePoint};
use crate::sampling::{self, SampleRng};
use crate::scalar::Scalar;

/// `p`, `q` must be distinct, coprime naturals.
pub fn validate_pq(p: u64, q: u64) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(PqError::Invalid("p and q must be positive".into()));
    }
    if p == q {
        return Err(PqError::Invalid("p and q must differ".into()));
    }
    if num_integer::gcd(p, q) != 1 {
        return Err(PqError::Invalid(format!("gcd({p}, {q}) != 1")));
    }
    Ok(())
}

fn weights<S: Scalar>(p: u64, q: u64) -> [S; 3] {
    [S::from_i64(q as i64), S::from_i64(p as i64), S::from_i64(p as i64)]
}

/// `V(u) = (q j u₀, p j u₁, p j u₂)`.
pub fn pq_killing<S: Scalar>(p: u64, q: u64, u: &PQVector<S>) -> PQVector<S> {
    let w = weights::<S>(p, q);
    PQVector::new(u.entries.iter().zip(&w).map(|(x, c)| &SplitQuaternion::j().scale(c) * x).collect())
}

/// `Σ c_m ū_m a u_m` for a unit imaginary axis `a`; returns the value and the regularity flag
/// `Σ c_m² |u_m|² ≠ 0`.
pub fn pq_levelset_axis<S: Scalar>(p: u64, q: u64, u: &PQVector<S>, axis: &SplitQuaternion<S>, tol: f64) -> (SplitQuaternion<S>, bool) {
    let w = weights::<S>(p, q);
    let mut value = SplitQuaternion::zero();
    let mut reg = S::zero();
    for (x, c) in u.entries.iter().zip(&w) {
        value = value + (&(&x.conj() * axis) * x).scale(c);
        reg = reg + c.clone() * c.clone() * x.square_norm();
    }
    (value, !reg.negligible(tol))
}

pub fn pq_levelset<S: Scalar>(p: u64, q: u64, u: &PQVector<S>, tol: f64) -> (SplitQuaternion<S>, bool) {
    pq_levelset_axis(p, q, u, &SplitQuaternion::j(), tol)
}

fn constraints(p: u64, q: u64, x: &[f64]) -> Vec<f64> {
    let u = PQVector::from_real(x);
    let (v, _) = pq_levelset(p, q, &u, 0.0);
    vec![u.module_scalar_product(&u).expect("same rank") - 1.0, v.b, v.c, v.d]
}

fn constraint_jacobian(p: u64, q: u64, x: &[f64]) -> Matrix<f64> {
    // all constraints are quadratic: J(x) e_k = B(x, e_k) + B(e_k, x) = F(x + e_k) - F(x - e_k) over 2
    let cols: Vec<Vec<f64>> = (0..x.len())
        .map(|k| {
            let mut plus = x.to_vec();
            let mut minus = x.to_vec();
            plus[k] += 1.0;
            minus[k] -= 1.0;
            let (a, b) = (constraints(p, q, &plus), constraints(p, q, &minus));
            a.iter().zip(&b).map(|(s, t)| (s - t) / 2.0).collect()
        })
        .collect();
    Matrix::from_columns(&cols)
}

/// Regular points of `𝒦⁰_{p,q}` on the pseudosphere with their seeds; a seed whose root
/// finder fails or lands on a non-regular point is skipped.
pub fn pq_sample_levelset(p: u64, q: u64, seed: u64, count: usize) -> Result<Vec<(u64, PQVector<f64>)>> {
    validate_pq(p, q)?;
    let mut out = Vec::with_capacity(count);
    let mut index = 0u64;
    while out.len() < count {
        if index > 50 * count as u64 + 100 {
            return Err(PqError::NoConvergence);
        }
        let mut rng = sampling::substream(seed, index);
        index += 1;
        let x0: Vec<f64> = (0..12).map(|_| 0.7 * sampling::normal(&mut rng)).collect();
        let Ok(x) = gauss_newton(x0, |x| constraints(p, q, x), |x| constraint_jacobian(p, q, x), 1e-10, 100) else {
            continue;
        };
        let u = PQVector::from_real(&x);
        let (_, regular) = pq_levelset(p, q, &u, 1e-6);
        let vv = pq_killing(p, q, &u);
        if regular && vv.module_scalar_product(&vv).expect("same rank").abs() > 1e-6 {
            out.push((index - 1, u));
        }
    }
    Ok(out)
}

/// Max over α and tangent vectors `T` of the level set of `|⟨J_α V, T⟩|` (Euclidean-unit `T`).
pub fn pq_jalpha_residual(p: u64, q: u64, u: &PQVector<f64>) -> Result<f64> {
    let x = u.to_real();
    let tangent = numeric_kernel(&constraint_jacobian(p, q, &x), 8, 1e-12)?;
    let amb = HermitianStructure::<f64>::standard(3);
    let v = pq_killing(p, q, u).to_real();
    let mut worst: f64 = 0.0;
    for j in &amb.j {
        let jv = j.mul_vec(&v);
        for t in &tangent {
            worst = worst.max(amb.g.bilinear(&jv, t).abs());
        }
    }
    Ok(worst)
}

/// Data transported to the base point `o` by the transitive element `M` with `M o = u`:
/// `Y = M† X M` for `X = diag(qj, pj, pj)`.
#[derive(Debug, Clone)]
pub struct BasePointData {
    pub y: PQMatrix<f64>,
    /// Isotropy part `y₀ = Y₀₀`.
    pub y0: SplitQuaternion<f64>,
    /// Horizontal value of the Killing field at `o`, `(Y₁₀, Y₂₀)`.
    pub v: PQVector<f64>,
}

impl BasePointData {
    pub fn new(p: u64, q: u64, u: &PQVector<f64>) -> Result<Self> {
        let point = SpherePoint::new(u.clone(), 1e-8)?;
        let m = transitive_element(&point, 1e-9)?;
        let w = weights::<f64>(p, q);
        let x = PQMatrix::from_fn(3, |r, c| if r == c { SplitQuaternion::j().scale(&w[r]) } else { SplitQuaternion::zero() });
        let y = m.dagger().mul(&x).mul(&m);
        let y0 = y.get(0, 0).clone();
        let v = PQVector::new(vec![y.get(1, 0).clone(), y.get(2, 0).clone()]);
        Ok(Self { y, y0, v })
    }

    /// `∇_Z V` at `o` for `Z ∈ m ≅ H̃²`: `Y₁ Z - Z y₀`.
    pub fn nabla(&self, z: &PQVector<f64>) -> PQVector<f64> {
        let y1 = PQMatrix::from_fn(2, |r, c| self.y.get(r + 1, c + 1).clone());
        y1.apply(z).sub(&z.right_mul(&self.y0))
    }

    /// Real 8×8 matrix of the Nomizu operator `Z ↦ Y₁ Z - Z y₀`.
    pub fn nomizu_matrix(&self) -> Matrix<f64> {
        let cols: Vec<Vec<f64>> = (0..8)
            .map(|k| {
                let mut e = vec![0.0; 8];
                e[k] = 1.0;
                self.nabla(&PQVector::from_real(&e)).to_real()
            })
            .collect();
        Matrix::from_columns(&cols)
    }

    /// Frame of `𝒱 = ℝ⟨v, v i, v j, v k⟩`.
    fn vertical_frame(&self) -> Vec<Vec<f64>> {
        let mut f = vec![self.v.to_real()];
        f.extend(SplitQuaternion::<f64>::units().iter().map(|a| self.v.right_mul(a).to_real()));
        f
    }

    /// `g`-orthogonal projection onto `𝒱^⊥`.
    pub fn horizontal_part(&self, z: &[f64], tol: f64) -> Result<Vec<f64>> {
        let g = crate::linalg::neutral_metric::<f64>(2);
        let w = Matrix::from_columns(&self.vertical_frame());
        let wg = &w.transpose() * &g;
        let coef = (&wg * &w).solve_vec(&wg.mul_vec(z), tol).ok_or(PqError::NullKilling)?;
        Ok(crate::matrix::vec_sub(z, &w.mul_vec(&coef)))
    }
}

/// `K/4n` of the ambient H̃P², from the Einstein constant of its curvature formula.
pub fn ambient_einstein_constant() -> f64 {
    let h = HermitianStructure::<f64>::standard(2);
    einstein_check(&hpn_curvature(&h), 1e-12).0
}

/// `f = (4n/K) Σ Tr(J_α L) J_α` at the base point, transported from `u`; coefficients on `(J₁, J₂, J₃)`.
pub fn lemma_moment(p: u64, q: u64, u: &PQVector<f64>, einstein: f64) -> Result<ImValue> {
    let data = BasePointData::new(p, q, u)?;
    let l = data.nomizu_matrix();
    let h = HermitianStructure::<f64>::standard(2);
    let t: Vec<f64> = h.j.iter().map(|j| (j * &l).trace() / einstein).collect();
    Ok(ImValue { b: t[0], c: t[1], d: t[2] })
}

/// Random unit direction in `𝒱^⊥ ⊂ m`, normalized so that `|g(X, X)| = 1`.
pub fn pq_horizontal_direction(data: &BasePointData, rng: &mut SampleRng) -> Result<Vec<f64>> {
    let g = crate::linalg::neutral_metric::<f64>(2);
    for _ in 0..100 {
        let z = sampling::normal_vec(rng, 8);
        let h = data.horizontal_part(&z, 1e-12)?;
        let n = g.bilinear(&h, &h);
        if n.abs() > 1e-3 {
            let s = n.abs().sqrt();
            return Ok(h.iter().map(|v| v / s).collect());
        }
    }
    Err(PqError::NullDirection)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedJacobi {
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
    /// `|h(V_X)|² / |V|²`, with `|h(V_X)|²` divided by `g(X, X)` so both causal types agree.
    pub ratio: f64,
}

/// `λ₁ = λ₂ = K/4n - 2r`, `λ₃ = K/4n + 4r` with `r = |h(V_X)|²/|V|²`.
pub fn reduced_jacobi(p: u64, q: u64, u: &PQVector<f64>, data: &BasePointData, x: &[f64], einstein: f64, tol: f64) -> Result<ReducedJacobi> {
    let (_, regular) = pq_levelset(p, q, u, tol);
    if !regular {
        return Err(PqError::NonRegular);
    }
    let g = crate::linalg::neutral_metric::<f64>(2);
    let v = data.v.to_real();
    let vv = g.bilinear(&v, &v);
    if vv.abs() <= tol {
        return Err(PqError::NullKilling);
    }
    let xx = g.bilinear(x, x);
    if (xx.abs() - 1.0).abs() > 1e-9 {
        return Err(PqError::Invalid("direction is not unit".into()));
    }
    let vertical_leak = crate::matrix::vec_sub(x, &data.horizontal_part(x, tol)?);
    if crate::matrix::vec_max_abs(&vertical_leak) > 1e-9 {
        return Err(PqError::Invalid("direction is not orthogonal to the vertical distribution".into()));
    }
    let vx = data.nabla(&PQVector::from_real(x)).to_real();
    let hv = data.horizontal_part(&vx, tol)?;
    let ratio = g.bilinear(&hv, &hv) / (xx * vv);
    Ok(ReducedJacobi { lambda1: einstein - 2.0 * ratio, lambda2: einstein - 2.0 * ratio, lambda3: einstein + 4.0 * ratio, ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = SplitQuaternion<Rational>;

    #[test]
    fn killing_at_base_point() {
        let o = PQVector::new(vec![Q::one(), Q::zero(), Q::zero()]);
        let v = pq_killing(1, 2, &o);
        assert_eq!(v.entries[0], Q::from_i64(0, 0, 2, 0));
        assert_eq!(v.module_scalar_product(&o).unwrap(), Rational::from_i64(0));
        let (val, reg) = pq_levelset(1, 2, &o, 0.0);
        assert_eq!(val, Q::from_i64(0, 0, 2, 0));
        assert!(reg);
    }

    #[test]
    fn exact_zero_of_level_set() {
        let u = PQVector::new(vec![Q::one(), Q::i(), Q::j()]);
        assert_eq!(u.module_scalar_product(&u).unwrap(), Rational::from_i64(1));
        let (val, reg) = pq_levelset(1, 2, &u, 0.0);
        assert!(val.is_zero());
        assert!(reg);
    }

    #[test]
    fn coprimality() {
        assert!(validate_pq(1, 2).is_ok());
        assert!(validate_pq(2, 4).is_err());
        assert!(validate_pq(3, 3).is_err());
    }

    #[test]
    fn sampled_points_and_ratio() {
        let pts = pq_sample_levelset(1, 2, 7, 2).unwrap();
        let k = ambient_einstein_constant();
        assert!((k - 16.0).abs() < 1e-9);
        let mut ratios = Vec::new();
        for (seed, u) in &pts {
            assert!(pq_levelset(1, 2, u, 0.0).0.max_abs() < 1e-10);
            assert!(pq_jalpha_residual(1, 2, u).unwrap() < 1e-6);
            let lm = lemma_moment(1, 2, u, k).unwrap();
            assert!(lm.max_abs() < 1e-8, "seed {seed}: {lm:?}");
            let data = BasePointData::new(1, 2, u).unwrap();
            let mut rng = sampling::rng(*seed);
            let rs: Vec<f64> = (0..5)
                .map(|_| {
                    let x = pq_horizontal_direction(&data, &mut rng).unwrap();
                    reduced_jacobi(1, 2, u, &data, &x, k, 1e-9).unwrap().ratio
                })
                .collect();
            let spread = rs.iter().fold(0.0f64, |m, r| m.max((r - rs[0]).abs()));
            assert!(spread <= 1e-6 * rs[0].abs().max(1.0), "{rs:?}");
            ratios.push(rs[0]);
        }
        assert!((ratios[0] - ratios[1]).abs() > 1e-3);
    }
}
