//! S¹ acting on H̃ⁿ by left multiplication with `e^{it}`.
//!
//! With `h = z + j w` entrywise (`z, w ∈ ℂⁿ`) the moment map fixed by the
//! defining relation `d f_α = ω_α(V, ·)` for `V = 2 i h` is
//! `f = (-(|z|² + |w|²), 2 Im(zw), -2 Re(zw))`, where `zw = Σ z_m w_m`.

use super::{induce_structure, numeric_kernel, ImValue};
use crate::algebra::SplitQuaternion;
use crate::error::{PqError, Result};
use crate::linalg::{HermitianStructure, PQVector};
use crate::matrix::{dot, Matrix};
use crate::sampling::{self, SampleRng};
use crate::scalar::Scalar;
use num_complex::Complex64;

/// `(z, w)` with `h_m = z_m + j w_m`.
pub fn flat_complex_coords(h: &PQVector<f64>) -> (Vec<Complex64>, Vec<Complex64>) {
    h.entries
        .iter()
        .map(|q| {
            let (z1, z2) = q.complex_rep();
            (Complex64::new(z1.re, z1.im), Complex64::new(z2.re, z2.im))
        })
        .unzip()
}

pub fn flat_s1_moment(h: &PQVector<f64>) -> [f64; 3] {
    let (z, w) = flat_complex_coords(h);
    let nz: f64 = z.iter().chain(&w).map(|c| c.norm_sqr()).sum();
    let zw: Complex64 = z.iter().zip(&w).map(|(a, b)| a * b).sum();
    [-nz, 2.0 * zw.im, -2.0 * zw.re]
}

/// Generator `V(h) = 2 i h`.
pub fn flat_killing<S: Scalar>(h: &PQVector<S>) -> PQVector<S> {
    h.left_mul(&SplitQuaternion::i().scale(&S::from_i64(2)))
}

/// `f_α = ½ g(J_α V, h)`, valid in any scalar field.
pub fn flat_moment_definitional<S: Scalar>(h: &PQVector<S>) -> [S; 3] {
    let amb = HermitianStructure::<S>::standard(h.rank());
    let v = flat_killing(h).to_real();
    let x = h.to_real();
    let half = S::from_ratio(1, 2);
    std::array::from_fn(|a| half.clone() * amb.g.bilinear(&amb.j[a].mul_vec(&v), &x))
}

/// Random point of the level set at `ξ = (-1, 0, 0)`: `|z|² + |w|² = 1`, `zw = 0`.
pub fn flat_level_point(rng: &mut SampleRng, n: usize) -> PQVector<f64> {
    let cx = |r: &mut SampleRng| Complex64::new(sampling::normal(r), sampling::normal(r));
    let z: Vec<Complex64> = (0..n).map(|_| cx(rng)).collect();
    let mut w: Vec<Complex64> = (0..n).map(|_| cx(rng)).collect();
    let zz: f64 = z.iter().map(|c| c.norm_sqr()).sum();
    let zw: Complex64 = z.iter().zip(&w).map(|(a, b)| a * b).sum();
    for (wm, zm) in w.iter_mut().zip(&z) {
        *wm -= zw / zz * zm.conj();
    }
    let norm: f64 = z.iter().chain(&w).map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    PQVector::new(
        z.iter()
            .zip(&w)
            .map(|(a, b)| {
                let (a, b) = (a / norm, b / norm);
                SplitQuaternion::from_complex(&num_complex::Complex::new(a.re, a.im), &num_complex::Complex::new(b.re, b.im))
            })
            .collect(),
    )
}

/// Residual of the quotient equations `|Z|² = |W|²`, `Im(Σ Z̄ W) = 0` for `Z = z + w̄`, `W = z - w̄`.
pub fn m_xi_residual(h: &PQVector<f64>) -> f64 {
    let (z, w) = flat_complex_coords(h);
    let big_z: Vec<Complex64> = z.iter().zip(&w).map(|(a, b)| a + b.conj()).collect();
    let big_w: Vec<Complex64> = z.iter().zip(&w).map(|(a, b)| a - b.conj()).collect();
    let nz: f64 = big_z.iter().map(|c| c.norm_sqr()).sum();
    let nw: f64 = big_w.iter().map(|c| c.norm_sqr()).sum();
    let cross: Complex64 = big_z.iter().zip(&big_w).map(|(a, b)| a.conj() * b).sum();
    (nz - nw).abs().max(cross.im.abs())
}

fn moment_vec(x: &[f64]) -> Vec<f64> {
    flat_s1_moment(&PQVector::from_real(x)).to_vec()
}

/// Tangent space of the level set through `h`, from a central-difference Jacobian of the moment map.
pub fn flat_tangent_frame(h: &PQVector<f64>, step: f64) -> Result<Vec<Vec<f64>>> {
    if step < 1e-10 {
        return Err(PqError::StepTooSmall(step));
    }
    let x = h.to_real();
    let dim = x.len();
    let mut cols = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut plus = x.clone();
        let mut minus = x.clone();
        plus[k] += step;
        minus[k] -= step;
        let (fp, fm) = (moment_vec(&plus), moment_vec(&minus));
        cols.push(fp.iter().zip(&fm).map(|(a, b)| (a - b) / (2.0 * step)).collect::<Vec<f64>>());
    }
    let jac = Matrix::from_columns(&cols);
    numeric_kernel(&jac, dim - 3, 1e-12)
}

#[derive(Debug, Clone)]
pub struct FlatReduced {
    pub structure: HermitianStructure<f64>,
    /// Horizontal frame in real coordinates of H̃ⁿ.
    pub frame: Vec<Vec<f64>>,
    pub killing_norm: f64,
}

/// Induced structure on `T_h𝒦 ∩ V^⊥`, the tangent space of the quotient at `[h]`.
pub fn flat_reduced_structure(h: &PQVector<f64>, xi: [f64; 3], tol: f64) -> Result<FlatReduced> {
    let f = flat_s1_moment(h);
    let off = f.iter().zip(&xi).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if off > 1e-8 {
        return Err(PqError::Invalid(format!("point is off the level set by {off:e}")));
    }
    let amb = HermitianStructure::<f64>::standard(h.rank());
    let v = flat_killing(h).to_real();
    let vv = amb.g.bilinear(&v, &v);
    if vv.abs() <= tol {
        return Err(PqError::NullOrbit);
    }
    let tangent = flat_tangent_frame(h, 1e-5)?;
    // inside T𝒦 keep the g-orthogonal complement of V
    let gv = amb.g.mul_vec(&v);
    let row = Matrix::from_rows(vec![tangent.iter().map(|t| dot(t, &gv)).collect()]);
    let coeffs = numeric_kernel(&row, tangent.len() - 1, 1e-12)?;
    let frame: Vec<Vec<f64>> = coeffs
        .iter()
        .map(|c| (0..v.len()).map(|i| c.iter().zip(&tangent).map(|(a, t)| a * t[i]).sum()).collect())
        .collect();
    let structure = induce_structure(&amb, &frame, 1e-12)?;
    Ok(FlatReduced { structure, frame, killing_norm: vv })
}

/// Moment value as an [`ImValue`] for reporting.
pub fn flat_moment_value(h: &PQVector<f64>) -> ImValue {
    let f = flat_s1_moment(h);
    ImValue { b: f[0], c: f[1], d: f[2] }
}

/// Largest deviation of the central-difference derivative of `f_α` along `dir` from `ω_α(V, dir)`.
pub fn flat_gradient_residual(h: &PQVector<f64>, dir: &[f64], step: f64) -> Result<f64> {
    if step < 1e-10 {
        return Err(PqError::StepTooSmall(step));
    }
    let amb = HermitianStructure::<f64>::standard(h.rank());
    let x = h.to_real();
    let v = flat_killing(h).to_real();
    let plus: Vec<f64> = x.iter().zip(dir).map(|(a, d)| a + step * d).collect();
    let minus: Vec<f64> = x.iter().zip(dir).map(|(a, d)| a - step * d).collect();
    let (fp, fm) = (moment_vec(&plus), moment_vec(&minus));
    let mut worst: f64 = 0.0;
    for a in 0..3 {
        let fd = (fp[a] - fm[a]) / (2.0 * step);
        let omega = amb.g.bilinear(&amb.j[a].mul_vec(&v), dir);
        worst = worst.max((fd - omega).abs() / omega.abs().max(1.0));
    }
    Ok(worst)
}

/// Max over α and Euclidean-unit tangent vectors `T` of the level set of `|g(J_α V, T)|`.
pub fn flat_jalpha_residual(h: &PQVector<f64>) -> Result<f64> {
    let amb = HermitianStructure::<f64>::standard(h.rank());
    let v = flat_killing(h).to_real();
    let tangent = flat_tangent_frame(h, 1e-5)?;
    let mut worst: f64 = 0.0;
    for j in &amb.j {
        let jv = j.mul_vec(&v);
        for t in &tangent {
            worst = worst.max(amb.g.bilinear(&jv, t).abs());
        }
    }
    Ok(worst)
}

/// `|f(e^{it} h) - f(h)|`, zero since the action commutes with the structure.
pub fn flat_equivariance_residual(h: &PQVector<f64>, t: f64) -> f64 {
    let moved = h.left_mul(&crate::algebra::unit_flow(crate::algebra::FlowAxis::I, t));
    let (a, b) = (flat_s1_moment(h), flat_s1_moment(&moved));
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn gradient_orthogonality_equivariance() {
        let mut r = sampling::rng(3);
        for _ in 0..20 {
            let h = sampling::pq_vector::<f64>(&mut r, 2);
            let d = sampling::normal_vec(&mut r, 8);
            assert!(flat_gradient_residual(&h, &d, 1e-5).unwrap() < 5e-4);
            assert!(flat_equivariance_residual(&h, 0.7) < 1e-12);
            let p = flat_level_point(&mut r, 2);
            assert!(flat_jalpha_residual(&p).unwrap() < 1e-9);
        }
        let h = flat_level_point(&mut r, 2);
        assert!(flat_gradient_residual(&h, &[0.0; 8], 1e-5).unwrap() == 0.0);
        assert!(matches!(flat_gradient_residual(&h, &[0.0; 8], 1e-12), Err(PqError::StepTooSmall(_))));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(flat_s1_moment(&PQVector::zeros(2)), [0.0, 0.0, 0.0]);
        let e = PQVector::basis(2, 0, SplitQuaternion::one());
        assert_eq!(flat_s1_moment(&e), [-1.0, 0.0, 0.0]);
    }

    #[test]
    fn complex_formula_matches_definition() {
        let mut r = sampling::rng(1);
        for _ in 0..20 {
            let h = sampling::pq_vector::<f64>(&mut r, 3);
            let a = flat_s1_moment(&h);
            let b = flat_moment_definitional(&h);
            for k in 0..3 {
                assert!((a[k] - b[k]).abs() < 1e-12, "{a:?} {b:?}");
            }
        }
        let h = sampling::pq_vector::<Rational>(&mut r, 2);
        let exact = flat_moment_definitional(&h);
        let float = flat_s1_moment(&PQVector::new(h.entries.iter().map(|q| SplitQuaternion::from_array(q.to_array().map(|v| v.to_f64()))).collect()));
        assert!((exact[0].to_f64() - float[0]).abs() < 1e-9);
    }

    #[test]
    fn level_points_reduce() {
        let mut r = sampling::rng(2);
        let h = flat_level_point(&mut r, 2);
        let f = flat_s1_moment(&h);
        assert!((f[0] + 1.0).abs() < 1e-12 && f[1].abs() < 1e-12 && f[2].abs() < 1e-12);
        assert!(m_xi_residual(&h) < 1e-12);
        let red = flat_reduced_structure(&h, [-1.0, 0.0, 0.0], 1e-9).unwrap();
        assert!(red.structure.comrel_residual() < 1e-9);
        assert!(red.structure.skew_residual() < 1e-9);
        assert_eq!(red.structure.signature(1e-9), (2, 2, 0));
    }
}
