//! Jacobi operators `K_X(Y) = R(X,Y)X` and Osserman diagnostics.

use super::CurvatureTensor;
use crate::error::{PqError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use rayon::prelude::*;

pub fn jacobi_operator<S: Scalar>(r: &CurvatureTensor<S>, x: &[S]) -> Matrix<S> {
    let d = r.dim();
    let mut cols = Vec::with_capacity(d);
    for y in 0..d {
        let mut e = vec![S::zero(); d];
        e[y] = S::one();
        cols.push(r.apply(x, &e, x));
    }
    Matrix::from_columns(&cols)
}

/// Basis `P` of `X^⊥` and the matrix of `K` restricted to it, `(PᵀgP)⁻¹PᵀgKP`.
pub fn restrict_to_complement<S: Scalar>(k: &Matrix<S>, x: &[S], g: &Matrix<S>, tol: f64) -> Result<(Matrix<S>, Matrix<S>)> {
    let gx = g.mul_vec(x);
    let row = Matrix::from_rows(vec![gx]);
    let p = Matrix::from_columns(&row.nullspace(tol));
    let pg = &p.transpose() * g;
    let gram = &pg * &p;
    let m = gram.solve(&(&(&pg * k) * &p), tol).ok_or(PqError::NullDirection)?;
    Ok((p, m))
}

/// Degree of the minimal polynomial, from the rank of `I, M, M², …`.
pub fn min_poly_degree<S: Scalar>(m: &Matrix<S>, tol: f64) -> usize {
    let n = m.rows();
    let mut powers = vec![Matrix::<S>::identity(n).data().to_vec()];
    let mut cur = Matrix::identity(n);
    for deg in 1..=n {
        cur = &cur * m;
        powers.push(cur.data().to_vec());
        if Matrix::from_columns(&powers).rank(tol) < powers.len() {
            return deg;
        }
    }
    n
}

#[derive(Debug, Clone, PartialEq)]
pub struct DirectionSpectrum {
    /// Sign of `g(X, X)`.
    pub sign: i8,
    /// Eigenvalues of `K_X` on `X^⊥` as `(re, im)`, sorted.
    pub eigenvalues: Vec<(f64, f64)>,
    pub min_poly_degree: usize,
    pub operator_max: f64,
    /// `max |K_X²|` on `X^⊥`.
    pub square_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OssermanReport {
    pub directions: Vec<DirectionSpectrum>,
    /// Largest eigenvalue deviation among spacelike (resp. timelike) directions.
    pub spacelike_spread: f64,
    pub timelike_spread: f64,
}

impl OssermanReport {
    pub fn agrees(&self, tol: f64) -> bool {
        let degrees_agree = |s: i8| {
            let mut it = self.directions.iter().filter(|d| d.sign == s).map(|d| d.min_poly_degree);
            match it.next() {
                Some(first) => it.all(|d| d == first),
                None => true,
            }
        };
        self.spacelike_spread <= tol && self.timelike_spread <= tol && degrees_agree(1) && degrees_agree(-1)
    }
}

fn sorted_eigenvalues(m: &Matrix<f64>) -> Result<Vec<(f64, f64)>> {
    let a = m.to_nalgebra();
    // repeated eigenvalues can stall the QR sweep at machine precision; relax the deflation threshold
    let schur = [f64::EPSILON, 1e-14, 1e-13, 1e-12]
        .iter()
        .find_map(|&eps| nalgebra::Schur::try_new(a.clone(), eps, 2_000))
        .ok_or(PqError::NoConvergence)?;
    let mut ev: Vec<(f64, f64)> = schur.complex_eigenvalues().iter().map(|c| (c.re, c.im)).collect();
    ev.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    Ok(ev)
}

fn spectrum(r: &CurvatureTensor<f64>, x: &[f64], tol: f64) -> Result<DirectionSpectrum> {
    let gxx = r.g.bilinear(x, x);
    if gxx.abs() <= tol {
        return Err(PqError::NullDirection);
    }
    if (gxx.abs() - 1.0).abs() > 1e-8 {
        return Err(PqError::Invalid(format!("direction is not unit: g(X,X) = {gxx}")));
    }
    let k = jacobi_operator(r, x);
    let p = orthonormal_complement(&r.g.mul_vec(x));
    // X^⊥ is K-invariant, so PᵀKP is the restriction
    let m = &(&p.transpose() * &k) * &p;
    Ok(DirectionSpectrum {
        sign: if gxx > 0.0 { 1 } else { -1 },
        eigenvalues: sorted_eigenvalues(&m)?,
        min_poly_degree: min_poly_degree(&m, 1e-7),
        operator_max: m.max_abs(),
        square_max: (&m * &m).max_abs(),
    })
}

/// Euclidean-orthonormal basis of `v^⊥` from the Householder reflection taking `v` to a multiple of `e₀`.
fn orthonormal_complement(v: &[f64]) -> Matrix<f64> {
    let d = v.len();
    let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    let mut w: Vec<f64> = v.iter().map(|a| a / norm).collect();
    w[0] += if w[0] >= 0.0 { 1.0 } else { -1.0 };
    let ww: f64 = w.iter().map(|a| a * a).sum();
    Matrix::from_fn(d, d - 1, |r, c| {
        let delta = if r == c + 1 { 1.0 } else { 0.0 };
        delta - 2.0 * w[r] * w[c + 1] / ww
    })
}

fn spread(dirs: &[DirectionSpectrum], sign: i8) -> f64 {
    let mut it = dirs.iter().filter(|d| d.sign == sign);
    let Some(first) = it.next() else { return 0.0 };
    it.map(|d| {
        d.eigenvalues
            .iter()
            .zip(&first.eigenvalues)
            .map(|(a, b)| (a.0 - b.0).abs().max((a.1 - b.1).abs()))
            .fold(0.0, f64::max)
    })
    .fold(0.0, f64::max)
}

/// Spectra of `K_X` on `X^⊥` for each unit direction, computed in parallel.
pub fn jacobi_osserman(r: &CurvatureTensor<f64>, directions: &[Vec<f64>], tol: f64) -> Result<OssermanReport> {
    let directions: Vec<DirectionSpectrum> = directions.par_iter().map(|x| spectrum(r, x, tol)).collect::<Result<_>>()?;
    Ok(OssermanReport {
        spacelike_spread: spread(&directions, 1),
        timelike_spread: spread(&directions, -1),
        directions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{hpn_curvature, solvable_example, sym_space_curvature};
    use crate::linalg::HermitianStructure;
    use crate::scalar::Rational;

    #[test]
    fn hpn_spectrum_on_basis_direction() {
        let h = HermitianStructure::<f64>::standard(2);
        let r = hpn_curvature(&h);
        let mut x = vec![0.0; 8];
        x[0] = 1.0;
        let rep = jacobi_osserman(&r, &[x], 1e-12).unwrap();
        let ev: Vec<f64> = rep.directions[0].eigenvalues.iter().map(|e| e.0).collect();
        let expect = [-4.0, -4.0, -4.0, -1.0, -1.0, -1.0, -1.0];
        for (a, b) in ev.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9, "{ev:?}");
        }
    }

    #[test]
    fn null_direction_is_rejected() {
        let h = HermitianStructure::<f64>::standard(1);
        let r = hpn_curvature(&h);
        let x = vec![1.0, 0.0, 1.0, 0.0];
        assert_eq!(jacobi_osserman(&r, &[x], 1e-12), Err(PqError::NullDirection));
    }

    #[test]
    fn solvable_jacobi_is_nilpotent() {
        let d = solvable_example::<Rational>(1);
        let r = sym_space_curvature(&d, 0.0).unwrap();
        let x: Vec<Rational> = [1, 0, 0, 0].iter().map(|&v| Rational::from_i64(v)).collect();
        let k = jacobi_operator(&r, &x);
        assert!(!k.is_zero());
        assert!((&k * &k).is_zero());
        let (_, m) = restrict_to_complement(&k, &x, &r.g, 0.0).unwrap();
        assert_eq!(min_poly_degree(&m, 0.0), 2);
    }
}
