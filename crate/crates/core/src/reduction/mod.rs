//! Moment-map reductions: the flat S¹ quotient of H̃ⁿ and the `φ_{p,q}` quotient of H̃P².

mod flat;
mod pq;

pub use flat::{
    flat_complex_coords, flat_equivariance_residual, flat_gradient_residual, flat_jalpha_residual, flat_killing, flat_level_point, flat_moment_definitional, flat_reduced_structure,
    flat_moment_value, flat_s1_moment, flat_tangent_frame, m_xi_residual, FlatReduced,
};
pub use pq::{
    ambient_einstein_constant, lemma_moment, pq_horizontal_direction, pq_jalpha_residual, pq_killing, pq_levelset, pq_levelset_axis,
    pq_sample_levelset, reduced_jacobi, validate_pq, BasePointData, ReducedJacobi,
};

use crate::error::{PqError, Result};
use crate::linalg::HermitianStructure;
use crate::matrix::Matrix;
use std::fmt::Write;

/// Element `b i + c j + d k` of Im H̃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImValue {
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl ImValue {
    pub fn max_abs(&self) -> f64 {
        self.b.abs().max(self.c.abs()).max(self.d.abs())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Action {
    FlatS1 { n: usize },
    Pq { p: u64, q: u64 },
}

/// One configured reduction instance with its sampled points.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionScene {
    pub action: Action,
    pub xi: [f64; 3],
    pub seed: u64,
    pub tolerance: f64,
    /// Seed that produced each point, and the point in real coordinates.
    pub points: Vec<(u64, Vec<f64>)>,
}

impl ReductionScene {
    /// Plain-text manifest followed by the point table.
    pub fn to_manifest(&self) -> String {
        let mut s = String::new();
        match self.action {
            Action::FlatS1 { n } => writeln!(s, "action flat-s1 n={n}").unwrap(),
            Action::Pq { p, q } => writeln!(s, "action pq p={p} q={q}").unwrap(),
        }
        writeln!(s, "xi {} {} {}", self.xi[0], self.xi[1], self.xi[2]).unwrap();
        writeln!(s, "seed {}", self.seed).unwrap();
        writeln!(s, "tolerance {:e}", self.tolerance).unwrap();
        writeln!(s, "points {}", self.points.len()).unwrap();
        for (seed, p) in &self.points {
            let coords: Vec<String> = p.iter().map(|v| format!("{v:.17e}")).collect();
            writeln!(s, "{seed} {}", coords.join(" ")).unwrap();
        }
        s
    }
}

/// Orthonormal (Euclidean) basis of the kernel of `a`, expected to have dimension `dim`.
pub(crate) fn numeric_kernel(a: &Matrix<f64>, dim: usize, tol: f64) -> Result<Vec<Vec<f64>>> {
    let n = a.cols();
    let ata = (&a.transpose() * a).to_nalgebra();
    let eig = nalgebra::SymmetricEigen::new(ata);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
    let scale = eig.eigenvalues.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if dim < n && eig.eigenvalues[order[dim]].abs() <= tol * scale {
        return Err(PqError::DegenerateLevelSet);
    }
    if dim > 0 && eig.eigenvalues[order[dim - 1]].abs() > tol.sqrt() * scale {
        return Err(PqError::DegenerateLevelSet);
    }
    Ok(order[..dim].iter().map(|&k| eig.eigenvectors.column(k).iter().copied().collect()).collect())
}

/// Induced metric and endomorphisms on the span of `frame`, assuming the span is J-invariant.
pub(crate) fn induce_structure(amb: &HermitianStructure<f64>, frame: &[Vec<f64>], tol: f64) -> Result<HermitianStructure<f64>> {
    let h = Matrix::from_columns(frame);
    let hg = &h.transpose() * &amb.g;
    let gram = &hg * &h;
    let mut js = Vec::new();
    for j in &amb.j {
        js.push(gram.solve(&(&(&hg * j) * &h), tol).ok_or(PqError::DegenerateLevelSet)?);
    }
    let [a, b, c]: [Matrix<f64>; 3] = js.try_into().expect("three endomorphisms");
    Ok(HermitianStructure::new([a, b, c], gram))
}

/// Damped Gauss–Newton for an underdetermined system with minimal-norm steps.
pub(crate) fn gauss_newton(
    mut x: Vec<f64>,
    f: impl Fn(&[f64]) -> Vec<f64>,
    jac: impl Fn(&[f64]) -> Matrix<f64>,
    accept: f64,
    max_iter: usize,
) -> Result<Vec<f64>> {
    for _ in 0..max_iter {
        let fx = f(&x);
        let res = fx.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if res < accept {
            return Ok(x);
        }
        let j = jac(&x);
        let jjt = &j * &j.transpose();
        let y = jjt.solve_vec(&fx, 1e-14).ok_or(PqError::NoConvergence)?;
        let step = j.transpose().mul_vec(&y);
        let mut damp = 1.0;
        loop {
            let trial: Vec<f64> = x.iter().zip(&step).map(|(a, s)| a - damp * s).collect();
            let r = f(&trial).iter().fold(0.0f64, |m, v| m.max(v.abs()));
            if r < res || damp < 1e-4 {
                x = trial;
                break;
            }
            damp *= 0.5;
        }
    }
    Err(PqError::NoConvergence)
}
