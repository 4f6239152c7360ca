//! The pseudosphere model of H̃Pⁿ: points are represented by unit lifts in H̃ⁿ⁺¹.

use crate::algebra::SplitQuaternion;
use crate::error::{PqError, Result};
use crate::linalg::{right_mult_matrix, HermitianStructure, PQMatrix, PQVector};
use crate::matrix::{vec_sub, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint<S> {
    pub x: PQVector<S>,
}

impl<S: Scalar> SpherePoint<S> {
    pub fn new(x: PQVector<S>, tol: f64) -> Result<Self> {
        let n = x.module_scalar_product(&x)?;
        let err = (n - S::one()).to_f64().abs();
        if err > tol || (S::EXACT && err != 0.0) {
            return Err(PqError::Invalid(format!("point is off the pseudosphere by {err:e}")));
        }
        Ok(Self { x })
    }

    /// `o = (1, 0, …, 0)` in H̃ⁿ⁺¹.
    pub fn base(n: usize) -> Self {
        Self { x: PQVector::basis(n + 1, 0, SplitQuaternion::one()) }
    }

    /// Rank `n` of the projective space.
    pub fn n(&self) -> usize {
        self.x.rank() - 1
    }

    /// Another lift `x q` of the same point.
    pub fn lift(&self, q: &SplitQuaternion<S>) -> Self {
        Self { x: self.x.right_mul(q) }
    }
}

#[derive(Debug, Clone)]
pub struct TangentSplit<S> {
    pub base: SpherePoint<S>,
    /// Real coordinates of `x i`, `x j`, `x k`.
    pub vertical: [Vec<S>; 3],
    /// 4n real vectors spanning the horizontal space.
    pub horizontal: Vec<Vec<S>>,
}

impl<S: Scalar> TangentSplit<S> {
    pub fn horizontal_matrix(&self) -> Matrix<S> {
        Matrix::from_columns(&self.horizontal)
    }
}

fn ambient<S: Scalar>(x: &SpherePoint<S>) -> HermitianStructure<S> {
    HermitianStructure::standard(x.x.rank())
}

pub fn tangent_split<S: Scalar>(x: &SpherePoint<S>, tol: f64) -> Result<TangentSplit<S>> {
    let amb = ambient(x);
    let g = &amb.g;
    let units = SplitQuaternion::<S>::units();
    let vertical = units.clone().map(|u| x.x.right_mul(&u).to_real());
    let vgram = Matrix::from_fn(3, 3, |a, b| g.bilinear(&vertical[a], &vertical[b]));
    if vgram.inertia(tol) != (1, 2, 0) {
        return Err(PqError::DegenerateOrbit);
    }
    let mut w = vec![x.x.to_real()];
    w.extend(vertical.iter().cloned());
    let wm = Matrix::from_columns(&w);
    let gram = &(&wm.transpose() * g) * &wm;
    let ginv = gram.inverse(tol).ok_or(PqError::DegenerateOrbit)?;
    let dim = g.rows();
    let projected: Vec<Vec<S>> = (0..dim)
        .map(|k| {
            let e: Vec<S> = (0..dim).map(|i| if i == k { S::one() } else { S::zero() }).collect();
            let coef = ginv.mul_vec(&wm.transpose().mul_vec(&g.mul_vec(&e)));
            vec_sub(&e, &wm.mul_vec(&coef))
        })
        .collect();
    let (_, pivots) = Matrix::from_columns(&projected).rref(tol);
    let horizontal: Vec<Vec<S>> = pivots.iter().map(|&p| projected[p].clone()).collect();
    if horizontal.len() != dim - 4 {
        return Err(PqError::DegenerateOrbit);
    }
    Ok(TangentSplit { base: x.clone(), vertical, horizontal })
}

/// Induced metric and structure on the horizontal space, in the coordinates of the horizontal frame.
pub fn induced_geometry<S: Scalar>(split: &TangentSplit<S>, tol: f64) -> Result<HermitianStructure<S>> {
    let amb = ambient(&split.base);
    let h = split.horizontal_matrix();
    let hg = &h.transpose() * &amb.g;
    let gram = &hg * &h;
    let j = amb.j.clone().map(|j| gram.solve(&(&(&hg * &j) * &h), tol));
    let [a, b, c] = j;
    Ok(HermitianStructure::new(
        [a.ok_or(PqError::DegenerateOrbit)?, b.ok_or(PqError::DegenerateOrbit)?, c.ok_or(PqError::DegenerateOrbit)?],
        gram,
    ))
}

/// Max over α, β of `|⟨J_α h, v_β⟩|` for horizontal `h` and vertical `v` (plus `x` itself).
pub fn horizontal_invariance_residual<S: Scalar>(split: &TangentSplit<S>) -> f64 {
    let amb = ambient(&split.base);
    let mut normals = split.vertical.to_vec();
    normals.push(split.base.x.to_real());
    let mut worst: f64 = 0.0;
    for hv in &split.horizontal {
        for j in &amb.j {
            let jh = j.mul_vec(hv);
            for v in &normals {
                worst = worst.max(amb.g.bilinear(&jh, v).to_f64().abs());
            }
        }
    }
    worst
}

/// Compares the induced structures at the lifts `x` and `x q`: the structure at `x q`,
/// pulled back along `h ↦ h q`, must span the same subspace as the structure at `x`.
/// Returns the number of pulled-back endomorphisms outside that span (0 when consistent).
pub fn lift_span_defect<S: Scalar>(x: &SpherePoint<S>, q: &SplitQuaternion<S>, tol: f64) -> Result<usize> {
    let sx = tangent_split(x, tol)?;
    let xq = x.lift(q);
    let sq = tangent_split(&xq, tol)?;
    let gx = induced_geometry(&sx, tol)?;
    let gq = induced_geometry(&sq, tol)?;
    let amb = ambient(x);
    let rq = Matrix::block_diag(&vec![right_mult_matrix(q); x.x.rank()]);
    let h = sx.horizontal_matrix();
    let hq = sq.horizontal_matrix();
    let hqg = &hq.transpose() * &amb.g;
    let phi = (&hqg * &hq).solve(&(&(&hqg * &rq) * &h), tol).ok_or(PqError::DegenerateOrbit)?;
    let phi_inv = phi.inverse(tol).ok_or(PqError::DegenerateOrbit)?;
    let base: Vec<Vec<S>> = gx.j.iter().map(|j| j.data().to_vec()).collect();
    let mut defect = 0;
    for j in &gq.j {
        let pulled = &(&phi_inv * j) * &phi;
        let mut cols = base.clone();
        cols.push(pulled.data().to_vec());
        if Matrix::from_columns(&cols).rank(tol) > 3 {
            defect += 1;
        }
    }
    Ok(defect)
}

/// Orthogonal (unnormalized) frame over H̃ with first column `target`: `h(c_a, c_b) = 0` for `a ≠ b`
/// and every `h(c_a, c_a)` positive real, where `h(u, v) = Σ ū_i v_i`.
pub fn transitive_frame<S: Scalar>(target: &SpherePoint<S>, tol: f64) -> Result<Vec<PQVector<S>>> {
    let m = target.x.rank();
    let mut cols = vec![target.x.clone()];
    let mut norms = vec![S::one()];
    let mut candidates: Vec<PQVector<S>> = (0..m).map(|i| PQVector::basis(m, i, SplitQuaternion::one())).collect();
    for a in 0..m {
        for b in a + 1..m {
            candidates.push(PQVector::basis(m, a, SplitQuaternion::one()).add(&PQVector::basis(m, b, SplitQuaternion::i())));
        }
    }
    for e in candidates {
        if cols.len() == m {
            break;
        }
        let mut c = e.clone();
        for (ck, nk) in cols.iter().zip(&norms) {
            let coef = ck.hermitian(&e).scale(&S::one().checked_div(nk).expect("nonzero norm"));
            c = c.sub(&ck.right_mul(&coef));
        }
        let n = c.hermitian(&c).re();
        if n.negligible(tol.max(0.0)) || (!S::EXACT && n.to_f64().abs() < 1e-6) {
            continue;
        }
        if n.to_f64() < 0.0 {
            cols.push(c.right_mul(&SplitQuaternion::j()));
            norms.push(-n);
        } else {
            cols.push(c);
            norms.push(n);
        }
    }
    if cols.len() != m {
        return Err(PqError::CompletionFailure);
    }
    Ok(cols)
}

/// H̃-unitary matrix (`M†M = I`) with `M o = target`.
pub fn transitive_element<S: Scalar>(target: &SpherePoint<S>, tol: f64) -> Result<PQMatrix<S>> {
    let frame = transitive_frame(target, tol)?;
    let mut cols = Vec::with_capacity(frame.len());
    for c in frame {
        let n = c.hermitian(&c).re();
        let root = n.sqrt().ok_or_else(|| PqError::Invalid("column norm has no square root in this field".into()))?;
        cols.push(c.scale(&S::one().checked_div(&root).ok_or(PqError::CompletionFailure)?));
    }
    Ok(PQMatrix::from_columns(&cols))
}

/// Max-norm of `M†M - I`.
pub fn unitary_residual<S: Scalar>(m: &PQMatrix<S>) -> f64 {
    m.dagger().mul(m).sub(&PQMatrix::identity(m.n())).max_abs()
}
