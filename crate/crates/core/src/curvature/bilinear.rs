//! The map `B ↦ R^B` from bilinear forms to curvature tensors and the Ricci splitting.

use super::CurvatureTensor;
use crate::algebra::EPSILON;
use crate::error::{PqError, Result};
use crate::linalg::{GrassmanSplit, HermitianStructure};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `R^B(X,Y)Z = B(Y,Z)X - B(X,Z)Y + (B(Y,X) - B(X,Y))Z
///   + Σ ε_α [(B(X,J_αY) - B(Y,J_αX)) J_αZ + B(X,J_αZ) J_αY - B(Y,J_αZ) J_αX]`.
pub fn curv_from_bilinear<S: Scalar>(b: &Matrix<S>, h: &HermitianStructure<S>) -> CurvatureTensor<S> {
    let d = h.dim();
    // bj[α][(x, y)] = B(e_x, J_α e_y)
    let bj: Vec<Matrix<S>> = h.j.iter().map(|j| b * j).collect();
    CurvatureTensor::from_fn(&h.g, |x, y, z| {
        let mut v = vec![S::zero(); d];
        v[x] = v[x].clone() + b[(y, z)].clone();
        v[y] = v[y].clone() - b[(x, z)].clone();
        v[z] = v[z].clone() + b[(y, x)].clone() - b[(x, y)].clone();
        for (a, j) in h.j.iter().enumerate() {
            let e = S::from_i64(EPSILON[a]);
            let cz = e.clone() * (bj[a][(x, y)].clone() - bj[a][(y, x)].clone());
            let cy = e.clone() * bj[a][(x, z)].clone();
            let cx = e * bj[a][(y, z)].clone();
            for w in 0..d {
                v[w] = v[w].clone() + cz.clone() * j[(w, z)].clone() + cy.clone() * j[(w, y)].clone() - cx.clone() * j[(w, x)].clone();
            }
        }
        v
    })
}

/// Closed form of `Ric(R^B) = (4n+3)B - Bᵀ + Σ ε_α J_αᵀ(B + Bᵀ)J_α`.
pub fn ricci_of_phi<S: Scalar>(b: &Matrix<S>, h: &HermitianStructure<S>) -> Matrix<S> {
    let d = h.dim() as i64;
    let bt = b.transpose();
    let sym = b + &bt;
    let mut acc = &b.scale(&S::from_i64(d + 3)) - &bt;
    for (a, j) in h.j.iter().enumerate() {
        let t = &(&j.transpose() * &sym) * j;
        acc = if EPSILON[a] > 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// Splits `R = W + R^B` with `Ric(W) = 0` by solving `Ric(R^B) = Ric(R)`.
pub fn ricci_split<S: Scalar>(
    r: &CurvatureTensor<S>,
    h: &HermitianStructure<S>,
    tol: f64,
) -> Result<(CurvatureTensor<S>, Matrix<S>)> {
    let d = h.dim();
    let n2 = d * d;
    // column k = vec(Ric(R^{E_k})) for the elementary form E_k
    let mut cols = Vec::with_capacity(n2);
    for k in 0..n2 {
        let mut e = Matrix::zeros(d, d);
        e[(k / d, k % d)] = S::one();
        cols.push(ricci_of_phi(&e, h).data().to_vec());
    }
    let system = Matrix::from_columns(&cols);
    let rhs = r.ricci().data().to_vec();
    let sol = system.solve_vec(&rhs, tol).ok_or(PqError::SingularSystem)?;
    let b = Matrix::from_vec(d, d, sol);
    let w = r.sub(&curv_from_bilinear(&b, h));
    Ok((w, b))
}

/// Curvature with values in `sp(E) ⊗ Id` on `V = E ⊗ H`:
/// `Σ_t c_t ω^H(ξ_t X, ξ_t Y) u_t ⊗ ξ_t Z` with `ξ_t = ω^E(u_t, ·)`.
pub fn sp_h_curvature<S: Scalar>(split: &GrassmanSplit<S>, g: &Matrix<S>, terms: &[(Vec<S>, S)], tol: f64) -> Result<CurvatureTensor<S>> {
    let p = &split.change;
    let pinv = p.inverse(tol).ok_or(PqError::SingularSystem)?;
    let d = p.rows();
    let m = split.e_basis.len();
    // coordinates of e_x in the E ⊗ H basis: coords[x][2a + b]
    let coords: Vec<Vec<S>> = (0..d).map(|x| pinv.column(x)).collect();
    let mut out = CurvatureTensor::zeros(g);
    for (u, c) in terms {
        let xi: Vec<S> = (0..m).map(|a| (0..m).fold(S::zero(), |acc, k| acc + u[k].clone() * split.omega_e[(k, a)].clone())).collect();
        let contract = |x: usize| -> [S; 2] {
            std::array::from_fn(|b| (0..m).fold(S::zero(), |acc, a| acc + xi[a].clone() * coords[x][2 * a + b].clone()))
        };
        let proj: Vec<[S; 2]> = (0..d).map(contract).collect();
        let t = CurvatureTensor::from_fn(g, |x, y, z| {
            let w = &split.omega_h;
            let s = proj[x][0].clone() * proj[y][0].clone() * w[(0, 0)].clone()
                + proj[x][0].clone() * proj[y][1].clone() * w[(0, 1)].clone()
                + proj[x][1].clone() * proj[y][0].clone() * w[(1, 0)].clone()
                + proj[x][1].clone() * proj[y][1].clone() * w[(1, 1)].clone();
            let s = s * c.clone();
            let tensor: Vec<S> = (0..2 * m).map(|k| s.clone() * u[k / 2].clone() * proj[z][k % 2].clone()).collect();
            p.mul_vec(&tensor)
        });
        out = out.add(&t);
    }
    Ok(out)
}
