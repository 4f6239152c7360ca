//! Curvature of symmetric pairs `g = m + f` at the base point, `R(A,B)C = [[A,B],C]`.

use super::CurvatureTensor;
use crate::algebra::SplitQuaternion;
use crate::error::{PqError, Result};
use crate::linalg::{left_mult_matrix, HermitianStructure};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A Lie algebra with basis `m` (first `nm` vectors) followed by `f`, plus a structure on `m`.
#[derive(Debug, Clone)]
pub struct SymmetricDecomposition<S> {
    nm: usize,
    nf: usize,
    /// `consts[(i·t + j)·t + k]` = coefficient of `e_k` in `[e_i, e_j]`.
    consts: Vec<S>,
    pub structure: HermitianStructure<S>,
}

/// Solves for coordinates in the span of a list of matrices.
struct Coordinates<S> {
    basis: Matrix<S>,
    solver: Matrix<S>,
}

impl<S: Scalar> Coordinates<S> {
    fn new(mats: &[Matrix<S>], tol: f64) -> Result<Self> {
        let cols: Vec<Vec<S>> = mats.iter().map(|m| m.data().to_vec()).collect();
        let basis = Matrix::from_columns(&cols);
        let gram = &basis.transpose() * &basis;
        let inv = gram.inverse(tol).ok_or_else(|| PqError::NotSymmetricPair("basis is dependent".into()))?;
        let solver = &inv * &basis.transpose();
        Ok(Self { basis, solver })
    }

    fn coords(&self, m: &Matrix<S>, tol: f64) -> Result<Vec<S>> {
        let v = m.data().to_vec();
        let c = self.solver.mul_vec(&v);
        let back = self.basis.mul_vec(&c);
        let err = back.iter().zip(&v).map(|(a, b)| (a.clone() - b.clone()).to_f64().abs()).fold(0.0, f64::max);
        if err > tol || (S::EXACT && err != 0.0) {
            return Err(PqError::NotSymmetricPair("bracket leaves the span of the basis".into()));
        }
        Ok(c)
    }
}

impl<S: Scalar> SymmetricDecomposition<S> {
    pub fn from_structure_constants(nm: usize, nf: usize, consts: Vec<S>, structure: HermitianStructure<S>, tol: f64) -> Result<Self> {
        let t = nm + nf;
        assert_eq!(consts.len(), t * t * t);
        let d = Self { nm, nf, consts, structure };
        d.check_pair(tol)?;
        Ok(d)
    }

    /// Structure constants of a matrix Lie algebra with the given bases of `m` and `f`.
    pub fn from_matrices(m: &[Matrix<S>], f: &[Matrix<S>], structure: HermitianStructure<S>, tol: f64) -> Result<Self> {
        let all: Vec<Matrix<S>> = m.iter().chain(f).cloned().collect();
        let coords = Coordinates::new(&all, tol)?;
        let t = all.len();
        let mut consts = vec![S::zero(); t * t * t];
        for i in 0..t {
            for j in 0..t {
                let c = coords.coords(&all[i].commutator(&all[j]), tol)?;
                consts[(i * t + j) * t..(i * t + j + 1) * t].clone_from_slice(&c);
            }
        }
        Self::from_structure_constants(m.len(), f.len(), consts, structure, tol)
    }

    fn total(&self) -> usize {
        self.nm + self.nf
    }

    pub fn dim_m(&self) -> usize {
        self.nm
    }

    pub fn dim_f(&self) -> usize {
        self.nf
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &S {
        let t = self.total();
        &self.consts[(i * t + j) * t + k]
    }

    /// Max violation of `[f,f] ⊆ f`, `[f,m] ⊆ m`, `[m,m] ⊆ f`.
    pub fn pair_residual(&self) -> f64 {
        let (t, nm) = (self.total(), self.nm);
        let mut worst: f64 = 0.0;
        for i in 0..t {
            for j in 0..t {
                let im = i < nm;
                let jm = j < nm;
                // result should lie in m iff exactly one argument is in m
                let want_m = im != jm;
                for k in 0..t {
                    if (k < nm) != want_m {
                        worst = worst.max(self.constant(i, j, k).to_f64().abs());
                    }
                }
            }
        }
        worst
    }

    fn check_pair(&self, tol: f64) -> Result<()> {
        let r = self.pair_residual();
        if r > tol || (S::EXACT && r != 0.0) {
            return Err(PqError::NotSymmetricPair(format!("residual {r:e}")));
        }
        Ok(())
    }

    /// Max-norm of the Jacobi identity over basis triples.
    pub fn jacobi_residual(&self) -> f64 {
        let t = self.total();
        let br = |i: usize, v: &[S]| -> Vec<S> {
            // [e_i, v]
            (0..t).map(|k| (0..t).fold(S::zero(), |acc, j| acc + v[j].clone() * self.constant(i, j, k).clone())).collect()
        };
        let col = |i: usize, j: usize| -> Vec<S> { (0..t).map(|k| self.constant(i, j, k).clone()).collect() };
        let mut worst: f64 = 0.0;
        for a in 0..t {
            for b in 0..t {
                for c in 0..t {
                    // [[a,b],c] + [[b,c],a] + [[c,a],b] = -([c,[a,b]] + [a,[b,c]] + [b,[c,a]])
                    let s1 = br(c, &col(a, b));
                    let s2 = br(a, &col(b, c));
                    let s3 = br(b, &col(c, a));
                    for k in 0..t {
                        let v = s1[k].clone() + s2[k].clone() + s3[k].clone();
                        worst = worst.max(v.to_f64().abs());
                    }
                }
            }
        }
        worst
    }
}

pub fn sym_space_curvature<S: Scalar>(d: &SymmetricDecomposition<S>, tol: f64) -> Result<CurvatureTensor<S>> {
    d.check_pair(tol)?;
    let (nm, t) = (d.nm, d.total());
    Ok(CurvatureTensor::from_fn(&d.structure.g, |x, y, z| {
        (0..nm)
            .map(|w| (nm..t).fold(S::zero(), |acc, f| acc + d.constant(x, y, f).clone() * d.constant(f, z, w).clone()))
            .collect()
    }))
}

/// The five-dimensional solvable algebra: `m = ℝ⁴`, `f = ℝA` with `A = ½(R_i + R_j)` (null, nilpotent),
/// `[E₁,E₂] = [E₃,E₁] = [E₄,E₂] = [E₃,E₄] = sign·A`. The structure is left multiplication by `i, j, k`.
pub fn solvable_example<S: Scalar>(sign: i64) -> SymmetricDecomposition<S> {
    let half = S::from_ratio(1, 2);
    let a = (&crate::linalg::right_mult_matrix(&SplitQuaternion::<S>::i()) + &crate::linalg::right_mult_matrix(&SplitQuaternion::j())).scale(&half);
    let t = 5;
    let mut consts = vec![S::zero(); t * t * t];
    let mut set = |i: usize, j: usize, k: usize, v: S| {
        consts[(i * t + j) * t + k] = v.clone();
        consts[(j * t + i) * t + k] = -v;
    };
    for (i, j) in [(0, 1), (2, 0), (3, 1), (2, 3)] {
        set(i, j, 4, S::from_i64(sign));
    }
    for b in 0..4 {
        for w in 0..4 {
            set(4, b, w, a[(w, b)].clone());
        }
    }
    SymmetricDecomposition::from_structure_constants(4, 1, consts, HermitianStructure::left(1), 0.0)
        .expect("solvable example is a symmetric pair")
}

fn elementary<S: Scalar>(d: usize, i: usize, j: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(d, d);
    m[(i, j)] = S::one();
    m
}

/// `sl_{n+2} = m + f` with `f = sl₂ ⊕ sl_n ⊕ ℝ·diag(n I₂, -2 I_n)` and `m` the off-diagonal blocks.
/// Metric is the trace form on `m`; the J's are `ad` of `[[0,-1],[1,0]]`, `[[0,1],[1,0]]`, `diag(-1,1)`.
pub fn sl_example<S: Scalar>(n: usize) -> Result<SymmetricDecomposition<S>> {
    let d = n + 2;
    let e = |i, j| elementary::<S>(d, i, j);
    let mut m = Vec::new();
    for i in 0..2 {
        for j in 2..d {
            m.push(e(i, j));
        }
    }
    for i in 0..2 {
        for j in 2..d {
            m.push(e(j, i));
        }
    }
    let mut f = vec![e(0, 1), e(1, 0), &e(0, 0) - &e(1, 1)];
    for i in 2..d {
        for j in 2..d {
            if i != j {
                f.push(e(i, j));
            }
        }
    }
    for i in 2..d - 1 {
        f.push(&e(i, i) - &e(i + 1, i + 1));
    }
    let mut central = (&e(0, 0) + &e(1, 1)).scale(&S::from_i64(n as i64));
    for i in 2..d {
        central = &central - &e(i, i).scale(&S::from_i64(2));
    }
    f.push(central);
    let tol = 1e-9;
    let coords = Coordinates::new(&m, tol)?;
    let block = |vals: [i64; 4]| {
        let mut a = Matrix::<S>::zeros(d, d);
        a[(0, 0)] = S::from_i64(vals[0]);
        a[(0, 1)] = S::from_i64(vals[1]);
        a[(1, 0)] = S::from_i64(vals[2]);
        a[(1, 1)] = S::from_i64(vals[3]);
        a
    };
    let ad = |a: &Matrix<S>| -> Result<Matrix<S>> {
        let cols = m.iter().map(|b| coords.coords(&a.commutator(b), tol)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&cols))
    };
    let j = [ad(&block([0, -1, 1, 0]))?, ad(&block([0, 1, 1, 0]))?, ad(&block([-1, 0, 0, 1]))?];
    let g = Matrix::from_fn(m.len(), m.len(), |a, b| (&m[a] * &m[b]).trace());
    SymmetricDecomposition::from_matrices(&m, &f, HermitianStructure::new(j, g), tol)
}

fn left_block<S: Scalar>(d: usize, entries: &[(usize, usize, SplitQuaternion<S>)]) -> Matrix<S> {
    let mut m = Matrix::<S>::zeros(4 * d, 4 * d);
    for (r, c, q) in entries {
        let b = left_mult_matrix(q);
        for i in 0..4 {
            for j in 0..4 {
                m[(4 * r + i, 4 * c + j)] = m[(4 * r + i, 4 * c + j)].clone() + b[(i, j)].clone();
            }
        }
    }
    m
}

/// `sp_{n+1}(H̃) = m + f` for the pseudosphere model of H̃Pⁿ, as real left-multiplication matrices.
/// `m` is spanned by `Q[k+1, 0] = e_u`, `Q[0, k+1] = -ē_u`, in the coordinates of the standard structure.
pub fn hpn_pair<S: Scalar>(n: usize) -> Result<SymmetricDecomposition<S>> {
    let d = n + 1;
    let units = [SplitQuaternion::<S>::one(), SplitQuaternion::i(), SplitQuaternion::j(), SplitQuaternion::k()];
    let mut m = Vec::new();
    for k in 0..n {
        for u in &units {
            m.push(left_block(d, &[(k + 1, 0, u.clone()), (0, k + 1, -u.conj())]));
        }
    }
    let mut f = Vec::new();
    for u in &units[1..] {
        for k in 0..d {
            f.push(left_block(d, &[(k, k, u.clone())]));
        }
    }
    for a in 1..d {
        for b in a + 1..d {
            for u in &units {
                f.push(left_block(d, &[(a, b, u.clone()), (b, a, -u.conj())]));
            }
        }
    }
    SymmetricDecomposition::from_matrices(&m, &f, HermitianStructure::standard(n), 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{autg_residual, einstein_check, g_trace_residual, hpn_curvature};
    use crate::scalar::Rational;

    #[test]
    fn solvable_example_curvature() {
        for sign in [1, -1] {
            let d = solvable_example::<Rational>(sign);
            assert_eq!(d.jacobi_residual(), 0.0);
            let r = sym_space_curvature(&d, 0.0).unwrap();
            assert!(!r.is_zero());
            assert_eq!(r.bianchi_residual(), 0.0);
            assert_eq!(autg_residual(&r, &d.structure), 0.0);
            assert_eq!(g_trace_residual(&r, &d.structure), 0.0);
            assert!(r.ricci().is_zero());
        }
    }

    #[test]
    fn abelian_is_flat() {
        let d = SymmetricDecomposition::<Rational>::from_structure_constants(
            4,
            0,
            vec![Rational::from_i64(0); 64],
            HermitianStructure::standard(1),
            0.0,
        )
        .unwrap();
        assert!(sym_space_curvature(&d, 0.0).unwrap().is_zero());
    }

    #[test]
    fn sl4_example() {
        let d = sl_example::<Rational>(2).unwrap();
        assert_eq!(d.jacobi_residual(), 0.0);
        let h = &d.structure;
        assert_eq!(h.comrel_residual(), 0.0);
        assert_eq!(h.skew_residual(), 0.0);
        assert_eq!(h.signature(0.0), (4, 4, 0));
        let r = sym_space_curvature(&d, 0.0).unwrap();
        assert_eq!(r.bianchi_residual(), 0.0);
        let (c, res) = einstein_check(&r, 0.0);
        assert_eq!(res, 0.0);
        assert_eq!(c, Rational::from_i64(4));
        assert_eq!(autg_residual(&r, h), 0.0);
    }

    #[test]
    fn missing_central_element_breaks_pair() {
        // without the central element, [m, m] leaves f
        let d = 4;
        let e = |i, j| elementary::<Rational>(d, i, j);
        let m = vec![e(0, 2), e(2, 0)];
        let f = vec![e(0, 1)];
        assert!(SymmetricDecomposition::from_matrices(&m, &f, HermitianStructure::standard(1), 0.0).is_err());
    }

    #[test]
    fn hpn_pair_matches_formula_up_to_minus_one() {
        let d = hpn_pair::<Rational>(1).unwrap();
        let r = sym_space_curvature(&d, 0.0).unwrap();
        let h = hpn_curvature(&d.structure);
        assert_eq!(r, h.scale(&Rational::from_i64(-1)));
    }
}
