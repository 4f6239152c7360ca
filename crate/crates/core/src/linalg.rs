//! The right module H̃ⁿ, para-quaternionic matrices and their representations,
//! hermitian para-quaternionic structures on ℝ^{4n}.
//!
//! Real coordinates are interleaved per entry as `(1, i, j, k)`, so `h ∈ H̃ⁿ`
//! becomes `(h₀.a, h₀.b, h₀.c, h₀.d, h₁.a, …)`.

use crate::algebra::{EPSILON, SplitQuaternion};
use crate::error::{PqError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_complex::Complex;

#[derive(Debug, Clone, PartialEq)]
pub struct PQVector<S> {
    pub entries: Vec<SplitQuaternion<S>>,
}

impl<S: Scalar> PQVector<S> {
    pub fn new(entries: Vec<SplitQuaternion<S>>) -> Self {
        Self { entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(vec![SplitQuaternion::zero(); n])
    }

    /// `e_idx · q`.
    pub fn basis(n: usize, idx: usize, q: SplitQuaternion<S>) -> Self {
        let mut v = Self::zeros(n);
        v.entries[idx] = q;
        v
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Right scalar action `(h q)_i = h_i q`.
    pub fn right_mul(&self, q: &SplitQuaternion<S>) -> Self {
        Self::new(self.entries.iter().map(|h| h * q).collect())
    }

    /// Left scalar action `(q h)_i = q h_i`.
    pub fn left_mul(&self, q: &SplitQuaternion<S>) -> Self {
        Self::new(self.entries.iter().map(|h| q * h).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.entries.iter().zip(&o.entries).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.entries.iter().zip(&o.entries).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.entries.iter().map(|h| h.scale(s)).collect())
    }

    pub fn to_real(&self) -> Vec<S> {
        self.entries.iter().flat_map(|q| q.to_array()).collect()
    }

    pub fn from_real(v: &[S]) -> Self {
        assert_eq!(v.len() % 4, 0);
        Self::new(
            v.chunks(4)
                .map(|c| SplitQuaternion::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
                .collect(),
        )
    }

    /// `⟨h, h′⟩ = Re Σ h_i h̄′_i`.
    pub fn module_scalar_product(&self, o: &Self) -> Result<S> {
        if self.rank() != o.rank() {
            return Err(PqError::RankMismatch(self.rank(), o.rank()));
        }
        Ok(self.entries.iter().zip(&o.entries).fold(S::zero(), |acc, (a, b)| acc + a.scalar_product(b)))
    }

    /// The same scalar product through the complex representation: `Σ Re(z₁ z̄₁′ - z₂ z̄₂′)`.
    pub fn complex_scalar_product(&self, o: &Self) -> Result<S> {
        if self.rank() != o.rank() {
            return Err(PqError::RankMismatch(self.rank(), o.rank()));
        }
        let mut acc = S::zero();
        for (a, b) in self.entries.iter().zip(&o.entries) {
            let (z1, z2) = a.complex_rep();
            let (w1, w2) = b.complex_rep();
            acc = acc + (z1 * w1.conj()).re - (z2 * w2.conj()).re;
        }
        Ok(acc)
    }

    /// H̃-valued hermitian product `Σ ū_i v_i`; its real part is the module scalar product.
    pub fn hermitian(&self, o: &Self) -> SplitQuaternion<S> {
        assert_eq!(self.rank(), o.rank());
        self.entries.iter().zip(&o.entries).fold(SplitQuaternion::zero(), |acc, (a, b)| acc + &a.conj() * b)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(SplitQuaternion::max_abs).fold(0.0, f64::max)
    }
}

/// Real 4×4 matrix of `x ↦ q x`.
pub fn left_mult_matrix<S: Scalar>(q: &SplitQuaternion<S>) -> Matrix<S> {
    let cols: Vec<Vec<S>> = unit_basis::<S>().iter().map(|e| (q * e).to_array().to_vec()).collect();
    Matrix::from_columns(&cols)
}

/// Real 4×4 matrix of `x ↦ x q`.
pub fn right_mult_matrix<S: Scalar>(q: &SplitQuaternion<S>) -> Matrix<S> {
    let cols: Vec<Vec<S>> = unit_basis::<S>().iter().map(|e| (e * q).to_array().to_vec()).collect();
    Matrix::from_columns(&cols)
}

fn unit_basis<S: Scalar>() -> [SplitQuaternion<S>; 4] {
    [SplitQuaternion::one(), SplitQuaternion::i(), SplitQuaternion::j(), SplitQuaternion::k()]
}

/// Gram matrix of the module scalar product: `diag(1, 1, -1, -1)` per entry.
pub fn neutral_metric<S: Scalar>(n: usize) -> Matrix<S> {
    let block = Matrix::from_i64(4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1]);
    Matrix::block_diag(&vec![block; n])
}

/// Square matrix over H̃ acting by left multiplication on column vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct PQMatrix<S> {
    n: usize,
    entries: Vec<SplitQuaternion<S>>,
}

impl<S: Scalar> PQMatrix<S> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> SplitQuaternion<S>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        Self { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| SplitQuaternion::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| if r == c { SplitQuaternion::one() } else { SplitQuaternion::zero() })
    }

    /// Diagonal matrix `q · Id`.
    pub fn scalar(n: usize, q: &SplitQuaternion<S>) -> Self {
        Self::from_fn(n, |r, c| if r == c { q.clone() } else { SplitQuaternion::zero() })
    }

    pub fn from_columns(cols: &[PQVector<S>]) -> Self {
        let n = cols.len();
        Self::from_fn(n, |r, c| cols[c].entries[r].clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &SplitQuaternion<S> {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, q: SplitQuaternion<S>) {
        self.entries[r * self.n + c] = q;
    }

    pub fn column(&self, c: usize) -> PQVector<S> {
        PQVector::new((0..self.n).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        Self::from_fn(n, |r, c| (0..n).fold(SplitQuaternion::zero(), |acc, k| acc + self.get(r, k) * o.get(k, c)))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(r, c).clone() + o.get(r, c).clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(r, c).clone() - o.get(r, c).clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(self.n, |r, c| self.get(r, c).scale(s))
    }

    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// Conjugate transpose `A†`.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(c, r).conj())
    }

    pub fn apply(&self, h: &PQVector<S>) -> PQVector<S> {
        let n = self.n;
        PQVector::new(
            (0..n)
                .map(|r| (0..n).fold(SplitQuaternion::zero(), |acc, k| acc + self.get(r, k) * &h.entries[k]))
                .collect(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(SplitQuaternion::max_abs).fold(0.0, f64::max)
    }

    /// Real 4n×4n matrix of `h ↦ A h` in interleaved coordinates.
    pub fn real_action(&self) -> Matrix<S> {
        let n = self.n;
        let mut m = Matrix::zeros(4 * n, 4 * n);
        for r in 0..n {
            for c in 0..n {
                let b = left_mult_matrix(self.get(r, c));
                for i in 0..4 {
                    for j in 0..4 {
                        m[(4 * r + i, 4 * c + j)] = b[(i, j)].clone();
                    }
                }
            }
        }
        m
    }

    /// Complex 2n×2n representation with blocks `[[a, b̄], [b, ā]]`, `(a, b) = z(entry)`.
    pub fn complex_rep(&self) -> Vec<Vec<Complex<S>>> {
        let n = self.n;
        let mut m = vec![vec![Complex::new(S::zero(), S::zero()); 2 * n]; 2 * n];
        for r in 0..n {
            for c in 0..n {
                let (a, b) = self.get(r, c).complex_rep();
                m[2 * r][2 * c] = a.clone();
                m[2 * r][2 * c + 1] = b.conj();
                m[2 * r + 1][2 * c] = b;
                m[2 * r + 1][2 * c + 1] = a.conj();
            }
        }
        m
    }

    /// `μ(z(A))`, returned as a real matrix after checking the imaginary parts vanish.
    pub fn real_rep(&self) -> Matrix<S> {
        let (re, im) = mu(&self.complex_rep());
        debug_assert!(im.is_zero() || !S::EXACT, "μ∘z must be real");
        let _ = im;
        re
    }
}

/// `μ(Q) = M Q M⁻¹` with `M = (√2/2) diag([[1, i], [i, 1]])`; returns real and imaginary parts.
pub fn mu<S: Scalar>(q: &[Vec<Complex<S>>]) -> (Matrix<S>, Matrix<S>) {
    let d = q.len();
    let z = || Complex::new(S::zero(), S::zero());
    let one = Complex::new(S::one(), S::zero());
    let i = Complex::new(S::zero(), S::one());
    let mut m = vec![vec![z(); d]; d];
    let mut minv = vec![vec![z(); d]; d];
    for b in 0..d / 2 {
        let (r, s) = (2 * b, 2 * b + 1);
        m[r][r] = one.clone();
        m[r][s] = i.clone();
        m[s][r] = i.clone();
        m[s][s] = one.clone();
        minv[r][r] = one.clone();
        minv[r][s] = -i.clone();
        minv[s][r] = -i.clone();
        minv[s][s] = one.clone();
    }
    let prod = |a: &Vec<Vec<Complex<S>>>, b: &[Vec<Complex<S>>]| {
        let mut out = vec![vec![z(); d]; d];
        for r in 0..d {
            for c in 0..d {
                let mut acc = z();
                for k in 0..d {
                    acc = acc + a[r][k].clone() * b[k][c].clone();
                }
                out[r][c] = acc;
            }
        }
        out
    };
    // (√2/2)² = 1/2
    let full = prod(&prod(&m, q), &minv);
    let half = S::from_ratio(1, 2);
    let re = Matrix::from_fn(d, d, |r, c| full[r][c].re.clone() * half.clone());
    let im = Matrix::from_fn(d, d, |r, c| full[r][c].im.clone() * half.clone());
    (re, im)
}

/// `F_n = diag([[0, 1], [-1, 0]])`.
pub fn symplectic_form<S: Scalar>(n: usize) -> Matrix<S> {
    Matrix::block_diag(&vec![Matrix::from_i64(2, 2, &[0, 1, -1, 0]); n])
}

/// Membership of `μ(z(A))` in `sp(n, ℝ)`: residual is `max |AᵀF + FA|`.
pub fn sp_membership<S: Scalar>(a: &PQMatrix<S>, tol: f64) -> (bool, f64) {
    let r = a.real_rep();
    let f = symplectic_form::<S>(a.n());
    let res = &(&r.transpose() * &f) + &(&f * &r);
    let resid = res.max_abs();
    let ok = if S::EXACT { res.is_zero() } else { resid <= tol };
    (ok, resid)
}

/// Residual of `Mᵀ F M = F` for the real representation of a group element.
pub fn sp_group_residual<S: Scalar>(m: &PQMatrix<S>) -> f64 {
    let r = m.real_rep();
    let f = symplectic_form::<S>(m.n());
    (&(&(&r.transpose() * &f) * &r) - &f).max_abs()
}

/// A triple `(J₁, J₂, J₃)` with the neutral metric it is skew against.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianStructure<S> {
    pub j: [Matrix<S>; 3],
    pub g: Matrix<S>,
}

impl<S: Scalar> HermitianStructure<S> {
    pub fn new(j: [Matrix<S>; 3], g: Matrix<S>) -> Self {
        Self { j, g }
    }

    /// Right multiplication by `i`, `j`, `-k` on H̃ⁿ with the metric of the module scalar product.
    pub fn standard(n: usize) -> Self {
        let units = [SplitQuaternion::i(), SplitQuaternion::j(), -SplitQuaternion::<S>::k()];
        let j = units.map(|u| Matrix::block_diag(&vec![right_mult_matrix(&u); n]));
        Self { j, g: neutral_metric(n) }
    }

    /// Left multiplication by `i`, `j`, `k`; commutes with [`Self::standard`].
    pub fn left(n: usize) -> Self {
        let j = SplitQuaternion::<S>::units().map(|u| Matrix::block_diag(&vec![left_mult_matrix(&u); n]));
        Self { j, g: neutral_metric(n) }
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    /// Quaternionic rank `n = dim / 4`.
    pub fn rank(&self) -> usize {
        self.dim() / 4
    }

    pub fn epsilon(alpha: usize) -> S {
        S::from_i64(EPSILON[alpha])
    }

    /// Expected product `J_α J_β` as `(sign, index)`, or `None` meaning `-ε_α Id`.
    pub fn product_rule(alpha: usize, beta: usize) -> Option<(i64, usize)> {
        if alpha == beta {
            return None;
        }
        let gamma = 3 - alpha - beta;
        // cyclic (γ, α, β): J_α J_β = -ε_γ J_γ; anticyclic pairs anticommute
        let cyclic = (alpha + 1) % 3 == beta;
        let s = -EPSILON[gamma];
        Some((if cyclic { s } else { -s }, gamma))
    }

    /// Max deviation over all nine products from the comrel table.
    pub fn comrel_residual(&self) -> f64 {
        let id = Matrix::<S>::identity(self.dim());
        let mut worst: f64 = 0.0;
        for a in 0..3 {
            for b in 0..3 {
                let prod = &self.j[a] * &self.j[b];
                let expect = match Self::product_rule(a, b) {
                    None => id.scale(&S::from_i64(-EPSILON[a])),
                    Some((s, c)) => self.j[c].scale(&S::from_i64(s)),
                };
                worst = worst.max((&prod - &expect).max_abs());
            }
        }
        worst
    }

    /// Max of `|JᵀG + GJ|` over the three endomorphisms.
    pub fn skew_residual(&self) -> f64 {
        self.j.iter().map(|j| skew_residual(j, &self.g)).fold(0.0, f64::max)
    }

    /// Signature `(p, q, zero)` of the metric.
    pub fn signature(&self, tol: f64) -> (usize, usize, usize) {
        self.g.inertia(tol)
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let (c, s) = (self.comrel_residual(), self.skew_residual());
        if c > tol {
            return Err(PqError::DegenerateStructure(format!("comrel residual {c:e}")));
        }
        if s > tol {
            return Err(PqError::NotSkew(s));
        }
        let (p, q, z) = self.signature(tol);
        if z != 0 || p != q {
            return Err(PqError::DegenerateStructure(format!("metric signature ({p},{q},{z})")));
        }
        Ok(())
    }

    /// Structure transported by a change of basis `P`: `J ↦ P⁻¹ J P`, `g ↦ Pᵀ g P`.
    pub fn conjugate(&self, p: &Matrix<S>, tol: f64) -> Result<Self> {
        let pinv = p.inverse(tol).ok_or(PqError::SingularSystem)?;
        let j = self.j.clone().map(|j| &(&pinv * &j) * p);
        Ok(Self { j, g: &(&p.transpose() * &self.g) * p })
    }

    /// Largest deviation of each of the three J's from commuting with `a`.
    pub fn commutator_residual(&self, a: &Matrix<S>) -> f64 {
        self.j.iter().map(|j| j.commutator(a).max_abs()).fold(0.0, f64::max)
    }
}

/// `max |JᵀG + GJ|`, zero iff `g(JX, Y) = -g(X, JY)`.
pub fn skew_residual<S: Scalar>(j: &Matrix<S>, g: &Matrix<S>) -> f64 {
    (&(&j.transpose() * g) + &(g * j)).max_abs()
}

/// Seeds `e₁..e_n` such that `e_i, J₁e_i, J₂e_i, J₃e_i` form a basis.
pub fn adopted_basis<S: Scalar>(h: &HermitianStructure<S>, tol: f64) -> Result<Vec<Vec<S>>> {
    let dim = h.dim();
    let mut seeds = Vec::new();
    let mut system: Vec<Vec<S>> = Vec::new();
    for idx in 0..dim {
        if seeds.len() * 4 == dim {
            break;
        }
        let e: Vec<S> = (0..dim).map(|i| if i == idx { S::one() } else { S::zero() }).collect();
        let mut trial = system.clone();
        trial.extend(quadruple(h, &e));
        if Matrix::from_columns(&trial).rank(tol) == trial.len() {
            system = trial;
            seeds.push(e);
        }
    }
    if seeds.len() * 4 != dim {
        return Err(PqError::DegenerateStructure("adopted basis search exhausted".into()));
    }
    Ok(seeds)
}

fn quadruple<S: Scalar>(h: &HermitianStructure<S>, e: &[S]) -> Vec<Vec<S>> {
    vec![e.to_vec(), h.j[0].mul_vec(e), h.j[1].mul_vec(e), h.j[2].mul_vec(e)]
}

/// Columns `e₁, …, e_n, J₁e₁, …, J₁e_n, J₂e₁, …, J₃e_n`.
pub fn adopted_system<S: Scalar>(h: &HermitianStructure<S>, seeds: &[Vec<S>]) -> Matrix<S> {
    let mut cols: Vec<Vec<S>> = seeds.to_vec();
    for j in &h.j {
        cols.extend(seeds.iter().map(|e| j.mul_vec(e)));
    }
    Matrix::from_columns(&cols)
}

/// Tensor factorization `V ≅ E ⊗ H`.
#[derive(Debug, Clone)]
pub struct GrassmanSplit<S> {
    /// Basis `e_i, J₂e_i` of `E`.
    pub e_basis: Vec<Vec<S>>,
    /// `h₁ = Id - J₃`, `h₂ = J₁ + J₂`.
    pub h: [Matrix<S>; 2],
    /// Columns `h_b(e_a)` in order `2a + b`.
    pub change: Matrix<S>,
    pub omega_e: Matrix<S>,
    pub omega_h: Matrix<S>,
    /// 2×2 matrices of the J's on the `H` factor.
    pub j_blocks: [Matrix<S>; 3],
}

impl<S: Scalar> GrassmanSplit<S> {
    /// Generators of `V_φ = E ⊗ (c h₁ + s h₂)`.
    pub fn isotropic_family(&self, c: &S, s: &S) -> Matrix<S> {
        let op = &self.h[0].scale(c) + &self.h[1].scale(s);
        let cols: Vec<Vec<S>> = self.e_basis.iter().map(|e| op.mul_vec(e)).collect();
        Matrix::from_columns(&cols)
    }

    /// `ω^E ⊗ ω^H`, in the basis given by `change`.
    pub fn metric_in_split(&self) -> Matrix<S> {
        let (m, k) = (self.omega_e.rows(), self.omega_h.rows());
        Matrix::from_fn(m * k, m * k, |r, c| self.omega_e[(r / k, c / k)].clone() * self.omega_h[(r % k, c % k)].clone())
    }
}

pub fn grassman_split<S: Scalar>(h: &HermitianStructure<S>, tol: f64) -> Result<GrassmanSplit<S>> {
    let seeds = adopted_basis(h, tol)?;
    let dim = h.dim();
    let id = Matrix::<S>::identity(dim);
    let h1 = &id - &h.j[2];
    let h2 = &h.j[0] + &h.j[1];
    let mut e_basis = Vec::new();
    for e in &seeds {
        e_basis.push(e.clone());
        e_basis.push(h.j[1].mul_vec(e));
    }
    let cols: Vec<Vec<S>> = e_basis.iter().flat_map(|e| [h1.mul_vec(e), h2.mul_vec(e)]).collect();
    let change = Matrix::from_columns(&cols);
    if change.rank(tol) != dim {
        return Err(PqError::DegenerateStructure("E ⊗ H columns are dependent".into()));
    }
    let m = e_basis.len();
    let omega_e = Matrix::from_fn(m, m, |a, b| h.g.bilinear(&h1.mul_vec(&e_basis[a]), &h2.mul_vec(&e_basis[b])));
    let omega_h = Matrix::from_i64(2, 2, &[0, 1, -1, 0]);
    let j_blocks = [
        Matrix::from_i64(2, 2, &[0, -1, 1, 0]),
        Matrix::from_i64(2, 2, &[0, 1, 1, 0]),
        Matrix::from_i64(2, 2, &[-1, 0, 0, 1]),
    ];
    Ok(GrassmanSplit { e_basis, h: [h1, h2], change, omega_e, omega_h, j_blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = SplitQuaternion<Rational>;

    #[test]
    fn scalar_product_examples() {
        let one = PQVector::new(vec![Q::one()]);
        let j = PQVector::new(vec![Q::j()]);
        assert_eq!(one.module_scalar_product(&one).unwrap(), Rational::from_i64(1));
        assert_eq!(j.module_scalar_product(&j).unwrap(), Rational::from_i64(-1));
        assert_eq!(one.module_scalar_product(&PQVector::zeros(2)), Err(PqError::RankMismatch(1, 2)));
    }

    #[test]
    fn standard_structure_action() {
        let h = HermitianStructure::<Rational>::standard(1);
        // R_i: (a,b,c,d) ↦ (-b, a, d, -c); R_j: ↦ (c, d, a, b)
        assert_eq!(h.j[0], Matrix::from_i64(4, 4, &[0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]));
        assert_eq!(h.j[1], Matrix::from_i64(4, 4, &[0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0]));
        assert_eq!(h.comrel_residual(), 0.0);
        assert_eq!(h.skew_residual(), 0.0);
        // J₁ isometry, J₂ and J₃ anti-isometries
        let iso = |j: &Matrix<Rational>| &(&j.transpose() * &h.g) * j;
        assert_eq!(iso(&h.j[0]), h.g);
        assert_eq!(iso(&h.j[1]), -&h.g);
        assert_eq!(iso(&h.j[2]), -&h.g);
    }

    #[test]
    fn left_and_right_commute() {
        let r = HermitianStructure::<Rational>::standard(1);
        let l = HermitianStructure::<Rational>::left(1);
        assert_eq!(l.comrel_residual(), 0.0);
        for a in &l.j {
            assert_eq!(r.commutator_residual(a), 0.0);
        }
    }

    #[test]
    fn so21_brackets() {
        let h = HermitianStructure::<Rational>::standard(2);
        let two = Rational::from_i64(2);
        assert_eq!(h.j[0].commutator(&h.j[1]), h.j[2].scale(&two));
        assert_eq!(h.j[1].commutator(&h.j[2]), h.j[0].scale(&-two.clone()));
        assert_eq!(h.j[2].commutator(&h.j[0]), h.j[1].scale(&two));
    }

    #[test]
    fn sp_examples() {
        let i = PQMatrix::scalar(1, &Q::i());
        assert_eq!(sp_membership(&i, 0.0), (true, 0.0));
        let (ok, r) = sp_membership(&PQMatrix::<Rational>::identity(1), 0.0);
        assert!(!ok);
        assert_eq!(r, 2.0);
        assert_eq!(PQMatrix::<Rational>::identity(3).real_rep(), Matrix::identity(6));
    }

    #[test]
    fn mu_block_formula() {
        let q = Q::from_i64(2, -3, 5, 7);
        let rep = PQMatrix::scalar(1, &q).real_rep();
        let (a, b) = q.complex_rep();
        let expect = Matrix::from_rows(vec![
            vec![a.re.clone() - b.im.clone(), a.im.clone() + b.re.clone()],
            vec![b.re.clone() - a.im.clone(), a.re.clone() + b.im.clone()],
        ]);
        assert_eq!(rep, expect);
        let (_, im) = mu(&PQMatrix::scalar(1, &q).complex_rep());
        assert!(im.is_zero());
    }

    #[test]
    fn adopted_basis_standard() {
        let h = HermitianStructure::<Rational>::standard(1);
        let seeds = adopted_basis(&h, 0.0).unwrap();
        assert_eq!(seeds, vec![vec![Rational::from_i64(1), Rational::from_i64(0), Rational::from_i64(0), Rational::from_i64(0)]]);
        let sys = adopted_system(&h, &seeds);
        let gram = &(&sys.transpose() * &h.g) * &sys;
        assert_eq!(gram, h.g);
        let h2 = HermitianStructure::<Rational>::standard(2);
        let sys = adopted_system(&h2, &adopted_basis(&h2, 0.0).unwrap());
        assert_ne!(sys.det(), Rational::from_i64(0));
    }

    #[test]
    fn grassman_forms() {
        for n in 1..=2 {
            let h = HermitianStructure::<Rational>::standard(n);
            let gs = grassman_split(&h, 0.0).unwrap();
            let p = &gs.change;
            let pinv = p.inverse(0.0).unwrap();
            for a in 0..3 {
                let expect = Matrix::block_diag(&vec![gs.j_blocks[a].clone(); 2 * n]);
                assert_eq!(&(&pinv * &h.j[a]) * p, expect);
            }
            assert_eq!(&(&p.transpose() * &h.g) * p, gs.metric_in_split());
        }
    }
}
