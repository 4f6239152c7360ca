//! Dense row-major matrices over a [`Scalar`].

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<S> = rows.into_iter().flatten().collect();
        Self::from_vec(r, c, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<S>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        Self::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn from_i64(rows: usize, cols: usize, vals: &[i64]) -> Self {
        Self::from_vec(rows, cols, vals.iter().map(|&v| S::from_i64(v)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn block_diag(blocks: &[Matrix<S>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn rows(&self) -> usize { self.rows }
    pub fn cols(&self) -> usize { self.cols }
    pub fn is_square(&self) -> bool { self.rows == self.cols }
    pub fn data(&self) -> &[S] { &self.data }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<S> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|x| x.to_f64())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * s.clone()).collect() }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for c in 0..self.cols {
                    acc = acc + self[(r, c)].clone() * v[c].clone();
                }
                acc
            })
            .collect()
    }

    /// `xᵀ A y`.
    pub fn bilinear(&self, x: &[S], y: &[S]) -> S {
        dot(x, &self.mul_vec(y))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Largest absolute entry, as `f64`.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == S::zero())
    }

    pub fn symmetric_part(&self) -> Self {
        let half = S::from_ratio(1, 2);
        (self + &self.transpose()).scale(&half)
    }

    pub fn antisymmetric_part(&self) -> Self {
        let half = S::from_ratio(1, 2);
        (self - &self.transpose()).scale(&half)
    }

    fn pivot_in_column(&self, col: usize, from: usize, tol: f64) -> Option<usize> {
        if S::EXACT {
            return (from..self.rows).find(|&r| !self[(r, col)].negligible(tol));
        }
        let mut best: Option<(usize, f64)> = None;
        for r in from..self.rows {
            let v = self[(r, col)].to_f64().abs();
            if !self[(r, col)].negligible(tol) && best.is_none_or(|(_, b)| v > b) {
                best = Some((r, v));
            }
        }
        best.map(|(r, _)| r)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, tol: f64) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = m.pivot_in_column(col, row, tol) else { continue };
            m.swap_rows(row, p);
            let inv = S::one().checked_div(&m[(row, col)]).expect("nonzero pivot");
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)] == S::zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    let v = m[(row, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, tol: f64) -> usize {
        self.rref(tol).1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn nullspace(&self, tol: f64) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref(tol);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Solve `A X = B` for square nonsingular `A`.
    pub fn solve(&self, b: &Self, tol: f64) -> Option<Self> {
        assert!(self.is_square() && b.rows == self.rows);
        let n = self.rows;
        let aug = Self::from_fn(n, n + b.cols, |r, c| {
            if c < n { self[(r, c)].clone() } else { b[(r, c - n)].clone() }
        });
        let (red, pivots) = aug.rref(tol);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, b.cols, |r, c| red[(r, n + c)].clone()))
    }

    pub fn solve_vec(&self, b: &[S], tol: f64) -> Option<Vec<S>> {
        let bm = Self::from_columns(&[b.to_vec()]);
        self.solve(&bm, tol).map(|x| x.column(0))
    }

    pub fn inverse(&self, tol: f64) -> Option<Self> {
        self.solve(&Self::identity(self.rows), tol)
    }

    pub fn det(&self) -> S {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut det = S::one();
        for col in 0..m.cols {
            let Some(p) = m.pivot_in_column(col, col, 0.0) else { return S::zero() };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let piv = m[(col, col)].clone();
            det = det * piv.clone();
            for r in col + 1..m.rows {
                if m[(r, col)] == S::zero() {
                    continue;
                }
                let f = m[(r, col)].checked_div(&piv).expect("nonzero pivot");
                for c in col..m.cols {
                    let v = m[(col, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
                }
            }
        }
        det
    }

    /// Signature `(positive, negative, zero)` of a symmetric matrix by congruence diagonalization.
    pub fn inertia(&self, tol: f64) -> (usize, usize, usize) {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let (mut pos, mut neg) = (0, 0);
        let mut k = 0;
        while k < n {
            let diag = (k..n).find(|&i| !m[(i, i)].negligible(tol));
            let p = match diag {
                Some(p) => p,
                None => {
                    let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !m[(i, j)].negligible(tol));
                    let Some((i, j)) = off else { break };
                    // row_i += row_j, col_i += col_j makes the (i,i) entry 2 m_ij
                    for c in 0..n {
                        let v = m[(j, c)].clone();
                        m[(i, c)] = m[(i, c)].clone() + v;
                    }
                    for r in 0..n {
                        let v = m[(r, j)].clone();
                        m[(r, i)] = m[(r, i)].clone() + v;
                    }
                    i
                }
            };
            m.swap_rows(k, p);
            for r in 0..n {
                m.data.swap(r * n + k, r * n + p);
            }
            let piv = m[(k, k)].clone();
            if piv.to_f64() > 0.0 { pos += 1 } else { neg += 1 }
            for r in k + 1..n {
                if m[(r, k)] == S::zero() {
                    continue;
                }
                let f = m[(r, k)].checked_div(&piv).expect("nonzero pivot");
                for c in k..n {
                    let v = m[(k, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
                }
                for rr in k..n {
                    let v = m[(rr, k)].clone();
                    m[(rr, r)] = m[(rr, r)].clone() - f.clone() * v;
                }
            }
            k += 1;
        }
        (pos, neg, n - pos - neg)
    }
}

impl Matrix<f64> {
    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }

    pub fn from_nalgebra(m: &nalgebra::DMatrix<f64>) -> Self {
        Self::from_fn(m.nrows(), m.ncols(), |r, c| m[(r, c)])
    }
}

pub fn dot<S: Scalar>(x: &[S], y: &[S]) -> S {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

pub fn axpy<S: Scalar>(a: &S, x: &[S], y: &[S]) -> Vec<S> {
    x.iter().zip(y).map(|(xi, yi)| a.clone() * xi.clone() + yi.clone()).collect()
}

pub fn vec_sub<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    x.iter().zip(y).map(|(a, b)| a.clone() - b.clone()).collect()
}

pub fn vec_add<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect()
}

pub fn vec_scale<S: Scalar>(a: &S, x: &[S]) -> Vec<S> {
    x.iter().map(|v| a.clone() * v.clone()).collect()
}

pub fn vec_max_abs<S: Scalar>(x: &[S]) -> f64 {
    x.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max)
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::<S>::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if *a == S::zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out[(r, c)].clone() + a.clone() * rhs[(k, c)].clone();
                    out[(r, c)] = v;
                }
            }
        }
        out
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: vec_add(&self.data, &rhs.data) }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: vec_sub(&self.data, &rhs.data) }
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.map(|x| -x.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(v: &[i64], n: usize) -> Matrix<Rational> {
        Matrix::from_i64(n, n, v)
    }

    #[test]
    fn det_and_inverse() {
        let a = q(&[2, 1, 0, 1, 3, 1, 0, 1, 4], 3);
        assert_eq!(a.det(), Rational::from_i64(18));
        let inv = a.inverse(0.0).unwrap();
        assert_eq!(&a * &inv, Matrix::identity(3));
    }

    #[test]
    fn singular_has_nullspace() {
        let a = q(&[1, 2, 2, 4], 2);
        assert_eq!(a.rank(0.0), 1);
        assert!(a.inverse(0.0).is_none());
        let k = a.nullspace(0.0);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| *x == Rational::from_i64(0)));
    }

    #[test]
    fn inertia_of_hyperbolic_plane() {
        assert_eq!(q(&[0, 1, 1, 0], 2).inertia(0.0), (1, 1, 0));
        assert_eq!(q(&[1, 0, 0, 0, -1, 0, 0, 0, 0], 3).inertia(0.0), (1, 1, 1));
        let g = Matrix::<f64>::from_i64(4, 4, &[0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0]);
        assert_eq!(g.inertia(1e-12), (2, 2, 0));
    }
}
