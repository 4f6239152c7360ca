//! Seeded random generators for exact and floating samples.

use crate::algebra::SplitQuaternion;
use crate::linalg::{PQMatrix, PQVector};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for item `index` of a run seeded by `seed`.
pub fn substream(seed: u64, index: u64) -> SampleRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

/// Small rational `p/q` with `|p| <= 9`, `1 <= q <= 6`; in floating mode a uniform value in `[-2, 2]`.
pub fn scalar<S: Scalar>(r: &mut SampleRng) -> S {
    if S::EXACT {
        S::from_ratio(r.random_range(-9..=9), r.random_range(1..=6))
    } else {
        S::from_f64_lossy(r.random_range(-2.0..2.0))
    }
}

pub fn quaternion<S: Scalar>(r: &mut SampleRng) -> SplitQuaternion<S> {
    SplitQuaternion::new(scalar(r), scalar(r), scalar(r), scalar(r))
}

pub fn imaginary<S: Scalar>(r: &mut SampleRng) -> SplitQuaternion<S> {
    SplitQuaternion::new(S::zero(), scalar(r), scalar(r), scalar(r))
}

pub fn pq_vector<S: Scalar>(r: &mut SampleRng, n: usize) -> PQVector<S> {
    PQVector::new((0..n).map(|_| quaternion(r)).collect())
}

pub fn pq_matrix<S: Scalar>(r: &mut SampleRng, n: usize) -> PQMatrix<S> {
    PQMatrix::from_fn(n, |_, _| quaternion(r))
}

/// `A - A†`, a member of `sp_n(H̃)`.
pub fn skew_hermitian<S: Scalar>(r: &mut SampleRng, n: usize) -> PQMatrix<S> {
    let a = pq_matrix::<S>(r, n);
    a.sub(&a.dagger())
}

pub fn matrix<S: Scalar>(r: &mut SampleRng, rows: usize, cols: usize) -> Matrix<S> {
    Matrix::from_fn(rows, cols, |_, _| scalar(r))
}

pub fn vector<S: Scalar>(r: &mut SampleRng, len: usize) -> Vec<S> {
    (0..len).map(|_| scalar(r)).collect()
}

/// Random invertible matrix (retries on singular draws).
pub fn invertible<S: Scalar>(r: &mut SampleRng, n: usize) -> Matrix<S> {
    loop {
        let m = matrix::<S>(r, n, n);
        if m.rank(1e-9) == n {
            return m;
        }
    }
}

pub fn normal(r: &mut SampleRng) -> f64 {
    r.sample(StandardNormal)
}

pub fn normal_vec(r: &mut SampleRng, len: usize) -> Vec<f64> {
    (0..len).map(|_| normal(r)).collect()
}
