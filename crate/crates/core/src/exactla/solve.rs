use super::mat::Mat;
use super::scalar::Scalar;
use super::subspace::SubspaceBasis;
use super::vector;
use crate::error::{Error, Result};
use num_traits::Zero;

/// Solution set `particular + span(kernel)` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub kernel: SubspaceBasis,
}

/// Solves `a · x = b` exactly. The particular solution has zeros in every
/// free coordinate, so the result is deterministic.
pub fn solve_linear(a: &Mat, b: &[Scalar]) -> Result<AffineSolution> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let n = a.cols();
    let mut aug = Mat::zeros(a.rows(), n + 1);
    aug.set_block(0, 0, a);
    for (i, v) in b.iter().enumerate() {
        aug.set(i, n, v.clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Err(Error::Inconsistent);
    }
    let mut x = vector::zeros(n);
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, n).clone();
    }
    let kernel = SubspaceBasis::from_echelon_unchecked(n, a.kernel());
    debug_assert!(a.mul_vec(&x).iter().zip(b).all(|(l, r)| (l - r).is_zero()));
    Ok(AffineSolution { particular: x, kernel })
}
