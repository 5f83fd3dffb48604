use super::mat::{echelon_basis, Mat};
use super::scalar::Scalar;
use super::vector;
use crate::error::{Error, Result};

/// A linear subspace of `Q^ambient_dim`, stored by its canonical reduced
/// echelon basis. Two subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Scalar>>,
}

impl SubspaceBasis {
    /// The span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
        Ok(Self { ambient_dim, vectors: echelon_basis(ambient_dim, vectors) })
    }

    /// Like [`SubspaceBasis::span`] but rejects dependent input.
    pub fn from_independent(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let s = Self::span(ambient_dim, vectors)?;
        if s.dim() != vectors.len() {
            return Err(Error::ShapeMismatch("vectors are linearly dependent".into()));
        }
        Ok(s)
    }

    pub(crate) fn from_echelon_unchecked(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        Self { ambient_dim, vectors }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, vectors: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, vectors: (0..ambient_dim).map(|i| vector::unit(ambient_dim, i)).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    /// Basis vectors as the rows of a matrix.
    pub fn as_rows(&self) -> Mat {
        if self.vectors.is_empty() {
            return Mat::zeros(0, self.ambient_dim);
        }
        Mat::from_rows(self.vectors.clone())
    }

    /// Basis vectors as the columns of a matrix.
    pub fn as_columns(&self) -> Mat {
        Mat::from_columns(self.ambient_dim, &self.vectors)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut all = self.vectors.clone();
        all.push(v.to_vec());
        echelon_basis(self.ambient_dim, &all).len() == self.dim()
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        Self { ambient_dim: self.ambient_dim, vectors: echelon_basis(self.ambient_dim, &all) }
    }

    pub fn intersection(&self, other: &SubspaceBasis) -> SubspaceBasis {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient_dim);
        }
        // a·self - b·other = 0
        let k = self.dim();
        let mut cols: Vec<Vec<Scalar>> = self.vectors.clone();
        cols.extend(other.vectors.iter().map(|v| vector::neg(v)));
        let system = Mat::from_columns(self.ambient_dim, &cols);
        let combos: Vec<Vec<Scalar>> = system
            .kernel()
            .into_iter()
            .map(|coeffs| vector::combination(&coeffs[..k], &self.vectors, self.ambient_dim))
            .collect();
        Self { ambient_dim: self.ambient_dim, vectors: echelon_basis(self.ambient_dim, &combos) }
    }

    /// Vectors `f` with `f · w = 0` for every `w` in the subspace.
    pub fn annihilator(&self) -> SubspaceBasis {
        if self.is_zero() {
            return Self::full(self.ambient_dim);
        }
        Self { ambient_dim: self.ambient_dim, vectors: self.as_rows().kernel() }
    }

    /// Vectors of `within`'s basis that complete `self` to a basis of
    /// `self + within`, picked greedily in basis order.
    pub fn complement_in(&self, within: &SubspaceBasis) -> SubspaceBasis {
        let mut current = self.clone();
        let mut picked = Vec::new();
        for v in &within.vectors {
            if !current.contains(v) {
                current = current.sum(&Self { ambient_dim: self.ambient_dim, vectors: vec![v.clone()] });
                picked.push(v.clone());
            }
        }
        Self { ambient_dim: self.ambient_dim, vectors: echelon_basis(self.ambient_dim, &picked) }
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.is_zero() {
            return vector::is_zero(v).then(Vec::new);
        }
        let a = self.as_columns();
        super::solve::solve_linear(&a, v).ok().map(|s| s.particular)
    }
}
