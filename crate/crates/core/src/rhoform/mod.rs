//! Maps `ρ: V → so(V)` with `ρ(v)v = 0`, their alternating-form avatars,
//! generators by dimension and the isomorphism condition between them.

mod form;
mod generate;
mod iso;

pub use form::{dim4_radical_witness, from_form, radical, to_form, AltTrilinearForm};
pub use generate::{
    constraint_space, generate, generate_with, nonexistence_certificate, primitive, primitive3, primitive5,
    primitive7, r_block, Generated, NonexistenceCertificate,
};
pub use iso::{check_t2_condition, gram_transpose, search_iso_small};

use crate::error::{Error, Result};
use crate::exactla::{BilinearSpace, Mat, Scalar, SubspaceBasis};
use num_traits::Zero;

/// `A^i = ρ(e_i)` for an inner product space `V`; `A^i e_j` is column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RhoMap {
    space: BilinearSpace,
    mats: Vec<Mat>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RhoReport {
    pub skew: bool,
    pub ss: bool,
    pub injective: bool,
    /// Indices `i` with `(A^i)ᵀG + GA^i ≠ 0`.
    pub skew_violations: Vec<usize>,
    /// Pairs `i ≤ j` with `A^i e_j + A^j e_i ≠ 0`.
    pub ss_violations: Vec<(usize, usize)>,
}

impl RhoReport {
    pub fn is_valid(&self) -> bool {
        self.skew && self.ss && self.injective
    }
}

impl RhoMap {
    /// Checks shapes and positivity of the inner product; the algebraic
    /// conditions are left to [`RhoMap::validate`].
    pub fn new(space: BilinearSpace, mats: Vec<Mat>) -> Result<Self> {
        let n = space.dim();
        if mats.len() != n {
            return Err(Error::InvalidRho(format!("expected {n} matrices, found {}", mats.len())));
        }
        if let Some(m) = mats.iter().find(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::InvalidRho(format!("matrix of shape {}x{} in dimension {n}", m.rows(), m.cols())));
        }
        if !space.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Self { space, mats })
    }

    pub fn euclidean(mats: Vec<Mat>) -> Result<Self> {
        let n = mats.len();
        Self::new(BilinearSpace::euclidean(n), mats)
    }

    pub fn empty() -> Self {
        Self { space: BilinearSpace::euclidean(0), mats: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &BilinearSpace {
        &self.space
    }

    pub fn gram(&self) -> &Mat {
        self.space.gram()
    }

    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    /// `ρ(v) = Σ v_i A^i`
    pub fn apply(&self, v: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for (vi, a) in v.iter().zip(&self.mats) {
            if !vi.is_zero() {
                m = &m + &a.scale(vi);
            }
        }
        m
    }

    /// `v ↦ s·ρ(v)`
    pub fn scaled(&self, s: &Scalar) -> RhoMap {
        RhoMap { space: self.space.clone(), mats: self.mats.iter().map(|m| m.scale(s)).collect() }
    }

    /// `{v : ρ(v) = 0}`
    pub fn radical(&self) -> SubspaceBasis {
        let n = self.dim();
        if n == 0 {
            return SubspaceBasis::zero(0);
        }
        let m = Mat::from_fn(n * n, n, |r, i| self.mats[i].get(r / n, r % n).clone());
        SubspaceBasis::span(n, &m.kernel()).expect("ambient dimensions agree")
    }

    pub fn validate(&self) -> RhoReport {
        let n = self.dim();
        let g = self.gram();
        let skew_violations: Vec<usize> = (0..n)
            .filter(|&i| !(&(&self.mats[i].transpose() * g) + &(g * &self.mats[i])).is_zero())
            .collect();
        let mut ss_violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                let ok = (0..n).all(|r| (self.mats[i].get(r, j) + self.mats[j].get(r, i)).is_zero());
                if !ok {
                    ss_violations.push((i, j));
                }
            }
        }
        RhoReport {
            skew: skew_violations.is_empty(),
            ss: ss_violations.is_empty(),
            injective: self.radical().is_zero(),
            skew_violations,
            ss_violations,
        }
    }

    pub fn require_valid(&self) -> Result<()> {
        let r = self.validate();
        if r.is_valid() {
            return Ok(());
        }
        let mut why = Vec::new();
        if !r.skew {
            why.push(format!("not skew at {:?}", r.skew_violations));
        }
        if !r.ss {
            why.push(format!("ρ(v)v ≠ 0 at pairs {:?}", r.ss_violations));
        }
        if !r.injective {
            why.push("not injective".to_string());
        }
        Err(Error::InvalidRho(why.join("; ")))
    }

    /// Block-diagonal sum, `self` on the first coordinates.
    pub fn direct_sum(&self, other: &RhoMap) -> RhoMap {
        let (n1, n2) = (self.dim(), other.dim());
        let z1 = Mat::zeros(n1, n1);
        let z2 = Mat::zeros(n2, n2);
        let mats = self
            .mats
            .iter()
            .map(|a| Mat::block_diag(a, &z2))
            .chain(other.mats.iter().map(|b| Mat::block_diag(&z1, b)))
            .collect();
        let gram = Mat::block_diag(self.gram(), other.gram());
        RhoMap { space: BilinearSpace::new(gram).expect("block sum of symmetric grams"), mats }
    }
}

pub fn validate_rho(rho: &RhoMap) -> RhoReport {
    rho.validate()
}

pub fn direct_sum_rho(a: &RhoMap, b: &RhoMap) -> RhoMap {
    a.direct_sum(b)
}
