use super::mat::Mat;
use super::scalar::{frac, Scalar};
use super::subspace::SubspaceBasis;
use super::vector;
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};

/// A vector space `Q^dim` with a symmetric bilinear form given by its Gram
/// matrix. The form may be degenerate; metric operations check for that.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearSpace {
    gram: Mat,
}

/// Inertia of a symmetric form: positive, negative and zero diagonal counts
/// after congruence diagonalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_degenerate(&self) -> bool {
        self.zero > 0
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.positive, self.negative)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceKind {
    /// `W ∩ W^⊥ = 0`
    Nondegenerate,
    /// `W ⊊ W^⊥`
    Isotropic,
    /// `W = W^⊥`
    TotallyIsotropic,
    DegenerateOther,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplementFlavor {
    Isotropic,
    Positive,
}

/// Bases `u_i`, `w_j` with `⟨u_i, w_j⟩ = δ_ij` and both spans totally isotropic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicPairing {
    pub isotropic: Vec<Vec<Scalar>>,
    pub dual: Vec<Vec<Scalar>>,
}

impl BilinearSpace {
    pub fn new(gram: Mat) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self { gram })
    }

    /// Like [`BilinearSpace::new`] but also rejects degenerate forms.
    pub fn metric(gram: Mat) -> Result<Self> {
        let s = Self::new(gram)?;
        if !s.is_nondegenerate() {
            return Err(Error::DegenerateMetric);
        }
        Ok(s)
    }

    pub fn euclidean(n: usize) -> Self {
        Self { gram: Mat::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn into_gram(self) -> Mat {
        self.gram
    }

    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        vector::dot(x, &self.gram.mul_vec(y))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.is_invertible()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature().positive == self.dim()
    }

    /// Gram matrix of the restriction to the span of `basis` (in that basis).
    pub fn restrict(&self, basis: &[Vec<Scalar>]) -> BilinearSpace {
        let gram = Mat::from_fn(basis.len(), basis.len(), |i, j| self.pair(&basis[i], &basis[j]));
        BilinearSpace { gram }
    }

    /// Counts signs after symmetric Gaussian elimination over the rationals.
    /// A zero pivot is repaired first by swapping in a later nonzero diagonal
    /// entry, otherwise by the substitution `x_k → x_k + x_j`.
    pub fn signature(&self) -> Signature {
        let n = self.dim();
        let mut a = self.gram.clone();
        let mut sig = Signature { positive: 0, negative: 0, zero: 0 };
        for k in 0..n {
            if a.get(k, k).is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                    swap_sym(&mut a, k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                    add_sym(&mut a, k, j);
                }
            }
            let pivot = a.get(k, k).clone();
            if pivot.is_zero() {
                sig.zero += 1;
                continue;
            }
            for i in k + 1..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k) / &pivot;
                for c in k..n {
                    let v = a.get(i, c) - &f * a.get(k, c);
                    a.set(i, c, v);
                }
                for r in k..n {
                    let v = a.get(r, i) - &f * a.get(r, k);
                    a.set(r, i, v);
                }
            }
            if pivot.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
        }
        sig
    }

    pub fn orthogonal_complement(&self, w: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_ambient(w)?;
        if w.is_zero() {
            return Ok(SubspaceBasis::full(self.dim()));
        }
        let constraints = &w.as_rows() * &self.gram;
        Ok(SubspaceBasis::from_echelon_unchecked(self.dim(), constraints.kernel()))
    }

    pub fn classify_subspace(&self, w: &SubspaceBasis) -> Result<SubspaceKind> {
        let perp = self.orthogonal_complement(w)?;
        if w.intersection(&perp).is_zero() {
            return Ok(SubspaceKind::Nondegenerate);
        }
        Ok(if perp.contains_subspace(w) {
            if *w == perp {
                SubspaceKind::TotallyIsotropic
            } else {
                SubspaceKind::Isotropic
            }
        } else {
            SubspaceKind::DegenerateOther
        })
    }

    /// For a totally isotropic `u` in a non-degenerate space, returns the
    /// echelon basis of `u` together with a dual totally isotropic family.
    /// The complement is seeded from `u`'s non-pivot standard basis vectors.
    pub fn hyperbolic_pairing(&self, u: &SubspaceBasis) -> Result<HyperbolicPairing> {
        self.check_ambient(u)?;
        if !self.is_nondegenerate() {
            return Err(Error::NoSuchComplement);
        }
        if self.classify_subspace(u)? != SubspaceKind::TotallyIsotropic && !u.is_zero() {
            return Err(Error::NotTotallyIsotropic);
        }
        if u.is_zero() {
            if self.dim() == 0 {
                return Ok(HyperbolicPairing { isotropic: vec![], dual: vec![] });
            }
            return Err(Error::NotTotallyIsotropic);
        }
        let n = self.dim();
        let seed = u.complement_in(&SubspaceBasis::full(n));
        let seeds = seed.vectors();
        // pairing p_ij = <u_i, s_j> is invertible because u = u^⊥.
        let p = Mat::from_fn(u.dim(), seeds.len(), |i, j| self.pair(&u.vectors()[i], &seeds[j]));
        let p_inv = p.inverse().ok_or(Error::NoSuchComplement)?;
        // w_j = Σ_l s_l (p^{-1})_{lj} so that <u_i, w_j> = δ_ij
        let w: Vec<Vec<Scalar>> = (0..seeds.len())
            .map(|j| vector::combination(&p_inv.column(j), seeds, n))
            .collect();
        let half = frac(1, 2);
        let dual: Vec<Vec<Scalar>> = (0..w.len())
            .map(|j| {
                let mut v = w[j].clone();
                for (i, ui) in u.vectors().iter().enumerate() {
                    let g = self.pair(&w[i], &w[j]);
                    vector::axpy(&mut v, &-(&half * g), ui);
                }
                v
            })
            .collect();
        Ok(HyperbolicPairing { isotropic: u.vectors().to_vec(), dual })
    }

    /// A complement `W` of the totally isotropic subspace `u` that is either
    /// totally isotropic or positive definite.
    pub fn witt_complement(&self, u: &SubspaceBasis, flavor: ComplementFlavor) -> Result<SubspaceBasis> {
        let pairing = self.hyperbolic_pairing(u)?;
        let n = self.dim();
        let vectors: Vec<Vec<Scalar>> = match flavor {
            ComplementFlavor::Isotropic => pairing.dual,
            // <u_i + w_i, u_j + w_j> = 2 δ_ij
            ComplementFlavor::Positive => pairing
                .isotropic
                .iter()
                .zip(&pairing.dual)
                .map(|(a, b)| vector::add(a, b))
                .collect(),
        };
        SubspaceBasis::span(n, &vectors)
    }

    fn check_ambient(&self, w: &SubspaceBasis) -> Result<()> {
        if w.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: w.ambient_dim() });
        }
        Ok(())
    }
}

/// The split form `[[0, I_n], [I_n, 0]]` on `Q^{2n}`.
pub fn hyperbolic_space(n: usize) -> BilinearSpace {
    let mut g = Mat::zeros(2 * n, 2 * n);
    g.set_block(0, n, &Mat::identity(n));
    g.set_block(n, 0, &Mat::identity(n));
    BilinearSpace { gram: g }
}

fn swap_sym(a: &mut Mat, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let t = a.get(i, c).clone();
        a.set(i, c, a.get(j, c).clone());
        a.set(j, c, t);
    }
    for r in 0..n {
        let t = a.get(r, i).clone();
        a.set(r, i, a.get(r, j).clone());
        a.set(r, j, t);
    }
}

/// Congruence by `x_k ← x_k + x_j`: row k += row j, then column k += column j.
fn add_sym(a: &mut Mat, k: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a.get(k, c) + a.get(j, c);
        a.set(k, c, v);
    }
    for r in 0..n {
        let v = a.get(r, k) + a.get(r, j);
        a.set(r, k, v);
    }
}
