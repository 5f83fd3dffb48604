use super::RhoMap;
use crate::error::{Error, Result};
use crate::exactla::{BilinearSpace, Mat, Scalar, SubspaceBasis};
use num_traits::Zero;

/// A totally antisymmetric 3-tensor on `Q^n`, stored by its components
/// `ω(i, j, k)` with `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AltTrilinearForm {
    dim: usize,
    comps: Vec<Scalar>,
}

fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    // triples (a, b, c) with a < i come first, then b < j, then c < k
    let before_i: usize = (0..i).map(|a| (n - a - 1) * (n - a - 2) / 2).sum();
    let before_j: usize = (i + 1..j).map(|b| n - b - 1).sum();
    before_i + before_j + (k - j - 1)
}

/// Sorts three distinct indices and returns the permutation sign.
fn sort3(i: usize, j: usize, k: usize) -> Option<(usize, usize, usize, bool)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut positive = true;
    for a in 0..3 {
        for b in 0..2 - a {
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                positive = !positive;
            }
        }
    }
    Some((v[0], v[1], v[2], positive))
}

impl AltTrilinearForm {
    pub fn zero(dim: usize) -> Self {
        Self { dim, comps: vec![Scalar::zero(); triple_count(dim)] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `ω(i, j, k)` for arbitrary indices, using total antisymmetry.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        match sort3(i, j, k) {
            None => Scalar::zero(),
            Some((a, b, c, positive)) => {
                let v = &self.comps[triple_index(self.dim, a, b, c)];
                if positive {
                    v.clone()
                } else {
                    -v
                }
            }
        }
    }

    /// Sets `ω(i, j, k) = value` together with all its permutations.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let (a, b, c, positive) = sort3(i, j, k).expect("indices of an alternating form must be distinct");
        self.comps[triple_index(self.dim, a, b, c)] = if positive { value } else { -value };
    }

    /// Nonzero components `((i, j, k), ω(i, j, k))` with `i < j < k`.
    pub fn components(&self) -> Vec<((usize, usize, usize), Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let v = &self.comps[triple_index(n, i, j, k)];
                    if !v.is_zero() {
                        out.push(((i, j, k), v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }

    /// Reads a form from a full tensor, rejecting it at the first index
    /// triple where total antisymmetry fails.
    pub fn from_tensor(dim: usize, t: impl Fn(usize, usize, usize) -> Scalar) -> Result<Self> {
        let mut w = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = t(i, j, k);
                    let expected = w.get_or_record(i, j, k, &v);
                    if expected != v {
                        return Err(Error::NotAlternating((i, j, k)));
                    }
                }
            }
        }
        Ok(w)
    }

    fn get_or_record(&mut self, i: usize, j: usize, k: usize, v: &Scalar) -> Scalar {
        match sort3(i, j, k) {
            None => Scalar::zero(),
            Some((a, b, c, positive)) => {
                if (a, b, c) == (i, j, k) {
                    self.comps[triple_index(self.dim, a, b, c)] = v.clone();
                    return v.clone();
                }
                let stored = &self.comps[triple_index(self.dim, a, b, c)];
                if positive {
                    stored.clone()
                } else {
                    -stored
                }
            }
        }
    }

    /// `ω₁ ⊕ ω₂` on `Q^{n₁ + n₂}`, with `ω₁` on the first coordinates.
    pub fn direct_sum(&self, other: &AltTrilinearForm) -> AltTrilinearForm {
        let mut w = Self::zero(self.dim + other.dim);
        for ((i, j, k), v) in self.components() {
            w.set(i, j, k, v);
        }
        for ((i, j, k), v) in other.components() {
            w.set(self.dim + i, self.dim + j, self.dim + k, v);
        }
        w
    }
}

/// `ω(i, j, k) = a^i_jk = ⟨A^i e_j, e_k⟩_G`, that is `(G A^i)_{kj}`.
/// Requires `ρ` to be skew and to satisfy `ρ(v)v = 0`.
pub fn to_form(rho: &RhoMap) -> Result<AltTrilinearForm> {
    let report = rho.validate();
    if !report.skew || !report.ss {
        return Err(Error::InvalidRho("to_form needs a skew map with ρ(v)v = 0".into()));
    }
    let g = rho.gram();
    let ga: Vec<Mat> = rho.mats().iter().map(|a| g * a).collect();
    AltTrilinearForm::from_tensor(rho.dim(), |i, j, k| ga[i].get(k, j).clone())
}

/// The map with `⟨A^i e_j, e_k⟩_G = ω(i, j, k)`, i.e. `A^i = G⁻¹ W^i` where
/// `W^i_{kj} = ω(i, j, k)`. Skewness and `ρ(v)v = 0` hold automatically;
/// injectivity holds iff the radical of `ω` is zero.
pub fn from_form(w: &AltTrilinearForm, gram: &Mat) -> Result<RhoMap> {
    let n = w.dim();
    let space = BilinearSpace::new(gram.clone())?;
    if space.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: space.dim() });
    }
    if !space.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let g_inv = gram.inverse().ok_or(Error::DegenerateGram)?;
    let mats = (0..n).map(|i| &g_inv * &Mat::from_fn(n, n, |k, j| w.get(i, j, k))).collect();
    RhoMap::new(space, mats)
}

/// `{x : ω(x, ·, ·) = 0}`, the kernel of `x ↦ ρ(x)` for the map built from `ω`.
pub fn radical(w: &AltTrilinearForm) -> SubspaceBasis {
    let n = w.dim();
    if n == 0 {
        return SubspaceBasis::zero(0);
    }
    // row (k, j), column i: ω(i, j, k)
    let m = Mat::from_fn(n * n, n, |r, i| w.get(i, r % n, r / n));
    SubspaceBasis::span(n, &m.kernel()).expect("ambient dimensions agree")
}

/// For `n = 4`, the vector `(ω₂₃₄, −ω₁₃₄, ω₁₂₄, −ω₁₂₃)` (1-based labels),
/// which always lies in the radical.
pub fn dim4_radical_witness(w: &AltTrilinearForm) -> Vec<Scalar> {
    assert_eq!(w.dim(), 4, "the witness rule is specific to dimension four");
    vec![w.get(1, 2, 3), -w.get(0, 2, 3), w.get(0, 1, 3), -w.get(0, 1, 2)]
}
