use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{BilinearSpace, Mat, Scalar};
use num_traits::Zero;

/// A Lie algebra together with a non-degenerate symmetric bilinear form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    metric: BilinearSpace,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, metric: BilinearSpace) -> Result<Self> {
        if algebra.dim() != metric.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: metric.dim() });
        }
        if !metric.is_nondegenerate() {
            return Err(Error::DegenerateMetric);
        }
        Ok(Self { algebra, metric })
    }

    pub fn from_gram(algebra: LieAlgebra, gram: Mat) -> Result<Self> {
        Self::new(algebra, BilinearSpace::new(gram)?)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &BilinearSpace {
        &self.metric
    }

    pub fn gram(&self) -> &Mat {
        self.metric.gram()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn into_parts(self) -> (LieAlgebra, BilinearSpace) {
        (self.algebra, self.metric)
    }

    /// First basis triple `(i, j, k)` in lexicographic order with
    /// `⟨[e_i, e_j], e_k⟩ + ⟨e_j, [e_i, e_k]⟩ ≠ 0`.
    pub fn ad_invariance_violation(&self) -> Option<(usize, usize, usize)> {
        form_ad_invariance_violation(&self.algebra, self.gram())
    }

    pub fn is_ad_invariant(&self) -> bool {
        self.ad_invariance_violation().is_none()
    }

    pub fn require_ad_invariant(&self) -> Result<()> {
        match self.ad_invariance_violation() {
            Some(t) => Err(Error::NotAdInvariant(t)),
            None => Ok(()),
        }
    }

    /// Orthogonal direct sum, `self` first.
    pub fn direct_sum(&self, other: &MetricLieAlgebra) -> MetricLieAlgebra {
        let algebra = self.algebra.direct_sum(&other.algebra);
        let gram = Mat::block_diag(self.gram(), other.gram());
        MetricLieAlgebra { algebra, metric: BilinearSpace::new(gram).expect("block sum of symmetric grams") }
    }

    /// Rewrites everything in the basis `f_i = P e_i`; the Gram matrix becomes `PᵀGP`.
    pub fn transport(&self, p: &Mat) -> Result<MetricLieAlgebra> {
        let algebra = self.algebra.transport(p)?;
        let gram = &(&p.transpose() * self.gram()) * p;
        MetricLieAlgebra::from_gram(algebra, gram)
    }
}

/// Ad-invariance check for an arbitrary symmetric form, degenerate or not.
pub fn form_ad_invariance_violation(l: &LieAlgebra, gram: &Mat) -> Option<(usize, usize, usize)> {
    let d = l.dim();
    for i in 0..d {
        // (G ad_i)_{kj} = ⟨[e_i, e_j], e_k⟩
        let g_ad = gram * &l.ad_basis(i);
        for j in 0..d {
            for k in 0..d {
                if !(g_ad.get(k, j) + g_ad.get(j, k)).is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// `φ[e_i, e_j] = [φ e_i, φ e_j]'` on all basis pairs, with `φ` invertible.
pub fn verify_isomorphism(l: &LieAlgebra, l2: &LieAlgebra, phi: &Mat) -> Result<bool> {
    if l.dim() != l2.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: l2.dim() });
    }
    if phi.rows() != l.dim() || phi.cols() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: phi.rows() });
    }
    if !phi.is_invertible() {
        return Ok(false);
    }
    let cols: Vec<Vec<Scalar>> = (0..l.dim()).map(|i| phi.column(i)).collect();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            if phi.mul_vec(&l.bracket_basis(i, j)) != l2.bracket(&cols[i], &cols[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lie isomorphism with `φᵀ G' φ = G`.
pub fn verify_isometric_isomorphism(m: &MetricLieAlgebra, m2: &MetricLieAlgebra, phi: &Mat) -> Result<bool> {
    if !verify_isomorphism(m.algebra(), m2.algebra(), phi)? {
        return Ok(false);
    }
    Ok(&(&phi.transpose() * m2.gram()) * phi == *m.gram())
}

/// The intertwiner `T: g → g*`, `T(x)(y) = ⟨x, y⟩`, returned as the Gram
/// matrix after checking `T ad_u T⁻¹ = −ad_uᵀ` for every basis vector `u`.
pub fn coadjoint_intertwiner(m: &MetricLieAlgebra) -> Result<Mat> {
    m.require_ad_invariant()?;
    let t = m.gram().clone();
    let t_inv = t.inverse().ok_or(Error::DegenerateMetric)?;
    for u in 0..m.dim() {
        let ad = m.algebra().ad_basis(u);
        let coad = -&ad.transpose();
        if &(&t * &ad) * &t_inv != coad {
            return Err(Error::NotAdInvariant((u, 0, 0)));
        }
    }
    Ok(t)
}
