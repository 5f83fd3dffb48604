use crate::error::{Error, Result};
use crate::exactla::{hyperbolic_space, BilinearSpace, Mat, Scalar};
use crate::liealg::{LieAlgebra, MetricLieAlgebra};
use crate::rhoform::RhoMap;
use num_traits::Zero;

/// `𝔫(V, ρ)` on the basis `(z₁, …, zₙ, v₁, …, vₙ)` with hyperbolic metric
/// `[[0, I], [I, 0]]` and `[v_j, v_k] = Σ_i ⟨A^i e_j, e_k⟩_G z_i`.
pub fn modified_cotangent(rho: &RhoMap) -> Result<MetricLieAlgebra> {
    rho.require_valid()?;
    let n = rho.dim();
    let g = rho.gram();
    let ga: Vec<Mat> = rho.mats().iter().map(|a| g * a).collect();
    let mut l = LieAlgebra::abelian(2 * n);
    for j in 0..n {
        for k in j + 1..n {
            let mut v = vec![Scalar::zero(); 2 * n];
            for (i, m) in ga.iter().enumerate() {
                v[i] = m.get(k, j).clone();
            }
            l.set_bracket(n + j, n + k, v)?;
        }
    }
    let labels = (1..=n).map(|i| format!("z{i}")).chain((1..=n).map(|i| format!("v{i}"))).collect();
    let l = l.with_labels(labels)?;
    MetricLieAlgebra::new(l, hyperbolic_space(n))
}

/// `𝔥* ⋊ 𝔥` on the basis `(φ₁, …, φₙ, x₁, …, xₙ)`, where `φ_a` is dual to
/// `x_a`, `x·φ = −φ ∘ ad_x`, and `⟨φ_a, x_b⟩ = δ_ab`.
pub fn cotangent(h: &LieAlgebra) -> Result<MetricLieAlgebra> {
    let n = h.dim();
    let mut l = LieAlgebra::abelian(2 * n);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![Scalar::zero(); 2 * n];
            for (k, c) in h.sparse_bracket(i, j) {
                v[n + k] = c.clone();
            }
            l.set_bracket(n + i, n + j, v)?;
        }
        for a in 0..n {
            // [x_i, φ_a] = −Σ_b c^a_ib φ_b
            let mut v = vec![Scalar::zero(); 2 * n];
            for (b, slot) in v.iter_mut().enumerate().take(n) {
                *slot = -h.structure_constant(i, b, a);
            }
            l.set_bracket(n + i, a, v)?;
        }
    }
    MetricLieAlgebra::new(l, hyperbolic_space(n))
}

/// `(ℝᵐ, gram_m) ⊕ M`, the abelian factor first.
pub fn add_central_factor(m: &MetricLieAlgebra, dim: usize, gram_m: &Mat) -> Result<MetricLieAlgebra> {
    if gram_m.rows() != dim || gram_m.cols() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: gram_m.rows() });
    }
    let space = BilinearSpace::new(gram_m.clone()).map_err(|_| Error::DegenerateGram)?;
    if !space.is_nondegenerate() {
        return Err(Error::DegenerateGram);
    }
    let factor = MetricLieAlgebra::new(LieAlgebra::abelian(dim), space)?;
    Ok(factor.direct_sum(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, vector};
    use crate::liealg::series;
    use crate::rhoform::primitive3;

    #[test]
    fn three_dimensional_brackets() {
        let m = modified_cotangent(&primitive3(&int(1)).unwrap()).unwrap();
        let l = m.algebra();
        assert_eq!(l.bracket_basis(3, 4), vector::neg(&vector::unit(6, 2)));
        assert_eq!(l.bracket_basis(4, 5), vector::neg(&vector::unit(6, 0)));
        assert_eq!(l.bracket_basis(3, 5), vector::unit(6, 1));
        assert!(l.is_valid());
        assert!(m.is_ad_invariant());
        assert_eq!(m.metric().signature().pair(), (3, 3));
        let s = series(l);
        assert!(s.is_two_step());
        assert_eq!(s.corank, Some(0));
    }

    #[test]
    fn degenerate_rho_rejected() {
        let zero = RhoMap::euclidean(vec![Mat::zeros(3, 3); 3]).unwrap();
        assert!(matches!(modified_cotangent(&zero), Err(Error::InvalidRho(_))));
    }

    #[test]
    fn cotangent_of_heisenberg() {
        let h3 = LieAlgebra::abelian(3).with_bracket(0, 1, vector::unit(3, 2)).unwrap();
        let c = cotangent(&h3).unwrap();
        assert!(c.algebra().is_valid());
        assert!(c.is_ad_invariant());
        assert!(series(c.algebra()).is_two_step());
    }

    #[test]
    fn cotangent_of_abelian_is_abelian() {
        let c = cotangent(&LieAlgebra::abelian(2)).unwrap();
        assert!(c.algebra().is_abelian());
        assert_eq!(c.gram(), hyperbolic_space(2).gram());
    }

    #[test]
    fn central_factor_signature() {
        let m = modified_cotangent(&primitive3(&int(1)).unwrap()).unwrap();
        let e = add_central_factor(&m, 1, &Mat::from_ints(&[[-1]])).unwrap();
        assert_eq!(e.metric().signature().pair(), (3, 4));
        assert_eq!(series(e.algebra()).corank, Some(1));
        assert_eq!(add_central_factor(&m, 0, &Mat::zeros(0, 0)).unwrap(), m);
        assert_eq!(add_central_factor(&m, 1, &Mat::zeros(1, 1)), Err(Error::DegenerateGram));
    }
}
