use super::cotangent::{add_central_factor, modified_cotangent};
use crate::error::{Error, Result};
use crate::exactla::{vector, Mat, Scalar, SubspaceBasis};
use crate::liealg::{series, verify_isometric_isomorphism, MetricLieAlgebra, SeriesReport};
use crate::rhoform::RhoMap;
use num_traits::Zero;

/// A non-degenerate central complement `z̃` of `C¹` in `𝔷` and its
/// orthogonal complement, which is an ideal of corank zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSplit {
    pub z_tilde: SubspaceBasis,
    pub perp: SubspaceBasis,
    /// The ideal `z̃^⊥` in the coordinates of `perp`'s basis.
    pub perp_algebra: MetricLieAlgebra,
}

fn two_step_series(m: &MetricLieAlgebra) -> Result<SeriesReport> {
    let s = series(m.algebra());
    if !s.is_at_most_two_step() {
        return Err(Error::NotTwoStep);
    }
    m.require_ad_invariant()?;
    Ok(s)
}

pub fn split_center(m: &MetricLieAlgebra) -> Result<CenterSplit> {
    let s = two_step_series(m)?;
    // C¹ = 𝔷^⊥ is the radical of the form restricted to 𝔷, so any
    // complement of C¹ inside 𝔷 is non-degenerate.
    let z_tilde = s.commutator.complement_in(&s.center);
    let perp = m.metric().orthogonal_complement(&z_tilde)?;
    let algebra = m.algebra().restrict(perp.vectors())?;
    let perp_algebra = MetricLieAlgebra::new(algebra, m.metric().restrict(perp.vectors()))?;
    Ok(CenterSplit { z_tilde, perp, perp_algebra })
}

/// `M ≅ (ℝᵐ, central_gram) ⊕ 𝔫(V, ρ)` via the isometric isomorphism `iso`
/// from `M` to `model`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormResult {
    pub corank: usize,
    pub central_gram: Mat,
    pub rho: RhoMap,
    pub iso: Mat,
    pub model: MetricLieAlgebra,
}

pub fn normal_form(m: &MetricLieAlgebra) -> Result<NormalFormResult> {
    let split = split_center(m)?;
    let n = m.dim();
    let corank = split.z_tilde.dim();
    let s = series(m.algebra());

    // dual bases z_i ∈ C¹, v_j ∈ perp with ⟨z_i, v_j⟩ = δ_ij and ⟨v, v⟩ = 0,
    // computed inside perp so that V avoids the central complement
    let perp_vectors = split.perp.vectors();
    let perp_metric = m.metric().restrict(perp_vectors);
    let coords = |v: &[Scalar]| split.perp.coordinates(v).expect("C¹ lies in the complement of z̃");
    let c1_local: Vec<Vec<Scalar>> = s.commutator.vectors().iter().map(|v| coords(v)).collect();
    let c1_local = SubspaceBasis::span(perp_vectors.len(), &c1_local)?;
    let pairing = perp_metric.hyperbolic_pairing(&c1_local)?;
    let to_ambient = |c: &Vec<Scalar>| vector::combination(c, perp_vectors, n);
    let zs: Vec<Vec<Scalar>> = pairing.isotropic.iter().map(to_ambient).collect();
    let vs: Vec<Vec<Scalar>> = pairing.dual.iter().map(to_ambient).collect();
    let k = vs.len();

    // (A^i)_{kj} = ⟨[v_j, v_k], v_i⟩
    let metric = m.metric();
    let mut brackets = vec![vec![vec![Scalar::zero(); k]; k]; k];
    for j in 0..k {
        for l in j + 1..k {
            let b = m.algebra().bracket(&vs[j], &vs[l]);
            for (i, v) in vs.iter().enumerate() {
                let c = metric.pair(&b, v);
                brackets[i][l][j] = c.clone();
                brackets[i][j][l] = -c;
            }
        }
    }
    let mats = brackets.iter().map(|a| Mat::from_fn(k, k, |r, c| a[r][c].clone())).collect();
    let rho = RhoMap::euclidean(mats)?;

    let central_gram = metric.restrict(split.z_tilde.vectors()).into_gram();
    let model = add_central_factor(&modified_cotangent(&rho)?, corank, &central_gram)?;
    let mut cols: Vec<Vec<Scalar>> = split.z_tilde.vectors().to_vec();
    cols.extend(zs);
    cols.extend(vs);
    let q = Mat::from_columns(n, &cols);
    let iso = q.inverse().ok_or(Error::Singular)?;
    if !verify_isometric_isomorphism(m, &model, &iso)? {
        return Err(Error::NotEligible("normal form map is not an isometric isomorphism".into()));
    }
    Ok(NormalFormResult { corank, central_gram, rho, iso, model })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, BilinearSpace};
    use crate::liealg::LieAlgebra;
    use crate::rhoform::{primitive3, primitive5};

    #[test]
    fn corank_zero_model_round_trip() {
        let m = modified_cotangent(&primitive3(&int(1)).unwrap()).unwrap();
        let nf = normal_form(&m).unwrap();
        assert_eq!(nf.corank, 0);
        assert!(nf.rho.validate().is_valid());
        assert!(verify_isometric_isomorphism(&m, &nf.model, &nf.iso).unwrap());
    }

    #[test]
    fn central_factor_is_recovered() {
        let base = modified_cotangent(&primitive5()).unwrap();
        let m = add_central_factor(&base, 2, &Mat::identity(2)).unwrap();
        let nf = normal_form(&m).unwrap();
        assert_eq!(nf.corank, 2);
        assert_eq!(nf.rho.dim(), 5);
    }

    #[test]
    fn abelian_is_all_center() {
        let m = MetricLieAlgebra::new(LieAlgebra::abelian(3), BilinearSpace::euclidean(3)).unwrap();
        let nf = normal_form(&m).unwrap();
        assert_eq!(nf.corank, 3);
        assert_eq!(nf.rho.dim(), 0);
        let split = split_center(&m).unwrap();
        assert_eq!(split.z_tilde.dim(), 3);
        assert!(split.perp.is_zero());
    }

    #[test]
    fn non_invariant_metric_rejected() {
        let h3 = LieAlgebra::abelian(3).with_bracket(0, 1, vector::unit(3, 2)).unwrap();
        let m = MetricLieAlgebra::new(h3, BilinearSpace::euclidean(3)).unwrap();
        assert!(matches!(normal_form(&m), Err(Error::NotAdInvariant(_))));
    }
}
