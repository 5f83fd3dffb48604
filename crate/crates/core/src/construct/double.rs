use crate::error::{Error, Result};
use crate::exactla::{BilinearSpace, Mat, Scalar};
use crate::liealg::{is_derivation, is_skew_for, LieAlgebra, MetricLieAlgebra};
use crate::rhoform::{gram_transpose, RhoMap};
use num_traits::{One, Zero};

/// The double extension `ℝZ ⊕ 𝔟 ⊕ ℝT` of `b` by a skew derivation `S`, on the
/// basis `(Z, b₁, …, bₙ, T)`:
/// `[X, Y] = [X, Y]_𝔟 + ⟨SX, Y⟩ Z`, `[T, X] = SX`, `⟨Z, T⟩ = 1`.
pub fn double_extension(b: &MetricLieAlgebra, s: &Mat) -> Result<MetricLieAlgebra> {
    let n = b.dim();
    if s.rows() != n || s.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: s.rows() });
    }
    b.require_ad_invariant()?;
    if !is_derivation(b.algebra(), s) || !is_skew_for(b.gram(), s) {
        return Err(Error::NotSkewDerivation);
    }
    let d = n + 2;
    let t = n + 1;
    // ⟨S e_i, e_j⟩ = (SᵀG)_ij
    let phi = &s.transpose() * b.gram();
    let mut l = LieAlgebra::abelian(d);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![Scalar::zero(); d];
            for (k, c) in b.algebra().sparse_bracket(i, j) {
                v[k + 1] = c.clone();
            }
            v[0] = phi.get(i, j).clone();
            l.set_bracket(i + 1, j + 1, v)?;
        }
        let mut v = vec![Scalar::zero(); d];
        for k in 0..n {
            v[k + 1] = s.get(k, i).clone();
        }
        l.set_bracket(t, i + 1, v)?;
    }
    let inner: Vec<String> = match b.algebra().labels() {
        Some(ls) => ls.to_vec(),
        None => (0..n).map(|i| format!("e{i}")).collect(),
    };
    let labels = std::iter::once("Z".to_string()).chain(inner).chain(std::iter::once("T".to_string())).collect();
    let l = l.with_labels(labels)?;
    let mut g = Mat::zeros(d, d);
    g.set_block(1, 1, b.gram());
    g.set(0, t, Scalar::one());
    g.set(t, 0, Scalar::one());
    MetricLieAlgebra::new(l, BilinearSpace::new(g)?)
}

/// `[[−Bᵀ, C], [0, B]]` on the `(z, v)` basis of `𝔫(V, ρ)`.
pub fn block_derivation(b: &Mat, c: &Mat) -> Result<Mat> {
    let n = b.rows();
    if !b.is_square() || c.rows() != n || c.cols() != n {
        return Err(Error::ShapeMismatch(format!("{}x{} and {}x{}", b.rows(), b.cols(), c.rows(), c.cols())));
    }
    let mut d = Mat::zeros(2 * n, 2 * n);
    d.set_block(0, 0, &-&b.transpose());
    d.set_block(0, n, c);
    d.set_block(n, n, b);
    Ok(d)
}

/// Splits `D = [[−Bᵀ, C], [0, B]]` into `(B, C)`, or `None` if `D` is not of
/// that shape.
pub fn derivation_blocks(d: &Mat) -> Option<(Mat, Mat)> {
    if !d.is_square() || !d.rows().is_multiple_of(2) {
        return None;
    }
    let n = d.rows() / 2;
    let lo: Vec<usize> = (0..n).collect();
    let hi: Vec<usize> = (n..2 * n).collect();
    let b = d.submatrix(&hi, &hi);
    let c = d.submatrix(&lo, &hi);
    let ok = d.submatrix(&hi, &lo).is_zero() && d.submatrix(&lo, &lo) == -&b.transpose();
    ok.then_some((b, c))
}

/// `−ρ(Bw) = ρ(w)B + Bᵗρ(w)` for every basis vector `w`, with `Bᵗ = G⁻¹BᵀG`.
pub fn satisfies_derivation_relation(rho: &RhoMap, b: &Mat) -> Result<bool> {
    let n = rho.dim();
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.rows() });
    }
    let bt = gram_transpose(b, rho.gram(), rho.gram())?;
    Ok((0..n).all(|i| {
        let a = &rho.mats()[i];
        let lhs = -&rho.apply(&b.column(i));
        lhs == &(a * b) + &(&bt * a)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::modified_cotangent;
    use crate::exactla::{int, vector};
    use crate::liealg::series;
    use crate::rhoform::primitive3;

    fn rotation() -> Mat {
        Mat::from_ints(&[[0, -1], [1, 0]])
    }

    #[test]
    fn oscillator_algebra() {
        let b = MetricLieAlgebra::new(LieAlgebra::abelian(2), BilinearSpace::euclidean(2)).unwrap();
        let d = double_extension(&b, &rotation()).unwrap();
        assert!(d.algebra().is_valid());
        assert!(d.is_ad_invariant());
        assert_eq!(d.metric().signature().pair(), (3, 1));
        // [b1, b2] = ⟨S b1, b2⟩ Z = Z
        assert_eq!(d.algebra().bracket_basis(1, 2), vector::unit(4, 0));
        assert!(!series(d.algebra()).is_nilpotent());
    }

    #[test]
    fn rejects_non_skew() {
        let b = MetricLieAlgebra::new(LieAlgebra::abelian(2), BilinearSpace::euclidean(2)).unwrap();
        let s = Mat::from_ints(&[[1, 0], [0, 0]]);
        assert_eq!(double_extension(&b, &s), Err(Error::NotSkewDerivation));
    }

    #[test]
    fn extension_of_modified_cotangent() {
        let r = primitive3(&int(1)).unwrap();
        let m = modified_cotangent(&r).unwrap();
        let bmat = rotation_in_3();
        let c = Mat::from_ints(&[[0, 1, 0], [-1, 0, 0], [0, 0, 0]]);
        let dmat = block_derivation(&bmat, &c).unwrap();
        assert!(is_derivation(m.algebra(), &dmat));
        assert!(is_skew_for(m.gram(), &dmat));
        assert_eq!(derivation_blocks(&dmat), Some((bmat, c)));
        let d = double_extension(&m, &dmat).unwrap();
        assert!(d.algebra().is_valid());
        assert!(d.is_ad_invariant());
    }

    fn rotation_in_3() -> Mat {
        Mat::from_ints(&[[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    }

    #[test]
    fn relation_matches_derivation_test() {
        let r = primitive3(&int(1)).unwrap();
        let m = modified_cotangent(&r).unwrap();
        for bmat in [rotation_in_3(), Mat::identity(3), Mat::from_ints(&[[1, 2, 0], [0, 1, 0], [0, 0, -2]])] {
            let dmat = block_derivation(&bmat, &Mat::zeros(3, 3)).unwrap();
            assert_eq!(satisfies_derivation_relation(&r, &bmat).unwrap(), is_derivation(m.algebra(), &dmat));
        }
        assert!(satisfies_derivation_relation(&r, &rotation_in_3()).unwrap());
    }

    #[test]
    fn transposed_relation_fails_for_rotations() {
        // −ρ(Bᵗw) = ρ(w)B + Bᵗρ(w) does not hold for a genuine derivation block
        let r = primitive3(&int(1)).unwrap();
        let b = rotation_in_3();
        let bt = gram_transpose(&b, r.gram(), r.gram()).unwrap();
        let holds = (0..3).all(|i| {
            let a = &r.mats()[i];
            -&r.apply(&bt.column(i)) == &(a * &b) + &(&bt * a)
        });
        assert!(!holds);
    }

    #[test]
    fn blocks_reject_wrong_shape() {
        assert_eq!(derivation_blocks(&Mat::identity(4)), None);
        assert!(derivation_blocks(&Mat::identity(3)).is_none());
    }
}
