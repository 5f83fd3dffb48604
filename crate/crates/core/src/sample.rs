//! Seeded generators of exact random data for tests, fixtures and the CLI.

use crate::exactla::{int, Mat, Scalar};
use crate::rhoform::AltTrilinearForm;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(rng: &mut impl Rng, bound: i64) -> Scalar {
    int(rng.gen_range(-bound..=bound))
}

/// `p/q` with `|p| ≤ bound` and `1 ≤ q ≤ bound`.
pub fn rational(rng: &mut impl Rng, bound: i64) -> Scalar {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound.max(1));
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn nonzero_rational(rng: &mut impl Rng, bound: i64) -> Scalar {
    loop {
        let r = rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn vector(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Scalar> {
    (0..n).map(|_| rational(rng, bound)).collect()
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Mat {
    Mat::from_fn(rows, cols, |_, _| rational(rng, bound))
}

pub fn invertible(rng: &mut impl Rng, n: usize, bound: i64) -> Mat {
    loop {
        let m = matrix(rng, n, n, bound);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn antisymmetric(rng: &mut impl Rng, n: usize, bound: i64) -> Mat {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = rational(rng, bound);
            m.set(j, i, -&v);
            m.set(i, j, v);
        }
    }
    m
}

/// `MᵀM + I`, always positive definite.
pub fn positive_definite(rng: &mut impl Rng, n: usize, bound: i64) -> Mat {
    let m = matrix(rng, n, n, bound);
    &(&m.transpose() * &m) + &Mat::identity(n)
}

/// A random `K` with `KᵀG + GK = 0`, namely `K = G⁻¹X` for antisymmetric `X`.
pub fn skew_for(rng: &mut impl Rng, gram: &Mat, bound: i64) -> Mat {
    let x = antisymmetric(rng, gram.rows(), bound);
    &gram.inverse().expect("non-degenerate gram") * &x
}

/// Cayley transform `(I − K)⁻¹(I + K)`; `None` when `I − K` is singular.
pub fn cayley(k: &Mat) -> Option<Mat> {
    let n = k.rows();
    let id = Mat::identity(n);
    let inv = (&id - k).inverse()?;
    Some(&inv * &(&id + k))
}

/// A random `A` with `AᵀGA = G`, as the Cayley transform of a skew map.
pub fn orthogonal_for(rng: &mut impl Rng, gram: &Mat, bound: i64) -> Mat {
    loop {
        if let Some(a) = cayley(&skew_for(rng, gram, bound)) {
            return a;
        }
    }
}

pub fn alternating_form(rng: &mut impl Rng, n: usize, bound: i64) -> AltTrilinearForm {
    let mut w = AltTrilinearForm::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                w.set(i, j, k, rational(rng, bound));
            }
        }
    }
    w
}

/// A random isometric automorphism of `(ℝᵐ, central_gram) ⊕ 𝔫(V, ρ)` on the
/// basis `(t, z, v)`: an orthogonal map of the `t`-block composed with
/// `exp D` for the nilpotent skew derivation `D` with `D v = Xv + Cv ∈ ℝᵐ ⊕ C¹`,
/// `D t = −XᵀG_c t ∈ C¹` and `C` antisymmetric.
pub fn central_automorphism(rng: &mut impl Rng, n: usize, central_gram: &Mat, bound: i64) -> Mat {
    let m = central_gram.rows();
    let d = m + 2 * n;
    let x = matrix(rng, m, n, bound);
    let c = antisymmetric(rng, n, bound);
    let mut dm = Mat::zeros(d, d);
    dm.set_block(0, m + n, &x);
    dm.set_block(m, m + n, &c);
    dm.set_block(m, 0, &-&(&x.transpose() * central_gram));
    let exp = &(&Mat::identity(d) + &dm) + &(&dm * &dm).scale(&Scalar::new(1.into(), 2.into()));
    let mut rot = Mat::identity(d);
    if m > 0 {
        rot.set_block(0, 0, &orthogonal_for(rng, central_gram, bound));
    }
    &exp * &rot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        assert_eq!(matrix(&mut rng(7), 3, 3, 9), matrix(&mut rng(7), 3, 3, 9));
    }

    #[test]
    fn orthogonal_samples_preserve_the_form() {
        let mut r = rng(1);
        let g = Mat::from_ints(&[[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]);
        for _ in 0..10 {
            let a = orthogonal_for(&mut r, &g, 5);
            assert_eq!(&(&a.transpose() * &g) * &a, g);
        }
    }

    #[test]
    fn central_automorphisms_are_isometric_automorphisms() {
        use crate::construct::{add_central_factor, modified_cotangent};
        use crate::liealg::verify_isometric_isomorphism;
        let rho = crate::rhoform::primitive3(&int(1)).unwrap();
        let gc = Mat::from_ints(&[[1, 0], [0, -1]]);
        let m = add_central_factor(&modified_cotangent(&rho).unwrap(), 2, &gc).unwrap();
        let mut r = rng(4);
        for _ in 0..5 {
            let phi = central_automorphism(&mut r, 3, &gc, 5);
            assert!(verify_isometric_isomorphism(&m, &m, &phi).unwrap());
        }
    }

    #[test]
    fn positive_definite_samples() {
        let mut r = rng(2);
        let g = positive_definite(&mut r, 4, 5);
        assert!(crate::exactla::BilinearSpace::new(g).unwrap().is_positive_definite());
    }
}
