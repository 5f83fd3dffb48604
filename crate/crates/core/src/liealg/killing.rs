use super::algebra::LieAlgebra;
use super::series::series;
use crate::exactla::{BilinearSpace, Mat};

/// `B(e_i, e_j) = tr(ad_{e_i} ad_{e_j})`. The result may be degenerate.
pub fn killing_form(l: &LieAlgebra) -> BilinearSpace {
    let d = l.dim();
    let ads: Vec<Mat> = (0..d).map(|i| l.ad_basis(i)).collect();
    let gram = Mat::from_fn(d, d, |i, j| (&ads[i] * &ads[j]).trace());
    BilinearSpace::new(gram).expect("trace form is symmetric")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompactnessReport {
    pub killing_negative_semidefinite: bool,
    /// `g = C¹ ⊕ 𝔠` with the Killing form negative definite on `C¹`.
    pub splits_center_plus_semisimple: bool,
}

pub fn compactness_test(l: &LieAlgebra) -> CompactnessReport {
    let b = killing_form(l);
    let killing_negative_semidefinite = b.signature().positive == 0;
    let s = series(l);
    let complementary =
        s.center.intersection(&s.commutator).is_zero() && s.center.dim() + s.commutator.dim() == l.dim();
    let negative_on_commutator = {
        let restricted = b.restrict(s.commutator.vectors());
        restricted.signature().negative == s.commutator.dim()
    };
    CompactnessReport {
        killing_negative_semidefinite,
        splits_center_plus_semisimple: complementary && negative_on_commutator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, vector};

    fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            &[(0, 1, vector::unit(3, 2)), (1, 2, vector::unit(3, 0)), (2, 0, vector::unit(3, 1))],
        )
        .unwrap()
    }

    #[test]
    fn so3_killing_form() {
        assert_eq!(killing_form(&so3()).gram(), &Mat::identity(3).scale(&int(-2)));
    }

    #[test]
    fn nilpotent_killing_forms_vanish() {
        let h3 = LieAlgebra::abelian(3).with_bracket(0, 1, vector::unit(3, 2)).unwrap();
        assert!(killing_form(&h3).gram().is_zero());
        assert!(killing_form(&LieAlgebra::abelian(4)).gram().is_zero());
    }

    #[test]
    fn compactness_examples() {
        let c = compactness_test(&so3());
        assert!(c.killing_negative_semidefinite && c.splits_center_plus_semisimple);
        let c = compactness_test(&so3().direct_sum(&LieAlgebra::abelian(1)));
        assert!(c.killing_negative_semidefinite && c.splits_center_plus_semisimple);
        let h3 = LieAlgebra::abelian(3).with_bracket(0, 1, vector::unit(3, 2)).unwrap();
        let c = compactness_test(&h3);
        assert!(c.killing_negative_semidefinite);
        assert!(!c.splits_center_plus_semisimple);
    }

    #[test]
    fn split_real_form_is_not_compact() {
        // sl(2): [h,e]=2e, [h,f]=-2f, [e,f]=h
        let sl2 = LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![int(0), int(2), int(0)]),
                (0, 2, vec![int(0), int(0), int(-2)]),
                (1, 2, vec![int(1), int(0), int(0)]),
            ],
        )
        .unwrap();
        assert!(sl2.is_valid());
        assert!(!compactness_test(&sl2).killing_negative_semidefinite);
    }
}
