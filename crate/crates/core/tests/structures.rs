use adlie::catalog;
use adlie::construct::{
    add_central_factor, block_derivation, cotangent, derivation_blocks, double_extension, modified_cotangent,
    normal_form, satisfies_derivation_relation,
};
use adlie::exactla::{family_contains_invertible, int, BilinearSpace, Mat, Scalar, SubspaceBasis};
use adlie::liealg::{
    check_perp_duality, form_ad_invariance_violation, invariant_symmetric_forms, is_derivation, is_skew_for,
    killing_form, series, skew_derivations, verify_isometric_isomorphism, LieAlgebra, MetricLieAlgebra,
};
use adlie::rhoform::{
    constraint_space, from_form, generate, primitive, primitive3, radical, to_form, validate_rho, RhoMap,
};
use adlie::sample;
use proptest::prelude::*;

fn random_two_step(seed: u64, p: usize, k: usize) -> LieAlgebra {
    let mut rng = sample::rng(seed);
    let js: Vec<Mat> = (0..k).map(|_| sample::antisymmetric(&mut rng, p, 3)).collect();
    let l = catalog::from_j_maps(&js);
    l.transport(&sample::invertible(&mut rng, p + k, 2)).unwrap()
}

fn rho_of_dim(n: usize) -> RhoMap {
    generate(n).unwrap().rho().unwrap()
}

fn ideals_of(m: &MetricLieAlgebra) -> Vec<SubspaceBasis> {
    let s = series(m.algebra());
    s.descending.iter().chain(&s.ascending).cloned().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn direct_sums_stay_valid(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = random_two_step(s1, 3, 2);
        let b = random_two_step(s2, 2, 1);
        prop_assert!(a.direct_sum(&b).is_valid());
    }

    #[test]
    fn cotangent_of_nilpotent_is_invariant(seed in any::<u64>(), p in 2usize..4) {
        let h = random_two_step(seed, p, 1);
        prop_assume!(h.dim() <= 4);
        let m = cotangent(&h).unwrap();
        prop_assert!(m.algebra().is_valid());
        prop_assert!(m.is_ad_invariant());
    }

    #[test]
    fn killing_form_is_invariant(seed in any::<u64>()) {
        let l = random_two_step(seed, 3, 2);
        let b = killing_form(&l);
        prop_assert!(b.gram().is_zero());
        prop_assert_eq!(form_ad_invariance_violation(&l, b.gram()), None);
    }

    #[test]
    fn perp_of_ideal_is_ideal(n in prop::sample::select(vec![3usize, 5, 6]), seed in any::<u64>()) {
        let base = modified_cotangent(&rho_of_dim(n)).unwrap();
        let m = base.transport(&sample::central_automorphism(&mut sample::rng(seed), n, &Mat::zeros(0, 0), 3)).unwrap();
        prop_assert!(m.is_ad_invariant());
        for ideal in ideals_of(&m) {
            prop_assert!(m.algebra().is_ideal(&ideal));
            let perp = m.metric().orthogonal_complement(&ideal).unwrap();
            prop_assert!(m.algebra().is_ideal(&perp));
        }
    }

    #[test]
    fn forms_round_trip(n in prop::sample::select(vec![3usize, 5, 6, 7, 8])) {
        let rho = rho_of_dim(n);
        let w = to_form(&rho).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    prop_assert_eq!(w.get(i, j, k), -w.get(j, i, k));
                    prop_assert_eq!(w.get(i, j, k), -w.get(i, k, j));
                }
            }
        }
        prop_assert_eq!(from_form(&w, &Mat::identity(n)).unwrap(), rho.clone());
        prop_assert!(radical(&w).is_zero());
    }

    #[test]
    fn radical_of_dim4_forms_is_nonzero(seed in any::<u64>()) {
        let w = sample::alternating_form(&mut sample::rng(seed), 4, 9);
        prop_assert!(!radical(&w).is_zero());
    }

    #[test]
    fn skew_derivations_recheck(n in prop::sample::select(vec![3usize, 5])) {
        let m = modified_cotangent(&rho_of_dim(n)).unwrap();
        let fam = skew_derivations(&m).unwrap();
        for d in fam.directions() {
            prop_assert!(is_derivation(m.algebra(), d));
            prop_assert!(is_skew_for(m.gram(), d));
        }
    }
}

#[test]
fn modified_cotangent_properties() {
    for n in [3, 5, 6, 7, 8, 9] {
        let rho = rho_of_dim(n);
        let m = modified_cotangent(&rho).unwrap();
        let s = series(m.algebra());
        assert!(m.algebra().is_valid());
        assert!(s.is_two_step());
        assert_eq!(s.center, s.commutator);
        let zs: Vec<Vec<Scalar>> = (0..n).map(|i| adlie::exactla::vector::unit(2 * n, i)).collect();
        assert_eq!(s.center, SubspaceBasis::span(2 * n, &zs).unwrap());
        assert!(m.is_ad_invariant());
        assert_eq!(m.metric().signature().pair(), (n, n));
        assert!(check_perp_duality(&m).unwrap().holds());
    }
}

#[test]
fn solution_space_is_a_subspace() {
    // skew and (ss) are linear: sums and multiples of valid maps stay in the constraint space
    let n = 3;
    let space = constraint_space(n, &Mat::identity(n));
    let flat = |r: &RhoMap| r.mats().iter().flat_map(|m| m.entries().to_vec()).collect::<Vec<Scalar>>();
    let a = flat(&primitive3(&int(2)).unwrap());
    let b = flat(&primitive3(&int(-7)).unwrap());
    let combo: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x * int(3) - y).collect();
    assert!(space.contains(&a) && space.contains(&combo));
    assert_eq!(space.dim(), 1);
}

#[test]
fn heisenberg_forms_are_degenerate() {
    let fam = invariant_symmetric_forms(&catalog::heisenberg3());
    assert_eq!(fam.parameter_count(), 3);
    for d in fam.directions() {
        assert!((0..3).all(|i| d.get(2, i) == &int(0)));
    }
    assert!(!family_contains_invertible(&fam).unwrap().is_yes());
    let so3 = invariant_symmetric_forms(&catalog::so3());
    assert_eq!(so3.parameter_count(), 1);
    assert!(family_contains_invertible(&so3).unwrap().is_yes());
}

#[test]
fn so3_derivations_are_inner() {
    let m = catalog::so3_metric();
    let fam = skew_derivations(&m).unwrap();
    assert_eq!(fam.parameter_count(), 3);
    let inner = SubspaceBasis::span(9, &(0..3).map(|i| m.algebra().ad_basis(i).entries().to_vec()).collect::<Vec<_>>())
        .unwrap();
    for d in fam.directions() {
        assert!(inner.contains(d.entries()));
    }
}

#[test]
fn cotangent_of_so3_is_not_nilpotent() {
    let m = cotangent(&catalog::so3()).unwrap();
    assert!(m.is_ad_invariant());
    assert!(!series(m.algebra()).is_nilpotent());
}

#[test]
fn double_extension_by_central_block() {
    let rho = primitive(3).unwrap();
    let b = modified_cotangent(&rho).unwrap();
    let c = Mat::from_ints(&[[0, 1, 0], [-1, 0, 2], [0, -2, 0]]);
    let s = block_derivation(&Mat::zeros(3, 3), &c).unwrap();
    let d = double_extension(&b, &s).unwrap();
    let rep = series(d.algebra());
    assert_eq!(d.dim(), 8);
    assert!(d.is_ad_invariant());
    assert!(rep.is_two_step());
    assert!(rep.corank.unwrap() >= 1);

    let zero = double_extension(&b, &Mat::zeros(6, 6)).unwrap();
    let hyper = MetricLieAlgebra::new(LieAlgebra::abelian(2), BilinearSpace::new(Mat::from_ints(&[[0, 1], [1, 0]])).unwrap())
        .unwrap();
    // Z, b, T reordered to b, Z, T
    let p = Mat::from_fn(8, 8, |r, c| {
        let target = if c < 6 { c + 1 } else if c == 6 { 0 } else { 7 };
        if r == target { int(1) } else { int(0) }
    });
    assert!(verify_isometric_isomorphism(&b.direct_sum(&hyper), &zero, &p).unwrap());
}

#[test]
fn block_characterization_of_skew_derivations() {
    let rho = primitive(3).unwrap();
    let m = modified_cotangent(&rho).unwrap();
    let fam = skew_derivations(&m).unwrap();
    for d in fam.directions() {
        let (b, c) = derivation_blocks(d).expect("block upper triangular shape");
        assert!(c.is_antisymmetric());
        assert!(satisfies_derivation_relation(&rho, &b).unwrap());
    }
}

#[test]
fn direct_sum_with_line_has_corank_one() {
    let m = add_central_factor(&modified_cotangent(&primitive(5).unwrap()).unwrap(), 1, &Mat::identity(1)).unwrap();
    assert_eq!(series(m.algebra()).corank, Some(1));
    let nf = normal_form(&m).unwrap();
    assert_eq!(nf.corank, 1);
    assert!(validate_rho(&nf.rho).is_valid());
}

#[test]
fn generated_maps_validate() {
    for n in [3, 5, 6, 7, 8, 10, 11] {
        assert!(validate_rho(&rho_of_dim(n)).is_valid(), "n = {n}");
    }
}
