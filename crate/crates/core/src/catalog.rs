//! Hand-coded fixtures used across tests, the acceptance suite and the CLI.

use crate::exactla::{int, vector, BilinearSpace, Mat, Scalar};
use crate::liealg::{LieAlgebra, MetricLieAlgebra};
use num_traits::Zero;

fn labelled(l: LieAlgebra, labels: &[&str]) -> LieAlgebra {
    l.with_labels(labels.iter().map(|s| s.to_string()).collect()).expect("label count matches")
}

/// `𝔥₃ = span{x, y, z}` with `[x, y] = z`.
pub fn heisenberg3() -> LieAlgebra {
    let l = LieAlgebra::abelian(3).with_bracket(0, 1, vector::unit(3, 2)).expect("valid bracket");
    labelled(l, &["x", "y", "z"])
}

/// `𝔥₃ ⊕ ℝ`, the extra generator `w` central but outside the commutator.
pub fn heisenberg3_plus_line() -> LieAlgebra {
    let l = LieAlgebra::abelian(4).with_bracket(0, 1, vector::unit(4, 2)).expect("valid bracket");
    labelled(l, &["x", "y", "z", "w"])
}

/// `so(3)` with `[e₁, e₂] = e₃` and cyclic permutations.
pub fn so3() -> LieAlgebra {
    let l = LieAlgebra::from_brackets(
        3,
        &[(0, 1, vector::unit(3, 2)), (1, 2, vector::unit(3, 0)), (2, 0, vector::unit(3, 1))],
    )
    .expect("so(3) brackets");
    labelled(l, &["e1", "e2", "e3"])
}

/// `so(3)` with minus its Killing form, `−B = 2I`.
pub fn so3_metric() -> MetricLieAlgebra {
    MetricLieAlgebra::from_gram(so3(), Mat::identity(3).scale(&int(2))).expect("−B is non-degenerate")
}

/// `so(3) ⊕ so(3)` with `−B` on each summand.
pub fn so3_pair_metric() -> MetricLieAlgebra {
    so3_metric().direct_sum(&so3_metric())
}

/// The 8-dimensional algebra on `z₁..z₄, v₁..v₄` with
/// `[v₁,v₂] = z₃, [v₂,v₃] = z₄, [v₃,v₄] = z₁, [v₁,v₄] = z₂`.
/// Its center equals its commutator, yet every invariant form is degenerate.
pub fn eight_dim_example() -> LieAlgebra {
    let e = |k| vector::unit(8, k);
    let l = LieAlgebra::from_brackets(8, &[(4, 5, e(2)), (5, 6, e(3)), (6, 7, e(0)), (4, 7, e(1))])
        .expect("valid brackets");
    labelled(l, &["z1", "z2", "z3", "z4", "v1", "v2", "v3", "v4"])
}

/// Left multiplication by `i`, `j`, `k` on `ℍ = span{1, i, j, k}`.
pub fn quaternion_units() -> [Mat; 3] {
    let li = Mat::from_ints(&[[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]);
    let lj = Mat::from_ints(&[[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]);
    let lk = Mat::from_ints(&[[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]);
    [li, lj, lk]
}

/// The 2-step algebra on `V ⊕ ℝᵏ` (V first) whose `J`-maps for the
/// standard inner product are `js`: `[u, v] = Σ_k (J_k u, v) z_k`.
pub fn from_j_maps(js: &[Mat]) -> LieAlgebra {
    let p = js.first().map_or(0, Mat::rows);
    let d = p + js.len();
    let mut l = LieAlgebra::abelian(d);
    for a in 0..p {
        for b in a + 1..p {
            let mut v = vec![Scalar::zero(); d];
            for (k, j) in js.iter().enumerate() {
                v[p + k] = j.get(b, a).clone();
            }
            l.set_bracket(a, b, v).expect("indices in range");
        }
    }
    l
}

/// H-type fixtures: Heisenberg algebras of dimension 3 and 5, the
/// 6-dimensional complex-type algebra and the quaternionic Heisenberg algebra.
pub fn h_type_fixtures() -> Vec<(&'static str, LieAlgebra)> {
    let [li, lj, lk] = quaternion_units();
    vec![
        ("heisenberg3", heisenberg3()),
        ("heisenberg5", from_j_maps(std::slice::from_ref(&li))),
        ("h-type6", from_j_maps(&[li.clone(), lj.clone()])),
        ("quaternionic7", from_j_maps(&[li, lj, lk])),
    ]
}

/// `T(x) = [[0, −x₃, x₂], [x₃, 0, −x₁], [−x₂, x₁, 0]]`, so `T(u)v = u × v`.
pub fn cross_matrix(u: &[Scalar]) -> Mat {
    let z = Scalar::zero();
    Mat::from_rows(vec![
        vec![z.clone(), -u[2].clone(), u[1].clone()],
        vec![u[2].clone(), z.clone(), -u[0].clone()],
        vec![-u[1].clone(), u[0].clone(), z],
    ])
}

/// The inverse of [`cross_matrix`] on antisymmetric 3×3 matrices.
pub fn uncross(m: &Mat) -> Vec<Scalar> {
    vec![m.get(2, 1).clone(), m.get(0, 2).clone(), m.get(1, 0).clone()]
}

pub fn euclidean_abelian(n: usize) -> MetricLieAlgebra {
    MetricLieAlgebra::new(LieAlgebra::abelian(n), BilinearSpace::euclidean(n)).expect("identity is non-degenerate")
}
