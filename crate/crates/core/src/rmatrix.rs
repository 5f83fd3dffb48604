//! Classical r-matrices, their lift to the modified cotangent, the
//! coboundary cobracket and complex structures.

use crate::construct::modified_cotangent;
use crate::error::{Error, Result};
use crate::exactla::{vector, Mat, Scalar};
use crate::liealg::{is_skew_for, LieAlgebra, MetricLieAlgebra};
use crate::rhoform::RhoMap;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub base: LieAlgebra,
    pub r: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBracket {
    /// Constants of `[x, y]_r = [rx, y] + [x, ry]`; a Lie algebra only when `classical`.
    pub candidate: LieAlgebra,
    pub classical: bool,
    /// First basis triple with nonzero Jacobiator.
    pub violation: Option<(usize, usize, usize)>,
}

impl RMatrix {
    pub fn new(base: LieAlgebra, r: Mat) -> Result<Self> {
        let n = base.dim();
        if r.rows() != n || r.cols() != n {
            return Err(Error::ShapeMismatch(format!("r is {}x{} on a {n}-dimensional algebra", r.rows(), r.cols())));
        }
        Ok(Self { base, r })
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

fn first_jacobi_violation(l: &LieAlgebra) -> Option<(usize, usize, usize)> {
    let n = l.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !vector::is_zero(&l.jacobiator(i, j, k)) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// The bilinear map `(x, y) ↦ [Jx, y] + [x, Jy]` as structure constants.
fn twisted_bracket(l: &LieAlgebra, j: &Mat) -> LieAlgebra {
    let n = l.dim();
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| j.column(i)).collect();
    let mut out = LieAlgebra::abelian(n);
    for a in 0..n {
        for b in a + 1..n {
            let v = vector::add(&l.bracket(&cols[a], &vector::unit(n, b)), &l.bracket(&vector::unit(n, a), &cols[b]));
            out.set_bracket(a, b, v).expect("indices in range");
        }
    }
    out
}

pub fn r_bracket(r: &RMatrix) -> RBracket {
    let candidate = twisted_bracket(&r.base, &r.r);
    let violation = first_jacobi_violation(&candidate);
    RBracket { candidate, classical: violation.is_none(), violation }
}

/// `ρ = ad` on `(g, ⟨·,·⟩)`, defined when the metric is positive definite.
pub fn adjoint_rho(g: &MetricLieAlgebra) -> Result<RhoMap> {
    let mats = (0..g.dim()).map(|i| g.algebra().ad_basis(i)).collect();
    RhoMap::new(g.metric().clone(), mats)
}

/// `𝔫(g, ad)` together with `diag(G r G⁻¹, r)`: `r` on the `v`-copy of `g`
/// and its transport through the metric on the dual `z`-copy.
pub fn lift_r(g: &MetricLieAlgebra, r: &Mat) -> Result<(MetricLieAlgebra, RMatrix)> {
    let n = g.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::ShapeMismatch(format!("r is {}x{} on a {n}-dimensional algebra", r.rows(), r.cols())));
    }
    let nn = modified_cotangent(&adjoint_rho(g)?)?;
    let gram = g.gram();
    let g_inv = gram.inverse().ok_or(Error::DegenerateMetric)?;
    let lifted = Mat::block_diag(&(&(gram * r) * &g_inv), r);
    let rm = RMatrix::new(nn.algebra().clone(), lifted)?;
    Ok((nn, rm))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobracketData {
    /// `δ(e_i)` as an antisymmetric matrix in `Λ²g`.
    pub delta: Vec<Mat>,
    /// `δ([x, y]) = x·δ(y) − y·δ(x)` on basis pairs.
    pub cocycle: bool,
    /// The dual map `Λ²g* → g*` satisfies Jacobi.
    pub dual_jacobi: bool,
    /// `[Gx, Gy]_* = G[x, y]_r` on basis pairs.
    pub matches_r_bracket: bool,
}

impl CobracketData {
    pub fn is_bialgebra(&self) -> bool {
        self.cocycle && self.dual_jacobi
    }
}

/// `x·T = ad_x T + T ad_xᵀ`, the adjoint action on `g ⊗ g`.
fn act(ad: &Mat, t: &Mat) -> Mat {
    &(ad * t) + &(t * &ad.transpose())
}

/// The coboundary `δ(x) = x·r̃` of the bivector `r̃ = −rG⁻¹`, for `r` skew
/// with respect to the metric. No classicality check.
pub fn coboundary(m: &MetricLieAlgebra, r: &Mat) -> Result<CobracketData> {
    let n = m.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::ShapeMismatch(format!("r is {}x{} on a {n}-dimensional algebra", r.rows(), r.cols())));
    }
    m.require_ad_invariant()?;
    if !is_skew_for(m.gram(), r) {
        return Err(Error::NotSkew);
    }
    let g_inv = m.gram().inverse().ok_or(Error::DegenerateMetric)?;
    let r_tilde = -&(r * &g_inv);
    let l = m.algebra();
    let ads: Vec<Mat> = (0..n).map(|i| l.ad_basis(i)).collect();
    let delta: Vec<Mat> = ads.iter().map(|a| act(a, &r_tilde)).collect();
    let delta_of = |x: &[Scalar]| {
        let mut t = Mat::zeros(n, n);
        for (xi, d) in x.iter().zip(&delta) {
            if !xi.is_zero() {
                t = &t + &d.scale(xi);
            }
        }
        t
    };
    let mut cocycle = true;
    for i in 0..n {
        for j in i + 1..n {
            let lhs = delta_of(&l.bracket_basis(i, j));
            let rhs = &act(&ads[i], &delta[j]) - &act(&ads[j], &delta[i]);
            cocycle &= lhs == rhs;
        }
    }
    // [e^a, e^b]_* = Σ_i δ(e_i)_{ab} e^i
    let mut dual = LieAlgebra::abelian(n);
    for a in 0..n {
        for b in a + 1..n {
            let v: Vec<Scalar> = delta.iter().map(|d| d.get(a, b).clone()).collect();
            dual.set_bracket(a, b, v)?;
        }
    }
    let dual_jacobi = first_jacobi_violation(&dual).is_none();
    let rb = twisted_bracket(l, r);
    let g = m.gram();
    let mut matches_r_bracket = true;
    for a in 0..n {
        for b in a + 1..n {
            let lhs = dual.bracket(&g.column(a), &g.column(b));
            matches_r_bracket &= lhs == g.mul_vec(&rb.bracket_basis(a, b));
        }
    }
    Ok(CobracketData { delta, cocycle, dual_jacobi, matches_r_bracket })
}

/// The Lie bialgebra structure induced by a skew classical `r`.
pub fn cobracket_from_r(m: &MetricLieAlgebra, r: &Mat) -> Result<CobracketData> {
    let n = m.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::ShapeMismatch(format!("r is {}x{} on a {n}-dimensional algebra", r.rows(), r.cols())));
    }
    if !is_skew_for(m.gram(), r) {
        return Err(Error::NotSkew);
    }
    let rb = r_bracket(&RMatrix::new(m.algebra().clone(), r.clone())?);
    if let Some(t) = rb.violation {
        return Err(Error::NotClassical(t));
    }
    coboundary(m, r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexStructureReport {
    pub square: bool,
    pub integrable: bool,
    pub j_bracket_jacobi: bool,
    /// First basis pair with `N(e_i, e_j) ≠ 0`.
    pub nijenhuis_violation: Option<(usize, usize)>,
}

/// `N(x,y) = [Jx,Jy] − [x,y] − J[Jx,y] − J[x,Jy]`
pub fn nijenhuis(l: &LieAlgebra, j: &Mat, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let (jx, jy) = (j.mul_vec(x), j.mul_vec(y));
    let mut out = vector::sub(&l.bracket(&jx, &jy), &l.bracket(x, y));
    out = vector::sub(&out, &j.mul_vec(&l.bracket(&jx, y)));
    vector::sub(&out, &j.mul_vec(&l.bracket(x, &jy)))
}

pub fn complex_structure_check(l: &LieAlgebra, j: &Mat) -> Result<ComplexStructureReport> {
    let n = l.dim();
    if !n.is_multiple_of(2) {
        return Err(Error::OddDimension(n));
    }
    if j.rows() != n || j.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: j.rows() });
    }
    let square = j * j == -&Mat::identity(n);
    let mut nijenhuis_violation = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            if !vector::is_zero(&nijenhuis(l, j, &vector::unit(n, a), &vector::unit(n, b))) {
                nijenhuis_violation = Some((a, b));
                break 'outer;
            }
        }
    }
    let j_bracket_jacobi = first_jacobi_violation(&twisted_bracket(l, j)).is_none();
    Ok(ComplexStructureReport { square, integrable: nijenhuis_violation.is_none(), j_bracket_jacobi, nijenhuis_violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{heisenberg3_plus_line, so3, so3_metric};
    use crate::exactla::int;
    use crate::sample;

    #[test]
    fn identity_doubles_bracket() {
        let rb = r_bracket(&RMatrix::new(so3(), Mat::identity(3)).unwrap());
        assert!(rb.classical);
        assert_eq!(rb.candidate.bracket_basis(0, 1), vector::scale(&vector::unit(3, 2), &int(2)));
        let zero = r_bracket(&RMatrix::new(so3(), Mat::zeros(3, 3)).unwrap());
        assert!(zero.classical && zero.candidate.is_abelian());
    }

    #[test]
    fn non_classical_r_is_flagged() {
        let r = Mat::from_ints(&[[0, 1, 0], [0, 2, 0], [0, 0, 0]]);
        let rb = r_bracket(&RMatrix::new(so3(), r).unwrap());
        assert!(!rb.classical);
        assert_eq!(rb.violation, Some((0, 1, 2)));
    }

    #[test]
    fn inner_skew_r_is_classical_on_so3() {
        let r = so3().ad(&[int(1), int(-2), int(3)]);
        assert!(is_skew_for(so3_metric().gram(), &r));
        assert!(r_bracket(&RMatrix::new(so3(), r).unwrap()).classical);
    }

    #[test]
    fn lift_is_classical_and_skew() {
        let g = so3_metric();
        let mut rng = sample::rng(7);
        for r in [Mat::identity(3), Mat::zeros(3, 3), sample::skew_for(&mut rng, g.gram(), 5)] {
            let (nn, lifted) = lift_r(&g, &r).unwrap();
            assert!(r_bracket(&lifted).classical);
            assert_eq!(is_skew_for(nn.gram(), &lifted.r), is_skew_for(g.gram(), &r));
        }
    }

    #[test]
    fn bialgebra_on_lift() {
        let g = so3_metric();
        let r = so3().ad(&[int(0), int(1), int(1)]);
        let (nn, lifted) = lift_r(&g, &r).unwrap();
        let cb = cobracket_from_r(&nn, &lifted.r).unwrap();
        assert!(cb.is_bialgebra());
        assert!(cb.matches_r_bracket);
        let base = cobracket_from_r(&g, &r).unwrap();
        assert!(base.is_bialgebra() && base.matches_r_bracket);
    }

    #[test]
    fn cobracket_edge_cases() {
        let g = so3_metric();
        let cb = cobracket_from_r(&g, &Mat::zeros(3, 3)).unwrap();
        assert!(cb.delta.iter().all(Mat::is_zero));
        assert_eq!(cobracket_from_r(&g, &Mat::identity(3)), Err(Error::NotSkew));
    }

    #[test]
    fn complex_structures() {
        let plane = LieAlgebra::abelian(2);
        let rot = Mat::from_ints(&[[0, -1], [1, 0]]);
        let rep = complex_structure_check(&plane, &rot).unwrap();
        assert!(rep.square && rep.integrable && rep.j_bracket_jacobi);

        // x ↦ y, z ↦ w on 𝔥₃ ⊕ ℝ is integrable; x ↦ z, y ↦ w is not
        let l = heisenberg3_plus_line();
        let good = Mat::from_ints(&[[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]);
        let bad = Mat::from_ints(&[[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]);
        let g = complex_structure_check(&l, &good).unwrap();
        assert!(g.square && g.integrable && g.j_bracket_jacobi);
        let b = complex_structure_check(&l, &bad).unwrap();
        assert!(b.square && !b.integrable);
        assert_eq!(b.nijenhuis_violation, Some((0, 1)));

        assert!(!complex_structure_check(&plane, &Mat::identity(2)).unwrap().square);
        assert_eq!(complex_structure_check(&so3(), &Mat::identity(3)), Err(Error::OddDimension(3)));
    }
}
