//! Left-invariant Levi-Civita geometry of a metric Lie algebra and the
//! isometry criteria for bi-invariant metrics.

use crate::error::{Error, Result};
use crate::exactla::{frac, vector, Mat, Scalar, SubspaceBasis};
use crate::liealg::{killing_form, series, MetricLieAlgebra};
use num_traits::Zero;

/// `∇_{e_i} = N_i`, i.e. `∇_{e_i} e_j = Σ_k (N_i)_{kj} e_k = Σ_k Γ^k_{ij} e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionCoeffs {
    pub n: Vec<Mat>,
}

impl ConnectionCoeffs {
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.n[i].get(k, j)
    }

    /// `∇_x` for `x` in coordinates.
    pub fn along(&self, x: &[Scalar]) -> Mat {
        let d = self.n.len();
        let mut m = Mat::zeros(d, d);
        for (xi, ni) in x.iter().zip(&self.n) {
            if !xi.is_zero() {
                m = &m + &ni.scale(xi);
            }
        }
        m
    }
}

/// `2⟨∇_x y, z⟩ = ⟨[x,y],z⟩ − ⟨[y,z],x⟩ + ⟨[z,x],y⟩` on basis triples.
pub fn koszul(m: &MetricLieAlgebra) -> Result<ConnectionCoeffs> {
    let d = m.dim();
    let g_inv = m.gram().inverse().ok_or(Error::DegenerateMetric)?;
    let l = m.algebra();
    let e = |i| vector::unit(d, i);
    let pair = |x: &[Scalar], y: &[Scalar]| m.metric().pair(x, y);
    let half = frac(1, 2);
    let mut n = Vec::with_capacity(d);
    for i in 0..d {
        // K_{jl} = ⟨∇_{e_i} e_j, e_l⟩
        let k = Mat::from_fn(d, d, |j, r| {
            let a = pair(&l.bracket_basis(i, j), &e(r));
            let b = pair(&l.bracket_basis(j, r), &e(i));
            let c = pair(&l.bracket_basis(r, i), &e(j));
            &half * (a - b + c)
        });
        // (N_i)_{kj} = Σ_l G⁻¹_{kl} K_{jl}
        n.push(&g_inv * &k.transpose());
    }
    Ok(ConnectionCoeffs { n })
}

/// `∇_x y − ∇_y x − [x, y] = 0` on basis pairs.
pub fn is_torsion_free(m: &MetricLieAlgebra, c: &ConnectionCoeffs) -> bool {
    let d = m.dim();
    (0..d).all(|i| {
        (0..d).all(|j| vector::sub(&c.n[i].column(j), &c.n[j].column(i)) == m.algebra().bracket_basis(i, j))
    })
}

/// `G N_i + N_iᵀ G = 0`: each `∇_{e_i}` is skew for the metric.
pub fn is_metric_compatible(m: &MetricLieAlgebra, c: &ConnectionCoeffs) -> bool {
    let g = m.gram();
    c.n.iter().all(|ni| (&(g * ni) + &(&ni.transpose() * g)).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curvature {
    /// `R(e_i, e_j)` at `[i][j]`.
    pub r: Vec<Vec<Mat>>,
    pub is_flat: bool,
}

/// `R(x, y) = ∇_x∇_y − ∇_y∇_x − ∇_{[x,y]}` from [`koszul`].
pub fn curvature(m: &MetricLieAlgebra) -> Result<Curvature> {
    let c = koszul(m)?;
    let d = m.dim();
    let r: Vec<Vec<Mat>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| &c.n[i].commutator(&c.n[j]) - &c.along(&m.algebra().bracket_basis(i, j)))
                .collect()
        })
        .collect();
    let is_flat = r.iter().flatten().all(Mat::is_zero);
    Ok(Curvature { r, is_flat })
}

/// `R(e_i, e_j) = −¼ ad_{[e_i, e_j]}` for every basis pair.
pub fn curvature_matches_bracket_formula(m: &MetricLieAlgebra, curv: &Curvature) -> bool {
    let quarter = frac(-1, 4);
    let d = m.dim();
    (0..d).all(|i| (0..d).all(|j| curv.r[i][j] == m.algebra().ad(&m.algebra().bracket_basis(i, j)).scale(&quarter)))
}

/// `Ric(y, z) = tr(x ↦ R(x, y)z)`.
pub fn ricci(curv: &Curvature) -> Mat {
    let d = curv.r.len();
    Mat::from_fn(d, d, |j, k| {
        let mut s = Scalar::zero();
        for i in 0..d {
            s += curv.r[i][j].get(i, k);
        }
        s
    })
}

/// `(Ric, B)`, after checking `Ric = −¼B`.
pub fn ricci_and_killing(m: &MetricLieAlgebra) -> Result<(Mat, Mat)> {
    m.require_ad_invariant()?;
    let ric = ricci(&curvature(m)?);
    let b = killing_form(m.algebra()).into_gram();
    if ric != b.scale(&frac(-1, 4)) {
        return Err(Error::NotEligible("Ric differs from −B/4".into()));
    }
    Ok((ric, b))
}

fn flatten(mats: &[Mat]) -> Vec<Vec<Scalar>> {
    mats.iter().map(|m| m.entries().to_vec()).collect()
}

/// A basis of `span{R(e_i, e_j)}`, checked to coincide with `ad(C¹)`.
pub fn holonomy_span(m: &MetricLieAlgebra) -> Result<Vec<Mat>> {
    m.require_ad_invariant()?;
    let d = m.dim();
    let curv = curvature(m)?;
    let rs: Vec<Mat> = curv.r.iter().flatten().cloned().collect();
    let hol = SubspaceBasis::span(d * d, &flatten(&rs))?;
    let s = series(m.algebra());
    let ads: Vec<Mat> = s.commutator.vectors().iter().map(|w| m.algebra().ad(w)).collect();
    let ad_c1 = SubspaceBasis::span(d * d, &flatten(&ads))?;
    if hol != ad_c1 {
        return Err(Error::NotEligible("holonomy span differs from ad[g, g]".into()));
    }
    Ok(hol.vectors().iter().map(|v| Mat::from_fn(d, d, |r, c| v[r * d + c].clone())).collect())
}

/// `AᵀGA = G` and `A[x,[x,y]] = [Ax,[Ax,Ay]]`, the latter on `x ∈ {e_i, e_i + e_j}`
/// and basis `y`; the defect is quadratic in `x`, so this is equivalent to all `x`.
pub fn muller_check(m: &MetricLieAlgebra, a: &Mat) -> Result<bool> {
    let d = m.dim();
    if a.rows() != d || a.cols() != d {
        return Err(Error::DimensionMismatch { expected: d, found: a.rows() });
    }
    if &(&a.transpose() * m.gram()) * a != *m.gram() {
        return Ok(false);
    }
    Ok(second_condition(m, m, a))
}

fn second_condition(m: &MetricLieAlgebra, m2: &MetricLieAlgebra, a: &Mat) -> bool {
    let d = m.dim();
    let (l, l2) = (m.algebra(), m2.algebra());
    let mut xs: Vec<Vec<Scalar>> = (0..d).map(|i| vector::unit(d, i)).collect();
    for i in 0..d {
        for j in i + 1..d {
            xs.push(vector::add(&vector::unit(d, i), &vector::unit(d, j)));
        }
    }
    xs.iter().all(|x| {
        let ax = a.mul_vec(x);
        (0..d).all(|k| {
            let y = vector::unit(d, k);
            let lhs = a.mul_vec(&l.bracket(x, &l.bracket(x, &y)));
            let rhs = l2.bracket(&ax, &l2.bracket(&ax, &a.column(k)));
            lhs == rhs
        })
    })
}

/// The Müller conditions for a linear map between two metric Lie algebras.
pub fn muller_check_between(m: &MetricLieAlgebra, m2: &MetricLieAlgebra, a: &Mat) -> Result<bool> {
    let d = m.dim();
    if m2.dim() != d || a.rows() != d || a.cols() != d {
        return Err(Error::DimensionMismatch { expected: d, found: m2.dim() });
    }
    if &(&a.transpose() * m2.gram()) * a != *m.gram() {
        return Ok(false);
    }
    Ok(second_condition(m, m2, a))
}

/// Isotropy group of the identity for the bi-invariant metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsometryDescriptor {
    /// `O(p, q)`: every metric-orthogonal map is the differential of an isometry.
    Orthogonal { p: usize, q: usize },
    /// Maps satisfying both Müller conditions.
    Generic,
}

impl std::fmt::Display for IsometryDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IsometryDescriptor::Orthogonal { p, q } => write!(f, "O({p},{q})"),
            IsometryDescriptor::Generic => write!(f, "orthogonal-group condition + double-bracket constraint"),
        }
    }
}

pub fn isometry_descriptor(m: &MetricLieAlgebra) -> Result<IsometryDescriptor> {
    m.require_ad_invariant().map_err(|_| Error::NotEligible("metric is not ad-invariant".into()))?;
    let s = series(m.algebra());
    if !s.is_at_most_two_step() || s.corank != Some(0) {
        return Ok(IsometryDescriptor::Generic);
    }
    let k = s.commutator.dim();
    let sig = m.metric().signature();
    if sig.pair() != (k, k) {
        return Err(Error::NotEligible(format!("signature {:?} is not ({k},{k})", sig.pair())));
    }
    Ok(IsometryDescriptor::Orthogonal { p: k, q: k })
}

/// Dual bases `(z_i, v_i)` with `⟨z_i, v_j⟩ = δ_ij`, `C¹ = span z` and `V`
/// totally isotropic, as the columns of a matrix `[z | v]`.
pub fn dual_frame(m: &MetricLieAlgebra) -> Result<Mat> {
    m.require_ad_invariant()?;
    let s = series(m.algebra());
    if !s.is_at_most_two_step() || s.corank != Some(0) {
        return Err(Error::NotEligible("expected a 2-step nilpotent algebra of corank zero".into()));
    }
    let pairing = m.metric().hyperbolic_pairing(&s.commutator)?;
    let mut cols = pairing.isotropic;
    cols.extend(pairing.dual);
    Ok(Mat::from_columns(m.dim(), &cols))
}

/// `A = Q'Q⁻¹` matching dual frames; passes both Müller conditions.
pub fn build_cross_isometry(m: &MetricLieAlgebra, m2: &MetricLieAlgebra) -> Result<Mat> {
    if m.dim() != m2.dim() {
        return Err(Error::DimensionMismatch { expected: m.dim(), found: m2.dim() });
    }
    let q = dual_frame(m)?;
    let q2 = dual_frame(m2)?;
    let a = &q2 * &q.inverse().ok_or(Error::Singular)?;
    if !muller_check_between(m, m2, &a)? {
        return Err(Error::NotEligible("frame-matching map fails the Müller conditions".into()));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryReport {
    pub is_flat: bool,
    pub ricci: Mat,
    pub killing: Mat,
    pub holonomy_basis: Vec<Mat>,
    pub isometry: IsometryDescriptor,
}

pub fn geometry_report(m: &MetricLieAlgebra) -> Result<GeometryReport> {
    let curv = curvature(m)?;
    let (ricci, killing) = ricci_and_killing(m)?;
    Ok(GeometryReport {
        is_flat: curv.is_flat,
        ricci,
        killing,
        holonomy_basis: holonomy_span(m)?,
        isometry: isometry_descriptor(m)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{euclidean_abelian, heisenberg3, so3_metric};
    use crate::construct::modified_cotangent;
    use crate::exactla::{int, BilinearSpace};
    use crate::rhoform::{primitive3, primitive5};
    use crate::sample;

    fn n3(a: i64) -> MetricLieAlgebra {
        modified_cotangent(&primitive3(&int(a)).unwrap()).unwrap()
    }

    #[test]
    fn abelian_connection_vanishes() {
        let c = koszul(&euclidean_abelian(3)).unwrap();
        assert!(c.n.iter().all(Mat::is_zero));
    }

    #[test]
    fn bi_invariant_connection_is_half_bracket() {
        for m in [n3(1), so3_metric()] {
            let c = koszul(&m).unwrap();
            for i in 0..m.dim() {
                assert_eq!(c.n[i], m.algebra().ad_basis(i).scale(&frac(1, 2)));
            }
            assert!(is_torsion_free(&m, &c));
            assert!(is_metric_compatible(&m, &c));
        }
    }

    #[test]
    fn heisenberg_with_identity_metric() {
        // ∇_x y = ½z, ∇_x z = −½y, ∇_y z = ½x, ∇_z x = −½y, ∇_z y = ½x
        let m = MetricLieAlgebra::new(heisenberg3(), BilinearSpace::euclidean(3)).unwrap();
        let c = koszul(&m).unwrap();
        let h = frac(1, 2);
        assert_eq!(c.gamma(0, 1, 2), &h);
        assert_eq!(c.gamma(1, 0, 2), &-&h);
        assert_eq!(c.gamma(0, 2, 1), &-&h);
        assert_eq!(c.gamma(2, 0, 1), &-&h);
        assert_eq!(c.gamma(1, 2, 0), &h);
        assert_eq!(c.gamma(2, 1, 0), &h);
        assert!(is_torsion_free(&m, &c));
        assert!(is_metric_compatible(&m, &c));
        assert_ne!(c.n[0], m.algebra().ad_basis(0).scale(&h));
    }

    #[test]
    fn flat_and_trivial_holonomy() {
        let m = modified_cotangent(&primitive5()).unwrap();
        let curv = curvature(&m).unwrap();
        assert!(curv.is_flat);
        let (ric, b) = ricci_and_killing(&m).unwrap();
        assert!(ric.is_zero() && b.is_zero());
        assert!(holonomy_span(&m).unwrap().is_empty());
        assert!(holonomy_span(&euclidean_abelian(2)).unwrap().is_empty());
    }

    #[test]
    fn so3_geometry() {
        let m = so3_metric();
        let curv = curvature(&m).unwrap();
        assert!(!curv.is_flat);
        assert!(curvature_matches_bracket_formula(&m, &curv));
        let (ric, _) = ricci_and_killing(&m).unwrap();
        assert_eq!(ric, Mat::identity(3).scale(&frac(1, 2)));
        assert_eq!(holonomy_span(&m).unwrap().len(), 3);
        assert_eq!(isometry_descriptor(&m).unwrap(), IsometryDescriptor::Generic);
    }

    #[test]
    fn muller_on_two_step() {
        let m = n3(1);
        let mut rng = sample::rng(3);
        for _ in 0..10 {
            let a = sample::orthogonal_for(&mut rng, m.gram(), 5);
            assert!(muller_check(&m, &a).unwrap());
        }
        assert!(!muller_check(&m, &Mat::identity(6).scale(&int(2))).unwrap());
        assert_eq!(isometry_descriptor(&m).unwrap(), IsometryDescriptor::Orthogonal { p: 3, q: 3 });
        assert_eq!(isometry_descriptor(&m).unwrap().to_string(), "O(3,3)");
    }

    #[test]
    fn muller_on_so3() {
        let m = so3_metric();
        let rot = sample::cayley(&m.algebra().ad(&[int(1), int(2), int(-1)])).unwrap();
        assert!(muller_check(&m, &rot).unwrap());
        // orientation-reversing maps of so(3) are anti-automorphisms and still pass
        let swap = Mat::from_ints(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert!(muller_check(&m, &swap).unwrap());
        assert!(!muller_check(&m, &Mat::identity(3).scale(&int(2))).unwrap());
    }

    #[test]
    fn cross_isometry() {
        let (m, m2) = (n3(1), n3(2));
        let a = build_cross_isometry(&m, &m2).unwrap();
        assert!(muller_check_between(&m, &m2, &a).unwrap());
        assert_eq!(build_cross_isometry(&m, &m).unwrap(), Mat::identity(6));
    }
}
