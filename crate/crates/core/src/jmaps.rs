//! `J_z` maps of a 2-step nilpotent algebra with an inner product, and the
//! decision procedure for the existence of an ad-invariant metric.

use crate::error::{Error, Result};
use crate::exactla::{
    family_contains_invertible, vector, BilinearSpace, Invertibility, Mat, ParamMatrixFamily, Scalar, SubspaceBasis,
};
use crate::liealg::{series, LieAlgebra, MetricLieAlgebra};
use crate::sample;
use num_traits::Zero;

/// `J_z` for `z` running over a basis of `C¹`, as matrices on the
/// coordinates of `v_basis`, a basis of `V = 𝔷^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JData {
    pub algebra: LieAlgebra,
    pub inner: BilinearSpace,
    pub center: SubspaceBasis,
    pub commutator: SubspaceBasis,
    pub v_basis: SubspaceBasis,
    pub j_maps: Vec<Mat>,
    v_gram: Mat,
}

impl JData {
    pub fn v_dim(&self) -> usize {
        self.v_basis.dim()
    }

    /// `J_z` for `z` given in ambient coordinates; only the component in
    /// `C¹` matters once `z` lies in the commutator.
    pub fn j_of(&self, z: &[Scalar]) -> Mat {
        j_matrix(&self.algebra, &self.inner, self.v_basis.vectors(), &self.v_gram, z)
    }

    /// `J_z` for `z = Σ c_i · commutator_i`.
    pub fn j_of_coords(&self, c: &[Scalar]) -> Mat {
        let p = self.v_dim();
        let mut m = Mat::zeros(p, p);
        for (ci, j) in c.iter().zip(&self.j_maps) {
            if !ci.is_zero() {
                m = &m + &j.scale(ci);
            }
        }
        m
    }

    /// Gram matrix of the inner product on `V` in `v_basis` coordinates.
    pub fn v_gram(&self) -> &Mat {
        &self.v_gram
    }

    fn to_ambient(&self, coords: &[Scalar]) -> Vec<Scalar> {
        vector::combination(coords, self.v_basis.vectors(), self.algebra.dim())
    }
}

/// `X = G_V⁻¹ Mᵀ` with `M_ab = (z, [v_a, v_b])`, so that `(J_z u, v) = (z, [u, v])`.
fn j_matrix(l: &LieAlgebra, inner: &BilinearSpace, vs: &[Vec<Scalar>], v_gram: &Mat, z: &[Scalar]) -> Mat {
    let p = vs.len();
    let m = Mat::from_fn(p, p, |a, b| inner.pair(z, &l.bracket(&vs[a], &vs[b])));
    &v_gram.inverse().expect("inner product restricts to a definite form") * &m.transpose()
}

pub fn compute_j(l: &LieAlgebra, inner: &BilinearSpace) -> Result<JData> {
    if inner.dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: inner.dim() });
    }
    if !inner.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let s = series(l);
    if !s.is_at_most_two_step() {
        return Err(Error::NotTwoStep);
    }
    let v_basis = inner.orthogonal_complement(&s.center)?;
    let v_gram = inner.restrict(v_basis.vectors()).into_gram();
    let j_maps: Vec<Mat> = s
        .commutator
        .vectors()
        .iter()
        .map(|z| j_matrix(l, inner, v_basis.vectors(), &v_gram, z))
        .collect();
    for j in &j_maps {
        assert!((&(&v_gram * j) + &(&j.transpose() * &v_gram)).is_zero(), "J_z must be skew");
    }
    Ok(JData { algebra: l.clone(), inner: inner.clone(), center: s.center, commutator: s.commutator, v_basis, j_maps, v_gram })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `dim C¹ = dim V`
    I,
    /// `z ↦ J_z` injective on `C¹`
    II,
    /// an invertible `S: V → C¹` with `J_{Su}v + J_{Sv}u = 0`
    III,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// `s` maps `v_basis` coordinates to `commutator` coordinates.
    Yes { metric: BilinearSpace, s: Mat },
    No { failed: Condition },
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes { .. })
    }
}

/// The linear space of `S` (as `dim C¹ × dim V` matrices) satisfying
/// `J_{Su}v + J_{Sv}u = 0`.
pub fn symmetrizer_family(j: &JData) -> Result<ParamMatrixFamily> {
    let (k, p) = (j.commutator.dim(), j.v_dim());
    // unknown S_ia at index i*p + a; equation (a, b, r): Σ_i S_ia (J_i)_rb + S_ib (J_i)_ra = 0
    let mut rows = Vec::new();
    for a in 0..p {
        for b in a..p {
            for r in 0..p {
                let mut row = vec![Scalar::zero(); k * p];
                for (i, ji) in j.j_maps.iter().enumerate() {
                    row[i * p + a] += ji.get(r, b);
                    row[i * p + b] += ji.get(r, a);
                }
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        (0..k * p).map(|t| vector::unit(k * p, t)).collect()
    } else {
        Mat::from_rows(rows).kernel()
    };
    ParamMatrixFamily::from_vectors(k, p, &sol, |v| Mat::from_fn(k, p, |i, a| v[i * p + a].clone()))
}

fn j_injective(j: &JData) -> bool {
    let p = j.v_dim();
    let k = j.j_maps.len();
    if k == 0 {
        return true;
    }
    let stacked = Mat::from_fn(p * p, k, |r, i| j.j_maps[i].get(r / p, r % p).clone());
    stacked.rank() == k
}

pub fn decide_admits_ad_invariant(l: &LieAlgebra, inner: &BilinearSpace) -> Result<Decision> {
    let j = compute_j(l, inner)?;
    if j.commutator.dim() != j.v_dim() {
        return Ok(Decision::No { failed: Condition::I });
    }
    if !j_injective(&j) {
        return Ok(Decision::No { failed: Condition::II });
    }
    let family = symmetrizer_family(&j)?;
    match family_contains_invertible(&family)? {
        Invertibility::No { .. } => Ok(Decision::No { failed: Condition::III }),
        Invertibility::Yes { parameters } => {
            let s = family.evaluate(&parameters)?;
            let metric = metric_from_s(&j, &s)?;
            Ok(Decision::Yes { metric, s })
        }
    }
}

/// The metric of the converse construction: `⟨u, z⟩ = (Su, z)` between `V`
/// and `C¹`, both isotropic, extended by the inner product on a complement
/// of `C¹` in `𝔷` orthogonal to everything else. Re-verified to be ad-invariant.
pub fn metric_from_s(j: &JData, s: &Mat) -> Result<BilinearSpace> {
    let n = j.algebra.dim();
    let (k, p) = (j.commutator.dim(), j.v_dim());
    if s.rows() != k || s.cols() != p {
        return Err(Error::SizeMismatch(format!("S is {}x{}, expected {k}x{p}", s.rows(), s.cols())));
    }
    if !s.is_invertible() {
        return Err(Error::Singular);
    }
    let z_tilde = j.commutator.complement_in(&j.center);
    let m = z_tilde.dim();
    let cs = j.commutator.vectors();
    let vs = j.v_basis.vectors();
    // ordered basis Q = [z̃ | C¹ | V]
    let mut g = Mat::zeros(n, n);
    g.set_block(0, 0, &j.inner.restrict(z_tilde.vectors()).into_gram());
    for a in 0..p {
        let su = vector::combination(&s.column(a), cs, n);
        for (i, c) in cs.iter().enumerate() {
            let x = j.inner.pair(&su, c);
            g.set(m + i, m + k + a, x.clone());
            g.set(m + k + a, m + i, x);
        }
    }
    let mut cols: Vec<Vec<Scalar>> = z_tilde.vectors().to_vec();
    cols.extend(cs.iter().cloned());
    cols.extend(vs.iter().cloned());
    let q_inv = Mat::from_columns(n, &cols).inverse().ok_or(Error::Singular)?;
    let gram = &(&q_inv.transpose() * &g) * &q_inv;
    let metric = BilinearSpace::metric(gram)?;
    MetricLieAlgebra::new(j.algebra.clone(), metric.clone())?.require_ad_invariant()?;
    Ok(metric)
}

/// `J_z² = −(z, z)·I` on a basis `c_i` of `C¹` and on all sums `c_i + c_j`;
/// the defect is quadratic in `z`, so these values determine it.
pub fn is_h_type(j: &JData) -> bool {
    let k = j.commutator.dim();
    let p = j.v_dim();
    let check = |c: &[Scalar]| {
        let z = vector::combination(c, j.commutator.vectors(), j.algebra.dim());
        let jz = j.j_of_coords(c);
        &jz * &jz == Mat::identity(p).scale(&-j.inner.pair(&z, &z))
    };
    for a in 0..k {
        if !check(&vector::unit(k, a)) {
            return false;
        }
        for b in a + 1..k {
            if !check(&vector::add(&vector::unit(k, a), &vector::unit(k, b))) {
                return false;
            }
        }
    }
    true
}

/// A pair `(z, u)` of nonzero ambient vectors, `z ∈ C¹`, `u ∈ V`, with
/// `J_z u = 0`. Searches basis directions, the columns of `s` when given, and
/// seeded random combinations. `None` does not certify non-singularity.
pub fn singular_witness(j: &JData, s: Option<&Mat>, seed: u64) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
    let k = j.commutator.dim();
    let p = j.v_dim();
    let n = j.algebra.dim();
    let try_coords = |c: &[Scalar]| -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        if vector::is_zero(c) {
            return None;
        }
        let ker = j.j_of_coords(c).kernel();
        let u = ker.into_iter().next()?;
        let z = vector::combination(c, j.commutator.vectors(), n);
        let u = j.to_ambient(&u);
        (!vector::is_zero(&z) && !vector::is_zero(&u) && verify_witness(j, &z, &u)).then_some((z, u))
    };
    if let Some(s) = s {
        for a in 0..p.min(s.cols()) {
            let z_coords = s.column(a);
            // J_{S v_a} v_a = 0 by the defining relation of S
            let z = vector::combination(&z_coords, j.commutator.vectors(), n);
            let u = j.to_ambient(&vector::unit(p, a));
            if !vector::is_zero(&z) && verify_witness(j, &z, &u) {
                return Some((z, u));
            }
        }
    }
    for a in 0..k {
        if let Some(w) = try_coords(&vector::unit(k, a)) {
            return Some(w);
        }
    }
    let mut rng = sample::rng(seed);
    for _ in 0..32 {
        if let Some(w) = try_coords(&sample::vector(&mut rng, k, 9)) {
            return Some(w);
        }
    }
    None
}

/// `z ∈ C¹`, `u ∈ V` and `(z, [u, v]) = 0` for every `v ∈ V`.
pub fn verify_witness(j: &JData, z: &[Scalar], u: &[Scalar]) -> bool {
    j.commutator.contains(z)
        && j.v_basis.contains(u)
        && j.v_basis.vectors().iter().all(|v| j.inner.pair(z, &j.algebra.bracket(u, v)).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvLemma {
    /// `J_{z_i} v_j + J_{z_j} v_i = 0` for all `i < j`.
    pub holds: bool,
    /// The metric built from `S(v_i) = z_i` when `holds`.
    pub metric: Option<BilinearSpace>,
}

/// Tests the cross-term form of the pairing hypothesis for `(z_i, v_i)`
/// given in ambient coordinates, after checking `v_i ∈ Ker J_{z_i}`.
pub fn check_ev_lemma(j: &JData, z_basis: &[Vec<Scalar>], v_basis: &[Vec<Scalar>]) -> Result<EvLemma> {
    let k = j.commutator.dim();
    let p = j.v_dim();
    if z_basis.len() != v_basis.len() || z_basis.len() != k || k != p {
        return Err(Error::SizeMismatch(format!(
            "{} central and {} complementary vectors for dim C¹ = {k}, dim V = {p}",
            z_basis.len(),
            v_basis.len()
        )));
    }
    let zc: Vec<Vec<Scalar>> = z_basis
        .iter()
        .map(|z| j.commutator.coordinates(z).ok_or_else(|| Error::NotEligible("z not in C¹".into())))
        .collect::<Result<_>>()?;
    let vc: Vec<Vec<Scalar>> = v_basis
        .iter()
        .map(|v| j.v_basis.coordinates(v).ok_or_else(|| Error::NotEligible("v not in V".into())))
        .collect::<Result<_>>()?;
    let jz: Vec<Mat> = zc.iter().map(|c| j.j_of_coords(c)).collect();
    for (ji, vi) in jz.iter().zip(&vc) {
        if !vector::is_zero(&ji.mul_vec(vi)) {
            return Err(Error::NotEligible("v_i is not in Ker J_{z_i}".into()));
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            let cross = vector::add(&jz[a].mul_vec(&vc[b]), &jz[b].mul_vec(&vc[a]));
            if !vector::is_zero(&cross) {
                return Ok(EvLemma { holds: false, metric: None });
            }
        }
    }
    // S(v_i) = z_i in coordinates: S · [vc] = [zc]
    let vmat = Mat::from_columns(p, &vc);
    let zmat = Mat::from_columns(k, &zc);
    let s = &zmat * &vmat.inverse().ok_or(Error::Singular)?;
    let metric = metric_from_s(j, &s)?;
    Ok(EvLemma { holds: true, metric: Some(metric) })
}

/// The pairs `z_i = S(v_i)`, `v_i`, in ambient coordinates, for the
/// `v_basis` of `j`.
pub fn ev_pairs_from_s(j: &JData, s: &Mat) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    let n = j.algebra.dim();
    let zs = (0..s.cols()).map(|a| vector::combination(&s.column(a), j.commutator.vectors(), n)).collect();
    let vs = j.v_basis.vectors().to_vec();
    (zs, vs)
}
