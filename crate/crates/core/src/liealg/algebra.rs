use crate::error::{Error, Result};
use crate::exactla::{vector, Mat, Scalar, SubspaceBasis};
use num_traits::Zero;

/// A finite-dimensional Lie algebra given by structure constants
/// `[e_i, e_j] = Σ_k c^k_ij e_k`. Only the brackets with `i < j` are stored;
/// antisymmetry is implied. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<Vec<Scalar>>,
    sparse: Vec<Vec<(usize, Scalar)>>,
    labels: Option<Vec<String>>,
}

/// Violations found by [`LieAlgebra::validate`] or [`validate_constants`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// `(i, j, k)` with `c^k_ij ≠ −c^k_ji`, or `c^k_ii ≠ 0`.
    pub antisymmetry: Vec<(usize, usize, usize)>,
    /// `(i, j, k, l)` where component `l` of the Jacobiator of `e_i, e_j, e_k` is nonzero.
    pub jacobi: Vec<(usize, usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

fn sparsify(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        let pairs = dim * dim.saturating_sub(1) / 2;
        Self { dim, table: vec![vector::zeros(dim); pairs], sparse: vec![Vec::new(); pairs], labels: None }
    }

    /// Sets `[e_i, e_j] = value` (and so `[e_j, e_i] = −value`).
    pub fn with_bracket(mut self, i: usize, j: usize, value: Vec<Scalar>) -> Result<Self> {
        self.set_bracket(i, j, value)?;
        Ok(self)
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<Scalar>) -> Result<()> {
        let d = self.dim;
        if i >= d || j >= d {
            return Err(Error::DimensionMismatch { expected: d, found: i.max(j) + 1 });
        }
        if value.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: value.len() });
        }
        if i == j {
            return if vector::is_zero(&value) {
                Ok(())
            } else {
                Err(Error::ShapeMismatch(format!("[e_{i}, e_{i}] must vanish")))
            };
        }
        let (a, b, v) = if i < j { (i, j, value) } else { (j, i, vector::neg(&value)) };
        let p = pair_index(d, a, b);
        self.sparse[p] = sparsify(&v);
        self.table[p] = v;
        Ok(())
    }

    /// Builds an algebra from `(i, j, [e_i, e_j])` triples; unlisted pairs commute.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let mut l = Self::abelian(dim);
        for (i, j, v) in brackets {
            l.set_bracket(*i, *j, v.clone())?;
        }
        Ok(l)
    }

    /// Builds an algebra from a full tensor `c[i][j][k] = c^k_ij`, rejecting
    /// tensors that are not antisymmetric in `i, j`.
    pub fn from_constants(c: &[Vec<Vec<Scalar>>]) -> Result<Self> {
        let dim = c.len();
        let report = validate_constants(c)?;
        if let Some(&t) = report.antisymmetry.first() {
            return Err(Error::ShapeMismatch(format!("structure constants not antisymmetric at {t:?}")));
        }
        let mut l = Self::abelian(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                l.set_bracket(i, j, c[i][j].clone())?;
            }
        }
        Ok(l)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vector::zeros(self.dim),
            std::cmp::Ordering::Less => self.table[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => vector::neg(&self.table[pair_index(self.dim, j, i)]),
        }
    }

    /// Nonzero entries of `[e_i, e_j]` for `i < j`.
    pub fn sparse_bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[pair_index(self.dim, i, j)]
    }

    /// `c^k_ij`
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Scalar::zero(),
            std::cmp::Ordering::Less => self.table[pair_index(self.dim, i, j)][k].clone(),
            std::cmp::Ordering::Greater => -&self.table[pair_index(self.dim, j, i)][k],
        }
    }

    /// Iterates over `(i, j, [e_i, e_j])` for `i < j` with nonzero bracket.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Scalar)])> + '_ {
        let d = self.dim;
        (0..d)
            .flat_map(move |i| (i + 1..d).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.sparse_bracket(i, j)))
            .filter(|(_, _, v)| !v.is_empty())
    }

    pub fn is_abelian(&self) -> bool {
        self.sparse.iter().all(Vec::is_empty)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.dim);
        for (i, j, v) in self.nonzero_brackets() {
            let coeff = &x[i] * &y[j] - &x[j] * &y[i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in v {
                out[*k] += &coeff * c;
            }
        }
        out
    }

    /// Matrix of `ad_{e_i}`: column `j` is `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> Mat {
        let d = self.dim;
        let mut m = Mat::zeros(d, d);
        for j in 0..d {
            if i == j {
                continue;
            }
            let (a, b, sign) = if i < j { (i, j, true) } else { (j, i, false) };
            for (k, c) in self.sparse_bracket(a, b) {
                m.set(*k, j, if sign { c.clone() } else { -c });
            }
        }
        m
    }

    pub fn ad(&self, x: &[Scalar]) -> Mat {
        let d = self.dim;
        let mut m = Mat::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &self.ad_basis(i).scale(xi);
            }
        }
        m
    }

    /// `[[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j]`
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut out = vector::zeros(self.dim);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.bracket_basis(a, b);
            for (m, coeff) in inner.iter().enumerate() {
                if coeff.is_zero() || m == c {
                    continue;
                }
                let outer = self.bracket_basis(m, c);
                vector::axpy(&mut out, coeff, &outer);
            }
        }
        out
    }

    /// Every Jacobi violation. Antisymmetry is built into the storage, so
    /// only the Jacobi part can be nonempty.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim;
        let mut report = ValidationReport::default();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    for (l, v) in self.jacobiator(i, j, k).iter().enumerate() {
                        if !v.is_zero() {
                            report.jacobi.push((i, j, k, l));
                        }
                    }
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// The span of `[x, w]` over `x ∈ g`, `w ∈ w_space`.
    pub fn bracket_with_algebra(&self, w_space: &SubspaceBasis) -> SubspaceBasis {
        let mut vectors = Vec::new();
        for i in 0..self.dim {
            let ad = self.ad_basis(i);
            if ad.is_zero() {
                continue;
            }
            vectors.extend(w_space.vectors().iter().map(|w| ad.mul_vec(w)));
        }
        SubspaceBasis::span(self.dim, &vectors).expect("ambient dimensions agree")
    }

    pub fn is_ideal(&self, w: &SubspaceBasis) -> bool {
        w.contains_subspace(&self.bracket_with_algebra(w))
    }

    pub fn is_subalgebra(&self, w: &SubspaceBasis) -> bool {
        let vs = w.vectors();
        (0..vs.len()).all(|a| (a + 1..vs.len()).all(|b| w.contains(&self.bracket(&vs[a], &vs[b]))))
    }

    /// Structure constants in the basis `f_i = P e_i`:
    /// `[f_i, f_j]' = P^{-1} [P e_i, P e_j]`.
    pub fn transport(&self, p: &Mat) -> Result<LieAlgebra> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.rows() });
        }
        let p_inv = p.inverse().ok_or(Error::Singular)?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|i| p.column(i)).collect();
        let mut out = LieAlgebra::abelian(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let b = self.bracket(&cols[i], &cols[j]);
                out.set_bracket(i, j, p_inv.mul_vec(&b))?;
            }
        }
        Ok(out)
    }

    /// The subalgebra spanned by `basis`, in the coordinates of `basis`.
    pub fn restrict(&self, basis: &[Vec<Scalar>]) -> Result<LieAlgebra> {
        let span = SubspaceBasis::from_independent(self.dim, basis)?;
        let cols = Mat::from_columns(self.dim, basis);
        let mut out = LieAlgebra::abelian(basis.len());
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let v = self.bracket(&basis[a], &basis[b]);
                if !span.contains(&v) {
                    return Err(Error::ShapeMismatch("span is not closed under the bracket".into()));
                }
                let coords = crate::exactla::solve_linear(&cols, &v)?.particular;
                out.set_bracket(a, b, coords)?;
            }
        }
        Ok(out)
    }

    /// `self ⊕ other`, with `self` occupying the first coordinates.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (d1, d2) = (self.dim, other.dim);
        let mut out = LieAlgebra::abelian(d1 + d2);
        for (i, j, v) in self.nonzero_brackets() {
            let mut w = vector::zeros(d1 + d2);
            for (k, c) in v {
                w[*k] = c.clone();
            }
            out.set_bracket(i, j, w).expect("indices in range");
        }
        for (i, j, v) in other.nonzero_brackets() {
            let mut w = vector::zeros(d1 + d2);
            for (k, c) in v {
                w[d1 + k] = c.clone();
            }
            out.set_bracket(d1 + i, d1 + j, w).expect("indices in range");
        }
        if self.labels.is_some() || other.labels.is_some() {
            let a = self.labels.clone().unwrap_or_else(|| default_labels(0, d1));
            let b = other.labels.clone().unwrap_or_else(|| default_labels(d1, d2));
            out.labels = Some(a.into_iter().chain(b).collect());
        }
        out
    }
}

fn default_labels(offset: usize, count: usize) -> Vec<String> {
    (offset..offset + count).map(|i| format!("e{}", i + 1)).collect()
}

/// Checks a raw tensor `c[i][j][k] = c^k_ij` for antisymmetry and Jacobi.
pub fn validate_constants(c: &[Vec<Vec<Scalar>>]) -> Result<ValidationReport> {
    let dim = c.len();
    if let Some(bad) = c.iter().flatten().find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
    }
    if let Some(bad) = c.iter().find(|row| row.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
    }
    let mut report = ValidationReport::default();
    for i in 0..dim {
        for j in i..dim {
            for k in 0..dim {
                let ok = if i == j { c[i][i][k].is_zero() } else { (&c[i][j][k] + &c[j][i][k]).is_zero() };
                if !ok {
                    report.antisymmetry.push((i, j, k));
                }
            }
        }
    }
    if report.antisymmetry.is_empty() {
        let mut l = LieAlgebra::abelian(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                l.set_bracket(i, j, c[i][j].clone())?;
            }
        }
        report.jacobi = l.validate().jacobi;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn h3() -> LieAlgebra {
        LieAlgebra::abelian(3).with_bracket(0, 1, vec![int(0), int(0), int(1)]).unwrap()
    }

    fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![int(0), int(0), int(1)]),
                (1, 2, vec![int(1), int(0), int(0)]),
                (2, 0, vec![int(0), int(1), int(0)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn pair_indices_are_dense() {
        let d = 5;
        let mut seen = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                seen.push(pair_index(d, i, j));
            }
        }
        assert_eq!(seen, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn heisenberg_and_so3_are_valid() {
        assert!(h3().is_valid());
        assert!(so3().is_valid());
    }

    #[test]
    fn antisymmetry_violation_reported() {
        let mut c = vec![vec![vec![int(0); 3]; 3]; 3];
        c[0][1][2] = int(1);
        c[1][0][2] = int(1);
        let r = validate_constants(&c).unwrap();
        assert_eq!(r.antisymmetry, vec![(0, 1, 2)]);
        assert!(LieAlgebra::from_constants(&c).is_err());
    }

    #[test]
    fn jacobi_violation_reported() {
        // [e0,e1]=e1, [e0,e2]=e2, [e1,e2]=e0 breaks Jacobi
        let l = LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![int(0), int(1), int(0)]),
                (0, 2, vec![int(0), int(0), int(1)]),
                (1, 2, vec![int(1), int(0), int(0)]),
            ],
        )
        .unwrap();
        assert!(!l.validate().jacobi.is_empty());
    }

    #[test]
    fn reversed_pairs_are_negated() {
        let l = LieAlgebra::abelian(3).with_bracket(1, 0, vec![int(0), int(0), int(1)]).unwrap();
        assert_eq!(l.structure_constant(0, 1, 2), int(-1));
        assert!(LieAlgebra::abelian(2).with_bracket(1, 1, vec![int(1), int(0)]).is_err());
    }

    #[test]
    fn ad_matches_bracket() {
        let l = so3();
        let x = vec![int(1), int(2), int(-1)];
        let y = vec![int(3), int(0), int(5)];
        assert_eq!(l.ad(&x).mul_vec(&y), l.bracket(&x, &y));
    }

    #[test]
    fn transport_by_scaling() {
        let l = h3().transport(&Mat::diagonal(&[int(2), int(1), int(1)])).unwrap();
        assert_eq!(l.bracket_basis(0, 1), vec![int(0), int(0), int(2)]);
        assert!(h3().transport(&Mat::zeros(3, 3)).is_err());
    }

    #[test]
    fn restrict_and_ideals() {
        let l = h3().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(l.dim(), 4);
        let center = SubspaceBasis::span(4, &[vector::unit(4, 2), vector::unit(4, 3)]).unwrap();
        assert!(l.is_ideal(&center));
        let sub = l.restrict(&[vector::unit(4, 0), vector::unit(4, 1), vector::unit(4, 2)]).unwrap();
        assert_eq!(sub, h3());
        assert!(l.restrict(&[vector::unit(4, 0), vector::unit(4, 1)]).is_err());
    }
}
