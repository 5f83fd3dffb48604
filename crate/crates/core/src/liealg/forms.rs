use super::algebra::LieAlgebra;
use super::metric::MetricLieAlgebra;
use super::series::series;
use crate::error::Result;
use crate::exactla::{vector, Mat, ParamMatrixFamily, Scalar};
use num_traits::Zero;

fn sym_index(d: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * d - a * (a + 1) / 2 + b
}

/// All symmetric bilinear forms `g` with `g([x,y],z) + g(y,[x,z]) = 0`, as a
/// linear family of Gram matrices.
pub fn invariant_symmetric_forms(l: &LieAlgebra) -> ParamMatrixFamily {
    let d = l.dim();
    let unknowns = d * (d + 1) / 2;
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let bij = l.bracket_basis(i, j);
            for k in j..d {
                let bik = l.bracket_basis(i, k);
                let mut row = vec![Scalar::zero(); unknowns];
                for m in 0..d {
                    if !bij[m].is_zero() {
                        row[sym_index(d, m, k)] += &bij[m];
                    }
                    if !bik[m].is_zero() {
                        row[sym_index(d, j, m)] += &bik[m];
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions = if rows.is_empty() {
        (0..unknowns).map(|u| vector::unit(unknowns, u)).collect()
    } else {
        Mat::from_rows(rows).kernel()
    };
    ParamMatrixFamily::from_vectors(d, d, &solutions, |v| Mat::from_fn(d, d, |a, b| v[sym_index(d, a, b)].clone()))
        .expect("shapes agree")
}

/// Outcome of comparing `(C^r)^⊥` with `C_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpDuality {
    /// Entry `r` holds whether `(C^r)^⊥ = C_r`.
    pub per_level: Vec<bool>,
    /// `dim g = dim 𝔷 + dim C¹`
    pub dimension_identity: bool,
}

impl PerpDuality {
    pub fn holds(&self) -> bool {
        self.dimension_identity && self.per_level.iter().all(|&b| b)
    }
}

pub fn check_perp_duality(m: &MetricLieAlgebra) -> Result<PerpDuality> {
    m.require_ad_invariant()?;
    let s = series(m.algebra());
    let levels = s.descending.len().max(s.ascending.len());
    let mut per_level = Vec::with_capacity(levels);
    for r in 0..levels {
        let perp = m.metric().orthogonal_complement(s.descending_at(r))?;
        per_level.push(perp == *s.ascending_at(r));
    }
    let dimension_identity = m.dim() == s.center.dim() + s.commutator.dim();
    Ok(PerpDuality { per_level, dimension_identity })
}

/// Derivations `D` with `⟨Dx, y⟩ + ⟨x, Dy⟩ = 0`, as a linear family.
pub fn skew_derivations(m: &MetricLieAlgebra) -> Result<ParamMatrixFamily> {
    m.require_ad_invariant()?;
    let l = m.algebra();
    let g = m.gram();
    let d = l.dim();
    let idx = |a: usize, b: usize| a * d + b;
    let mut rows = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let bij = l.bracket_basis(i, j);
            for k in 0..d {
                // (D[e_i,e_j] − [De_i,e_j] − [e_i,De_j])_k = 0
                let mut row = vec![Scalar::zero(); d * d];
                for mm in 0..d {
                    if !bij[mm].is_zero() {
                        row[idx(k, mm)] += &bij[mm];
                    }
                }
                for a in 0..d {
                    let c_aj = l.structure_constant(a, j, k);
                    if !c_aj.is_zero() {
                        row[idx(a, i)] -= c_aj;
                    }
                    let c_ia = l.structure_constant(i, a, k);
                    if !c_ia.is_zero() {
                        row[idx(a, j)] -= c_ia;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    for a in 0..d {
        for b in a..d {
            // (GD + DᵀG)_ab = 0
            let mut row = vec![Scalar::zero(); d * d];
            for mm in 0..d {
                if !g.get(a, mm).is_zero() {
                    row[idx(mm, b)] += g.get(a, mm);
                }
                if !g.get(mm, b).is_zero() {
                    row[idx(mm, a)] += g.get(mm, b);
                }
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    let solutions = Mat::from_rows(rows).kernel();
    ParamMatrixFamily::from_vectors(d, d, &solutions, |v| Mat::from_fn(d, d, |a, b| v[idx(a, b)].clone()))
}

/// `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs.
pub fn is_derivation(l: &LieAlgebra, dmat: &Mat) -> bool {
    let d = l.dim();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|i| dmat.column(i)).collect();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = dmat.mul_vec(&l.bracket_basis(i, j));
            let rhs = vector::add(&l.bracket(&cols[i], &vector::unit(d, j)), &l.bracket(&vector::unit(d, i), &cols[j]));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `GD + DᵀG = 0`
pub fn is_skew_for(gram: &Mat, dmat: &Mat) -> bool {
    (&(gram * dmat) + &(&dmat.transpose() * gram)).is_zero()
}
