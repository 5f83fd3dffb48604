use super::algebra::LieAlgebra;
use crate::exactla::{Mat, SubspaceBasis};

/// Central series data. `descending[r] = C^r` with `C^0 = g`; `ascending[r] = C_r`
/// with `C_0 = 0`. Both lists stop at the first repeated term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub descending: Vec<SubspaceBasis>,
    pub ascending: Vec<SubspaceBasis>,
    pub center: SubspaceBasis,
    pub commutator: SubspaceBasis,
    /// Least `k` with `C^k = 0`; `None` when the algebra is not nilpotent.
    pub nilpotency_class: Option<usize>,
    /// `dim 𝔷 − dim C¹`, reported for every nilpotent algebra. It can be
    /// negative from class three on.
    pub corank: Option<i64>,
}

impl SeriesReport {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }

    pub fn is_two_step(&self) -> bool {
        self.nilpotency_class == Some(2)
    }

    /// Class at most two, abelian algebras included.
    pub fn is_at_most_two_step(&self) -> bool {
        matches!(self.nilpotency_class, Some(c) if c <= 2)
    }

    /// `C^r`, extended by the stable value past the end of the list.
    pub fn descending_at(&self, r: usize) -> &SubspaceBasis {
        &self.descending[r.min(self.descending.len() - 1)]
    }

    pub fn ascending_at(&self, r: usize) -> &SubspaceBasis {
        &self.ascending[r.min(self.ascending.len() - 1)]
    }
}

pub fn series(l: &LieAlgebra) -> SeriesReport {
    let d = l.dim();
    let mut descending = vec![SubspaceBasis::full(d)];
    loop {
        let next = l.bracket_with_algebra(descending.last().expect("nonempty"));
        if next == *descending.last().expect("nonempty") {
            break;
        }
        descending.push(next);
    }

    let ads: Vec<Mat> = (0..d).map(|j| l.ad_basis(j)).collect();
    let mut ascending = vec![SubspaceBasis::zero(d)];
    loop {
        let prev = ascending.last().expect("nonempty");
        // x ∈ C_r iff f([x, e_j]) = 0 for all f ∈ ann(C_{r-1}) and all j
        let ann = prev.annihilator();
        let mut rows = Vec::new();
        for ad in &ads {
            if ad.is_zero() {
                continue;
            }
            rows.extend(ann.vectors().iter().map(|f| ad.transpose().mul_vec(f)));
        }
        let next = if rows.is_empty() {
            SubspaceBasis::full(d)
        } else {
            SubspaceBasis::span(d, &Mat::from_rows(rows).kernel()).expect("ambient dimensions agree")
        };
        if next == *prev {
            break;
        }
        ascending.push(next);
    }

    let nilpotency_class = descending.last().filter(|s| s.is_zero()).map(|_| descending.len() - 1);
    let center = ascending.get(1).cloned().unwrap_or_else(|| SubspaceBasis::zero(d));
    let commutator = descending.get(1).cloned().unwrap_or_else(|| descending[0].clone());
    let corank = nilpotency_class.map(|_| center.dim() as i64 - commutator.dim() as i64);
    SeriesReport { descending, ascending, center, commutator, nilpotency_class, corank }
}
