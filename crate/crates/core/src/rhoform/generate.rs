use super::form::{dim4_radical_witness, from_form, AltTrilinearForm};
use super::RhoMap;
use crate::error::{Error, Result};
use crate::exactla::{int, vector, Mat, Scalar, SubspaceBasis};
use crate::sample;
use num_traits::Zero;

/// The three-dimensional map with
/// `A¹ = [[0,0,0],[0,0,a],[0,−a,0]]`, `A² = [[0,0,−a],[0,0,0],[a,0,0]]`,
/// `A³ = [[0,a,0],[−a,0,0],[0,0,0]]`.
pub fn primitive3(a: &Scalar) -> Result<RhoMap> {
    if a.is_zero() {
        return Err(Error::BadParameter("the three-dimensional family needs a ≠ 0".into()));
    }
    let m = |entries: [(usize, usize, i64); 2]| {
        let mut out = Mat::zeros(3, 3);
        for (r, c, s) in entries {
            out.set(r, c, a * int(s));
        }
        out
    };
    RhoMap::euclidean(vec![m([(1, 2, 1), (2, 1, -1)]), m([(0, 2, -1), (2, 0, 1)]), m([(0, 1, 1), (1, 0, -1)])])
}

/// The 3×3 building block `r¹, r², r³` of the block construction, equal to
/// the three-dimensional family at `a = −1`.
pub fn r_block() -> RhoMap {
    primitive3(&int(-1)).expect("nonzero parameter")
}

fn sparse5(entries: &[(usize, usize, i64)]) -> Mat {
    let mut m = Mat::zeros(5, 5);
    for &(r, c, v) in entries {
        m.set(r, c, int(v));
    }
    m
}

/// Five-dimensional map: `r¹`, `r²` on the first three coordinates followed by
/// the three 5×5 tail matrices, the last one with its sign flipped so that
/// `ρ(v)v = 0` holds.
pub fn primitive5() -> RhoMap {
    let r = r_block();
    let pad = |m: &Mat| {
        let mut out = Mat::zeros(5, 5);
        out.set_block(0, 0, m);
        out
    };
    let mats = vec![
        pad(&r.mats()[0]),
        pad(&r.mats()[1]),
        sparse5(&[(0, 1, -1), (1, 0, 1), (3, 4, -1), (4, 3, 1)]),
        sparse5(&[(2, 4, 1), (4, 2, -1)]),
        sparse5(&[(2, 3, -1), (3, 2, 1)]),
    ];
    RhoMap::euclidean(mats).expect("shapes agree")
}

/// Seven-dimensional map from the 3-form `Σ e^{ijk}` over the Fano lines
/// 123, 145, 176, 246, 257, 347, 365 (1-based), i.e. the octonionic cross product.
pub fn primitive7() -> RhoMap {
    let mut w = AltTrilinearForm::zero(7);
    for (i, j, k) in [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)] {
        w.set(i - 1, j - 1, k - 1, int(1));
    }
    from_form(&w, &Mat::identity(7)).expect("identity gram")
}

/// Primitive building blocks of sizes 3 (with `a = 1`), 5 and 7.
pub fn primitive(n: usize) -> Result<RhoMap> {
    match n {
        3 => primitive3(&int(1)),
        5 => Ok(primitive5()),
        7 => Ok(primitive7()),
        _ => Err(Error::BadParameter(format!("no primitive map in dimension {n}"))),
    }
}

/// Evidence that no injective `ρ` with `ρ(v)v = 0` exists in dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonexistenceCertificate {
    pub dim: usize,
    pub witness_rule: String,
    /// Random alternating forms on which the witness was checked.
    pub checked_samples: usize,
    pub all_samples_passed: bool,
    /// Dimension of the space of skew maps with `ρ(v)v = 0` (Euclidean metric).
    pub form_space_dim: usize,
    /// Whether the witness property was proved for every form, not just sampled.
    pub symbolic_check: bool,
}

impl NonexistenceCertificate {
    pub fn is_valid(&self) -> bool {
        self.all_samples_passed && self.symbolic_check
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generated {
    Rho(RhoMap),
    Certificate(NonexistenceCertificate),
}

impl Generated {
    pub fn rho(self) -> Option<RhoMap> {
        match self {
            Generated::Rho(r) => Some(r),
            Generated::Certificate(_) => None,
        }
    }
}

pub fn generate(n: usize) -> Result<Generated> {
    generate_with(n, 100, 0)
}

/// For `n ≡ 0 (mod 3)`: `n/3` copies of the 3×3 block. For `n ≡ 2`: 3×3
/// blocks followed by one five-dimensional primitive. For `n ≡ 1`, `n ≥ 7`:
/// 3×3 blocks followed by the seven-dimensional primitive. Dimensions 1, 2
/// and 4 yield a certificate built from `samples` seeded random forms.
pub fn generate_with(n: usize, samples: usize, seed: u64) -> Result<Generated> {
    if n == 0 {
        return Err(Error::BadParameter("dimension must be positive".into()));
    }
    if matches!(n, 1 | 2 | 4) {
        return Ok(Generated::Certificate(nonexistence_certificate(n, samples, seed)?));
    }
    let (threes, tail) = match n % 3 {
        0 => (n / 3, None),
        2 => ((n - 5) / 3, Some(primitive5())),
        _ => ((n - 7) / 3, Some(primitive7())),
    };
    let block = r_block();
    let mut rho = RhoMap::empty();
    for _ in 0..threes {
        rho = rho.direct_sum(&block);
    }
    if let Some(t) = tail {
        rho = rho.direct_sum(&t);
    }
    Ok(Generated::Rho(rho))
}

/// All `(A¹, …, Aⁿ)` that are skew for `gram` and satisfy `A^i e_j + A^j e_i = 0`,
/// as a subspace of `Q^{n³}` with coordinate `(i, r, c) ↦ i·n² + r·n + c`.
/// Dense elimination; intended for small `n`.
pub fn constraint_space(n: usize, gram: &Mat) -> SubspaceBasis {
    let size = n * n * n;
    let idx = |i: usize, r: usize, c: usize| i * n * n + r * n + c;
    let mut rows = Vec::new();
    for i in 0..n {
        for r in 0..n {
            for c in r..n {
                // (G A^i + (A^i)ᵀ G)_{rc}
                let mut row = vec![Scalar::zero(); size];
                for m in 0..n {
                    row[idx(i, m, c)] += gram.get(r, m);
                    row[idx(i, m, r)] += gram.get(m, c);
                }
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            for r in 0..n {
                let mut row = vec![Scalar::zero(); size];
                row[idx(i, r, j)] += int(1);
                row[idx(j, r, i)] += int(1);
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return SubspaceBasis::full(size);
    }
    SubspaceBasis::span(size, &Mat::from_rows(rows).kernel()).expect("ambient dimensions agree")
}

pub fn nonexistence_certificate(n: usize, samples: usize, seed: u64) -> Result<NonexistenceCertificate> {
    let form_space_dim = constraint_space(n, &Mat::identity(n)).dim();
    match n {
        1 | 2 => Ok(NonexistenceCertificate {
            dim: n,
            witness_rule: "the space of skew maps with ρ(v)v = 0 is zero, so ρ = 0".into(),
            checked_samples: 0,
            all_samples_passed: true,
            form_space_dim,
            symbolic_check: form_space_dim == 0,
        }),
        4 => {
            let mut rng = sample::rng(seed);
            let mut all_samples_passed = true;
            for _ in 0..samples {
                let w = sample::alternating_form(&mut rng, 4, 9);
                all_samples_passed &= witness_holds(&w)?;
            }
            // ρ_ω(x(ω)) is a homogeneous quadratic in the four components of
            // ω, so vanishing on the degree-2 simplex lattice proves it ≡ 0.
            // Every admissible ρ comes from such an ω since the constraint
            // space has dimension C(4,3) = 4.
            let mut symbolic_check = form_space_dim == 4;
            let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
            for a in 0..=2i64 {
                for b in 0..=2 - a {
                    for c in 0..=2 - a - b {
                        for d in 0..=2 - a - b - c {
                            let mut w = AltTrilinearForm::zero(4);
                            for (&(i, j, k), v) in triples.iter().zip([a, b, c, d]) {
                                w.set(i, j, k, int(v));
                            }
                            symbolic_check &= witness_holds(&w)?;
                        }
                    }
                }
            }
            Ok(NonexistenceCertificate {
                dim: 4,
                witness_rule: "x = (ω₂₃₄, −ω₁₃₄, ω₁₂₄, −ω₁₂₃) satisfies ρ(x) = 0, and x = 0 only when ω = 0".into(),
                checked_samples: samples,
                all_samples_passed,
                form_space_dim,
                symbolic_check,
            })
        }
        _ => Err(Error::BadParameter(format!("no nonexistence certificate in dimension {n}"))),
    }
}

fn witness_holds(w: &AltTrilinearForm) -> Result<bool> {
    let rho = from_form(w, &Mat::identity(4))?;
    let x = dim4_radical_witness(w);
    let nonzero_when_needed = !vector::is_zero(&x) || w.is_zero();
    Ok(rho.apply(&x).is_zero() && nonzero_when_needed)
}
