use super::mat::Mat;
use super::scalar::{binomial, int, Scalar};
use crate::error::{Error, Result};
use num_traits::Zero;
use petgraph::algo::{maximum_matching, tarjan_scc};
use petgraph::graph::{DiGraph, UnGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The affine family `{base + Σ t_i · directions[i]}` of equally shaped matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMatrixFamily {
    base: Mat,
    directions: Vec<Mat>,
}

impl ParamMatrixFamily {
    pub fn new(base: Mat, directions: Vec<Mat>) -> Result<Self> {
        if let Some(d) = directions.iter().find(|d| d.rows() != base.rows() || d.cols() != base.cols()) {
            return Err(Error::ShapeMismatch(format!(
                "direction is {}x{}, base is {}x{}",
                d.rows(),
                d.cols(),
                base.rows(),
                base.cols()
            )));
        }
        Ok(Self { base, directions })
    }

    /// The linear span of `directions` (zero base).
    pub fn linear(rows: usize, cols: usize, directions: Vec<Mat>) -> Result<Self> {
        Self::new(Mat::zeros(rows, cols), directions)
    }

    /// Builds the linear family whose directions are the vectors of a
    /// solution basis reshaped by `assemble`.
    pub fn from_vectors(
        rows: usize,
        cols: usize,
        vectors: &[Vec<Scalar>],
        assemble: impl Fn(&[Scalar]) -> Mat,
    ) -> Result<Self> {
        Self::linear(rows, cols, vectors.iter().map(|v| assemble(v)).collect())
    }

    pub fn base(&self) -> &Mat {
        &self.base
    }

    pub fn directions(&self) -> &[Mat] {
        &self.directions
    }

    pub fn parameter_count(&self) -> usize {
        self.directions.len()
    }

    pub fn rows(&self) -> usize {
        self.base.rows()
    }

    pub fn cols(&self) -> usize {
        self.base.cols()
    }

    pub fn evaluate(&self, params: &[Scalar]) -> Result<Mat> {
        if params.len() != self.directions.len() {
            return Err(Error::DimensionMismatch { expected: self.directions.len(), found: params.len() });
        }
        let mut m = self.base.clone();
        for (t, d) in params.iter().zip(&self.directions) {
            if t.is_zero() {
                continue;
            }
            m = &m + &d.scale(t);
        }
        Ok(m)
    }

    fn entry_depends_on(&self, r: usize, c: usize, p: usize) -> bool {
        !self.directions[p].get(r, c).is_zero()
    }

    fn structurally_nonzero(&self, r: usize, c: usize) -> bool {
        !self.base.get(r, c).is_zero() || (0..self.parameter_count()).any(|p| self.entry_depends_on(r, c, p))
    }
}

/// How a "No" answer was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZeroMethod {
    /// The support pattern has no perfect matching, so every term of the
    /// determinant expansion vanishes.
    Structural,
    /// Some diagonal block of the block-triangular form has a determinant of
    /// total degree `≤ d` vanishing on the simplex lattice
    /// `{a ∈ N^k : Σ a ≤ d}`, which is unisolvent for that degree.
    SimplexLattice,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Invertibility {
    Yes { parameters: Vec<Scalar> },
    No { method: ZeroMethod, evaluations: u128 },
}

impl Invertibility {
    pub fn is_yes(&self) -> bool {
        matches!(self, Invertibility::Yes { .. })
    }
}

#[derive(Clone, Debug)]
pub struct InvertibilityOptions {
    /// Maximum number of lattice points evaluated for one block.
    pub lattice_limit: u128,
    pub random_probes: usize,
    pub seed: u64,
}

impl Default for InvertibilityOptions {
    fn default() -> Self {
        Self { lattice_limit: 2_000_000, random_probes: 16, seed: 0x5eed }
    }
}

pub fn family_contains_invertible(family: &ParamMatrixFamily) -> Result<Invertibility> {
    family_contains_invertible_with(family, &InvertibilityOptions::default())
}

/// Decides whether some member of `family` is invertible. "Yes" always comes
/// with parameters whose determinant was computed to be nonzero. "No" is a
/// proof that the determinant polynomial vanishes identically.
pub fn family_contains_invertible_with(
    family: &ParamMatrixFamily,
    opts: &InvertibilityOptions,
) -> Result<Invertibility> {
    if family.rows() != family.cols() {
        return Err(Error::ShapeMismatch("family matrices are not square".into()));
    }
    let k = family.parameter_count();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut probes: Vec<Vec<Scalar>> = vec![vec![int(1); k]];
    probes.extend((0..k).map(|i| (0..k).map(|j| int((i == j) as i64)).collect()));
    probes.extend((0..opts.random_probes).map(|_| (0..k).map(|_| int(rng.gen_range(-97..=97))).collect()));
    for p in probes {
        if !family.evaluate(&p)?.det().is_zero() {
            return Ok(Invertibility::Yes { parameters: p });
        }
    }

    let n = family.rows();
    let Some(matching) = perfect_matching(family) else {
        return Ok(Invertibility::No { method: ZeroMethod::Structural, evaluations: 0 });
    };
    let mut evaluations = 0u128;
    for block in triangular_blocks(family, &matching) {
        let cols: Vec<usize> = block.iter().map(|&r| matching[r]).collect();
        let params: Vec<usize> = (0..k)
            .filter(|&p| block.iter().any(|&r| cols.iter().any(|&c| family.entry_depends_on(r, c, p))))
            .collect();
        let degree = block
            .iter()
            .filter(|&&r| cols.iter().any(|&c| params.iter().any(|&p| family.entry_depends_on(r, c, p))))
            .count();
        let points = binomial((degree + params.len()) as u128, params.len() as u128);
        if points > opts.lattice_limit {
            return Err(Error::TooManyParameters { parameters: params.len(), points, limit: opts.lattice_limit });
        }
        let mut vanishes = true;
        for_each_simplex_point(params.len(), degree, &mut |a| {
            evaluations += 1;
            let mut full = vec![Scalar::zero(); k];
            for (&p, &v) in params.iter().zip(a) {
                full[p] = int(v as i64);
            }
            let m = family.evaluate(&full).expect("parameter count checked");
            if !m.submatrix(&block, &cols).det().is_zero() {
                vanishes = false;
            }
            vanishes
        });
        if vanishes {
            return Ok(Invertibility::No { method: ZeroMethod::SimplexLattice, evaluations });
        }
    }

    // Every block determinant is a nonzero polynomial, so their product is too
    // and the full simplex lattice of the total degree contains a witness.
    let points = binomial((n + k) as u128, k as u128);
    if points <= opts.lattice_limit {
        let mut witness = None;
        for_each_simplex_point(k, n, &mut |a| {
            let p: Vec<Scalar> = a.iter().map(|&v| int(v as i64)).collect();
            if !family.evaluate(&p).expect("parameter count checked").det().is_zero() {
                witness = Some(p);
                return false;
            }
            true
        });
        if let Some(parameters) = witness {
            return Ok(Invertibility::Yes { parameters });
        }
    }
    for _ in 0..1000 {
        let p: Vec<Scalar> = (0..k).map(|_| int(rng.gen_range(-1_000_000..=1_000_000))).collect();
        if !family.evaluate(&p)?.det().is_zero() {
            return Ok(Invertibility::Yes { parameters: p });
        }
    }
    Err(Error::TooManyParameters { parameters: k, points, limit: opts.lattice_limit })
}

/// `matching[r]` is the column matched to row `r`, if the support admits a
/// perfect matching.
fn perfect_matching(family: &ParamMatrixFamily) -> Option<Vec<usize>> {
    let n = family.rows();
    let mut g = UnGraph::<(), ()>::with_capacity(2 * n, n * n);
    let nodes: Vec<_> = (0..2 * n).map(|_| g.add_node(())).collect();
    for r in 0..n {
        for c in 0..n {
            if family.structurally_nonzero(r, c) {
                g.add_edge(nodes[r], nodes[n + c], ());
            }
        }
    }
    let m = maximum_matching(&g);
    if !m.is_perfect() {
        return None;
    }
    (0..n).map(|r| m.mate(nodes[r]).map(|c| c.index() - n)).collect()
}

/// Row sets of the irreducible diagonal blocks after permuting columns so the
/// matching sits on the diagonal.
fn triangular_blocks(family: &ParamMatrixFamily, matching: &[usize]) -> Vec<Vec<usize>> {
    let n = family.rows();
    let mut g = DiGraph::<(), ()>::with_capacity(n, n * n);
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for r in 0..n {
        for (s, &c) in matching.iter().enumerate() {
            if s != r && family.structurally_nonzero(r, c) {
                g.add_edge(nodes[r], nodes[s], ());
            }
        }
    }
    tarjan_scc(&g)
        .into_iter()
        .map(|comp| {
            let mut rows: Vec<usize> = comp.into_iter().map(|v| v.index()).collect();
            rows.sort_unstable();
            rows
        })
        .collect()
}

/// Visits every `a ∈ N^k` with `Σ a ≤ degree` until `f` returns false.
fn for_each_simplex_point(k: usize, degree: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(a: &mut Vec<usize>, k: usize, budget: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if a.len() == k {
            return f(a);
        }
        for v in 0..=budget {
            a.push(v);
            let go_on = rec(a, k, budget - v, f);
            a.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(&mut Vec::with_capacity(k), k, degree, f);
}
