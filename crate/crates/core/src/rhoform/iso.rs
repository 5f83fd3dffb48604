use super::RhoMap;
use crate::error::{Error, Result};
use crate::exactla::{int, solve_linear, Mat};

/// The adjoint `Bᵗ: V' → V` of `B: V → V'`, defined by `⟨Bᵗu, v⟩ = ⟨u, Bv⟩'`,
/// i.e. `Bᵗ = G⁻¹ Bᵀ G'`.
pub fn gram_transpose(b: &Mat, gram: &Mat, gram2: &Mat) -> Result<Mat> {
    let g_inv = gram.inverse().ok_or(Error::DegenerateGram)?;
    Ok(&(&g_inv * &b.transpose()) * gram2)
}

/// Checks `ρ(A e_i) = Bᵗ ρ'(e_i) B` for every basis vector.
pub fn check_t2_condition(rho: &RhoMap, rho2: &RhoMap, a: &Mat, b: &Mat) -> Result<bool> {
    let n = rho.dim();
    if rho2.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: rho2.dim() });
    }
    for m in [a, b] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
        }
        if !m.is_invertible() {
            return Err(Error::Singular);
        }
    }
    let bt = gram_transpose(b, rho.gram(), rho2.gram())?;
    for i in 0..n {
        let lhs = rho.apply(&a.column(i));
        let rhs = &(&bt * &rho2.mats()[i]) * b;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Looks for `(A, B)` satisfying [`check_t2_condition`]. `B` runs over the
/// identity, signed permutations (dimension ≤ 3) and permutations
/// (dimension ≤ 6); for each `B`, `A` is solved for column by column using
/// the injectivity of `ρ`. `None` does not prove that the maps are inequivalent.
pub fn search_iso_small(rho: &RhoMap, rho2: &RhoMap) -> Option<(Mat, Mat)> {
    let n = rho.dim();
    if rho2.dim() != n || !rho.radical().is_zero() {
        return None;
    }
    let stacked = Mat::from_fn(n * n, n, |r, k| rho.mats()[k].get(r / n, r % n).clone());
    let try_b = |b: &Mat| -> Option<Mat> {
        let bt = gram_transpose(b, rho.gram(), rho2.gram()).ok()?;
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let target = &(&bt * &rho2.mats()[i]) * b;
            cols.push(solve_linear(&stacked, target.entries()).ok()?.particular);
        }
        let a = Mat::from_columns(n, &cols);
        check_t2_condition(rho, rho2, &a, b).ok()?.then_some(a)
    };
    candidates(n).into_iter().find_map(|b| try_b(&b).map(|a| (a, b)))
}

fn candidates(n: usize) -> Vec<Mat> {
    let mut out = vec![Mat::identity(n)];
    if n > 6 {
        return out;
    }
    let perms = permutations(n);
    let sign_patterns: Vec<Vec<i64>> = if n <= 3 {
        (0..1u32 << n).map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect()).collect()
    } else {
        vec![vec![1; n]]
    };
    for p in &perms {
        for signs in &sign_patterns {
            let mut m = Mat::zeros(n, n);
            for (c, &r) in p.iter().enumerate() {
                m.set(r, c, int(signs[c]));
            }
            if m != out[0] {
                out.push(m);
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}
