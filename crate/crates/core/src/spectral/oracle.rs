//! Brute-force dimension of spherical harmonics.
//!
//! Degree-k spherical harmonics on S^n are the restrictions of harmonic
//! homogeneous polynomials of degree k in n+1 variables. This module builds
//! the Euclidean Laplacian as an integer matrix from degree-k monomials to
//! degree-(k-2) monomials and takes the dimension of its kernel by exact
//! fraction-free elimination. It shares nothing with the binomial formula it
//! is used to check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

pub const MAX_ORACLE_DIM: u32 = 6;
pub const MAX_ORACLE_DEGREE: u32 = 8;

/// All exponent vectors of length `vars` summing to `degree`.
fn monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn fill(prefix: &mut Vec<u32>, vars: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == vars {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            fill(prefix, vars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(vars), vars, degree, &mut out);
    out
}

type SparseRow = BTreeMap<usize, BigInt>;

fn primitive(row: &mut SparseRow) {
    let g = row.values().fold(BigInt::zero(), |g, v| g.gcd(v));
    if g > BigInt::from(1) {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

/// Rank of a sparse integer matrix by fraction-free Gaussian elimination.
fn rank(mut rows: Vec<SparseRow>) -> usize {
    rows.retain(|r| !r.is_empty());
    let mut rank = 0;
    while let Some(idx) = rows
        .iter()
        .enumerate()
        .min_by_key(|(_, r)| (*r.keys().next().unwrap(), r.len()))
        .map(|(i, _)| i)
    {
        let pivot_row = rows.swap_remove(idx);
        let (&col, pivot) = pivot_row.iter().next().unwrap();
        rank += 1;
        for row in rows.iter_mut() {
            let Some(factor) = row.get(&col).cloned() else {
                continue;
            };
            // row ← pivot·row − factor·pivot_row
            for v in row.values_mut() {
                *v *= pivot;
            }
            for (&c, v) in pivot_row.iter() {
                let entry = row.entry(c).or_insert_with(BigInt::zero);
                *entry -= &factor * v;
            }
            row.retain(|_, v| !v.is_zero());
            primitive(row);
        }
        rows.retain(|r| !r.is_empty());
        debug_assert!(rows
            .iter()
            .all(|r| r.keys().next().is_some_and(|&c| c != col)));
    }
    rank
}

/// Dimension of harmonic homogeneous degree-`k` polynomials in `n + 1`
/// variables, for `n ≤ 6` and `k ≤ 8`.
pub fn harmonic_dimension_oracle(n: u32, k: u32) -> Result<u64> {
    if n > MAX_ORACLE_DIM || k > MAX_ORACLE_DEGREE {
        return Err(Error::InvalidInput(format!(
            "oracle supports n ≤ {MAX_ORACLE_DIM}, k ≤ {MAX_ORACLE_DEGREE}; got n = {n}, k = {k}"
        )));
    }
    let vars = n as usize + 1;
    let domain = monomials(vars, k);
    if k < 2 {
        return Ok(domain.len() as u64);
    }
    let codomain = monomials(vars, k - 2);
    let index: HashMap<&[u32], usize> = codomain
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();

    // column j of the Laplacian is Δ(x^a) = Σ_i a_i(a_i - 1) x^(a - 2e_i);
    // the rank is computed on the transpose, one row per domain monomial
    let rows: Vec<SparseRow> = domain
        .iter()
        .map(|a| {
            let mut row = SparseRow::new();
            for i in 0..vars {
                if a[i] >= 2 {
                    let mut b = a.clone();
                    b[i] -= 2;
                    let coeff = BigInt::from(a[i] * (a[i] - 1));
                    *row.entry(index[b.as_slice()]).or_insert_with(BigInt::zero) += coeff;
                }
            }
            row
        })
        .collect();
    Ok((domain.len() - rank(rows)) as u64)
}
