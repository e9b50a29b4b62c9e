//! Determinantal-divisor oracle: `D_k` is the gcd of all k×k minors, and
//! `D_k = d_1 * ... * d_k` for the elementary divisors `d_i`.
//!
//! Brute force by cofactor expansion. Meant for checking the Smith form on
//! small inputs, so it deliberately avoids any elimination.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, MatrixError};

pub const ORACLE_MAX_DIM: usize = 6;
pub const ORACLE_MAX_MINORS: u64 = 1_000_000;

fn cofactor_det(a: &[Vec<BigInt>]) -> BigInt {
    match a.len() {
        0 => BigInt::one(),
        1 => a[0][0].clone(),
        2 => &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0],
        n => {
            let mut total = BigInt::zero();
            for (j, pivot) in a[0].iter().enumerate() {
                if pivot.is_zero() {
                    continue;
                }
                let sub: Vec<Vec<BigInt>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                debug_assert_eq!(sub.len(), n - 1);
                let term = pivot * cofactor_det(&sub);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// `[D_1, ..., D_min(m,n)]`, each the non-negative gcd of all k×k minors
/// (zero when every k×k minor vanishes).
pub fn minor_gcd_profile(m: &IntMatrix) -> Result<Vec<BigInt>, MatrixError> {
    let (rows, cols) = m.shape();
    let top = rows.min(cols);
    if top > ORACLE_MAX_DIM {
        return Err(MatrixError::OracleTooLarge(rows, cols));
    }
    for k in 1..=top {
        let count = binomial(rows as u64, k as u64) * binomial(cols as u64, k as u64);
        if count > ORACLE_MAX_MINORS {
            return Err(MatrixError::OracleTooLarge(rows, cols));
        }
    }

    let mut profile = Vec::with_capacity(top);
    for k in 1..=top {
        let mut g = BigInt::zero();
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[(i, j)].clone()).collect())
                    .collect();
                let det = cofactor_det(&sub);
                if !det.is_zero() {
                    g = g.gcd(&det);
                }
            }
        }
        profile.push(g.abs());
    }
    Ok(profile)
}
