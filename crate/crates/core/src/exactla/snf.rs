//! Smith normal form over the integers with recorded transforms.
//!
//! The reduction walks down the diagonal. At step `t` the nonzero entry of
//! least absolute value in the trailing submatrix is moved to `(t, t)` and
//! used to clear row `t` and column `t` by Euclidean steps with nearest-integer
//! quotients; any nonzero remainder becomes the next, strictly smaller pivot. Once the matrix is
//! diagonal a repair pass enforces `d_i | d_j` for `i < j`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u * input * v == d`, with `u`, `v` unimodular and `d` rectangular diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub divisors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Checks every structural guarantee against the original input.
    /// Returns a description of the first violation found.
    pub fn verify(&self, input: &IntMatrix) -> Result<(), String> {
        let (m, n) = input.shape();
        if self.u.shape() != (m, m) || self.v.shape() != (n, n) || self.d.shape() != (m, n) {
            return Err("transform shapes do not match input".into());
        }
        let product = self
            .u
            .mul(input)
            .and_then(|um| um.mul(&self.v))
            .map_err(|e| e.to_string())?;
        if product != self.d {
            return Err("u * m * v != d".into());
        }
        if !self.u.is_unimodular() {
            return Err("u is not unimodular".into());
        }
        if !self.v.is_unimodular() {
            return Err("v is not unimodular".into());
        }
        if !self.d.is_rectangular_diagonal() {
            return Err("d is not rectangular diagonal".into());
        }
        let diag_len = m.min(n);
        for (i, div) in self.divisors.iter().enumerate() {
            if !div.is_positive() {
                return Err(format!("divisor {i} is not positive"));
            }
            if self.d[(i, i)] != *div {
                return Err(format!("d[{i},{i}] does not match divisor"));
            }
            if let Some(next) = self.divisors.get(i + 1) {
                if !next.is_multiple_of(div) {
                    return Err(format!("divisor {i} does not divide divisor {}", i + 1));
                }
            }
        }
        if (self.divisors.len()..diag_len).any(|i| !self.d[(i, i)].is_zero()) {
            return Err("nonzero diagonal entry beyond the rank".into());
        }
        Ok(())
    }
}

/// Quotient `q` with `|a - q * p| <= |p| / 2`.
fn nearest_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(p);
    // r has the sign of p
    if (&r + &r).magnitude() > p.magnitude() {
        q + 1
    } else {
        q
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    fn add_row(&mut self, src: usize, dst: usize, k: &BigInt) {
        self.a.add_row_multiple(src, dst, k);
        self.u.add_row_multiple(src, dst, k);
    }

    fn add_col(&mut self, src: usize, dst: usize, k: &BigInt) {
        self.a.add_col_multiple(src, dst, k);
        self.v.add_col_multiple(src, dst, k);
    }

    /// Position of the nonzero entry of least absolute value in rows/cols `>= t`.
    /// Ties go to the first in row-major order.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => x.magnitude() < self.a[b].magnitude(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row `t` and column `t` outside the diagonal, returning false once
    /// the trailing block is zero.
    fn reduce_step(&mut self, t: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.min_pivot(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..self.a.rows() {
                if self.a[(i, t)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&self.a[(i, t)], &self.a[(t, t)]);
                self.add_row(t, i, &-q);
                if !self.a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..self.a.cols() {
                if self.a[(t, j)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&self.a[(t, j)], &self.a[(t, t)]);
                self.add_col(t, j, &-q);
                if !self.a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                return true;
            }
        }
    }

    /// Replaces diagonal pair `(d_i, d_j)` with `(gcd, lcm)` up to sign:
    /// add column j to column i, then run the Euclidean algorithm on rows i, j.
    fn repair_pair(&mut self, i: usize, j: usize) {
        let one = BigInt::from(1);
        self.add_col(j, i, &one);
        // column i now holds d_i at row i and d_j at row j
        while !self.a[(j, i)].is_zero() {
            if self.a[(i, i)].is_zero()
                || self.a[(j, i)].magnitude() < self.a[(i, i)].magnitude()
            {
                self.swap_rows(i, j);
                continue;
            }
            let q = self.a[(j, i)].div_floor(&self.a[(i, i)]);
            self.add_row(i, j, &-q);
        }
        // a[i][i] = ±gcd, which divides a[i][j]
        let q = self.a[(i, j)].div_floor(&self.a[(i, i)]);
        self.add_col(i, j, &-q);
        debug_assert!(self.a[(i, j)].is_zero());
    }
}

pub fn smith_normal_form(input: &IntMatrix) -> SnfResult {
    let (m, n) = input.shape();
    let mut r = Reducer {
        a: input.clone(),
        u: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
    };

    let mut rank = 0;
    while rank < m.min(n) && r.reduce_step(rank) {
        rank += 1;
    }

    for i in 0..rank {
        for j in i + 1..rank {
            if !r.a[(j, j)].is_multiple_of(&r.a[(i, i)]) {
                r.repair_pair(i, j);
            }
        }
    }

    for i in 0..rank {
        if r.a[(i, i)].is_negative() {
            r.a.negate_row(i);
            r.u.negate_row(i);
        }
    }

    let divisors = (0..rank).map(|i| r.a[(i, i)].clone()).collect();
    SnfResult {
        d: r.a,
        u: r.u,
        v: r.v,
        divisors,
    }
}

pub fn elementary_divisors(input: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(input).divisors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn paper_matrix_divisors() {
        let a = m(&[&[-1, -1, 0, 2], &[1, -3, -2, 0], &[0, 0, 2, -2]]);
        let res = smith_normal_form(&a);
        assert_eq!(res.divisors, ints(&[1, 2, 4]));
        res.verify(&a).unwrap();
    }

    #[test]
    fn zero_and_identity() {
        let z = IntMatrix::zeros(3, 4);
        let res = smith_normal_form(&z);
        assert!(res.divisors.is_empty());
        res.verify(&z).unwrap();
        assert_eq!(elementary_divisors(&IntMatrix::identity(3)), ints(&[1, 1, 1]));
    }

    #[test]
    fn coprime_diagonal_needs_repair() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let res = smith_normal_form(&a);
        assert_eq!(res.divisors, ints(&[1, 6]));
        res.verify(&a).unwrap();
    }

    #[test]
    fn chain_repair_across_three() {
        let a = m(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]);
        let res = smith_normal_form(&a);
        // gcd 2, then D_2 = gcd(24, 40, 60) = 4 → 2, D_3 = 240 → 60
        assert_eq!(res.divisors, ints(&[2, 2, 60]));
        res.verify(&a).unwrap();
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let a = IntMatrix::zeros(r, c);
            let res = smith_normal_form(&a);
            assert!(res.divisors.is_empty());
            assert_eq!(res.u, IntMatrix::identity(r));
            assert_eq!(res.v, IntMatrix::identity(c));
            res.verify(&a).unwrap();
        }
    }

    #[test]
    fn negative_scalar() {
        let a = m(&[&[-3]]);
        let res = smith_normal_form(&a);
        assert_eq!(res.divisors, ints(&[3]));
        assert_eq!(res.u, m(&[&[-1]]));
    }

    #[test]
    fn deterministic() {
        let a = m(&[&[6, 4, -2], &[9, 0, 3], &[1, 1, 1]]);
        assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
    }
}
