use num_bigint::BigInt;

use super::{IntMatrix, MatrixError, SplitMix64};

/// Row or column, for [`apply_slide`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    Row,
    Col,
}

/// Product of `ops` random elementary row operations applied to the identity.
///
/// Each step draws an operation kind (`next % 3`): 0 swaps two distinct rows,
/// 1 negates a row, 2 adds `k * row_i` to `row_j` for distinct `i`, `j` and
/// `k` in `[-3, 3]`. With `size == 1` only negation is possible and every
/// step negates.
pub fn random_unimodular(size: usize, seed: u64, ops: usize) -> IntMatrix {
    assert!(size >= 1, "size must be at least 1");
    let mut rng = SplitMix64::new(seed);
    let mut m = IntMatrix::identity(size);
    let n = size as u64;
    for _ in 0..ops {
        let kind = if size == 1 { 1 } else { rng.below(3) };
        match kind {
            0 => {
                let (i, j) = distinct_pair(&mut rng, n);
                m.swap_rows(i, j);
            }
            1 => {
                let i = rng.below(n) as usize;
                m.negate_row(i);
            }
            _ => {
                let (i, j) = distinct_pair(&mut rng, n);
                let k = BigInt::from(rng.range_i64(-3, 3));
                m.add_row_multiple(i, j, &k);
            }
        }
    }
    m
}

fn distinct_pair(rng: &mut SplitMix64, n: u64) -> (usize, usize) {
    let i = rng.below(n);
    let j = (i + 1 + rng.below(n - 1)) % n;
    (i as usize, j as usize)
}

/// Adds `coeff` times row/column `src` to row/column `dst`. This is the matrix
/// effect of sliding one loop of a bouquet graph over another.
pub fn apply_slide(
    m: &IntMatrix,
    axis: Axis,
    src: usize,
    dst: usize,
    coeff: i8,
) -> Result<IntMatrix, MatrixError> {
    let len = match axis {
        Axis::Row => m.rows(),
        Axis::Col => m.cols(),
    };
    if src >= len || dst >= len {
        return Err(MatrixError::IndexOutOfRange {
            index: src.max(dst),
            len,
        });
    }
    if src == dst {
        return Err(MatrixError::SameIndex(src));
    }
    if coeff != 1 && coeff != -1 {
        return Err(MatrixError::BadSlideCoefficient(coeff));
    }
    let k = BigInt::from(coeff);
    let mut out = m.clone();
    match axis {
        Axis::Row => out.add_row_multiple(src, dst, &k),
        Axis::Col => out.add_col_multiple(src, dst, &k),
    }
    Ok(out)
}

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    m.transpose()
}
