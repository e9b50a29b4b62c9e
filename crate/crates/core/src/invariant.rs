//! The linking invariant `Lk` and the quotient groups `A1`, `A2`.
//!
//! For an m×n linking matrix with elementary divisors `d_1 | ... | d_l`:
//!
//! - `Lk` is the multiset `{d_1, ..., d_l}`, or `{0}` when `l = 0`.
//! - `A1 = Z^(m-l) (+) Z/d_1 (+) ... (+) Z/d_l`, presented by the matrix itself.
//! - `A2 = Z^(n-l) (+)` the same torsion, presented by the transpose.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactla::{elementary_divisors, IntMatrix};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("rank {rank} is smaller than the torsion length {torsion}")]
    RankTooSmall { rank: usize, torsion: usize },
    #[error("divisor list must be positive and form a divisibility chain")]
    BadChain,
    #[error("torsion coefficients must be at least 2 and form a divisibility chain")]
    BadTorsion,
}

/// `Lk = {d_1, ..., d_l}` as a sorted multiset, or the `{0}` marker.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LkInvariant {
    Zero,
    Divisors(Vec<BigInt>),
}

impl LkInvariant {
    /// Builds the invariant from a divisor chain. An empty chain is `{0}`.
    pub fn from_divisors(divisors: Vec<BigInt>) -> Result<Self, InvariantError> {
        if divisors.is_empty() {
            return Ok(LkInvariant::Zero);
        }
        if !is_chain(&divisors, &BigInt::one()) {
            return Err(InvariantError::BadChain);
        }
        Ok(LkInvariant::Divisors(divisors))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LkInvariant::Zero)
    }

    /// The number `l` of divisors; zero for the `{0}` marker.
    pub fn rank(&self) -> usize {
        match self {
            LkInvariant::Zero => 0,
            LkInvariant::Divisors(d) => d.len(),
        }
    }

    pub fn divisors(&self) -> &[BigInt] {
        match self {
            LkInvariant::Zero => &[],
            LkInvariant::Divisors(d) => d,
        }
    }

    /// Distinct values only, e.g. `{1, 1, 3}` becomes `{1, 3}`.
    pub fn as_set(&self) -> Vec<BigInt> {
        let mut v = match self {
            LkInvariant::Zero => vec![BigInt::zero()],
            LkInvariant::Divisors(d) => d.clone(),
        };
        v.dedup();
        v
    }

    /// `Lk = {1, 2, 4}` or `Lk = {0}`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Like [`render`](Self::render) but with repeated divisors collapsed.
    pub fn render_set(&self) -> String {
        format!("Lk = {{{}}}", join(&self.as_set()))
    }
}

impl fmt::Display for LkInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LkInvariant::Zero => f.write_str("Lk = {0}"),
            LkInvariant::Divisors(d) => write!(f, "Lk = {{{}}}", join(d)),
        }
    }
}

fn join(values: &[BigInt]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn is_chain(values: &[BigInt], min: &BigInt) -> bool {
    values.iter().all(|x| x >= min) && values.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}

/// Finitely generated abelian group `Z^r (+) Z/t_1 (+) ... (+) Z/t_k` with
/// `t_i >= 2` and `t_i | t_(i+1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self, InvariantError> {
        if !is_chain(&torsion, &BigInt::from(2)) {
            return Err(InvariantError::BadTorsion);
        }
        Ok(AbelianGroup { free_rank, torsion })
    }

    /// Group presented by `cols` relations on `rows` generators, given the
    /// relation matrix's divisor chain. Unit divisors contribute nothing.
    fn presented(generators: usize, divisors: &[BigInt]) -> Self {
        AbelianGroup {
            free_rank: generators - divisors.len(),
            torsion: divisors.iter().filter(|d| !d.is_one()).cloned().collect(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

/// `Z^r`, `Z^r (+) Z/t1 (+) Z/t2`, `Z/t1 (+) Z/t2` when `r = 0`, or `0`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::with_capacity(self.torsion.len() + 1);
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" (+) "))
    }
}

/// Which component's complement the quotient is taken in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// `A1`: generators indexed by rows, relations by columns.
    First,
    /// `A2`: generators indexed by columns, presented by the transpose.
    Second,
}

pub fn handlebody_linking(m: &IntMatrix) -> LkInvariant {
    let divisors = elementary_divisors(m);
    LkInvariant::from_divisors(divisors).expect("Smith normal form yields a positive chain")
}

pub fn quotient_group(m: &IntMatrix, side: Side) -> AbelianGroup {
    match side {
        Side::First => AbelianGroup::presented(m.rows(), &elementary_divisors(m)),
        Side::Second => {
            let t = m.transpose();
            AbelianGroup::presented(t.rows(), &elementary_divisors(&t))
        }
    }
}

/// Recovers `Lk` from a quotient group and the rank `l` by restoring the
/// `l - k` unit divisors dropped from the torsion list.
pub fn reconstruct_lk(group: &AbelianGroup, l: usize) -> Result<LkInvariant, InvariantError> {
    let k = group.torsion.len();
    if l < k {
        return Err(InvariantError::RankTooSmall { rank: l, torsion: k });
    }
    let mut divisors = vec![BigInt::one(); l - k];
    divisors.extend(group.torsion.iter().cloned());
    Ok(LkInvariant::from_divisors(divisors).expect("units followed by a torsion chain"))
}

/// Everything derived from one linking matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Invariants {
    pub lk: LkInvariant,
    pub a1: AbelianGroup,
    pub a2: AbelianGroup,
}

impl Invariants {
    pub fn of(m: &IntMatrix) -> Self {
        Invariants {
            lk: handlebody_linking(m),
            a1: quotient_group(m, Side::First),
            a2: quotient_group(m, Side::Second),
        }
    }

    /// `l = rank M`. Equals both `m - free_rank(A1)` and `n - free_rank(A2)`.
    pub fn rank(&self) -> usize {
        self.lk.rank()
    }
}

/// Absolute value as a divisor; helper for genus-one checks.
pub fn abs_divisor(c: &BigInt) -> LkInvariant {
    if c.is_zero() {
        LkInvariant::Zero
    } else {
        LkInvariant::Divisors(vec![c.abs()])
    }
}
