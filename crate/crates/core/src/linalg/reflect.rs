//! Anti-diagonal reflection and the block similarity `𝒮`.
//!
//! For a symmetric `M = [[N, Q], [Qᵀ, B]]` whose leading `2m × 2m` block `N`
//! has constant row sums and whose every column of `Q` reads `p` on the first
//! `m` rows and `r` on the last `m`, conjugating by
//! `𝒮 = diag((1/m)·J₂ₘ − Î₂ₘ, I)` replaces `N` by its anti-transpose and
//! leaves `Q` and `B` alone.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{ExactMatrix, Rational};
use crate::error::{Error, Result};

/// Reflection across the anti-diagonal: entry `(i, j)` of the result is
/// entry `(n−1−j, n−1−i)` of `m` (0-indexed). Equals `Î·Mᵀ·Î`.
pub fn anti_transpose(m: &ExactMatrix) -> ExactMatrix {
    let n = m.order();
    ExactMatrix::from_fn(n, |i, j| m.get(n - 1 - j, n - 1 - i).clone())
}

/// `diag((1/m)·J₂ₘ − Î₂ₘ, I)` of order `ambient`.
pub fn swap_similarity(m: usize, ambient: usize) -> Result<ExactMatrix> {
    if m == 0 {
        return Err(Error::InvalidArgument("swap block size must be positive".into()));
    }
    if ambient < 2 * m {
        return Err(Error::DimensionMismatch(ambient, 2 * m));
    }
    let k = 2 * m;
    let inv = Rational::new(1.into(), (m as i64).into());
    Ok(ExactMatrix::from_fn(ambient, |i, j| {
        if i < k && j < k {
            let mut e = inv.clone();
            if i + j + 1 == k {
                e -= Rational::one();
            }
            e
        } else if i == j {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    /// Every row of the leading `2m × 2m` block has the same sum.
    pub n_constant_rowsum: bool,
    /// Every column of the off-diagonal block is `[p,…,p, r,…,r]ᵀ` with `m`
    /// copies of each.
    pub q_column_pattern: bool,
    /// The common row sum of the leading block when it exists.
    #[serde(serialize_with = "crate::serde_util::opt_rational")]
    pub rowsum_value: Option<Rational>,
}

impl BlockReport {
    pub fn passes(&self) -> bool {
        self.n_constant_rowsum && self.q_column_pattern
    }
}

pub fn check_block_conditions(m: &ExactMatrix, half: usize) -> Result<BlockReport> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if half == 0 {
        return Err(Error::InvalidArgument("swap block size must be positive".into()));
    }
    let k = 2 * half;
    let n = m.order();
    if n < k {
        return Err(Error::DimensionMismatch(n, k));
    }
    let sums: Vec<Rational> = (0..k)
        .map(|i| (0..k).map(|j| m.get(i, j)).sum())
        .collect();
    let constant = sums.windows(2).all(|w| w[0] == w[1]);
    let q_column_pattern = (k..n).all(|col| {
        let top = m.get(0, col);
        let bottom = m.get(half, col);
        (0..half).all(|i| m.get(i, col) == top) && (half..k).all(|i| m.get(i, col) == bottom)
    });
    Ok(BlockReport {
        n_constant_rowsum: constant,
        q_column_pattern,
        rowsum_value: if constant { sums.into_iter().next() } else { None },
    })
}

/// `S·M·S` for an involutory `S` (so `S` is its own inverse).
pub fn conjugate(s: &ExactMatrix, m: &ExactMatrix) -> Result<ExactMatrix> {
    if s.order() != m.order() {
        return Err(Error::DimensionMismatch(s.order(), m.order()));
    }
    if s * s != ExactMatrix::identity(s.order()) {
        return Err(Error::NotInvolutory);
    }
    Ok(&(s * m) * s)
}
