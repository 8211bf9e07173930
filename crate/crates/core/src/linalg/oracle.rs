//! Reference determinants by cofactor expansion.
//!
//! Exponential in the order and deliberately naive: these exist to check the
//! fast paths, so they share no code with them beyond polynomial arithmetic.

use num_traits::{One, Zero};

use super::{BiPoly, ExactMatrix, Rational, UniPoly, Var};
use crate::error::{Error, Result};

pub const MAX_ORACLE_ORDER: usize = 7;

fn guard(n: usize) -> Result<()> {
    if n > MAX_ORACLE_ORDER {
        return Err(Error::SizeGuard {
            what: "cofactor expansion order",
            value: n,
            limit: MAX_ORACLE_ORDER,
        });
    }
    Ok(())
}

/// Laplace expansion along the first row of the submatrix made of rows
/// `row..` and the columns listed in `cols`.
fn expand(entries: &[Vec<BiPoly>], row: usize, cols: &mut Vec<usize>) -> BiPoly {
    if cols.is_empty() {
        return BiPoly::constant(Rational::one());
    }
    let mut total = BiPoly::zero();
    for k in 0..cols.len() {
        let col = cols.remove(k);
        let entry = &entries[row][col];
        if !entry.is_zero() {
            let minor = expand(entries, row + 1, cols);
            let term = entry * &minor;
            total = if k % 2 == 0 { &total + &term } else { &total - &term };
        }
        cols.insert(k, col);
    }
    total
}

/// Determinant of a square matrix of bivariate polynomials.
pub fn symbolic_determinant(entries: &[Vec<BiPoly>]) -> Result<BiPoly> {
    let n = entries.len();
    guard(n)?;
    if let Some(bad) = entries.iter().find(|row| row.len() != n) {
        return Err(Error::DimensionMismatch(bad.len(), n));
    }
    Ok(expand(entries, 0, &mut (0..n).collect()))
}

/// `det(λI − M)` by symbolic cofactor expansion; same contract as
/// [`super::charpoly`] for orders up to [`MAX_ORACLE_ORDER`].
pub fn charpoly_oracle(m: &ExactMatrix) -> Result<UniPoly> {
    let n = m.order();
    guard(n)?;
    let entries: Vec<Vec<BiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = BiPoly::constant(-m.get(i, j).clone());
                    if i == j {
                        &BiPoly::lambda() + &c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let det = symbolic_determinant(&entries)?;
    debug_assert!(det.degree_r().unwrap_or(0) == 0);
    Ok(det.slice(Var::R, &Rational::zero()))
}
