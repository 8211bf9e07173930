use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Univariate polynomial with exact rational coefficients, stored lowest
/// degree first. The leading stored coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// Coefficients lowest degree first; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Divides through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(lead) if !lead.is_one() => self.scale(&(Rational::one() / lead)),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p(a·x + b)`.
    pub fn substitute_linear(&self, a: &Rational, b: &Rational) -> UniPoly {
        let inner = UniPoly::from_coeffs(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &(&acc * &inner) + &UniPoly::constant(c.clone()))
    }

    /// The unique polynomial of degree `< points.len()` through `points`
    /// (Lagrange form, expanded). Abscissae must be distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> UniPoly {
        let mut out = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UniPoly::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = &basis * &UniPoly::from_coeffs(vec![-xj.clone(), Rational::one()]);
                denom *= xi - xj;
            }
            out = &out + &basis.scale(&(yi / denom));
        }
        out
    }
}

impl fmt::Display for UniPoly {
    /// Coefficients highest degree first, space separated, in lowest terms:
    /// `λ³ − 4λ² + 3λ` prints as `1 -4 3 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, c) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Which variable of a [`BiPoly`] to fix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Lambda,
    R,
}

/// Bivariate polynomial in `λ` and `r`: `coeffs[i][j]` multiplies `λ^i r^j`.
/// Rows and columns that are entirely zero at the high end are trimmed, so
/// equal polynomials have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    coeffs: Vec<Vec<Rational>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::from_grid(vec![vec![c]])
    }

    pub fn lambda() -> Self {
        BiPoly::from_grid(vec![vec![Rational::zero()], vec![Rational::one()]])
    }

    pub fn r() -> Self {
        BiPoly::from_grid(vec![vec![Rational::zero(), Rational::one()]])
    }

    pub fn from_grid(grid: Vec<Vec<Rational>>) -> Self {
        let width = grid.iter().map(Vec::len).max().unwrap_or(0);
        let mut coeffs: Vec<Vec<Rational>> = grid
            .into_iter()
            .map(|mut row| {
                row.resize(width, Rational::zero());
                row
            })
            .collect();
        while coeffs.last().is_some_and(|row| row.iter().all(Zero::is_zero)) {
            coeffs.pop();
        }
        let mut width = coeffs.first().map_or(0, Vec::len);
        while width > 0 && coeffs.iter().all(|row| row[width - 1].is_zero()) {
            width -= 1;
        }
        for row in &mut coeffs {
            row.truncate(width);
        }
        BiPoly { coeffs }
    }

    /// Builds `Σ_i p_i(r) λ^i` from polynomials in `r`.
    pub fn from_lambda_coeffs(polys: &[UniPoly]) -> Self {
        BiPoly::from_grid(polys.iter().map(|p| p.coeffs().to_vec()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree_lambda(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_r(&self) -> Option<usize> {
        self.coeffs.first().and_then(|row| row.len().checked_sub(1))
    }

    pub fn grid(&self) -> &[Vec<Rational>] {
        &self.coeffs
    }

    pub fn eval(&self, lambda: &Rational, r: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, row| {
            let inner = row
                .iter()
                .rev()
                .fold(Rational::zero(), |a, c| a * r + c);
            acc * lambda + inner
        })
    }

    /// Fixes one variable at `value`, leaving a polynomial in the other.
    pub fn slice(&self, fixed: Var, value: &Rational) -> UniPoly {
        match fixed {
            Var::R => UniPoly::from_coeffs(
                self.coeffs
                    .iter()
                    .map(|row| UniPoly::from_coeffs(row.clone()).eval(value))
                    .collect(),
            ),
            Var::Lambda => {
                let width = self.degree_r().map_or(0, |d| d + 1);
                let mut out = vec![Rational::zero(); width];
                let mut power = Rational::one();
                for row in &self.coeffs {
                    for (j, c) in row.iter().enumerate() {
                        out[j] += c * &power;
                    }
                    power *= value;
                }
                UniPoly::from_coeffs(out)
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> BiPoly {
        BiPoly::from_grid(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|a| a * c).collect())
                .collect(),
        )
    }

    fn dims(&self) -> (usize, usize) {
        (self.coeffs.len(), self.coeffs.first().map_or(0, Vec::len))
    }
}

impl fmt::Display for BiPoly {
    /// One group per power of `λ`, highest first, separated by ` | `; each
    /// group lists the coefficients of that `λ` power as a polynomial in `r`,
    /// highest power of `r` first. `(λ+r)² − 1` prints as `1 | 2 0 | 1 0 -1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, row) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{}", UniPoly::from_coeffs(row.clone()))?;
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (a1, b1) = self.dims();
        let (a2, b2) = rhs.dims();
        BiPoly::from_grid(
            (0..a1.max(a2))
                .map(|i| (0..b1.max(b2)).map(|j| self.coeff(i, j) + rhs.coeff(i, j)).collect())
                .collect(),
        )
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let (a1, b1) = self.dims();
        let (a2, b2) = rhs.dims();
        let mut out = vec![vec![Rational::zero(); b1 + b2 - 1]; a1 + a2 - 1];
        for (i1, row1) in self.coeffs.iter().enumerate() {
            for (j1, c1) in row1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (i2, row2) in rhs.coeffs.iter().enumerate() {
                    for (j2, c2) in row2.iter().enumerate() {
                        out[i1 + i2][j1 + j2] += c1 * c2;
                    }
                }
            }
        }
        BiPoly::from_grid(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn normalization_and_display() {
        let p = UniPoly::from_integers(&[0, 3, -4, 1, 0, 0]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "1 -4 3 0");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_integers(&[0, 0]).degree(), None);
        let half = UniPoly::from_coeffs(vec![rat(1, 2), rat(-3, 4)]);
        assert_eq!(half.to_string(), "-3/4 1/2");
        assert_eq!(half.monic().to_string(), "1 -2/3");
    }

    #[test]
    fn arithmetic() {
        let x = UniPoly::x();
        let one = UniPoly::one();
        let xp1 = &x + &one;
        let xm1 = &x - &one;
        assert_eq!(&xp1 * &xm1, UniPoly::from_integers(&[-1, 0, 1]));
        assert_eq!(-&xp1, UniPoly::from_integers(&[-1, -1]));
        assert_eq!(xp1.eval(&rat(5, 1)), rat(6, 1));
    }

    #[test]
    fn linear_substitution() {
        // p(x) = x² − 1, p(−x + 1) = x² − 2x.
        let p = UniPoly::from_integers(&[-1, 0, 1]);
        assert_eq!(
            p.substitute_linear(&rat(-1, 1), &rat(1, 1)),
            UniPoly::from_integers(&[0, -2, 1])
        );
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::from_coeffs(vec![rat(3, 2), rat(-2, 1), rat(0, 1), rat(1, 3)]);
        let points: Vec<_> = (0..4)
            .map(|x| {
                let x = rat(x, 1);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(UniPoly::interpolate(&points), p);
    }

    #[test]
    fn bipoly_eval_and_slices() {
        let lr = &BiPoly::lambda() + &BiPoly::r();
        assert_eq!(lr.eval(&rat(1, 1), &rat(2, 1)), rat(3, 1));
        // (λ + r)² − 1
        let phi = &(&lr * &lr) - &BiPoly::constant(rat(1, 1));
        assert_eq!(phi.to_string(), "1 | 2 0 | 1 0 -1");
        assert_eq!(phi.slice(Var::R, &rat(0, 1)), UniPoly::from_integers(&[-1, 0, 1]));
        let at_zero = phi.slice(Var::Lambda, &rat(0, 1));
        assert_eq!(at_zero, UniPoly::from_integers(&[-1, 0, 1]));
        assert_eq!(at_zero.eval(&rat(1, 1)), phi.eval(&rat(0, 1), &rat(1, 1)));
        assert_eq!(phi.degree_lambda(), Some(2));
        assert_eq!(phi.degree_r(), Some(2));
    }

    #[test]
    fn bipoly_trims() {
        let p = BiPoly::from_grid(vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(0, 1)]]);
        assert_eq!(p, BiPoly::constant(rat(1, 1)));
        assert_eq!(&BiPoly::r() - &BiPoly::r(), BiPoly::zero());
    }
}
