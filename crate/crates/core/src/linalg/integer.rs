//! Fast paths for matrices whose entries are all integers.
//!
//! Everything runs first in checked `i128`; on overflow it starts over in
//! `BigInt`. Results are identical either way, only speed differs.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{ExactMatrix, Rational};

trait Ring: Sized + Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn from_i64(v: i64) -> Self {
        v.into()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn from_i64(v: i64) -> Self {
        v.into()
    }
}

/// Row-major integer entries, or `None` if any entry is fractional.
pub(crate) fn integer_entries(m: &ExactMatrix) -> Option<Vec<BigInt>> {
    let n = m.order();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            if !e.is_integer() {
                return None;
            }
            out.push(e.to_integer());
        }
    }
    Some(out)
}

fn narrow(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(ToPrimitive::to_i128).collect()
}

/// Samuelson–Berkowitz: coefficients of `det(λI − A)`, highest first.
/// Division-free, so it stays in the ring.
fn berkowitz<T: Ring>(n: usize, a: &[T]) -> Option<Vec<T>> {
    if n == 0 {
        return Some(vec![T::one()]);
    }
    let at = |i: usize, j: usize| &a[i * n + j];
    let mut p = vec![T::one(), at(n - 1, n - 1).neg()?];
    for k in (0..n - 1).rev() {
        // Border the trailing block A₁ = A[k+1.., k+1..] with row R, column C
        // and corner a = A[k][k].
        let s = n - k - 1;
        let mut t = Vec::with_capacity(s + 2);
        t.push(T::one());
        t.push(at(k, k).neg()?);
        let mut v: Vec<T> = (0..s).map(|i| at(k + 1 + i, k).clone()).collect();
        for step in 0..s {
            let mut rv = T::zero();
            for (j, vj) in v.iter().enumerate() {
                rv = rv.add(&at(k, k + 1 + j).mul(vj)?)?;
            }
            t.push(rv.neg()?);
            if step + 1 < s {
                let mut next = Vec::with_capacity(s);
                for i in 0..s {
                    let mut acc = T::zero();
                    for (j, vj) in v.iter().enumerate() {
                        acc = acc.add(&at(k + 1 + i, k + 1 + j).mul(vj)?)?;
                    }
                    next.push(acc);
                }
                v = next;
            }
        }
        let mut q = Vec::with_capacity(s + 2);
        for i in 0..s + 2 {
            let mut acc = T::zero();
            for j in 0..=i.min(s) {
                acc = acc.add(&t[i - j].mul(&p[j])?)?;
            }
            q.push(acc);
        }
        p = q;
    }
    Some(p)
}

/// Characteristic polynomial coefficients, lowest degree first, when every
/// entry is an integer.
pub(crate) fn integer_charpoly(m: &ExactMatrix) -> Option<Vec<Rational>> {
    let n = m.order();
    let entries = integer_entries(m)?;
    let desc: Vec<BigInt> = match narrow(&entries).and_then(|small| berkowitz(n, &small)) {
        Some(c) => c.into_iter().map(BigInt::from).collect(),
        None => berkowitz(n, &entries).expect("BigInt arithmetic does not overflow"),
    };
    Some(desc.into_iter().rev().map(Rational::from_integer).collect())
}

fn conjugate_scaled<T: Ring + PartialEq>(n: usize, half: usize, a: &[T], b: &[T]) -> Option<bool> {
    // T = m·𝒮 is integral: 1 off the anti-diagonal of the leading 2m block,
    // 1 − m on it, m on the rest of the diagonal. Check T·A·T = m²·B.
    let k = 2 * half;
    let m = T::from_i64(i64::try_from(half).ok()?);
    let one_minus_m = T::one().add(&m.neg()?)?;
    let t = |i: usize, j: usize| -> T {
        if i < k && j < k {
            if i + j + 1 == k {
                one_minus_m.clone()
            } else {
                T::one()
            }
        } else if i == j {
            m.clone()
        } else {
            T::zero()
        }
    };
    let tm: Vec<T> = (0..n * n).map(|x| t(x / n, x % n)).collect();
    let mul = |x: &[T], y: &[T]| -> Option<Vec<T>> {
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for l in 0..n {
                    acc = acc.add(&x[i * n + l].mul(&y[l * n + j])?)?;
                }
                out.push(acc);
            }
        }
        Some(out)
    };
    let lhs = mul(&mul(&tm, a)?, &tm)?;
    let m2 = m.mul(&m)?;
    for (l, r) in lhs.iter().zip(b) {
        if *l != m2.mul(r)? {
            return Some(false);
        }
    }
    Some(true)
}

/// `𝒮·A·𝒮 == B` for `𝒮` of block size `half`, when both matrices are
/// integral. `None` if either has a fractional entry.
pub(crate) fn integer_similarity(half: usize, a: &ExactMatrix, b: &ExactMatrix) -> Option<bool> {
    let n = a.order();
    let ea = integer_entries(a)?;
    let eb = integer_entries(b)?;
    if let (Some(sa), Some(sb)) = (narrow(&ea), narrow(&eb)) {
        if let Some(r) = conjugate_scaled(n, half, &sa, &sb) {
            return Some(r);
        }
    }
    Some(conjugate_scaled(n, half, &ea, &eb).expect("BigInt arithmetic does not overflow"))
}
