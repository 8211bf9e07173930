use num_traits::One;

use super::integer::integer_charpoly;
use super::{ExactMatrix, Rational, UniPoly};

/// `det(λI − M)`. Integer matrices go through a division-free recurrence
/// in machine integers; anything else through [`faddeev_leverrier`].
pub fn charpoly(m: &ExactMatrix) -> UniPoly {
    match integer_charpoly(m) {
        Some(coeffs) => UniPoly::from_coeffs(coeffs),
        None => faddeev_leverrier(m),
    }
}

/// `det(λI − M)` by the Faddeev–LeVerrier recurrence.
///
/// With `M₀ = 0` and `c_n = 1`, each step forms `M_k = M·M_{k−1} + c_{n−k+1} I`
/// and reads off `c_{n−k} = −tr(M·M_k) / k`. Every division is by a nonzero
/// integer, so the recurrence is exact over the rationals.
pub fn faddeev_leverrier(m: &ExactMatrix) -> UniPoly {
    let n = m.order();
    let mut coeffs = vec![Rational::default(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = ExactMatrix::zeros(n);
    for k in 1..=n {
        // acc ← M·acc + c_{n−k+1}·I
        let mut next = m * &acc;
        let c = &coeffs[n - k + 1];
        for i in 0..n {
            let d = next.get(i, i) + c;
            next.set(i, i, d);
        }
        acc = next;
        let tr = (m * &acc).trace();
        coeffs[n - k] = -tr / Rational::from_integer((k as i64).into());
    }
    UniPoly::from_coeffs(coeffs)
}
