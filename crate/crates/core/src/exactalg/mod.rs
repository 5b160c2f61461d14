//! Exact arithmetic substrate: integer polynomials, integer matrices and
//! finitely generated abelian groups via Smith normal form.

mod cyclic;
mod group;
mod matrix;
mod poly;

pub use cyclic::cyclic_convolution;
pub use group::AbelianGroup;
pub use matrix::{abelian_group_from_presentation, row_echelon, smith_normal_form, IntMatrix};
pub use poly::IntPoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

/// Binomial coefficient `C(n, k)`; arguments are signed so that negative
/// input is rejected instead of wrapping.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 || k < 0 {
        return Err(invalid(format!("binomial({n}, {k}) with negative argument")));
    }
    if k > n {
        return Err(invalid(format!("binomial({n}, {k}) with k > n")));
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}

/// Exact quotient `num / den`, or `None` when `den` does not divide `num`.
pub fn exact_div(num: &BigInt, den: &BigInt) -> Option<BigInt> {
    if den.is_zero() {
        return None;
    }
    let (q, r) = num_integer::Integer::div_rem(num, den);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(6, 3).unwrap(), BigInt::from(20));
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(binomial(60, 30).unwrap(), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn binomial_rejects_bad_arguments() {
        assert!(binomial(3, 4).is_err());
        assert!(binomial(-1, 0).is_err());
        assert!(binomial(3, -1).is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(exact_div(&BigInt::from(12), &BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(exact_div(&BigInt::from(13), &BigInt::from(4)), None);
        assert_eq!(exact_div(&BigInt::from(13), &BigInt::from(0)), None);
    }
}
