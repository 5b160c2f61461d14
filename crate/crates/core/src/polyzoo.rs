//! The named integer polynomials in the variable `w`: Adams polynomials,
//! shifted Chebyshev polynomials, `f_n` and `g_2k`.
//!
//! `ψ^i` is computed from its closed binomial formula and the shifted
//! Chebyshev polynomial from the three-term recurrence, so the two routes
//! stay independent and can be compared.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::exactalg::{binomial, exact_div, IntPoly};

/// `ψ^i(w) = Σ_{j=1..i} C(i,j) C(i+j-1,j) / C(2j-1,j) · w^j`.
pub fn adams_psi(i: u32) -> Result<IntPoly> {
    if i == 0 {
        return Err(invalid("adams_psi needs i >= 1"));
    }
    let i = i64::from(i);
    let mut coeffs = vec![BigInt::zero()];
    for j in 1..=i {
        let num = binomial(i, j)? * binomial(i + j - 1, j)?;
        let den = binomial(2 * j - 1, j)?;
        let c = exact_div(&num, &den).ok_or_else(|| Error::InexactDivision {
            context: format!("coefficient {j} of psi^{i}"),
        })?;
        coeffs.push(c);
    }
    Ok(IntPoly::new(coeffs))
}

/// Chebyshev polynomial of the first kind `T_i(x)` from
/// `T_{i+1} = 2x T_i - T_{i-1}`.
pub fn chebyshev_t(i: u32) -> IntPoly {
    let two_x = IntPoly::from_i64s(&[0, 2]);
    let mut prev = IntPoly::one();
    let mut cur = IntPoly::x();
    if i == 0 {
        return prev;
    }
    for _ in 1..i {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `2 T_i((w+2)/2) - 2` as an integer polynomial in `w`.
pub fn shifted_chebyshev(i: u32) -> Result<IntPoly> {
    if i == 0 {
        return Err(invalid("shifted_chebyshev needs i >= 1"));
    }
    let two_t = chebyshev_t(i).scale(&BigInt::from(2));
    let w_plus_2 = IntPoly::from_i64s(&[2, 1]);
    // Σ_m a_m ((w+2)/2)^m = Σ_m (a_m / 2^m) (w+2)^m, each quotient exact.
    let mut acc = IntPoly::zero();
    for (m, a) in two_t.coeffs().iter().enumerate().rev() {
        let c = exact_div(a, &(BigInt::one() << m)).ok_or_else(|| Error::InexactDivision {
            context: format!("half substitution in 2T_{i}, degree {m}"),
        })?;
        acc = &(&acc * &w_plus_2) + &IntPoly::constant(c);
    }
    Ok(&acc - &IntPoly::from_i64s(&[2]))
}

fn check_odd(n: u64) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(invalid(format!("n = {n} must be odd and at least 3")));
    }
    Ok(())
}

/// `f_n(w)`, monic of degree `(n-1)/2` with constant term `n`; the
/// coefficient of `w^j` is `n (n²-1²)(n²-3²)…(n²-(2j-1)²) / (2^{2j} (2j+1)!)`.
pub fn f_min(n: u64) -> Result<IntPoly> {
    check_odd(n)?;
    let top = ((n - 1) / 2) as usize;
    let nb = BigInt::from(n);
    let n2 = &nb * &nb;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    coeffs[0] = nb.clone();
    coeffs[top] = BigInt::one();
    let mut num = nb.clone();
    let mut fact = BigInt::one(); // (2j+1)!
    for j in 1..top {
        let odd = BigInt::from(2 * j as u64 - 1);
        num *= &n2 - &odd * &odd;
        fact *= BigInt::from((2 * j) as u64) * BigInt::from((2 * j + 1) as u64);
        let den = (BigInt::one() << (2 * j)) * &fact;
        coeffs[j] = exact_div(&num, &den).ok_or_else(|| Error::InexactDivision {
            context: format!("coefficient {j} of f_{n}"),
        })?;
    }
    Ok(IntPoly::new(coeffs))
}

/// `w·f_n(w) - (ψ^{(n+1)/2}(w) - ψ^{(n-1)/2}(w))`; zero when the identity holds.
pub fn wf_identity_defect(n: u64) -> Result<IntPoly> {
    let f = f_min(n)?;
    let half = ((n - 1) / 2) as u32;
    let rhs = &adams_psi(half + 1)? - &adams_psi(half)?;
    Ok(&(&IntPoly::x() * &f) - &rhs)
}

/// `w·f_n(w)² - (2T_n((w+2)/2) - 2)`; zero when `f_n` is the square root.
pub fn chebyshev_sqrt_defect(n: u64) -> Result<IntPoly> {
    let f = f_min(n)?;
    let n32 = u32::try_from(n).map_err(|_| invalid("n too large"))?;
    Ok(&(&IntPoly::x() * &(&f * &f)) - &shifted_chebyshev(n32)?)
}

/// `sin(kπ/2) + cos(kπ/2)` as an integer.
pub fn sin_cos_pattern(k: u64) -> i64 {
    [1, 1, -1, -1][(k % 4) as usize]
}

/// `f_n(-2)`. Anything other than ±1 is reported as an error.
pub fn f_at_minus2(n: u64) -> Result<BigInt> {
    let value = f_min(n)?.eval(&BigInt::from(-2));
    if !value.abs().is_one() {
        return Err(Error::UnexpectedConstant {
            n,
            value: value.to_string(),
        });
    }
    Ok(value)
}

/// `g_2k(w) = ψ^{k+1}(w) - ψ^{k-1}(w)`.
pub fn g_poly(k: u32) -> Result<IntPoly> {
    if k < 2 {
        return Err(invalid("g_poly needs k >= 2"));
    }
    Ok(&adams_psi(k + 1)? - &adams_psi(k - 1)?)
}

pub fn is_prime(q: &BigInt) -> bool {
    let Some(q) = q.to_u64() else {
        return false;
    };
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Eisenstein's criterion at the prime `q` for a monic polynomial.
pub fn eisenstein_check(p: &IntPoly, q: &BigInt) -> Result<bool> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_prime(q) {
        return Err(invalid(format!("{q} is not a prime")));
    }
    let coeffs = p.coeffs();
    if coeffs.len() < 2 {
        return Ok(false);
    }
    let lower = &coeffs[..coeffs.len() - 1];
    let q2 = q * q;
    Ok(lower.iter().all(|c| c.is_multiple_of(q)) && !lower[0].is_multiple_of(&q2))
}
