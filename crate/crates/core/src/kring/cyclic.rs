//! `K(BZ_m) = Z[μ]/((1+μ)^m - 1)` and restriction of generators into it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::presentation::generator_image;
use crate::error::{invalid, Error, Result};
use crate::exactalg::{binomial, IntPoly};
use crate::reptheory::{restrict, DihedralRing, RestrictionTarget};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicKRingElt {
    m: usize,
    coeffs: Vec<BigInt>,
}

/// `(1+μ)^m - 1`, monic of degree `m`.
fn modulus(m: usize) -> IntPoly {
    let mut c: Vec<BigInt> = (0..=m)
        .map(|i| binomial(m as i64, i as i64).expect("0 <= i <= m"))
        .collect();
    c[0] -= 1;
    IntPoly::new(c)
}

/// Canonical form of `e` modulo `(1+μ)^m = 1`.
pub fn cyclic_reduce(e: &IntPoly, m: usize) -> Result<CyclicKRingElt> {
    if m < 2 {
        return Err(invalid(format!("cyclic K-ring needs m >= 2, got {m}")));
    }
    let r = e.rem_monic(&modulus(m));
    let mut coeffs = r.into_coeffs();
    coeffs.resize(m, BigInt::zero());
    Ok(CyclicKRingElt { m, coeffs })
}

impl CyclicKRingElt {
    pub fn zero(m: usize) -> Result<Self> {
        cyclic_reduce(&IntPoly::zero(), m)
    }

    pub fn one(m: usize) -> Result<Self> {
        cyclic_reduce(&IntPoly::one(), m)
    }

    pub fn mu(m: usize) -> Result<Self> {
        cyclic_reduce(&IntPoly::x(), m)
    }

    /// `(1+μ)^e`, with negative exponents through `(1+μ)^{-1} = (1+μ)^{m-1}`.
    pub fn sigma_power(m: usize, e: i64) -> Result<Self> {
        let e = e.rem_euclid(m as i64) as u64;
        let base = cyclic_reduce(&IntPoly::from_i64s(&[1, 1]), m)?;
        let mut acc = Self::one(m)?;
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn modulus_m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "cyclic K-ring moduli differ");
        CyclicKRingElt {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "cyclic K-ring moduli differ");
        cyclic_reduce(&(self.to_poly() * other.to_poly()), self.m).expect("m >= 2")
    }
}

impl fmt::Display for CyclicKRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().to_string().replace('w', "μ");
        write!(f, "{s}")
    }
}

/// Image of a generator (`v`, `v_1`, `v_2`, `v_3`, `φ`) under restriction to
/// a cyclic subgroup, written in `μ = σ - 1`.
pub fn restriction_image(
    n: u64,
    elem: &str,
    target: RestrictionTarget,
    swap_eta: bool,
) -> Result<CyclicKRingElt> {
    let ring = DihedralRing::new(n, swap_eta)?;
    let x = generator_image(&ring, elem).map_err(|_| Error::UnknownElement(elem.to_string()))?;
    let m = target.order(n);
    let base = cyclic_reduce(&IntPoly::from_i64s(&[1, 1]), m)?;
    let mut power = CyclicKRingElt::one(m)?;
    let mut acc = CyclicKRingElt::zero(m)?;
    for c in restrict(&x, target) {
        if !c.is_zero() {
            let term = CyclicKRingElt {
                m,
                coeffs: power.coeffs.iter().map(|p| p * &c).collect(),
            };
            acc = acc.add(&term);
        }
        power = power.mul(&base);
    }
    Ok(acc)
}

/// `σ + σ^{-1} - 2` in `K(BZ_m)`.
pub fn sigma_sum_minus_two(m: usize) -> Result<CyclicKRingElt> {
    let s = CyclicKRingElt::sigma_power(m, 1)?;
    let t = CyclicKRingElt::sigma_power(m, -1)?;
    let two = cyclic_reduce(&IntPoly::constant(BigInt::from(-2)), m)?;
    Ok(s.add(&t).add(&two))
}
