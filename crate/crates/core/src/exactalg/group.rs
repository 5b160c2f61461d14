use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{smith_normal_form, IntMatrix};

/// Finitely generated abelian group in invariant-factor form
/// `Z_{d_1} ⊕ Z_{d_2} ⊕ …` with `d_1 | d_2 | …`, where a factor `0` stands
/// for an infinite cyclic summand. Factors equal to 1 are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_factors(vec![order.into()])
    }

    pub fn integers() -> Self {
        Self::cyclic(0)
    }

    /// `(Z_d)^count`.
    pub fn elementary(d: impl Into<BigInt>, count: usize) -> Self {
        let d = d.into();
        Self::from_factors(vec![d; count])
    }

    /// Normalises an arbitrary list of cyclic orders into invariant factors.
    pub fn from_factors(orders: Vec<BigInt>) -> Self {
        let n = orders.len();
        if n == 0 {
            return Self::trivial();
        }
        let mut m = IntMatrix::zeros(n, n);
        for (i, d) in orders.into_iter().enumerate() {
            m.set(i, i, d);
        }
        smith_normal_form(&m)
    }

    /// Builds directly from a divisibility chain produced by the SNF.
    pub(crate) fn from_chain(chain: Vec<BigInt>) -> Self {
        let mut nonzero: Vec<BigInt> = chain
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect();
        debug_assert!(nonzero.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        let free = chain.iter().filter(|d| d.is_zero()).count();
        nonzero.extend(std::iter::repeat_n(BigInt::zero(), free));
        AbelianGroup { factors: nonzero }
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut all = self.factors.clone();
        all.extend(other.factors.iter().cloned());
        Self::from_factors(all)
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank() > 0 {
            return None;
        }
        Some(self.factors.iter().fold(BigInt::one(), |acc, d| acc * d))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z_{d}") })
            .collect();
        write!(f, "{}", parts.join("⊕"))
    }
}
