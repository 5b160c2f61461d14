use num_bigint::BigInt;
use num_traits::Zero;

use super::{ConjClass, Irrep, VirtualRep};
use crate::exactalg::cyclic_convolution;

/// Cyclic subgroups of `D_2n` that restriction can target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RestrictionTarget {
    /// `Z_n = <r>`, basis `σ^0, …, σ^{n-1}` with `σ(r) = e^{2πi/n}`.
    RotationZn,
    /// `Z_2 = <s>`, basis `1, τ`.
    ReflectionS,
    /// `Z_2 = <rs>`, basis `1, τ`. For odd `n` this coincides with `<s>`
    /// up to conjugacy and gives the same map.
    ReflectionRs,
}

impl RestrictionTarget {
    pub fn order(self, n: u64) -> usize {
        match self {
            RestrictionTarget::RotationZn => n as usize,
            _ => 2,
        }
    }

    pub fn basis_labels(self, n: u64) -> Vec<String> {
        match self {
            RestrictionTarget::RotationZn => (0..n).map(|i| format!("σ^{i}")).collect(),
            _ => vec!["1".into(), "τ".into()],
        }
    }
}

/// Restriction to a cyclic subgroup, as an integer vector over the
/// target's irreducible characters.
pub fn restrict(a: &VirtualRep, target: RestrictionTarget) -> Vec<BigInt> {
    let ring = a.ring();
    let n = ring.n();
    let len = target.order(n);
    let mut out = vec![BigInt::zero(); len];
    let class = match target {
        RestrictionTarget::RotationZn => None,
        RestrictionTarget::ReflectionS => Some(ConjClass::ReflectionS),
        RestrictionTarget::ReflectionRs if ring.parity() == super::Parity::Odd => {
            Some(ConjClass::ReflectionS)
        }
        RestrictionTarget::ReflectionRs => Some(ConjClass::ReflectionRs),
    };
    for (c, b) in a.coeffs().iter().zip(ring.basis()) {
        if c.is_zero() {
            continue;
        }
        match (class, *b) {
            (None, Irrep::Rho(i)) => {
                out[i as usize] += c;
                out[(n - i) as usize] += c;
            }
            (None, b) => {
                let e = if ring.sign_on_rotation(b) == -1 { ring.k() as usize } else { 0 };
                out[e] += c;
            }
            (Some(_), Irrep::Rho(_)) => {
                out[0] += c;
                out[1] += c;
            }
            (Some(cls), b) => {
                let idx = if ring.sign_on_reflection(b, cls) == 1 { 0 } else { 1 };
                out[idx] += c;
            }
        }
    }
    out
}

/// Product in the representation ring of the cyclic target group.
pub fn restricted_product(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    cyclic_convolution(a, b)
}
