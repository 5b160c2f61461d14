use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{DihedralRing, Irrep, Parity, VirtualRep};
use crate::error::{Error, Result};
use crate::exactalg::cyclic_convolution;

/// Conjugacy classes of `D_2n`, ordered `[e, r, …, r^k, s]` (odd) or
/// `[e, r, …, r^{k-1}, r^k, s, rs]` (even).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjClass {
    Rotation(u64),
    ReflectionS,
    ReflectionRs,
}

impl ConjClass {
    pub fn label(self) -> String {
        match self {
            ConjClass::Rotation(0) => "e".into(),
            ConjClass::Rotation(1) => "r".into(),
            ConjClass::Rotation(j) => format!("r^{j}"),
            ConjClass::ReflectionS => "s".into(),
            ConjClass::ReflectionRs => "rs".into(),
        }
    }
}

impl DihedralRing {
    pub fn classes(&self) -> Vec<ConjClass> {
        let mut c: Vec<ConjClass> = (0..=self.k()).map(ConjClass::Rotation).collect();
        c.push(ConjClass::ReflectionS);
        if self.parity() == Parity::Even {
            c.push(ConjClass::ReflectionRs);
        }
        c
    }

    /// Value `±1` of a one-dimensional irreducible on a reflection class.
    pub(crate) fn sign_on_reflection(&self, b: Irrep, class: ConjClass) -> i64 {
        let on_s = match b {
            Irrep::Trivial => 1,
            Irrep::Eta => -1,
            Irrep::EtaEven(1) => if self.swap_eta() { -1 } else { 1 },
            Irrep::EtaEven(2) => if self.swap_eta() { 1 } else { -1 },
            Irrep::EtaEven(_) => -1,
            Irrep::Rho(_) => panic!("ρ_i is not one-dimensional"),
        };
        match class {
            ConjClass::ReflectionRs => on_s * self.sign_on_rotation(b),
            _ => on_s,
        }
    }

    /// Value `±1` of a one-dimensional irreducible on `r`.
    pub(crate) fn sign_on_rotation(&self, b: Irrep) -> i64 {
        match b {
            Irrep::EtaEven(1) | Irrep::EtaEven(2) => -1,
            _ => 1,
        }
    }
}

/// A class function whose value on each class lies in `Z[x]/(x^n - 1)`,
/// stored as a coefficient vector of length `n`. On the rotation `r^j`,
/// `x` stands for the eigenvalue `e^{2πi/n}`, so a sign `-1` on `r^j`
/// (even `n`) is written `x^{kj}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<Vec<BigInt>>,
}

impl ClassFunction {
    pub fn zero(ring: &DihedralRing) -> Self {
        let n = ring.n() as usize;
        ClassFunction {
            n,
            values: vec![vec![BigInt::zero(); n]; ring.classes().len()],
        }
    }

    pub fn constant(ring: &DihedralRing, c: &BigInt) -> Self {
        let mut f = Self::zero(ring);
        for v in &mut f.values {
            v[0] = c.clone();
        }
        f
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|a| a.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    /// Pointwise product.
    pub fn mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| cyclic_convolution(a, b))
                .collect(),
        }
    }
}

/// Character of a virtual representation.
pub fn character(a: &VirtualRep) -> ClassFunction {
    let ring = a.ring();
    let n = ring.n();
    let k = ring.k();
    let classes = ring.classes();
    let mut f = ClassFunction::zero(ring);
    for (c, b) in a.coeffs().iter().zip(ring.basis()) {
        if c.is_zero() {
            continue;
        }
        for (slot, class) in f.values.iter_mut().zip(&classes) {
            match (*class, *b) {
                (ConjClass::Rotation(j), Irrep::Rho(i)) => {
                    let e = (i * j % n) as usize;
                    slot[e] += c;
                    slot[(n as usize - e) % n as usize] += c;
                }
                (ConjClass::Rotation(j), b) => {
                    let e = if ring.sign_on_rotation(b) == -1 { (k * j % n) as usize } else { 0 };
                    slot[e] += c;
                }
                (_, Irrep::Rho(_)) => {}
                (class, b) => {
                    slot[0] += c * ring.sign_on_reflection(b, class);
                }
            }
        }
    }
    f
}

/// Whether the structure-constant product agrees with the pointwise
/// product of characters on every class.
pub fn verify_mul_by_characters(a: &VirtualRep, b: &VirtualRep) -> Result<bool> {
    let prod = a.mul(b)?;
    Ok(character(&prod) == character(a).mul(&character(b)))
}

impl ClassFunction {
    /// The trivial class function `1`.
    pub fn one(ring: &DihedralRing) -> Self {
        Self::constant(ring, &BigInt::one())
    }

    /// Guard for combining class functions of different rings.
    pub fn check_same_shape(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n || self.values.len() != other.values.len() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }
}
