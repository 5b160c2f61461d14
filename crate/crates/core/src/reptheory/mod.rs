//! Representation rings `R(D_2n)` in the basis of irreducibles, multiplied
//! through structure constants, together with an independent character
//! oracle and restriction to cyclic subgroups.
//!
//! Conventions for `n = 2k + 1`: basis `[1, η, ρ_1, …, ρ_k]` with
//! `η² = 1`, `ηρ_i = ρ_i`, `ρ_0 = 1 + η` and `ρ_iρ_j = ρ_{i+j} + ρ_{j-i}`.
//!
//! For `n = 2k`: basis `[1, η_1, η_2, η_3, ρ_1, …, ρ_{k-1}]` with
//! `η_3 = η_1η_2`, `ρ_0 = 1 + η_3`, `ρ_k = η_1 + η_2`, `η_3ρ_i = ρ_i`,
//! `η_{1,2}ρ_i = ρ_{k-i}` and `ρ_iρ_j = ρ_{i+j} + ρ_{i-j}`.

mod character;
mod restrict;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::exactalg::IntPoly;

pub use character::{character, verify_mul_by_characters, ClassFunction, ConjClass};
pub use restrict::{restrict, restricted_product, RestrictionTarget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// An irreducible complex representation of `D_2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Irrep {
    Trivial,
    /// The sign character of the odd case.
    Eta,
    /// `η_1`, `η_2`, `η_3` of the even case.
    EtaEven(u8),
    /// Two-dimensional `ρ_i`, `1 ≤ i < n/2`.
    Rho(u64),
}

impl Irrep {
    pub fn dimension(self) -> u32 {
        match self {
            Irrep::Rho(_) => 2,
            _ => 1,
        }
    }

    pub fn label(self) -> String {
        match self {
            Irrep::Trivial => "1".into(),
            Irrep::Eta => "η".into(),
            Irrep::EtaEven(i) => format!("η_{i}"),
            Irrep::Rho(i) => format!("ρ_{i}"),
        }
    }

    /// Name of the reduction `irrep - dim`, as used for rendering defects.
    fn reduced_label(self) -> String {
        match self {
            Irrep::Trivial => "1".into(),
            Irrep::Eta => "v".into(),
            Irrep::EtaEven(i) => format!("v_{i}"),
            Irrep::Rho(1) => "φ".into(),
            Irrep::Rho(i) => format!("(ρ_{i}-2)"),
        }
    }
}

type Terms = Vec<(usize, i64)>;

#[derive(Debug)]
struct RingData {
    n: u64,
    k: u64,
    parity: Parity,
    swap_eta: bool,
    basis: Vec<Irrep>,
    table: Vec<Vec<Terms>>,
}

/// `R(D_2n)` for a fixed `n ≥ 3`. Cheap to clone; the structure constants
/// are computed once at construction.
#[derive(Clone, Debug)]
pub struct DihedralRing(Arc<RingData>);

impl PartialEq for DihedralRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.n == other.0.n && self.0.swap_eta == other.0.swap_eta)
    }
}

impl Eq for DihedralRing {}

impl DihedralRing {
    /// `swap_eta` exchanges which of `η_1`, `η_2` is trivial on the
    /// reflection `s`; it only affects characters and restrictions.
    pub fn new(n: u64, swap_eta: bool) -> Result<Self> {
        if n <= 2 {
            return Err(invalid(format!("dihedral parameter n = {n} must be at least 3")));
        }
        let parity = if n % 2 == 1 { Parity::Odd } else { Parity::Even };
        let k = n / 2;
        let basis: Vec<Irrep> = match parity {
            Parity::Odd => [Irrep::Trivial, Irrep::Eta]
                .into_iter()
                .chain((1..=k).map(Irrep::Rho))
                .collect(),
            Parity::Even => [
                Irrep::Trivial,
                Irrep::EtaEven(1),
                Irrep::EtaEven(2),
                Irrep::EtaEven(3),
            ]
            .into_iter()
            .chain((1..k).map(Irrep::Rho))
            .collect(),
        };
        let mut data = RingData {
            n,
            k,
            parity,
            swap_eta,
            basis,
            table: Vec::new(),
        };
        let dim = data.basis.len();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..=i {
                let t = data.basis_product(data.basis[i], data.basis[j]);
                table[i][j] = t.clone();
                table[j][i] = t;
            }
        }
        data.table = table;
        Ok(DihedralRing(Arc::new(data)))
    }

    pub fn n(&self) -> u64 {
        self.0.n
    }

    /// `n / 2` rounded down.
    pub fn k(&self) -> u64 {
        self.0.k
    }

    pub fn parity(&self) -> Parity {
        self.0.parity
    }

    pub fn swap_eta(&self) -> bool {
        self.0.swap_eta
    }

    pub fn basis(&self) -> &[Irrep] {
        &self.0.basis
    }

    pub fn basis_labels(&self) -> Vec<String> {
        self.0.basis.iter().map(|b| b.label()).collect()
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn zero(&self) -> VirtualRep {
        VirtualRep {
            ring: self.clone(),
            coeffs: vec![BigInt::zero(); self.dim()],
        }
    }

    fn from_terms(&self, terms: &[(usize, i64)]) -> VirtualRep {
        let mut r = self.zero();
        for &(i, c) in terms {
            r.coeffs[i] += c;
        }
        r
    }

    pub fn from_coeffs(&self, coeffs: Vec<BigInt>) -> Result<VirtualRep> {
        if coeffs.len() != self.dim() {
            return Err(invalid(format!(
                "expected {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        Ok(VirtualRep {
            ring: self.clone(),
            coeffs,
        })
    }

    pub fn one(&self) -> VirtualRep {
        self.from_terms(&[(0, 1)])
    }

    pub fn constant(&self, c: BigInt) -> VirtualRep {
        let mut r = self.zero();
        r.coeffs[0] = c;
        r
    }

    /// `η` for odd `n`, or `η_i` (`i ∈ {1,2,3}`) for even `n`; `i` is ignored
    /// in the odd case.
    pub fn eta(&self, i: u8) -> Result<VirtualRep> {
        match self.0.parity {
            Parity::Odd => Ok(self.from_terms(&[(1, 1)])),
            Parity::Even if (1..=3).contains(&i) => Ok(self.from_terms(&[(i as usize, 1)])),
            Parity::Even => Err(invalid(format!("η_{i} does not exist"))),
        }
    }

    /// `ρ_i` for any integer `i`, folded into the basis.
    pub fn rho(&self, i: i64) -> VirtualRep {
        self.from_terms(&self.0.rho_terms(i))
    }

    /// `v = η - 1` (odd) or `v_i = η_i - 1` (even).
    pub fn v(&self, i: u8) -> Result<VirtualRep> {
        Ok(&self.eta(i)? - &self.one())
    }

    /// `φ = ρ_1 - 2`.
    pub fn phi(&self) -> VirtualRep {
        &self.rho(1) - &self.constant(BigInt::from(2))
    }
}

impl RingData {
    fn rho_terms(&self, i: i64) -> Terms {
        let n = self.n as i64;
        let mut i = i.rem_euclid(n);
        i = i.min(n - i);
        match self.parity {
            Parity::Odd => {
                if i == 0 {
                    vec![(0, 1), (1, 1)]
                } else {
                    vec![(1 + i as usize, 1)]
                }
            }
            Parity::Even => {
                let k = self.k as i64;
                if i == 0 {
                    vec![(0, 1), (3, 1)]
                } else if i == k {
                    vec![(1, 1), (2, 1)]
                } else {
                    vec![(3 + i as usize, 1)]
                }
            }
        }
    }

    fn index_of(&self, b: Irrep) -> usize {
        match b {
            Irrep::Trivial => 0,
            Irrep::Eta => 1,
            Irrep::EtaEven(i) => i as usize,
            Irrep::Rho(i) => match self.parity {
                Parity::Odd => 1 + i as usize,
                Parity::Even => 3 + i as usize,
            },
        }
    }

    fn basis_product(&self, a: Irrep, b: Irrep) -> Terms {
        use Irrep::*;
        let k = self.k as i64;
        match (a, b) {
            (Trivial, x) | (x, Trivial) => vec![(self.index_of(x), 1)],
            (Eta, Eta) => vec![(0, 1)],
            (Eta, Rho(i)) | (Rho(i), Eta) => self.rho_terms(i as i64),
            (EtaEven(x), EtaEven(y)) => {
                // η_1 ↔ 0b01, η_2 ↔ 0b10, η_3 ↔ 0b11 in Z_2 × Z_2
                let z = x ^ y;
                vec![(z as usize, 1)]
            }
            (EtaEven(3), Rho(i)) | (Rho(i), EtaEven(3)) => self.rho_terms(i as i64),
            (EtaEven(_), Rho(i)) | (Rho(i), EtaEven(_)) => self.rho_terms(k - i as i64),
            (Rho(i), Rho(j)) => {
                let (i, j) = (i as i64, j as i64);
                let mut t = self.rho_terms(i + j);
                t.extend(self.rho_terms(i - j));
                t
            }
            _ => unreachable!("mixed parity basis elements"),
        }
    }
}

/// Integer combination of irreducibles of a fixed [`DihedralRing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualRep {
    ring: DihedralRing,
    coeffs: Vec<BigInt>,
}

impl VirtualRep {
    pub fn ring(&self) -> &DihedralRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn dimension(&self) -> BigInt {
        self.coeffs
            .iter()
            .zip(self.ring.basis())
            .map(|(c, b)| c * b.dimension())
            .sum()
    }

    pub fn scale(&self, c: &BigInt) -> VirtualRep {
        VirtualRep {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check_ring(&self, other: &VirtualRep) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.check_ring(other)?;
        Ok(VirtualRep {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Product through the structure constants.
    pub fn mul(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.check_ring(other)?;
        let table = &self.ring.0.table;
        let mut out = vec![BigInt::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for &(t, c) in &table[i][j] {
                    if c == 1 {
                        out[t] += &ab;
                    } else {
                        out[t] += &ab * c;
                    }
                }
            }
        }
        Ok(VirtualRep {
            ring: self.ring.clone(),
            coeffs: out,
        })
    }

    /// Rendering as `Σ c_b (b - dim b) + d·1`, i.e. in terms of the
    /// reductions `v`, `v_i`, `φ`, `(ρ_i-2)`.
    pub fn reduced_string(&self) -> String {
        let mut parts: Vec<(BigInt, String)> = Vec::new();
        for (c, b) in self.coeffs.iter().zip(self.ring.basis()).skip(1) {
            if !c.is_zero() {
                parts.push((c.clone(), b.reduced_label()));
            }
        }
        let d = self.dimension();
        if !d.is_zero() {
            parts.push((d, "1".into()));
        }
        render_terms(&parts)
    }
}

pub(crate) fn render_terms(parts: &[(BigInt, String)]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (c, name)) in parts.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if name == "1" {
            s.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(name);
        }
    }
    s
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<(BigInt, String)> = self
            .coeffs
            .iter()
            .zip(self.ring.basis())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| (c.clone(), b.label()))
            .collect();
        write!(f, "{}", render_terms(&parts))
    }
}

impl std::ops::Add for &VirtualRep {
    type Output = VirtualRep;
    fn add(self, rhs: &VirtualRep) -> VirtualRep {
        self.try_add(rhs).expect("adding elements of different rings")
    }
}

impl std::ops::Sub for &VirtualRep {
    type Output = VirtualRep;
    fn sub(self, rhs: &VirtualRep) -> VirtualRep {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &VirtualRep {
    type Output = VirtualRep;
    fn neg(self) -> VirtualRep {
        self.scale(&BigInt::from(-1))
    }
}

/// Horner evaluation of `p` at `a`; the constant term contributes
/// multiples of the trivial representation.
pub fn eval_poly_at(p: &IntPoly, a: &VirtualRep) -> VirtualRep {
    let ring = a.ring();
    let mut acc = ring.zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a).expect("same ring");
        acc.coeffs[0] += c;
    }
    acc
}
