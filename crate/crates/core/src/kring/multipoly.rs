use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::IntPoly;
use crate::reptheory::{ClassFunction, VirtualRep};

/// Commutative ring elements that a [`MultiPoly`] can be evaluated in.
pub trait RingElement: Clone {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &BigInt) -> Self;
}

impl RingElement for VirtualRep {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        VirtualRep::mul(self, other).expect("evaluation stays in one ring")
    }
    fn scale(&self, c: &BigInt) -> Self {
        VirtualRep::scale(self, c)
    }
}

impl RingElement for ClassFunction {
    fn add(&self, other: &Self) -> Self {
        ClassFunction::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        ClassFunction::mul(self, other)
    }
    fn scale(&self, c: &BigInt) -> Self {
        ClassFunction::scale(self, c)
    }
}

impl RingElement for MultiPoly {
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn scale(&self, c: &BigInt) -> Self {
        MultiPoly::scale(self, c)
    }
}

/// Polynomial with integer coefficients in a fixed number of variables.
/// Terms are keyed by exponent vectors; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// `p(x_var)` for a univariate polynomial `p`.
    pub fn univariate(nvars: usize, var: usize, p: &IntPoly) -> Self {
        Self::from_terms(
            nvars,
            p.coeffs().iter().enumerate().map(|(d, c)| {
                let mut e = vec![0; nvars];
                e[var] = d as u32;
                (e, c.clone())
            }),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Largest exponent of each variable.
    fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.nvars];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
        }
        m
    }

    /// Evaluates at `gens` inside a ring with identity `one`. Powers of each
    /// generator are built once by repeated multiplication.
    pub fn eval<T: RingElement>(&self, one: &T, gens: &[T]) -> T {
        assert_eq!(gens.len(), self.nvars, "one image per variable");
        let max = self.max_exponents();
        let powers: Vec<Vec<T>> = gens
            .iter()
            .zip(&max)
            .map(|(g, &m)| {
                let mut p = vec![one.clone()];
                for d in 1..=m as usize {
                    let next = p[d - 1].mul(g);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = one.scale(&BigInt::zero());
        for (e, c) in &self.terms {
            let mut term: Option<T> = None;
            for (i, &d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let p = &powers[i][d as usize];
                term = Some(match term {
                    None => p.clone(),
                    Some(t) => p.mul(&t),
                });
            }
            let term = term.unwrap_or_else(|| one.clone());
            acc = acc.add(&term.scale(c));
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        let nvars = images.first().map_or(self.nvars, |p| p.nvars);
        self.eval(&MultiPoly::constant(nvars, BigInt::one()), images)
    }

    /// Weighted degree of the lowest term, `None` for zero.
    pub fn min_weight(&self, weights: &[u32]) -> Option<u32> {
        self.terms.keys().map(|e| weight_of(e, weights)).min()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da)
                .then_with(|| b.last().cmp(&a.last()))
                .then_with(|| b.cmp(a))
        });
        let parts: Vec<(BigInt, String)> = keys
            .into_iter()
            .map(|e| {
                let mono: String = e
                    .iter()
                    .zip(names)
                    .filter(|(d, _)| **d > 0)
                    .map(|(d, name)| match d {
                        1 => name.clone(),
                        _ => format!("{name}^{d}"),
                    })
                    .collect();
                let mono = if mono.is_empty() { "1".to_string() } else { mono };
                (self.terms[e].clone(), mono)
            })
            .collect();
        crate::reptheory::render_terms(&parts)
    }
}

pub(crate) fn weight_of(e: &[u32], weights: &[u32]) -> u32 {
    e.iter().zip(weights).map(|(a, b)| a * b).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mp(terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn arithmetic() {
        let v = MultiPoly::var(2, 0);
        let phi = MultiPoly::var(2, 1);
        let rel = v.mul(&v).add(&v.scale(&BigInt::from(2)));
        assert_eq!(rel, mp(&[(&[2, 0], 1), (&[1, 0], 2)]));
        assert!(rel.sub(&rel).is_zero());
        let prod = v.add(&phi).mul(&v.sub(&phi));
        assert_eq!(prod, mp(&[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn display() {
        let names = vec!["v".to_string(), "φ".to_string()];
        let p = mp(&[(&[0, 2], 1), (&[0, 1], 3), (&[1, 0], -1)]);
        assert_eq!(p.display_with(&names), "φ^2 + 3φ - v");
        assert_eq!(MultiPoly::zero(2).display_with(&names), "0");
    }

    #[test]
    fn substitution() {
        // φ ↦ u + v
        let v = MultiPoly::var(2, 0);
        let u = MultiPoly::var(2, 1);
        let phi2 = mp(&[(&[0, 2], 1)]);
        let out = phi2.substitute(&[v.clone(), u.add(&v)]);
        assert_eq!(out, mp(&[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        assert_eq!(out.min_weight(&[1, 2]), Some(2));
    }

    #[test]
    fn univariate_embedding() {
        let p = IntPoly::from_i64s(&[0, 4, 1]);
        let m = MultiPoly::univariate(3, 2, &p);
        assert_eq!(m.terms().count(), 2);
        let x = BigInt::from(3);
        let val = m.eval(
            &MultiPoly::constant(1, BigInt::one()),
            &[
                MultiPoly::zero(1),
                MultiPoly::zero(1),
                MultiPoly::constant(1, x.clone()),
            ],
        );
        assert_eq!(val, MultiPoly::constant(1, p.eval(&x)));
    }

    fn small() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -5i64..5), 0..5).prop_map(|t| {
            MultiPoly::from_terms(2, t.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn substitution_is_a_homomorphism(a in small(), b in small(), x in small(), y in small()) {
            let imgs = [x, y];
            prop_assert_eq!(a.mul(&b).substitute(&imgs), a.substitute(&imgs).mul(&b.substitute(&imgs)));
            prop_assert_eq!(a.add(&b).substitute(&imgs), a.substitute(&imgs).add(&b.substitute(&imgs)));
        }
    }
}
