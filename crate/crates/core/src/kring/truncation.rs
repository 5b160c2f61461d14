//! Finite truncations `Q_j` of a presented ring and their associated graded
//! pieces, computed with Smith normal form.
//!
//! The filtration is by weighted degree in twisted coordinates: for odd `n`
//! the generators are `v` (weight 1) and `u = φ - v` (weight 2); for even
//! `n` they are `v_2`, `v_3` (weight 1) and `u = φ - v_3` (weight 2). `Q_j`
//! is the augmentation part of the ring modulo all monomials of weight
//! greater than `j`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::multipoly::{weight_of, MultiPoly};
use super::presentation::{CaseTag, RingPresentation};
use crate::error::{Error, Result};
use crate::exactalg::{row_echelon, smith_normal_form, AbelianGroup, IntMatrix};

pub const MONOMIAL_LIMIT: usize = 10_000;

/// Coordinates in which the filtration is monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationCoordinates {
    pub names: Vec<String>,
    pub weights: Vec<u32>,
    /// Each original generator written in the new coordinates.
    pub substitution: Vec<MultiPoly>,
}

pub fn filtration_coordinates(pres: &RingPresentation) -> FiltrationCoordinates {
    match pres.case {
        CaseTag::Odd => {
            let v = MultiPoly::var(2, 0);
            let u = MultiPoly::var(2, 1);
            FiltrationCoordinates {
                names: vec!["v".into(), "u".into()],
                weights: vec![1, 2],
                substitution: vec![v.clone(), u.add(&v)],
            }
        }
        _ => {
            let v2 = MultiPoly::var(3, 0);
            let v3 = MultiPoly::var(3, 1);
            let u = MultiPoly::var(3, 2);
            FiltrationCoordinates {
                names: vec!["v_2".into(), "v_3".into(), "u".into()],
                weights: vec![1, 1, 2],
                substitution: vec![v2, v3.clone(), u.add(&v3)],
            }
        }
    }
}

/// Exponent vectors of weight `lo..=hi`, ordered by weight and then
/// lexicographically. Fails once more than `limit` are found.
fn monomials(weights: &[u32], lo: u32, hi: u32, limit: usize) -> Result<Vec<Vec<u32>>> {
    fn rec(
        weights: &[u32],
        i: usize,
        budget: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        limit: usize,
    ) -> bool {
        if i == weights.len() {
            out.push(cur.clone());
            return out.len() <= limit;
        }
        for d in 0..=budget / weights[i] {
            cur.push(d);
            let ok = rec(weights, i + 1, budget - d * weights[i], cur, out, limit);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut all = Vec::new();
    // the full set of weight <= hi, bounded by limit plus the excluded low part
    let cap = limit.saturating_mul(2).max(limit + 1);
    if !rec(weights, 0, hi, &mut Vec::new(), &mut all, cap) {
        return Err(Error::GuardExceeded {
            monomials: all.len(),
            limit,
        });
    }
    let mut out: Vec<Vec<u32>> = all
        .into_iter()
        .filter(|e| (lo..=hi).contains(&weight_of(e, weights)))
        .collect();
    if out.len() > limit {
        return Err(Error::GuardExceeded {
            monomials: out.len(),
            limit,
        });
    }
    out.sort_by(|a, b| weight_of(a, weights).cmp(&weight_of(b, weights)).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Relation lattice of `Q_j` over the monomials of weight `1..=j`.
struct Truncation {
    columns: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    rows: Vec<Vec<BigInt>>,
    weights: Vec<u32>,
    depth: u32,
}

impl Truncation {
    fn new(relations: &[MultiPoly], weights: &[u32], depth: u32) -> Result<Self> {
        let columns = monomials(weights, 1, depth, MONOMIAL_LIMIT)?;
        let index: HashMap<Vec<u32>, usize> =
            columns.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let multipliers = monomials(weights, 0, depth.saturating_sub(1), MONOMIAL_LIMIT)?;
        let nvars = weights.len();
        let mut t = Truncation {
            columns,
            index,
            rows: Vec::new(),
            weights: weights.to_vec(),
            depth,
        };
        for rel in relations {
            for m in &multipliers {
                let mono = MultiPoly::from_terms(nvars, [(m.clone(), BigInt::one())]);
                let row = t.vector(&rel.mul(&mono))?;
                if row.iter().any(|c| !c.is_zero()) {
                    t.rows.push(row);
                }
            }
        }
        Ok(t)
    }

    /// Coordinates of `p` modulo monomials above the truncation depth.
    fn vector(&self, p: &MultiPoly) -> Result<Vec<BigInt>> {
        let mut row = vec![BigInt::zero(); self.columns.len()];
        for (e, c) in p.terms() {
            let w = weight_of(e, &self.weights);
            if w > self.depth {
                continue;
            }
            if w == 0 {
                return Err(Error::InvalidArgument(
                    "polynomial has a constant term; only the augmentation ideal is truncated".into(),
                ));
            }
            row[self.index[e]] += c;
        }
        Ok(row)
    }

    fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.columns.len(), self.rows.clone()).expect("rows have column width")
    }

    fn quotient(&self) -> AbelianGroup {
        smith_normal_form(&self.matrix())
    }

    /// Kernel of `Q_j → Q_{j-1}`: the top-weight monomials modulo the part
    /// of the relation lattice supported on them.
    fn top_graded(&self) -> AbelianGroup {
        let split = self
            .columns
            .iter()
            .position(|e| weight_of(e, &self.weights) == self.depth)
            .unwrap_or(self.columns.len());
        let width = self.columns.len() - split;
        let ech = row_echelon(&self.matrix());
        let rows: Vec<Vec<BigInt>> = (0..ech.rows())
            .map(|i| ech.row(i))
            .filter(|r| r[..split].iter().all(Zero::is_zero))
            .map(|r| r[split..].to_vec())
            .collect();
        smith_normal_form(&IntMatrix::from_rows(width, rows).expect("top block width"))
    }

    fn contains(&self, v: &[BigInt]) -> bool {
        let ech = row_echelon(&self.matrix());
        let mut v = v.to_vec();
        for i in 0..ech.rows() {
            let row = ech.row(i);
            let lead = row.iter().position(|c| !c.is_zero()).expect("echelon rows are nonzero");
            if v[lead].is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&v[lead], &row[lead]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationLevel {
    pub depth: u32,
    /// `Q_j`.
    pub quotient: AbelianGroup,
    /// `gr_j = ker(Q_j → Q_{j-1})`.
    pub graded: AbelianGroup,
}

fn twisted_relations(pres: &RingPresentation, coords: &FiltrationCoordinates) -> Vec<MultiPoly> {
    pres.relations
        .iter()
        .map(|r| r.poly.substitute(&coords.substitution))
        .collect()
}

/// `Q_1 … Q_m` and `gr_1 … gr_m`.
pub fn truncated_quotient(pres: &RingPresentation, depth: u32) -> Result<Vec<TruncationLevel>> {
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let coords = filtration_coordinates(pres);
    monomials(&coords.weights, 1, depth, MONOMIAL_LIMIT)?;
    let rels = twisted_relations(pres, &coords);
    (1..=depth)
        .map(|j| {
            let t = Truncation::new(&rels, &coords.weights, j)?;
            Ok(TruncationLevel {
                depth: j,
                quotient: t.quotient(),
                graded: t.top_graded(),
            })
        })
        .collect()
}

/// Whether `defect`, written in the presentation's generators, vanishes in
/// `Q_m`.
pub fn defect_in_truncation(pres: &RingPresentation, defect: &MultiPoly, depth: u32) -> Result<bool> {
    if defect.is_zero() {
        return Ok(true);
    }
    let coords = filtration_coordinates(pres);
    let rels = twisted_relations(pres, &coords);
    let t = Truncation::new(&rels, &coords.weights, depth)?;
    let v = t.vector(&defect.substitute(&coords.substitution))?;
    Ok(t.contains(&v))
}
