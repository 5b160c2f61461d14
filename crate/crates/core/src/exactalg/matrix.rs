use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::group::AbelianGroup;
use crate::error::{invalid, Result};

/// Dense row-major matrix of big integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Rows must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(invalid(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(IntMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src], starting at column `from`.
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for j in from..self.cols {
            let s = &self.entries[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let d = q * s;
            self.entries[dst * self.cols + j] -= d;
        }
    }

    /// col[dst] -= q * col[src], starting at row `from`.
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for i in from..self.rows {
            let s = &self.entries[i * self.cols + src];
            if s.is_zero() {
                continue;
            }
            let d = q * s;
            self.entries[i * self.cols + dst] -= d;
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, from: usize) {
        for j in from..self.cols {
            let s = self.entries[src * self.cols + j].clone();
            self.entries[dst * self.cols + j] += s;
        }
    }

    /// Smallest nonzero |entry| in the block `[t.., t..]`, ties broken by
    /// lowest row and then lowest column.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Diagonal of the Smith normal form, length `min(rows, cols)`, as a
/// divisibility chain with zeros last. Entries may be 1.
fn snf_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let r = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(r);
    for t in 0..r {
        loop {
            let Some((pi, pj)) = a.min_pivot(t) else {
                break;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..a.rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t) / &p;
                a.sub_row(i, t, &q, t);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..a.cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j) / &p;
                a.sub_col(j, t, &q, t);
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..a.rows)
                .find(|&i| (t + 1..a.cols).any(|j| !(a.get(i, j) % &p).is_zero()));
            match offender {
                Some(i) => a.add_row(t, i, t),
                None => break,
            }
        }
        diag.push(a.get(t, t).abs());
    }
    diag
}

/// Invariant factors of the cokernel of `m`, read as a relation matrix
/// (one relation per row) on a free module of rank `m.cols()`.
pub fn smith_normal_form(m: &IntMatrix) -> AbelianGroup {
    let mut chain = snf_diagonal(m);
    chain.extend(std::iter::repeat_n(BigInt::zero(), m.cols - chain.len()));
    AbelianGroup::from_chain(chain)
}

pub fn abelian_group_from_presentation(
    num_gens: usize,
    relations: &[Vec<BigInt>],
) -> Result<AbelianGroup> {
    let m = IntMatrix::from_rows(num_gens, relations.to_vec())?;
    Ok(smith_normal_form(&m))
}

/// Integer row echelon form spanning the same row lattice: every nonzero
/// row has a positive leading entry strictly to the right of the one above,
/// and zero rows are dropped.
pub fn row_echelon(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            for i in r..a.rows {
                let v = a.get(i, c);
                if v.is_zero() {
                    continue;
                }
                let av = v.abs();
                if best.as_ref().is_none_or(|(_, b)| av < *b) {
                    best = Some((i, av));
                }
            }
            let Some((pi, _)) = best else { break };
            a.swap_rows(r, pi);
            let p = a.get(r, c).clone();
            let mut clean = true;
            for i in r + 1..a.rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let q = a.get(i, c) / &p;
                a.sub_row(i, r, &q, c);
                clean &= a.get(i, c).is_zero();
            }
            if clean {
                if a.get(r, c).is_negative() {
                    for j in c..a.cols {
                        let v = -a.get(r, j);
                        a.set(r, j, v);
                    }
                }
                r += 1;
                break;
            }
        }
    }
    let rows: Vec<Vec<BigInt>> = (0..r).map(|i| a.row(i).to_vec()).collect();
    IntMatrix::from_rows(a.cols, rows).expect("echelon rows keep width")
}
