//! Integral cohomology of `BD_2n`, the `E_2` page of the
//! Atiyah–Hirzebruch spectral sequence, the claimed `E_∞` filtration
//! generators, and the comparison with truncated I-adic quotients.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, Result};
use crate::exactalg::AbelianGroup;
use crate::kring::{build_presentation, truncated_quotient};

/// Cyclic summands in display order; `0` stands for `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summands(pub Vec<u64>);

impl Summands {
    pub fn group(&self) -> AbelianGroup {
        AbelianGroup::from_factors(self.0.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        self.0
            .iter()
            .map(|&d| if d == 0 { "Z".to_string() } else { format!("Z_{d}") })
            .collect::<Vec<_>>()
            .join("⊕")
    }
}

fn twos(count: u64) -> impl Iterator<Item = u64> {
    std::iter::repeat_n(2, count as usize)
}

fn check_n(n: u64) -> Result<()> {
    if n <= 2 {
        return Err(invalid(format!("n = {n} must be at least 3")));
    }
    Ok(())
}

/// `H^p(BD_2n; Z)` as a list of summands.
pub fn cohomology_summands(n: u64, p: u64) -> Result<Summands> {
    check_n(n)?;
    let s = p / 4;
    let v = if p == 0 {
        vec![0]
    } else if n % 2 == 1 {
        match p % 4 {
            2 => vec![2],
            0 => vec![n, 2],
            _ => vec![],
        }
    } else {
        match p % 4 {
            0 => std::iter::once(n).chain(twos(2 * s)).collect(),
            1 => twos(2 * s).collect(),
            2 => twos(2 * s + 2).collect(),
            _ => twos(2 * s + 1).collect(),
        }
    };
    Ok(Summands(v))
}

pub fn cohomology(n: u64, p: u64) -> Result<AbelianGroup> {
    Ok(cohomology_summands(n, p)?.group())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyRow {
    pub p: u64,
    pub group: AbelianGroup,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub n: u64,
    pub pmax: u64,
    pub rows: Vec<CohomologyRow>,
}

pub fn cohomology_table(n: u64, pmax: u64) -> Result<CohomologyTable> {
    let rows = (0..=pmax)
        .map(|p| {
            let s = cohomology_summands(n, p)?;
            Ok(CohomologyRow {
                p,
                group: s.group(),
                label: s.label(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyTable { n, pmax, rows })
}

/// `E_2^{p,q} = H^p(BD_2n; K^q(pt))`: the cohomology for even `q`, zero
/// for odd `q`.
pub fn e2_page(n: u64, p: u64, q: i64) -> Result<AbelianGroup> {
    if q > 0 {
        return Err(invalid(format!("q = {q} must be non-positive")));
    }
    if q % 2 != 0 {
        check_n(n)?;
        return Ok(AbelianGroup::trivial());
    }
    cohomology(n, p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    /// The `E_∞` group and generators are stated.
    Claimed,
    /// Only `E_2` is known; `E_∞` is not stated.
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationEntry {
    pub degree: u64,
    pub e2: Summands,
    pub e_infinity: Option<Summands>,
    pub generators: Vec<String>,
    pub status: ClaimStatus,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub n: u64,
    pub entries: Vec<FiltrationEntry>,
}

fn power(base: &str, e: u64) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn claimed_odd(n: u64, degree: u64) -> (Summands, Vec<String>, Option<String>) {
    let j = degree / 2;
    if degree % 4 == 2 {
        (Summands(vec![2]), vec![power("v", j)], None)
    } else {
        (
            Summands(vec![n, 2]),
            vec!["φ-v".into(), power("v", j)],
            Some("Z_n part generated by the twisted class φ-v".into()),
        )
    }
}

fn claimed_d8(degree: u64) -> (Summands, Vec<String>, Option<String>) {
    if degree == 2 {
        return (Summands(vec![2, 2]), vec!["v_1".into(), "v_2".into()], None);
    }
    if degree % 4 == 0 {
        let e = degree / 2 - 1;
        (
            Summands(vec![4, 2, 2]),
            vec!["φ".into(), format!("v_1{}", power("v_3", e)), format!("v_2{}", power("v_3", e))],
            None,
        )
    } else {
        let t = (degree - 2) / 4;
        (
            Summands(vec![2, 2, 2]),
            vec![
                format!("v_1{}", power("v_3", 2 * t)),
                format!("v_2{}", power("v_3", 2 * t)),
                format!("v_1{}", power("v_2", t)),
            ],
            Some("one Z_2 summand of E_2 does not survive".into()),
        )
    }
}

/// Claimed `E_∞^{2j,-2j}` for `2j ≤ max_degree`.
pub fn filtration_report(n: u64, max_degree: u64) -> Result<FiltrationReport> {
    check_n(n)?;
    let entries = (1..=max_degree / 2)
        .map(|j| {
            let degree = 2 * j;
            let e2 = cohomology_summands(n, degree)?;
            let claim = if n % 2 == 1 {
                Some(claimed_odd(n, degree))
            } else if n == 4 {
                Some(claimed_d8(degree))
            } else {
                None
            };
            Ok(match claim {
                Some((e_inf, generators, note)) => FiltrationEntry {
                    degree,
                    e2,
                    e_infinity: Some(e_inf),
                    generators,
                    status: ClaimStatus::Claimed,
                    note,
                },
                None => FiltrationEntry {
                    degree,
                    e2,
                    e_infinity: None,
                    generators: Vec::new(),
                    status: ClaimStatus::Unverified,
                    note: Some("E_2 known, E_∞ unverified".into()),
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiltrationReport { n, entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditStatus {
    Match,
    Mismatch,
    Unverified,
}

impl AuditStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            AuditStatus::Match => "match",
            AuditStatus::Mismatch => "mismatch",
            AuditStatus::Unverified => "unverified",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRow {
    pub depth: u32,
    pub degree: u64,
    pub graded: AbelianGroup,
    pub graded_order: BigInt,
    pub quotient_order: BigInt,
    /// Order of the claimed `E_∞` group, or of `E_2` when nothing is
    /// claimed beyond it.
    pub expected_order: BigInt,
    /// `"E_∞"` or `"E_2"`.
    pub expected_page: &'static str,
    pub status: AuditStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationAudit {
    pub n: u64,
    pub rows: Vec<AuditRow>,
}

impl FiltrationAudit {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.status != AuditStatus::Mismatch)
    }

    /// `∏ |gr_j| = |Q_m|` along the tower.
    pub fn coherent(&self) -> bool {
        let mut prod = BigInt::one();
        self.rows.iter().all(|r| {
            prod *= &r.graded_order;
            prod == r.quotient_order
        })
    }
}

/// Compares `|gr_j|` from the truncated quotients with the claimed `E_∞`
/// order at degree `2j`.
pub fn audit_filtrations(n: u64, depth: u32) -> Result<FiltrationAudit> {
    let pres = build_presentation(n, false)?;
    let levels = truncated_quotient(&pres, depth)?;
    let report = filtration_report(n, 2 * depth as u64)?;
    let rows = levels
        .into_iter()
        .zip(report.entries)
        .map(|(level, entry)| {
            let order = |g: &AbelianGroup| g.order().ok_or_else(|| invalid("infinite group in filtration"));
            let graded_order = order(&level.graded)?;
            let quotient_order = order(&level.quotient)?;
            let (expected, page, status) = match &entry.e_infinity {
                Some(s) => {
                    let e = order(&s.group())?;
                    let st = if e == graded_order { AuditStatus::Match } else { AuditStatus::Mismatch };
                    (e, "E_∞", st)
                }
                None => (order(&entry.e2.group())?, "E_2", AuditStatus::Unverified),
            };
            Ok(AuditRow {
                depth: level.depth,
                degree: entry.degree,
                graded: level.graded,
                graded_order,
                quotient_order,
                expected_order: expected,
                expected_page: page,
                status,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiltrationAudit { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(n: u64, p: u64) -> String {
        cohomology_summands(n, p).unwrap().label()
    }

    #[test]
    fn cohomology_examples() {
        assert_eq!(label(3, 4), "Z_3⊕Z_2");
        assert_eq!(cohomology(3, 4).unwrap(), AbelianGroup::cyclic(6));
        assert!(cohomology(3, 5).unwrap().is_trivial());
        assert_eq!(label(4, 3), "Z_2");
        assert_eq!(label(4, 4), "Z_4⊕Z_2⊕Z_2");
        assert_eq!(label(3, 0), "Z");
        assert_eq!(label(5, 1), "0");
        assert!(cohomology(2, 4).is_err());
    }

    #[test]
    fn e2_examples() {
        assert_eq!(e2_page(3, 4, -4).unwrap(), AbelianGroup::from_factors(vec![3.into(), 2.into()]));
        assert!(e2_page(5, 3, -2).unwrap().is_trivial());
        assert_eq!(e2_page(4, 6, -6).unwrap(), AbelianGroup::elementary(2, 4));
        assert!(e2_page(4, 4, -3).unwrap().is_trivial());
        assert!(e2_page(4, 4, 2).is_err());
    }

    #[test]
    fn filtration_examples() {
        let r3 = filtration_report(3, 2).unwrap();
        assert_eq!(r3.entries[0].e_infinity.as_ref().unwrap().label(), "Z_2");
        assert_eq!(r3.entries[0].generators, vec!["v"]);
        let r4 = filtration_report(4, 6).unwrap();
        assert_eq!(r4.entries[1].e_infinity.as_ref().unwrap().label(), "Z_4⊕Z_2⊕Z_2");
        assert_eq!(r4.entries[1].generators, vec!["φ", "v_1v_3", "v_2v_3"]);
        assert_eq!(r4.entries[2].e2.label(), "Z_2⊕Z_2⊕Z_2⊕Z_2");
        assert_eq!(r4.entries[2].e_infinity.as_ref().unwrap().label(), "Z_2⊕Z_2⊕Z_2");
        assert_eq!(r4.entries[2].generators, vec!["v_1v_3^2", "v_2v_3^2", "v_1v_2"]);
        let r12 = filtration_report(12, 4).unwrap();
        assert!(r12.entries.iter().all(|e| e.status == ClaimStatus::Unverified));
    }

    #[test]
    fn audit_examples() {
        let orders = |a: &FiltrationAudit| -> Vec<BigInt> { a.rows.iter().map(|r| r.graded_order.clone()).collect() };
        let a3 = audit_filtrations(3, 3).unwrap();
        assert!(a3.pass() && a3.coherent());
        assert_eq!(orders(&a3), vec![2.into(), 6.into(), 2.into()]);
        let a7 = audit_filtrations(7, 2).unwrap();
        assert_eq!(orders(&a7), vec![2.into(), 14.into()]);
        let a4 = audit_filtrations(4, 3).unwrap();
        assert!(a4.pass());
        assert_eq!(a4.rows[2].expected_order, BigInt::from(8));
        assert_eq!(a4.rows[2].expected_page, "E_∞");
        let a6 = audit_filtrations(6, 2).unwrap();
        assert!(a6.rows.iter().all(|r| r.status == AuditStatus::Unverified));
    }
}
