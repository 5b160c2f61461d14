use std::fmt;

use num_bigint::BigInt;

use super::multipoly::MultiPoly;
use crate::error::{invalid, Error, Result};
use crate::polyzoo::{adams_psi, f_at_minus2, f_min, g_poly};
use crate::reptheory::{character, ClassFunction, DihedralRing, Parity, VirtualRep};

/// Which branch of the presentation applies to `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Odd,
    EvenK2,
    EvenKOdd,
    EvenKEven,
}

impl CaseTag {
    pub fn for_n(n: u64) -> Result<CaseTag> {
        if n <= 2 {
            return Err(invalid(format!("n = {n} must be at least 3")));
        }
        let k = n / 2;
        Ok(match (n % 2, k) {
            (1, _) => CaseTag::Odd,
            (_, 2) => CaseTag::EvenK2,
            _ if k % 2 == 1 => CaseTag::EvenKOdd,
            _ => CaseTag::EvenKEven,
        })
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Odd => "odd",
            CaseTag::EvenK2 => "even-k2",
            CaseTag::EvenKOdd => "even-k-odd",
            CaseTag::EvenKEven => "even-k-even",
        })
    }
}

/// A relation `poly = 0` with its number in the presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub poly: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub n: u64,
    pub case: CaseTag,
    pub swap_eta: bool,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl RingPresentation {
    pub fn ring(&self) -> DihedralRing {
        DihedralRing::new(self.n, self.swap_eta).expect("n validated at construction")
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        let canon = canonical_generator(name);
        self.generators
            .iter()
            .position(|g| *g == canon)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly> {
        Ok(MultiPoly::var(self.generators.len(), self.generator_index(name)?))
    }

    pub fn display(&self, p: &MultiPoly) -> String {
        p.display_with(&self.generators)
    }
}

/// Accepts ASCII spellings such as `phi` or `v2`.
pub fn canonical_generator(name: &str) -> String {
    match name {
        "phi" | "φ" => "φ".into(),
        "v" => "v".into(),
        s if s.starts_with("v_") => s.into(),
        s if s.len() == 2 && s.starts_with('v') => format!("v_{}", &s[1..]),
        s => s.into(),
    }
}

fn int(c: i64) -> BigInt {
    BigInt::from(c)
}

/// The presentation of `K(BD_2n)`: three relations for odd `n`, five for
/// even `n = 2k` with relations 3 and 5 chosen by the case of `k`.
pub fn build_presentation(n: u64, swap_eta: bool) -> Result<RingPresentation> {
    let case = CaseTag::for_n(n)?;
    let (generators, relations) = match case {
        CaseTag::Odd => {
            let gens = vec!["v".to_string(), "φ".to_string()];
            let v = MultiPoly::var(2, 0);
            let phi = MultiPoly::var(2, 1);
            let f = MultiPoly::univariate(2, 1, &f_min(n)?);
            let c = f_at_minus2(n)?;
            let rels = vec![
                v.mul(&v).add(&v.scale(&int(2))),
                v.mul(&phi).add(&v.scale(&int(2))),
                phi.mul(&f).sub(&v.scale(&c)),
            ];
            (gens, rels)
        }
        _ => {
            let k = (n / 2) as u32;
            let gens = vec!["v_2".to_string(), "v_3".to_string(), "φ".to_string()];
            let v2 = MultiPoly::var(3, 0);
            let v3 = MultiPoly::var(3, 1);
            let phi = MultiPoly::var(3, 2);
            let psi = |i: u32| -> Result<MultiPoly> { Ok(MultiPoly::univariate(3, 2, &adams_psi(i)?)) };
            let r1 = v2.mul(&v2).add(&v2.scale(&int(2)));
            let r2 = v3.mul(&v3).add(&v3.scale(&int(2)));
            // v_2φ = ψ^{k-1}(φ) - φ - 2v_2 [- v_3 when k is odd]
            let mut r3 = v2.mul(&phi).sub(&psi(k - 1)?).add(&phi).add(&v2.scale(&int(2)));
            if case == CaseTag::EvenKOdd {
                r3 = r3.add(&v3);
            }
            let r4 = v3.mul(&phi).add(&v3.scale(&int(2)));
            let v2v3 = v2.mul(&v3);
            let r5 = match case {
                CaseTag::EvenK2 => v2v3
                    .sub(&phi.scale(&int(4)))
                    .sub(&phi.mul(&phi))
                    .add(&v2.scale(&int(2)))
                    .add(&v3.scale(&int(2))),
                CaseTag::EvenKOdd => v2v3.sub(&psi(k)?).add(&v2.scale(&int(2))).add(&v3),
                _ => v2v3.sub(&psi(k)?).add(&v2.scale(&int(2))),
            };
            (gens, vec![r1, r2, r3, r4, r5])
        }
    };
    let relations = relations
        .into_iter()
        .enumerate()
        .map(|(i, poly)| Relation {
            label: (i + 1).to_string(),
            poly,
        })
        .collect();
    Ok(RingPresentation {
        n,
        case,
        swap_eta,
        generators,
        relations,
    })
}

/// Image of a named generator in `R(D_2n)`: `v = η-1`, `v_i = η_i-1`,
/// `φ = ρ_1-2`.
pub fn generator_image(ring: &DihedralRing, name: &str) -> Result<VirtualRep> {
    let canon = canonical_generator(name);
    match (ring.parity(), canon.as_str()) {
        (_, "φ") => Ok(ring.phi()),
        (Parity::Odd, "v") => ring.v(0),
        (Parity::Even, "v_1") => ring.v(1),
        (Parity::Even, "v_2") => ring.v(2),
        (Parity::Even, "v_3") => ring.v(3),
        _ => Err(Error::UnknownGenerator(name.to_string())),
    }
}

/// Substitutes the generator images and expands with the structure
/// constants. A zero result means the relation holds in `R(D_2n)`.
pub fn lift_relation_defect(
    ring: &DihedralRing,
    generators: &[String],
    rel: &MultiPoly,
) -> Result<VirtualRep> {
    let images = generators
        .iter()
        .map(|g| generator_image(ring, g))
        .collect::<Result<Vec<_>>>()?;
    Ok(rel.eval(&ring.one(), &images))
}

/// Same substitution evaluated pointwise on class functions, never touching
/// the structure constants.
pub fn lift_relation_character(
    ring: &DihedralRing,
    generators: &[String],
    rel: &MultiPoly,
) -> Result<ClassFunction> {
    let images = generators
        .iter()
        .map(|g| generator_image(ring, g).map(|x| character(&x)))
        .collect::<Result<Vec<_>>>()?;
    Ok(rel.eval(&ClassFunction::one(ring), &images))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationAudit {
    pub label: String,
    pub relation: String,
    pub defect: VirtualRep,
    /// The character of the defect equals the pointwise evaluation.
    pub oracle_agrees: bool,
}

impl RelationAudit {
    pub fn holds(&self) -> bool {
        self.defect.is_zero() && self.oracle_agrees
    }
}

fn audit(
    ring: &DihedralRing,
    generators: &[String],
    label: String,
    relation: String,
    poly: &MultiPoly,
) -> Result<RelationAudit> {
    let defect = lift_relation_defect(ring, generators, poly)?;
    let oracle = lift_relation_character(ring, generators, poly)?;
    Ok(RelationAudit {
        label,
        relation,
        oracle_agrees: character(&defect) == oracle,
        defect,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationAudit {
    pub n: u64,
    pub case: CaseTag,
    pub swap_eta: bool,
    pub relations: Vec<RelationAudit>,
    /// Audit under the other η-labelling, filled in when this one fails.
    pub swapped: Option<Box<PresentationAudit>>,
}

impl PresentationAudit {
    pub fn pass(&self) -> bool {
        self.relations.iter().all(RelationAudit::holds)
    }
}

fn audit_once(n: u64, swap_eta: bool) -> Result<PresentationAudit> {
    let pres = build_presentation(n, swap_eta)?;
    let ring = pres.ring();
    let relations = pres
        .relations
        .iter()
        .map(|r| audit(&ring, &pres.generators, r.label.clone(), pres.display(&r.poly), &r.poly))
        .collect::<Result<Vec<_>>>()?;
    Ok(PresentationAudit {
        n,
        case: pres.case,
        swap_eta,
        relations,
        swapped: None,
    })
}

/// Lifts every relation; on failure the other η-labelling is audited too.
pub fn verify_presentation(n: u64, swap_eta: bool) -> Result<PresentationAudit> {
    let mut report = audit_once(n, swap_eta)?;
    if !report.pass() {
        report.swapped = Some(Box::new(audit_once(n, !swap_eta)?));
    }
    Ok(report)
}

/// Lift of `g_2k(φ) = ψ^{k+1}(φ) - ψ^{k-1}(φ)` for even `n = 2k`.
pub fn g_poly_audit(n: u64, swap_eta: bool) -> Result<RelationAudit> {
    if n % 2 == 1 || n < 4 {
        return Err(invalid(format!("g_2k needs even n >= 4, got {n}")));
    }
    let k = (n / 2) as u32;
    let ring = DihedralRing::new(n, swap_eta)?;
    let gens = vec!["φ".to_string()];
    let poly = MultiPoly::univariate(1, 0, &g_poly(k)?);
    let relation = format!("g_{n}(φ) = ψ^{}(φ) - ψ^{}(φ)", k + 1, k - 1);
    audit(&ring, &gens, "g".into(), relation, &poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shown(n: u64) -> Vec<String> {
        let p = build_presentation(n, false).unwrap();
        p.relations.iter().map(|r| p.display(&r.poly)).collect()
    }

    #[test]
    fn odd_n3_relations() {
        assert_eq!(shown(3), vec!["v^2 + 2v", "vφ + 2v", "φ^2 + 3φ - v"]);
    }

    #[test]
    fn even_relations() {
        assert_eq!(shown(4)[4], "-φ^2 + v_2v_3 - 4φ + 2v_2 + 2v_3");
        let p6 = build_presentation(6, false).unwrap();
        let expected = p6
            .var("v2")
            .unwrap()
            .mul(&p6.var("phi").unwrap())
            .sub(&MultiPoly::univariate(3, 2, &adams_psi(2).unwrap()))
            .add(&p6.var("phi").unwrap())
            .add(&p6.var("v2").unwrap().scale(&int(2)))
            .add(&p6.var("v3").unwrap());
        assert_eq!(p6.relations[2].poly, expected);
        assert_eq!(p6.case, CaseTag::EvenKOdd);
    }

    #[test]
    fn small_n_rejected() {
        assert!(build_presentation(2, false).is_err());
        assert!(build_presentation(0, false).is_err());
    }

    #[test]
    fn exact_presentations() {
        for n in [3, 9, 4, 8] {
            let a = verify_presentation(n, false).unwrap();
            assert!(a.pass(), "n = {n}");
            assert!(a.swapped.is_none());
        }
    }

    #[test]
    fn lift_examples() {
        let r3 = DihedralRing::new(3, false).unwrap();
        let gens = vec!["v".to_string(), "φ".to_string()];
        let rel = build_presentation(3, false).unwrap().relations[2].poly.clone();
        assert!(lift_relation_defect(&r3, &gens, &rel).unwrap().is_zero());
        let unknown = vec!["w".to_string(), "φ".to_string()];
        assert!(matches!(
            lift_relation_defect(&r3, &unknown, &rel),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn g6_defect() {
        let a = g_poly_audit(6, false).unwrap();
        let ring = DihedralRing::new(6, false).unwrap();
        assert_eq!(a.defect, ring.v(3).unwrap().scale(&int(-2)));
        assert!(a.oracle_agrees);
        let cf = character(&a.defect);
        assert_eq!(cf, lift_relation_character(&ring, &["φ".to_string()], &MultiPoly::univariate(1, 0, &g_poly(3).unwrap())).unwrap());
        assert!(g_poly_audit(7, false).is_err());
    }

    #[test]
    fn relation_5_at_k6() {
        let a = verify_presentation(12, false).unwrap();
        assert!(!a.pass());
        let ring = DihedralRing::new(12, false).unwrap();
        assert_eq!(a.relations[4].defect, ring.v(3).unwrap().scale(&int(-2)));
        let swapped = a.swapped.unwrap();
        assert!(!swapped.pass());
        assert_eq!(swapped.relations[4].defect.reduced_string(), "-2v_3");
    }
}
