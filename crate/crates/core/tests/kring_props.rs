mod common;

use dihedral_k::exactalg::IntPoly;
use dihedral_k::kring::{
    build_presentation, cyclic_reduce, defect_in_truncation, g_poly_audit, lift_relation_character,
    lift_relation_defect, truncated_quotient, verify_presentation, CaseTag, CyclicKRingElt, MultiPoly,
};
use dihedral_k::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn odd_presentations_are_exact() {
    for n in (3..=99).step_by(2) {
        let audit = verify_presentation(n, false).unwrap();
        assert!(audit.pass(), "n = {n}");
        assert!(audit.swapped.is_none());
    }
}

#[test]
fn even_relation_pattern() {
    for k in 2..=24u64 {
        let n = 2 * k;
        for swap in [false, true] {
            let pres = build_presentation(n, swap).unwrap();
            let ring = pres.ring();
            let minus_two_v3 = ring.v(3).unwrap().scale(&BigInt::from(-2));
            for rel in &pres.relations {
                let defect = lift_relation_defect(&ring, &pres.generators, &rel.poly).unwrap();
                let by_characters = lift_relation_character(&ring, &pres.generators, &rel.poly).unwrap();
                assert_eq!(dihedral_k::reptheory::character(&defect), by_characters);
                assert!(common::close(
                    &common::char_vector(&defect),
                    &common::even_relation_values(n, swap, &rel.label)
                ));
                match rel.label.as_str() {
                    "1" | "2" | "4" => assert!(defect.is_zero(), "n={n} relation {}", rel.label),
                    "5" if k == 2 || k % 4 == 0 => assert!(defect.is_zero(), "n={n}"),
                    "5" if k % 4 == 2 => assert_eq!(defect, minus_two_v3, "n={n}"),
                    _ => {}
                }
            }
            let g = g_poly_audit(n, swap).unwrap();
            assert!(common::close(&common::char_vector(&g.defect), &common::even_relation_values(n, swap, "g")));
            if k % 2 == 0 {
                assert!(g.defect.is_zero(), "n={n}");
            }
        }
    }
}

#[test]
fn case_tags() {
    assert_eq!(build_presentation(3, false).unwrap().case, CaseTag::Odd);
    assert_eq!(build_presentation(4, false).unwrap().case, CaseTag::EvenK2);
    assert_eq!(build_presentation(6, false).unwrap().case, CaseTag::EvenKOdd);
    assert_eq!(build_presentation(8, false).unwrap().case, CaseTag::EvenKEven);
    for n in 0..=2 {
        assert!(matches!(build_presentation(n, false), Err(Error::InvalidArgument(_))));
    }
}

#[test]
fn odd_filtration_matches_cohomology() {
    for n in [3u64, 5, 7, 9, 15] {
        let pres = build_presentation(n, false).unwrap();
        let levels = truncated_quotient(&pres, 6).unwrap();
        let mut product = BigInt::from(1);
        for l in &levels {
            let order = l.graded.order().unwrap();
            let expected = if l.depth % 2 == 1 { BigInt::from(2) } else { BigInt::from(2 * n) };
            assert_eq!(order, expected, "n={n} depth {}", l.depth);
            product *= order;
            assert_eq!(l.quotient.order().unwrap(), product);
        }
    }
}

#[test]
fn relations_vanish_in_truncations() {
    for n in [3u64, 4, 5, 6, 8] {
        let pres = build_presentation(n, false).unwrap();
        for rel in &pres.relations {
            assert!(defect_in_truncation(&pres, &rel.poly, 3).unwrap(), "n={n} relation {}", rel.label);
        }
    }
    let pres = build_presentation(12, false).unwrap();
    let v3 = pres.var("v3").unwrap().scale(&BigInt::from(-2));
    assert!(!defect_in_truncation(&pres, &v3, 2).unwrap());
}

#[test]
fn truncation_guard() {
    let pres = build_presentation(4, false).unwrap();
    assert!(matches!(truncated_quotient(&pres, 60), Err(Error::GuardExceeded { .. })));
    assert!(truncated_quotient(&pres, 0).is_err());
}

#[test]
fn cyclic_unit_law() {
    for m in 2..=64usize {
        let sigma = cyclic_reduce(&IntPoly::from_i64s(&[1, 1]), m).unwrap();
        let mut inv = IntPoly::one();
        for _ in 0..m - 1 {
            inv = inv * IntPoly::from_i64s(&[1, 1]);
        }
        let inv = cyclic_reduce(&inv, m).unwrap();
        assert!(sigma.mul(&inv).is_one(), "m = {m}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cyclic_reduction_is_a_ring_map(
        m in 2usize..12,
        a in prop::collection::vec(-20i64..20, 0..20),
        b in prop::collection::vec(-20i64..20, 0..20),
    ) {
        let pa = IntPoly::from_i64s(&a);
        let pb = IntPoly::from_i64s(&b);
        let ra = cyclic_reduce(&pa, m).unwrap();
        let rb = cyclic_reduce(&pb, m).unwrap();
        prop_assert_eq!(cyclic_reduce(&(&pa * &pb), m).unwrap(), ra.mul(&rb));
        prop_assert_eq!(cyclic_reduce(&(&pa + &pb), m).unwrap(), ra.add(&rb));
        prop_assert_eq!(ra.coeffs().len(), m);
        prop_assert_eq!(cyclic_reduce(&ra.to_poly(), m).unwrap(), ra);
    }

    #[test]
    fn lifting_is_a_ring_map(
        n in 3u64..20,
        p in prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 1..5),
        q in prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 1..5),
    ) {
        let pres = build_presentation(n, false).unwrap();
        let ring = pres.ring();
        let nv = pres.generators.len();
        let mk = |t: &[(u32, u32, i64)]| MultiPoly::from_terms(nv, t.iter().map(|&(a, b, c)| {
            let mut e = vec![0; nv];
            e[0] = a;
            e[nv - 1] = b;
            (e, BigInt::from(c))
        }));
        let (p, q) = (mk(&p), mk(&q));
        let lp = lift_relation_defect(&ring, &pres.generators, &p).unwrap();
        let lq = lift_relation_defect(&ring, &pres.generators, &q).unwrap();
        let lpq = lift_relation_defect(&ring, &pres.generators, &p.mul(&q)).unwrap();
        prop_assert_eq!(lpq, lp.mul(&lq).unwrap());
    }
}

#[test]
fn sigma_power_inverse() {
    let inv = CyclicKRingElt::sigma_power(4, -1).unwrap();
    let want: Vec<BigInt> = [1, 3, 3, 1].into_iter().map(BigInt::from).collect();
    assert_eq!(inv.coeffs(), want.as_slice());
}
