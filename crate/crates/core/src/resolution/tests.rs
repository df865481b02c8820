use super::*;
use crate::algebra::{FreeModuleLayout, Matrix, Presentation, VectorElement};
use crate::test_support::{poly, quotient, vector};
use proptest::prelude::*;

fn contro() -> (crate::groebner::QuotientRing, Presentation, Presentation) {
    let q = quotient(&["x", "y"], &["x^3"]);
    let r = q.ring().clone();
    let m = Presentation::new(FreeModuleLayout::graded(vec![1, 0]), vec![vector(&r, &["x^2", "y^3"])]).unwrap();
    let mg = Presentation::new(
        FreeModuleLayout::graded(vec![0, 0]),
        vec![vector(&r, &["x^2", "0"]), vector(&r, &["0", "x*y^3"])],
    )
    .unwrap();
    (q, m, mg)
}

fn residue_field(vars: &[&str], ideal: &[&str]) -> (crate::groebner::QuotientRing, Presentation) {
    let q = quotient(vars, ideal);
    let r = q.ring().clone();
    let rels = (0..vars.len()).map(|i| VectorElement::new(vec![r.var(i)])).collect();
    (q, Presentation::new(FreeModuleLayout::graded(vec![0]), rels).unwrap())
}

#[test]
fn minimal_presentation_examples() {
    let q = quotient(&["x", "y"], &[]);
    let r = q.ring();
    let p = Presentation::new(FreeModuleLayout::graded(vec![1, 0]), vec![vector(r, &["1", "x"])]).unwrap();
    let m = minimal_presentation(&q, &p).unwrap();
    assert_eq!(m.layout.degree_shifts(), &[0]);
    assert!(m.relations.is_empty());

    let (q, p, _) = contro();
    assert_eq!(minimal_presentation(&q, &p).unwrap(), p);

    let free = Presentation::free(FreeModuleLayout::graded(vec![0, 2]));
    assert_eq!(minimal_presentation(&q, &free).unwrap(), free);
}

#[test]
fn contro_resolutions() {
    let (q, m, mg) = contro();
    let r = q.ring();
    let c = resolve_minimal(&q, &m, 8, Some(24)).unwrap();
    assert_eq!(c.ranks(), vec![2, 1, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(c.module(1).degree_shifts(), &[3]);
    assert_eq!(c.differential(1).columns, vec![vector(r, &["x^2", "y^3"])]);
    assert!(verify_complex(&q, &c).all_pass());
    let t = betti(&c).unwrap();
    assert_eq!((t.beta_ij(0, 0), t.beta_ij(0, 1), t.beta_ij(1, 3)), (1, 1, 1));
    let reg = regularity(&t, &c, None).unwrap();
    assert_eq!(reg.status, RegularityStatus::ExactFinitePd);
    assert_eq!(reg.value, RegularityValue::Finite(2));

    let cg = resolve_minimal(&q, &mg, 8, Some(24)).unwrap();
    assert_eq!(cg.ranks(), vec![2; 9]);
    let tg = betti(&cg).unwrap();
    let ts: Vec<Option<i64>> = (0..=5).map(|i| tg.t(i)).collect();
    assert_eq!(ts, vec![Some(0), Some(4), Some(6), Some(7), Some(9), Some(10)]);
    assert!(verify_complex(&q, &cg).all_pass());
    let reg = regularity(&tg, &cg, None).unwrap();
    assert_eq!(reg.status, RegularityStatus::DivergentPeriodic);
    assert_eq!(reg.value, RegularityValue::Infinity);
    let p = reg.periodicity.unwrap();
    assert_eq!((p.start, p.period, p.drift), (2, 2, 3));
}

#[test]
fn free_and_zero_modules() {
    let q = quotient(&["x", "y"], &["x^3"]);
    let free = Presentation::free(FreeModuleLayout::graded(vec![0]));
    let c = resolve_minimal(&q, &free, 4, None).unwrap();
    assert_eq!(c.ranks(), vec![1, 0, 0, 0, 0]);
    let reg = regularity(&betti(&c).unwrap(), &c, None).unwrap();
    assert_eq!(reg.value, RegularityValue::Finite(0));

    let zero = Presentation::new(FreeModuleLayout::graded(vec![0]), vec![VectorElement::new(vec![q.ring().one()])]).unwrap();
    let c = resolve_minimal(&q, &zero, 3, None).unwrap();
    let t = betti(&c).unwrap();
    assert!(t.is_zero());
    assert_eq!(t.t(0), None);
    assert_eq!(regularity(&t, &c, None).unwrap().value, RegularityValue::NegInfinity);
}

#[test]
fn koszul_complex_of_residue_field() {
    let (q, k) = residue_field(&["x", "y"], &[]);
    let c = resolve_minimal(&q, &k, 4, None).unwrap();
    assert_eq!(c.ranks(), vec![1, 2, 1, 0, 0]);
    let d = verify_complex(&q, &c);
    assert!(d.all_pass(), "{:?}", d.messages);
    let reg = regularity(&betti(&c).unwrap(), &c, None).unwrap();
    assert_eq!((reg.status, reg.value), (RegularityStatus::ExactFinitePd, RegularityValue::Finite(0)));
}

#[test]
fn hypersurface_residue_field_is_periodic() {
    let (q, k) = residue_field(&["x"], &["x^3"]);
    let c = resolve_minimal(&q, &k, 8, None).unwrap();
    assert_eq!(c.ranks(), vec![1; 9]);
    let t = betti(&c).unwrap();
    assert_eq!(t.t(1), Some(1));
    assert_eq!(t.t(2), Some(3));
    let reg = regularity(&t, &c, None).unwrap();
    assert_eq!(reg.status, RegularityStatus::DivergentPeriodic);
}

#[test]
fn ld_hint_certifies_and_is_checked() {
    let (q, k) = residue_field(&["x", "y"], &["x*y"]);
    let c = resolve_minimal(&q, &k, 6, None).unwrap();
    let t = betti(&c).unwrap();
    assert_eq!(t.totals(), vec![1, 2, 2, 2, 2, 2, 2]);
    let plain = regularity(&t, &c, None).unwrap();
    assert_eq!((plain.status, plain.value), (RegularityStatus::LowerBound, RegularityValue::AtLeast(0)));
    let cert = regularity(&t, &c, Some(0)).unwrap();
    assert_eq!((cert.status, cert.value), (RegularityStatus::ExactCertifiedByLd, RegularityValue::Finite(0)));
    assert!(matches!(regularity(&t, &c, Some(6)), Err(crate::Error::Input(_))));
}

#[test]
fn verify_complex_flags_problems() {
    let q = quotient(&["x"], &[]);
    let r = q.ring();
    let l0 = FreeModuleLayout::graded(vec![0]);
    let l1 = FreeModuleLayout::graded(vec![1]);
    let l2 = FreeModuleLayout::graded(vec![2]);
    let d1 = Matrix::new(l1.clone(), l0.clone(), vec![vector(r, &["x"])]).unwrap();
    let d2 = Matrix::new(l2.clone(), l1.clone(), vec![vector(r, &["x"])]).unwrap();
    let c = GradedComplex::new(*r.field(), vec![l0, l1, l2], vec![d1, d2]).unwrap();
    let d = verify_complex(&q, &c);
    assert!(!d.squares_to_zero);
    assert!(d.minimal && d.homogeneous);
}

#[test]
fn betti_rejects_non_minimal() {
    let q = quotient(&["x"], &[]);
    let r = q.ring();
    let l = FreeModuleLayout::graded(vec![0]);
    let d = Matrix::new(l.clone(), l.clone(), vec![vector(r, &["1"])]).unwrap();
    let c = GradedComplex::new(*r.field(), vec![l.clone(), l], vec![d]).unwrap();
    assert!(matches!(betti(&c), Err(crate::Error::Contract(_))));
}

#[test]
fn betti_text_layout() {
    let t = BettiTable::from_degrees(&[vec![0, 1], vec![3]]);
    let text = t.to_text();
    assert!(text.contains("total:"));
    assert_eq!(text.lines().count(), 5);
}

fn arb_presentation() -> impl Strategy<Value = (Vec<(u32, u32, u32, u32)>, u8)> {
    (proptest::collection::vec((0u32..3, 0u32..3, 0u32..3, 1u32..32003), 2..5), 0u8..3)
}

fn build(data: &[(u32, u32, u32, u32)], kind: u8) -> (crate::groebner::QuotientRing, Presentation) {
    let ideal: &[&str] = match kind {
        0 => &[],
        1 => &["x^2"],
        _ => &["x*y"],
    };
    let q = quotient(&["x", "y", "z"], ideal);
    let r = q.ring().clone();
    // cyclic module S/(quadrics) or a rank-2 module with mixed shifts
    let rels = data
        .iter()
        .map(|&(a, b, c, coef)| {
            let m1 = crate::algebra::Monomial::from_exponents(&[a.min(2), 2 - a.min(2), 0]).unwrap();
            let m2 = crate::algebra::Monomial::from_exponents(&[0, b.min(2), 2 - b.min(2)]).unwrap();
            let m3 = crate::algebra::Monomial::from_exponents(&[c % 2, 0, 1 - c % 2]).unwrap();
            let f = r.add(&r.term(m1, 1), &r.term(m2, coef));
            VectorElement::new(vec![f, r.term(m3, 1)])
        })
        .collect();
    (q, Presentation::new(FreeModuleLayout::graded(vec![0, 1]), rels).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_sound_and_order_independent((data, kind) in arb_presentation()) {
        let (q, p) = build(&data, kind);
        let c = resolve_minimal(&q, &p, 4, Some(12)).unwrap();
        let diag = verify_complex(&q, &c);
        prop_assert!(diag.all_pass(), "{:?}", diag.messages);
        let mut rev = p.clone();
        rev.relations.reverse();
        let c2 = resolve_minimal(&q, &rev, 4, Some(12)).unwrap();
        prop_assert_eq!(betti(&c).unwrap(), betti(&c2).unwrap());
        for d in c.differentials() {
            for col in &d.columns {
                for e in col.components() {
                    prop_assert!(e.is_zero() || e.ord().unwrap() >= 1);
                }
            }
        }
    }
}

#[test]
fn cyclic_example_is_fast_enough() {
    let q = quotient(&["x", "y", "z", "u"], &["x^3"]);
    let r = q.ring().clone();
    let _ = poly(&r, "x");
    let jg = ["x^2 + y^2", "y*z^2"];
    let rels = jg.iter().map(|s| vector(&r, &[s])).collect();
    let p = Presentation::new(FreeModuleLayout::graded(vec![0]), rels).unwrap();
    let start = std::time::Instant::now();
    let c = resolve_minimal(&q, &p, 5, Some(24)).unwrap();
    assert!(c.length() == 5);
    assert!(start.elapsed().as_secs() < 30);
}
