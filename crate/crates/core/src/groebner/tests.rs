use super::*;
use crate::test_support::{poly, quotient, vector};
use proptest::prelude::*;

fn contro_ring() -> QuotientRing {
    quotient(&["x", "y"], &["x^3"])
}

fn basis_of(ring: &QuotientRing, layout: &FreeModuleLayout, gens: &[VectorElement]) -> SubmoduleBasis {
    groebner_basis(ring, layout, &ModuleOrder::new(ring.ring(), layout), gens, None).unwrap()
}

#[test]
fn ideal_basis_is_reduced() {
    let q = quotient(&["x", "y"], &["x^2 - y^2", "x*y"]);
    let r = q.ring();
    // {x^2 - y^2, xy} completes with y^3 under degrevlex
    assert_eq!(q.ideal_basis(), &[poly(r, "x*y"), poly(r, "x^2 - y^2"), poly(r, "y^3")]);
    assert_eq!(q.reduce(&poly(r, "x^3 + y")), poly(r, "y"));
}

#[test]
fn normal_form_examples() {
    let q = contro_ring();
    let r = q.ring();
    let l1 = FreeModuleLayout::graded(vec![0]);
    let f = vector(r, &["x*y + y^2"]);
    let b = basis_of(&q, &l1, &[f.clone()]);
    assert!(normal_form(&q, &f, &b).unwrap().is_zero());

    let empty = basis_of(&q, &l1, &[]);
    assert!(normal_form(&q, &vector(r, &["x^3"]), &empty).unwrap().is_zero());

    let l2 = FreeModuleLayout::graded(vec![1, 0]);
    let empty2 = basis_of(&q, &l2, &[]);
    let v = vector(r, &["x^3", "x*y^3"]);
    assert_eq!(normal_form(&q, &v, &empty2).unwrap(), vector(r, &["0", "x*y^3"]));
}

#[test]
fn groebner_basis_examples() {
    let plain = quotient(&["x", "y"], &[]);
    let l1 = FreeModuleLayout::graded(vec![0]);
    let b = basis_of(&plain, &l1, &[vector(plain.ring(), &["x^3"])]);
    assert_eq!(b.generators(), &[vector(plain.ring(), &["x^3"])]);

    let q = contro_ring();
    let r = q.ring();
    let layout = FreeModuleLayout::graded(vec![1, 0]);
    let b = basis_of(&q, &layout, &[vector(r, &["x^2", "y^3"])]);
    assert_eq!(b.generators(), &[vector(r, &["x^2", "y^3"]), vector(r, &["0", "x*y^3"])]);
    assert!(satisfies_buchberger_criterion(&q, &b));

    let n_star = [vector(r, &["x^2", "0"]), vector(r, &["0", "x*y^3"])];
    let b = basis_of(&q, &FreeModuleLayout::graded(vec![0, 0]), &n_star);
    assert_eq!(b.generators(), &n_star);
}

#[test]
fn membership_examples() {
    let q = contro_ring();
    let r = q.ring();
    let layout = FreeModuleLayout::graded(vec![1, 0]);
    let b = basis_of(&q, &layout, &[vector(r, &["x^2", "y^3"])]);
    assert!(is_member(&q, &vector(r, &["0", "x*y^3"]), &b).unwrap());
    assert!(!is_member(&q, &vector(r, &["0", "y^3"]), &b).unwrap());
    assert!(is_member(&q, &VectorElement::zero(2), &b).unwrap());
    let raw = SubmoduleBasis::from_generators(r, layout, vec![]).unwrap();
    assert!(matches!(is_member(&q, &VectorElement::zero(2), &raw), Err(Error::Contract(_))));
}

#[test]
fn syzygy_examples() {
    let q = contro_ring();
    let r = q.ring();
    let layout = FreeModuleLayout::graded(vec![0, 0]);
    let b = basis_of(&q, &layout, &[vector(r, &["x^2", "0"]), vector(r, &["0", "x*y^3"])]);
    let syz = syzygy_basis(&q, &b, None).unwrap();
    assert_eq!(syz.generators(), &[vector(r, &["x", "0"]), vector(r, &["0", "x^2"])]);
    assert_eq!(syz.layout().degree_shifts(), &[2, 4]);

    let free = basis_of(&q, &FreeModuleLayout::graded(vec![0]), &[vector(r, &["1"])]);
    assert!(syzygy_basis(&q, &free, None).unwrap().is_empty());

    let s = quotient(&["x", "y"], &[]);
    let b = basis_of(&s, &FreeModuleLayout::graded(vec![0]), &[vector(s.ring(), &["x"]), vector(s.ring(), &["y"])]);
    let syz = syzygy_basis(&s, &b, None).unwrap();
    assert_eq!(syz.len(), 1);
    let g = &syz.generators()[0];
    // the Koszul relation, up to sign, in the basis order (y, x)
    let r = s.ring();
    assert_eq!(b.generators(), &[vector(r, &["y"]), vector(r, &["x"])]);
    assert!(*g == vector(r, &["x", "-y"]) || *g == vector(r, &["-x", "y"]));
}

#[test]
fn kernel_examples() {
    let q = quotient(&["x"], &["x^3"]);
    let r = q.ring();
    let phi = Matrix::new(FreeModuleLayout::graded(vec![1]), FreeModuleLayout::graded(vec![0]), vec![vector(r, &["x"])])
        .unwrap();
    let k = kernel(&q, &phi, None).unwrap();
    assert_eq!(k.generators(), &[vector(r, &["x^2"])]);

    let id = Matrix::identity(r, &FreeModuleLayout::graded(vec![0, 3]));
    assert!(kernel(&q, &id, None).unwrap().is_empty());

    let q = contro_ring();
    let r = q.ring();
    let phi = Matrix::new(
        FreeModuleLayout::graded(vec![2, 4]),
        FreeModuleLayout::graded(vec![0, 0]),
        vec![vector(r, &["x^2", "0"]), vector(r, &["0", "x*y^3"])],
    )
    .unwrap();
    let k = kernel(&q, &phi, None).unwrap();
    assert_eq!(k.generators(), &[vector(r, &["x", "0"]), vector(r, &["0", "x^2"])]);

    let bad = Matrix::new(FreeModuleLayout::graded(vec![1]), FreeModuleLayout::graded(vec![0]), vec![vector(r, &["x^2"])])
        .unwrap();
    assert!(matches!(kernel(&q, &bad, None), Err(Error::NotHomogeneous(_))));
}

#[test]
fn degree_cap_sets_truncation() {
    let q = quotient(&["x"], &["x^3"]);
    let r = q.ring();
    let phi = Matrix::new(FreeModuleLayout::graded(vec![1]), FreeModuleLayout::graded(vec![0]), vec![vector(r, &["x"])])
        .unwrap();
    let k = kernel(&q, &phi, Some(2)).unwrap();
    assert!(k.is_truncated());
    assert!(k.is_empty());
}

fn apply(ring: &QuotientRing, cols: &[VectorElement], rank: usize, s: &VectorElement) -> VectorElement {
    let mut acc = VectorElement::zero(rank);
    for (c, f) in cols.iter().zip(s.components()) {
        acc = acc.add(ring.ring(), &c.scale_by(ring.ring(), f));
    }
    VectorElement::new(acc.components().iter().map(|p| ring.reduce(p)).collect())
}

/// Random homogeneous `1 x 3` or `2 x 3` matrices over a small quotient.
fn arb_instance() -> impl Strategy<Value = (usize, Vec<Vec<(u32, u32, u32)>>, u8)> {
    let entry = (0u32..3, 0u32..3, 0u32..32003);
    (1usize..3, proptest::collection::vec(proptest::collection::vec(entry, 1..3), 3), 0u8..3)
}

fn build(rows: usize, data: &[Vec<(u32, u32, u32)>], ideal_kind: u8) -> (QuotientRing, Matrix) {
    let ideal: &[&str] = match ideal_kind {
        0 => &[],
        1 => &["x^2"],
        _ => &["x*y", "z^2"],
    };
    let q = quotient(&["x", "y", "z"], ideal);
    let r = q.ring().clone();
    // column s has degree 2 + s % 2 against targets of degree 0 (and 1)
    let target = FreeModuleLayout::graded((0..rows as i64).collect());
    let mut cols = Vec::new();
    let mut degs = Vec::new();
    for (s, terms) in data.iter().enumerate() {
        let d = 2 + (s as i64 % 2);
        degs.push(d);
        let mut comps = Vec::new();
        for row in 0..rows {
            let want = (d - row as i64) as u32;
            let mut f = Polynomial::zero();
            for &(a, b, c) in terms {
                let (a, b) = (a.min(want), b.min(want - a.min(want)));
                let m = crate::algebra::Monomial::from_exponents(&[a, b, want - a - b]).unwrap();
                f = r.add(&f, &r.term(m, (c + row as u32) % 32003));
            }
            comps.push(f);
        }
        cols.push(VectorElement::new(comps));
    }
    let phi = Matrix::new(FreeModuleLayout::graded(degs), target, cols).unwrap();
    (q, phi)
}

/// Every element of `ker φ` in degrees up to `top`, computed by dense
/// linear algebra degree by degree, lies in the computed kernel.
fn kernel_complete_through(q: &QuotientRing, phi: &Matrix, k: &SubmoduleBasis, top: i64) -> bool {
    use crate::test_support::{monomials_of_degree, nullspace};
    let r = q.ring();
    let n = r.nvars();
    let lo = phi.source.degree_shifts().iter().copied().min().unwrap_or(0);
    for d in lo..=top {
        let mut basis = Vec::new();
        for s in 0..phi.cols() {
            let e = d - phi.source.degree(s);
            if e < 0 {
                continue;
            }
            for m in monomials_of_degree(n, e as u32) {
                let p = r.term(m, 1);
                if q.reduce(&p) == p {
                    basis.push((s, p));
                }
            }
        }
        let mut coords: Vec<(usize, crate::algebra::Monomial)> = Vec::new();
        let mut images = Vec::new();
        for (s, p) in &basis {
            let mut unit = VectorElement::zero(phi.cols());
            let mut comps = unit.clone().into_components();
            comps[*s] = p.clone();
            unit = VectorElement::new(comps);
            let img = apply(q, &phi.columns, phi.rows(), &unit);
            for (row, c) in img.components().iter().enumerate() {
                for (m, _) in c.terms() {
                    if !coords.iter().any(|(rr, mm)| *rr == row && mm == m) {
                        coords.push((row, m.clone()));
                    }
                }
            }
            images.push(img);
        }
        let mut mat = vec![vec![0; basis.len()]; coords.len()];
        for (col, img) in images.iter().enumerate() {
            for (row, c) in img.components().iter().enumerate() {
                for (m, a) in c.terms() {
                    let idx = coords.iter().position(|(rr, mm)| *rr == row && mm == m).unwrap();
                    mat[idx][col] = *a;
                }
            }
        }
        for v in nullspace(r.field(), mat, basis.len()) {
            let mut w = VectorElement::zero(phi.cols());
            for (c, (s, p)) in v.iter().zip(&basis) {
                if *c != 0 {
                    let mut comps = vec![Polynomial::zero(); phi.cols()];
                    comps[*s] = r.scale(p, *c);
                    w = w.add(r, &VectorElement::new(comps));
                }
            }
            if !is_member(q, &w, k).unwrap() {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_is_complete_in_low_degrees((rows, data, kind) in arb_instance()) {
        let (q, phi) = build(rows, &data, kind);
        let k = kernel(&q, &phi, None).unwrap();
        prop_assert!(kernel_complete_through(&q, &phi, &k, 6));
    }

    #[test]
    fn kernel_is_sound_and_bases_satisfy_criterion((rows, data, kind) in arb_instance()) {
        let (q, phi) = build(rows, &data, kind);
        let k = kernel(&q, &phi, None).unwrap();
        prop_assert!(satisfies_buchberger_criterion(&q, &k));
        for g in k.generators() {
            prop_assert!(g.is_homogeneous(&phi.source));
            prop_assert!(apply(&q, &phi.columns, rows, g).is_zero());
        }
        let image = groebner_basis(&q, &phi.target, &ModuleOrder::new(q.ring(), &phi.target), &phi.columns, None).unwrap();
        prop_assert!(satisfies_buchberger_criterion(&q, &image));
        for c in &phi.columns {
            let nf = normal_form(&q, c, &image).unwrap();
            prop_assert!(nf.is_zero());
        }
    }

    #[test]
    fn kernel_contains_random_relations((rows, data, kind) in arb_instance(), coeffs in proptest::collection::vec(0u32..32003, 6)) {
        let (q, phi) = build(rows, &data, kind);
        let k = kernel(&q, &phi, None).unwrap();
        let r = q.ring();
        // combinations of kernel generators and of syzygies of I remain in the kernel,
        // and anything in the kernel is a member
        let mut w = VectorElement::zero(phi.cols());
        for (i, g) in k.generators().iter().enumerate().take(3) {
            let f = r.constant(coeffs[i]);
            w = w.add(r, &g.scale_by(r, &r.mul(&f, &r.var(i % 3))));
        }
        prop_assert!(apply(&q, &phi.columns, rows, &w).is_zero());
        prop_assert!(is_member(&q, &w, &k).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent((rows, data, kind) in arb_instance(), c in 1u32..32003) {
        let (q, phi) = build(rows, &data, kind);
        let image = groebner_basis(&q, &phi.target, &ModuleOrder::new(q.ring(), &phi.target), &phi.columns[..1], None).unwrap();
        let r = q.ring();
        let v = phi.columns[1].add(r, &phi.columns[2].scale_by(r, &r.constant(c)));
        let once = normal_form(&q, &v, &image).unwrap();
        prop_assert_eq!(normal_form(&q, &once, &image).unwrap(), once);
    }
}
