#![allow(dead_code)]

use gradres_core::algebra::{parse_polynomial, FreeModuleLayout, Monomial, PolyRing, Polynomial, Presentation, VectorElement};
use gradres_core::filtration::FilteredPresentation;
use gradres_core::groebner::QuotientRing;
use rand::seq::SliceRandom;
use rand::Rng;

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn poly(r: &PolyRing, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

pub fn vector(r: &PolyRing, comps: &[&str]) -> VectorElement {
    VectorElement::new(comps.iter().map(|s| poly(r, s)).collect())
}

pub fn quotient(vars: &[&str], ideal: &[&str]) -> QuotientRing {
    let r = PolyRing::with_vars(vars);
    let gens = ideal.iter().map(|s| poly(&r, s)).collect();
    QuotientRing::new(r, gens).unwrap()
}

pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps).unwrap());
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
    }
    if n > 0 {
        rec(0, d, &mut exps, &mut out);
    }
    out
}

/// A random form of degree `d` with at most `terms` terms; zero for `d < 0`.
pub fn random_form(rng: &mut impl Rng, r: &PolyRing, d: i64, terms: usize) -> Polynomial {
    if d < 0 {
        return Polynomial::zero();
    }
    let mut monos = monomials_of_degree(r.nvars(), d as u32);
    monos.shuffle(rng);
    let p = r.field().characteristic();
    let t = rng.gen_range(1..=terms.max(1));
    r.from_terms(monos.into_iter().take(t).map(|m| (m, rng.gen_range(1..p))).collect())
}

pub fn random_ring(rng: &mut impl Rng, nvars: usize) -> QuotientRing {
    let r = PolyRing::with_vars(&VARS[..nvars]);
    let gens: Vec<Polynomial> = match rng.gen_range(0..3) {
        0 => Vec::new(),
        _ => (0..rng.gen_range(1..=2))
            .map(|_| {
                let d = rng.gen_range(2..=3);
                random_form(rng, &r, d, 2)
            })
            .collect(),
    };
    QuotientRing::new(r, gens).unwrap()
}

/// A homogeneous vector of degree `j` for `layout`; each component is zero
/// with probability one half.
pub fn random_vector(rng: &mut impl Rng, r: &PolyRing, layout: &FreeModuleLayout, j: i64) -> VectorElement {
    let comps = (0..layout.rank())
        .map(|i| if rng.gen_bool(0.5) { Polynomial::zero() } else { random_form(rng, r, j - layout.degree(i), 2) })
        .collect();
    VectorElement::new(comps)
}

/// Random graded filtered presentation: rank 1 or 2, degree shifts in
/// `0..=1`, valuation shifts in `0..=2`, one to three relations.
pub fn random_filtered(rng: &mut impl Rng) -> FilteredPresentation {
    let nvars = rng.gen_range(2..=3);
    let ring = random_ring(rng, nvars);
    let r = ring.ring().clone();
    let rank = rng.gen_range(1..=2);
    let degrees: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=1)).collect();
    let valuations: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=2)).collect();
    let layout = FreeModuleLayout::new(degrees, valuations).unwrap();
    let top = *layout.degree_shifts().iter().max().unwrap();
    let relations = (0..rng.gen_range(1..=3))
        .map(|_| {
            let j = top + rng.gen_range(1..=3);
            random_vector(rng, &r, &layout, j)
        })
        .filter(|v| !v.is_zero())
        .collect();
    FilteredPresentation::graded(ring, Presentation::new(layout, relations).unwrap()).unwrap()
}

/// Presentations whose associated graded module tends to have a linear
/// resolution: equal valuations, relations with linear lowest parts.
pub fn random_linear_gr(rng: &mut impl Rng) -> FilteredPresentation {
    let nvars = rng.gen_range(2..=3);
    let r = PolyRing::with_vars(&VARS[..nvars]);
    let ring = QuotientRing::polynomial(r.clone());
    let rank = rng.gen_range(1..=2);
    let v = rng.gen_range(0..=1);
    let degrees: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=2)).collect();
    let layout = FreeModuleLayout::new(degrees.clone(), vec![v; rank]).unwrap();
    let mut relations = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        // one component carries a linear form; the others lie deeper in m
        let lead = rng.gen_range(0..rank);
        let j = degrees[lead] + 1;
        let comps = (0..rank)
            .map(|i| {
                if i == lead {
                    random_form(rng, &r, 1, 2)
                } else if j - degrees[i] >= 2 && rng.gen_bool(0.5) {
                    random_form(rng, &r, j - degrees[i], 2)
                } else {
                    Polynomial::zero()
                }
            })
            .collect();
        relations.push(VectorElement::new(comps));
    }
    FilteredPresentation::graded(ring, Presentation::new(layout, relations).unwrap()).unwrap()
}

/// Random graded module over a polynomial ring in at most three variables.
pub fn random_polynomial_module(rng: &mut impl Rng) -> (QuotientRing, Presentation) {
    let nvars = rng.gen_range(2..=3);
    let r = PolyRing::with_vars(&VARS[..nvars]);
    let ring = QuotientRing::polynomial(r.clone());
    let rank = rng.gen_range(1..=2);
    let layout = FreeModuleLayout::graded((0..rank).map(|_| rng.gen_range(0..=1)).collect());
    let top = *layout.degree_shifts().iter().max().unwrap();
    let relations = (0..rng.gen_range(1..=4))
        .map(|_| {
            let j = top + rng.gen_range(1..=2);
            random_vector(rng, &r, &layout, j)
        })
        .filter(|v| !v.is_zero())
        .collect();
    (ring, Presentation::new(layout, relations).unwrap())
}

/// Quadratic quotient ring with a module generated in degree zero by
/// linear relations; a common source of linear resolutions.
pub fn random_koszul_like(rng: &mut impl Rng) -> FilteredPresentation {
    let nvars = rng.gen_range(2..=3);
    let r = PolyRing::with_vars(&VARS[..nvars]);
    let mut monos = monomials_of_degree(nvars, 2);
    monos.shuffle(rng);
    let k = rng.gen_range(0..=2);
    let ideal: Vec<Polynomial> = monos.into_iter().take(k).map(|m| r.term(m, 1)).collect();
    let ring = QuotientRing::new(r.clone(), ideal).unwrap();
    let layout = FreeModuleLayout::graded(vec![0]);
    let relations = (0..rng.gen_range(0..=2)).map(|_| VectorElement::new(vec![random_form(rng, &r, 1, 2)])).collect();
    FilteredPresentation::graded(ring, Presentation::new(layout, relations).unwrap()).unwrap()
}
