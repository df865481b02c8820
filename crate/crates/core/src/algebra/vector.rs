//! Flat term-list representation of module elements used by the Gröbner
//! engine: terms sorted decreasingly under a [`ModuleOrder`].

use std::cmp::Ordering;

use super::field::{Coeff, PrimeField};
use super::module::{ModuleOrder, VectorElement};
use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct ModVec {
    pub terms: Vec<Term>,
}

impl ModVec {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_element(v: &VectorElement, order: &ModuleOrder) -> Self {
        let mut terms: Vec<Term> = v
            .components()
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| p.terms().iter().map(move |(m, c)| Term { comp, mono: m.clone(), coeff: *c }))
            .collect();
        terms.sort_by(|a, b| order.cmp_terms(b.comp, &b.mono, a.comp, &a.mono));
        ModVec { terms }
    }

    pub fn to_element(&self, ring: &PolyRing, rank: usize) -> VectorElement {
        let mut comps: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            comps[t.comp].push((t.mono.clone(), t.coeff));
        }
        VectorElement::new(
            comps
                .into_iter()
                .map(|ts| {
                    // already sorted by the monomial order within one component
                    debug_assert!(ts.windows(2).all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
                    Polynomial::from_sorted_unchecked(ts)
                })
                .collect(),
        )
    }

    /// Highest `deg(m) + shift[comp]` over the terms.
    pub fn sugar(&self, shifts: &[i64]) -> i64 {
        self.terms.iter().map(|t| t.mono.degree() as i64 + shifts[t.comp]).max().unwrap_or(i64::MIN)
    }

    pub fn scale(&mut self, k: &PrimeField, c: Coeff) {
        for t in &mut self.terms {
            t.coeff = k.mul(t.coeff, c);
        }
    }

    pub fn make_monic(&mut self, k: &PrimeField) {
        if let Some(t) = self.terms.first() {
            if t.coeff != 1 {
                let inv = k.inv(t.coeff);
                self.scale(k, inv);
            }
        }
    }

    /// `c * m * self`; term order is preserved because module orders are
    /// multiplicative.
    pub fn mul_term(&self, k: &PrimeField, m: &Monomial, c: Coeff) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| Term { comp: t.comp, mono: t.mono.mul(m), coeff: k.mul(t.coeff, c) })
                .collect(),
        }
    }
}

/// `out = a + c * m * b`, merged in order. With `place = Some(i)` the terms
/// of `b` are read as lying in component `i` (used for ring relations).
#[allow(clippy::too_many_arguments)]
pub(crate) fn merge_scaled(
    order: &ModuleOrder,
    k: &PrimeField,
    a: &[Term],
    b: &[Term],
    place: Option<usize>,
    m: &Monomial,
    c: Coeff,
    out: &mut Vec<Term>,
) {
    let bc = |t: &Term| place.unwrap_or(t.comp);
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b.first().map(|t| t.mono.mul(m));
    while i < a.len() && j < b.len() {
        let bm = bj.as_ref().unwrap();
        match order.cmp_terms(a[i].comp, &a[i].mono, bc(&b[j]), bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term { comp: bc(&b[j]), mono: bj.take().unwrap(), coeff: k.mul(b[j].coeff, c) });
                j += 1;
                bj = b.get(j).map(|t| t.mono.mul(m));
            }
            Ordering::Equal => {
                let s = k.add(a[i].coeff, k.mul(b[j].coeff, c));
                if s != 0 {
                    out.push(Term { comp: a[i].comp, mono: bj.take().unwrap(), coeff: s });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.mono.mul(m));
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    while j < b.len() {
        out.push(Term { comp: bc(&b[j]), mono: b[j].mono.mul(m), coeff: k.mul(b[j].coeff, c) });
        j += 1;
    }
}

/// A polynomial placed in component `comp`, as sorted terms.
pub(crate) fn poly_in_component(p: &Polynomial, comp: usize) -> Vec<Term> {
    p.terms().iter().map(|(m, c)| Term { comp, mono: m.clone(), coeff: *c }).collect()
}
