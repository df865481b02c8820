//! Buchberger completion for submodules of shifted free modules over
//! `S / I`, with the reduced Gröbner basis of `I` acting as extra reducers
//! `g * e_j` in every component.

use std::collections::BTreeMap;

use crate::algebra::field::PrimeField;
use crate::algebra::module::ModuleOrder;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::{PolyRing, Polynomial};
use crate::algebra::vector::{merge_scaled, poly_in_component, ModVec, Term};

/// Everything a completion needs besides its generators.
#[derive(Clone, Debug)]
pub(crate) struct GbContext {
    pub ring: PolyRing,
    pub order: ModuleOrder,
    /// Degree of each basis element, used for sugar.
    pub shifts: Vec<i64>,
    ring_terms: Vec<Vec<Term>>,
    ring_sugar: Vec<i64>,
}

impl GbContext {
    /// `ideal` must be a monic reduced Gröbner basis in `ring`'s order.
    pub fn new(ring: &PolyRing, ideal: &[Polynomial], order: ModuleOrder, shifts: Vec<i64>) -> Self {
        debug_assert_eq!(order.rank(), shifts.len());
        GbContext {
            ring: ring.clone(),
            order,
            shifts,
            ring_terms: ideal.iter().map(|g| poly_in_component(g, 0)).collect(),
            ring_sugar: ideal.iter().map(|g| g.degree().unwrap_or(0) as i64).collect(),
        }
    }

    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    fn ring_lead(&self, k: usize) -> &Monomial {
        &self.ring_terms[k][0].mono
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Partner {
    Element(usize),
    Ring(usize),
}

#[derive(Clone, Debug)]
struct Pair {
    first: usize,
    partner: Partner,
    comp: usize,
    lcm: Monomial,
}

#[derive(Clone, Debug)]
struct Elem {
    v: ModVec,
    sugar: i64,
    active: bool,
}

/// Incremental Gröbner basis builder. Pairs are processed by sugar (the
/// degree, for homogeneous input), FIFO among equal sugar.
#[derive(Clone, Debug)]
pub(crate) struct GbBuilder<'a> {
    ctx: &'a GbContext,
    elems: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
    pairs: BTreeMap<(i64, u64), Pair>,
    seq: u64,
    cap: Option<i64>,
    truncated: bool,
}

impl<'a> GbBuilder<'a> {
    pub fn new(ctx: &'a GbContext, cap: Option<i64>) -> Self {
        GbBuilder {
            ctx,
            elems: Vec::new(),
            by_comp: vec![Vec::new(); ctx.order.rank()],
            pairs: BTreeMap::new(),
            seq: 0,
            cap,
            truncated: false,
        }
    }

    /// A builder whose basis is taken as given (no pairs are queued); used
    /// for reduction against a known Gröbner basis.
    pub fn with_basis(ctx: &'a GbContext, basis: impl IntoIterator<Item = ModVec>) -> Self {
        let mut b = GbBuilder::new(ctx, None);
        for mut v in basis {
            if v.is_zero() {
                continue;
            }
            v.make_monic(ctx.field());
            let comp = v.terms[0].comp;
            let sugar = v.sugar(&ctx.shifts);
            b.by_comp[comp].push(b.elems.len());
            b.elems.push(Elem { v, sugar, active: true });
        }
        b
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Reduces `v` and, when something survives, adds it to the basis.
    /// Returns the index of the new element.
    pub fn add_generator(&mut self, v: ModVec) -> Option<usize> {
        let sugar = v.sugar(&self.ctx.shifts);
        let r = self.reduce(v);
        if r.is_zero() {
            return None;
        }
        let sugar = sugar.max(r.sugar(&self.ctx.shifts));
        Some(self.insert(r, sugar))
    }

    /// Processes every pending pair of sugar at most `through` (all pairs
    /// when `None`).
    pub fn complete(&mut self, through: Option<i64>) {
        loop {
            let key = match self.pairs.keys().next() {
                Some(k) => *k,
                None => return,
            };
            if through.is_some_and(|d| key.0 > d) {
                return;
            }
            let pair = self.pairs.remove(&key).unwrap();
            if self.cap.is_some_and(|c| key.0 > c) {
                self.truncated = true;
                continue;
            }
            let s = self.s_vector(&pair);
            let r = self.reduce(s);
            if !r.is_zero() {
                let sugar = key.0.max(r.sugar(&self.ctx.shifts));
                self.insert(r, sugar);
            }
        }
    }

    fn s_vector(&self, pair: &Pair) -> ModVec {
        let k = self.ctx.field();
        let a = &self.elems[pair.first].v;
        let la = &a.terms[0];
        let ma = la.mono.quotient_of(&pair.lcm);
        let mut out = Vec::new();
        match pair.partner {
            Partner::Element(j) => {
                let b = &self.elems[j].v;
                let mb = b.terms[0].mono.quotient_of(&pair.lcm);
                let lhs = a.mul_term(k, &ma, 1);
                merge_scaled(&self.ctx.order, k, &lhs.terms[1..], &b.terms[1..], None, &mb, k.neg(1), &mut out);
            }
            Partner::Ring(g) => {
                let rt = &self.ctx.ring_terms[g];
                let mb = rt[0].mono.quotient_of(&pair.lcm);
                let lhs = a.mul_term(k, &ma, 1);
                merge_scaled(&self.ctx.order, k, &lhs.terms[1..], &rt[1..], Some(pair.comp), &mb, k.neg(1), &mut out);
            }
        }
        ModVec { terms: out }
    }

    fn find_reducer(&self, t: &Term) -> Option<(&[Term], Option<usize>, Monomial)> {
        for rt in &self.ctx.ring_terms {
            if rt[0].mono.divides(&t.mono) {
                return Some((&rt[1..], Some(t.comp), rt[0].mono.quotient_of(&t.mono)));
            }
        }
        for &i in &self.by_comp[t.comp] {
            let e = &self.elems[i];
            if e.active && e.v.terms[0].mono.divides(&t.mono) {
                return Some((&e.v.terms[1..], None, e.v.terms[0].mono.quotient_of(&t.mono)));
            }
        }
        None
    }

    /// Full reduction: no term of the result is divisible by a leading term
    /// of the basis or of `I`.
    pub fn reduce(&self, v: ModVec) -> ModVec {
        let k = self.ctx.field();
        let mut cur = v.terms;
        let mut buf = Vec::new();
        let mut rem = Vec::new();
        let mut start = 0;
        while start < cur.len() {
            match self.find_reducer(&cur[start]) {
                Some((tail, place, m)) => {
                    let c = k.neg(cur[start].coeff);
                    merge_scaled(&self.ctx.order, k, &cur[start + 1..], tail, place, &m, c, &mut buf);
                    std::mem::swap(&mut cur, &mut buf);
                    start = 0;
                }
                None => {
                    rem.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        ModVec { terms: rem }
    }

    /// Top reduction only, for cheap zero tests.
    pub fn reduces_to_zero(&self, v: ModVec) -> bool {
        let k = self.ctx.field();
        let mut cur = v.terms;
        let mut buf = Vec::new();
        while let Some(t) = cur.first() {
            match self.find_reducer(t) {
                Some((tail, place, m)) => {
                    let c = k.neg(t.coeff);
                    merge_scaled(&self.ctx.order, k, &cur[1..], tail, place, &m, c, &mut buf);
                    std::mem::swap(&mut cur, &mut buf);
                }
                None => return false,
            }
        }
        true
    }

    fn push_pair(&mut self, sugar: i64, pair: Pair) {
        self.seq += 1;
        self.pairs.insert((sugar, self.seq), pair);
    }

    fn insert(&mut self, mut v: ModVec, sugar: i64) -> usize {
        v.make_monic(self.ctx.field());
        let idx = self.elems.len();
        let (comp, lead) = {
            let t = &v.terms[0];
            (t.comp, t.mono.clone())
        };
        let shift = self.ctx.shifts[comp];

        // chain criterion against pending pairs in the same component
        let mut doomed = Vec::new();
        for (key, p) in &self.pairs {
            if p.comp != comp || !lead.divides(&p.lcm) {
                continue;
            }
            let la = &self.elems[p.first].v.terms[0].mono;
            let lb = match p.partner {
                Partner::Element(j) => &self.elems[j].v.terms[0].mono,
                Partner::Ring(g) => self.ctx.ring_lead(g),
            };
            if la.lcm(&lead) != p.lcm && lb.lcm(&lead) != p.lcm {
                doomed.push(*key);
            }
        }
        for key in doomed {
            self.pairs.remove(&key);
        }

        let sugar_at = |lcm: &Monomial, lead: &Monomial, s: i64| s + (lcm.degree() - lead.degree()) as i64;
        let mut fresh = Vec::new();
        for &j in &self.by_comp[comp] {
            let e = &self.elems[j];
            let lj = &e.v.terms[0].mono;
            let lcm = lead.lcm(lj);
            let s = sugar_at(&lcm, &lead, sugar).max(sugar_at(&lcm, lj, e.sugar));
            fresh.push((s, Pair { first: idx, partner: Partner::Element(j), comp, lcm }));
        }
        for g in 0..self.ctx.ring_terms.len() {
            let lg = self.ctx.ring_lead(g);
            if lg.is_coprime(&lead) {
                continue;
            }
            let lcm = lead.lcm(lg);
            let s = sugar_at(&lcm, &lead, sugar).max(sugar_at(&lcm, lg, self.ctx.ring_sugar[g] + shift));
            fresh.push((s, Pair { first: idx, partner: Partner::Ring(g), comp, lcm }));
        }
        for (s, p) in fresh {
            self.push_pair(s, p);
        }

        for &j in &self.by_comp[comp] {
            if self.elems[j].active && lead.divides(&self.elems[j].v.terms[0].mono) {
                self.elems[j].active = false;
            }
        }
        self.elems.push(Elem { v, sugar, active: true });
        self.by_comp[comp].push(idx);
        idx
    }

    /// Reduced basis: minimal leads, tails fully reduced, monic, sorted by
    /// sugar and then increasing leading term.
    pub fn into_reduced(self) -> Vec<ModVec> {
        let mut out: Vec<(i64, ModVec)> = Vec::new();
        for e in self.elems.iter().filter(|e| e.active) {
            let head = e.v.terms[0].clone();
            let tail = self.reduce(ModVec { terms: e.v.terms[1..].to_vec() });
            let mut terms = Vec::with_capacity(tail.terms.len() + 1);
            terms.push(head);
            terms.extend(tail.terms);
            out.push((e.sugar, ModVec { terms }));
        }
        let order = &self.ctx.order;
        out.sort_by(|(sa, a), (sb, b)| {
            let (ta, tb) = (&a.terms[0], &b.terms[0]);
            sa.cmp(sb).then_with(|| order.cmp_terms(ta.comp, &ta.mono, tb.comp, &tb.mono))
        });
        out.into_iter().map(|(_, v)| v).collect()
    }
}
