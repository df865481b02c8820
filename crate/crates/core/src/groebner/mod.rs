//! Normal forms, Gröbner bases, syzygies, kernels and membership for
//! submodules of shifted free modules over `R = S / I`.

pub(crate) mod engine;

use crate::algebra::module::{FreeModuleLayout, Matrix, ModuleOrder, VectorElement};
use crate::algebra::monomial::MonomialOrder;
use crate::algebra::poly::{PolyRing, Polynomial};
use crate::algebra::vector::ModVec;
use crate::error::{Error, Result};
use engine::{GbBuilder, GbContext};

/// `R = S / I`, with the reduced Gröbner basis of `I` in the ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
}

impl QuotientRing {
    pub fn new(ring: PolyRing, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            ring.check(g)?;
        }
        let basis = ideal_basis(&ring, &generators);
        Ok(QuotientRing { ring, generators, basis })
    }

    /// `R = S`.
    pub fn polynomial(ring: PolyRing) -> Self {
        QuotientRing { ring, generators: Vec::new(), basis: Vec::new() }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis of `I`, monic, increasing leading terms.
    pub fn ideal_basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_graded(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// Same ring and ideal, another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> QuotientRing {
        let ring = self.ring.with_order(order);
        let generators: Vec<Polynomial> = self.generators.iter().map(|g| ring.resort(g)).collect();
        let basis = ideal_basis(&ring, &generators);
        QuotientRing { ring, generators, basis }
    }

    /// Canonical representative of `f` modulo `I`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let layout = FreeModuleLayout::graded(vec![0]);
        let ctx = self.context(&layout, ModuleOrder::new(&self.ring, &layout));
        let b = GbBuilder::with_basis(&ctx, []);
        let v = b.reduce(ModVec::from_element(&VectorElement::new(vec![f.clone()]), &ctx.order));
        v.to_element(&self.ring, 1).into_components().pop().unwrap()
    }

    pub(crate) fn context(&self, layout: &FreeModuleLayout, order: ModuleOrder) -> GbContext {
        GbContext::new(&self.ring, &self.basis, order, layout.degree_shifts().to_vec())
    }
}

fn ideal_basis(ring: &PolyRing, generators: &[Polynomial]) -> Vec<Polynomial> {
    let layout = FreeModuleLayout::graded(vec![0]);
    let ctx = GbContext::new(ring, &[], ModuleOrder::new(ring, &layout), vec![0]);
    let gens: Vec<ModVec> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ModVec::from_element(&VectorElement::new(vec![g.clone()]), &ctx.order))
        .collect();
    let (basis, _) = complete_basis(&ctx, gens, None);
    basis.into_iter().map(|v| v.to_element(ring, 1).into_components().pop().unwrap()).collect()
}

/// Buchberger completion following the normal strategy: generators enter
/// in order of sugar, interleaved with pair processing.
pub(crate) fn complete_basis(ctx: &GbContext, mut gens: Vec<ModVec>, cap: Option<i64>) -> (Vec<ModVec>, bool) {
    let mut b = GbBuilder::new(ctx, cap);
    let mut truncated = false;
    gens.retain(|g| !g.is_zero());
    let mut keyed: Vec<(i64, ModVec)> = gens.into_iter().map(|g| (g.sugar(&ctx.shifts), g)).collect();
    keyed.sort_by_key(|(s, _)| *s);
    for (s, g) in keyed {
        if cap.is_some_and(|c| s > c) {
            truncated = true;
            continue;
        }
        b.complete(Some(s - 1));
        b.add_generator(g);
    }
    b.complete(None);
    truncated |= b.truncated();
    (b.into_reduced(), truncated)
}

/// Generators of a submodule, together with the layout and order they
/// were computed under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleBasis {
    layout: FreeModuleLayout,
    order: ModuleOrder,
    generators: Vec<VectorElement>,
    reduced_gb: bool,
    truncated: bool,
}

impl SubmoduleBasis {
    /// Plain generating set, not a Gröbner basis.
    pub fn from_generators(ring: &PolyRing, layout: FreeModuleLayout, generators: Vec<VectorElement>) -> Result<Self> {
        for g in &generators {
            g.check_rank(&layout)?;
        }
        let order = ModuleOrder::new(ring, &layout);
        Ok(SubmoduleBasis { layout, order, generators, reduced_gb: false, truncated: false })
    }

    pub fn layout(&self) -> &FreeModuleLayout {
        &self.layout
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn generators(&self) -> &[VectorElement] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<VectorElement> {
        self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_reduced_gb(&self) -> bool {
        self.reduced_gb
    }

    /// Set when a degree cap cut the computation short; the generators are
    /// then only a Gröbner basis up to that degree.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    fn require_gb(&self) -> Result<()> {
        if self.reduced_gb {
            Ok(())
        } else {
            Err(Error::Contract("expected a reduced Gröbner basis".into()))
        }
    }

    fn mod_vecs(&self) -> Vec<ModVec> {
        self.generators.iter().map(|g| ModVec::from_element(g, &self.order)).collect()
    }
}

fn check_graded(ring: &QuotientRing, layout: &FreeModuleLayout, gens: &[VectorElement]) -> Result<()> {
    if !ring.is_graded() {
        return Ok(());
    }
    if let Some(i) = gens.iter().position(|g| !g.is_homogeneous(layout)) {
        return Err(Error::NotHomogeneous(format!("generator {i}")));
    }
    Ok(())
}

/// Reduced Gröbner basis of `⟨gens⟩` (plus the relations of `I`) under
/// `order`. Over a graded ring the generators must be homogeneous.
pub fn groebner_basis(
    ring: &QuotientRing,
    layout: &FreeModuleLayout,
    order: &ModuleOrder,
    gens: &[VectorElement],
    degree_cap: Option<i64>,
) -> Result<SubmoduleBasis> {
    for g in gens {
        g.check_rank(layout)?;
        for c in g.components() {
            ring.ring().check(c)?;
        }
    }
    check_graded(ring, layout, gens)?;
    Ok(groebner_basis_unchecked(ring, layout, order, gens, degree_cap))
}

pub(crate) fn groebner_basis_unchecked(
    ring: &QuotientRing,
    layout: &FreeModuleLayout,
    order: &ModuleOrder,
    gens: &[VectorElement],
    degree_cap: Option<i64>,
) -> SubmoduleBasis {
    let ctx = ring.context(layout, order.clone());
    let vs = gens.iter().map(|g| ModVec::from_element(g, order)).collect();
    let (basis, truncated) = complete_basis(&ctx, vs, degree_cap);
    SubmoduleBasis {
        layout: layout.clone(),
        order: order.clone(),
        generators: basis.iter().map(|v| v.to_element(ring.ring(), layout.rank())).collect(),
        reduced_gb: true,
        truncated,
    }
}

/// Remainder of `v` on division by `basis` and the relations of `I`.
pub fn normal_form(ring: &QuotientRing, v: &VectorElement, basis: &SubmoduleBasis) -> Result<VectorElement> {
    v.check_rank(&basis.layout)?;
    let ctx = ring.context(&basis.layout, basis.order.clone());
    let b = GbBuilder::with_basis(&ctx, basis.mod_vecs());
    Ok(b.reduce(ModVec::from_element(v, &basis.order)).to_element(ring.ring(), basis.layout.rank()))
}

/// Membership test; `basis` must be a Gröbner basis.
pub fn is_member(ring: &QuotientRing, v: &VectorElement, basis: &SubmoduleBasis) -> Result<bool> {
    basis.require_gb()?;
    v.check_rank(&basis.layout)?;
    let ctx = ring.context(&basis.layout, basis.order.clone());
    let b = GbBuilder::with_basis(&ctx, basis.mod_vecs());
    Ok(b.reduces_to_zero(ModVec::from_element(v, &basis.order)))
}

/// Reusable membership oracle for many queries against one basis.
pub struct MembershipOracle {
    ctx: GbContext,
    basis: Vec<ModVec>,
    rank: usize,
}

impl MembershipOracle {
    pub fn new(ring: &QuotientRing, basis: &SubmoduleBasis) -> Result<Self> {
        basis.require_gb()?;
        Ok(MembershipOracle {
            ctx: ring.context(&basis.layout, basis.order.clone()),
            basis: basis.mod_vecs(),
            rank: basis.layout.rank(),
        })
    }

    pub fn contains(&self, v: &VectorElement) -> bool {
        let b = GbBuilder::with_basis(&self.ctx, self.basis.iter().cloned());
        b.reduces_to_zero(ModVec::from_element(v, &self.ctx.order))
    }

    pub fn normal_form(&self, v: &VectorElement) -> VectorElement {
        let b = GbBuilder::with_basis(&self.ctx, self.basis.iter().cloned());
        b.reduce(ModVec::from_element(v, &self.ctx.order)).to_element(&self.ctx.ring, self.rank)
    }
}

/// Generators of `ker φ ⊆ source`, as a reduced Gröbner basis under the
/// source's module order. Computed from the graph of `φ` under an
/// elimination order.
pub fn kernel(ring: &QuotientRing, phi: &Matrix, degree_cap: Option<i64>) -> Result<SubmoduleBasis> {
    for c in &phi.columns {
        for e in c.components() {
            ring.ring().check(e)?;
        }
    }
    if ring.is_graded() && !phi.is_homogeneous() {
        return Err(Error::NotHomogeneous("matrix entries".into()));
    }
    Ok(kernel_unchecked(ring, phi, degree_cap))
}

pub(crate) fn kernel_unchecked(ring: &QuotientRing, phi: &Matrix, degree_cap: Option<i64>) -> SubmoduleBasis {
    let (g, f) = (&phi.target, &phi.source);
    let (rg, rf) = (g.rank(), f.rank());
    let graph_layout = g.concat(f);
    let order = ModuleOrder::elimination(ring.ring(), g, f);
    let ctx = ring.context(&graph_layout, order.clone());
    let gens: Vec<ModVec> = phi
        .columns
        .iter()
        .enumerate()
        .map(|(s, col)| {
            let unit = VectorElement::unit(ring.ring(), rf, s);
            ModVec::from_element(&col.concat(&unit), &order)
        })
        .collect();
    let (basis, truncated) = complete_basis(&ctx, gens, degree_cap);
    let f_order = ModuleOrder::new(ring.ring(), f);
    let idx: Vec<usize> = (rg..rg + rf).collect();
    let generators = basis
        .iter()
        .filter(|v| v.terms[0].comp >= rg)
        .map(|v| v.to_element(ring.ring(), rg + rf).select(&idx))
        .collect();
    SubmoduleBasis { layout: f.clone(), order: f_order, generators, reduced_gb: true, truncated }
}

/// Relations among the generators of `basis`. The new layout gives the
/// `i`-th generator its degree (homogeneous input) and valuation zero.
pub fn syzygy_basis(ring: &QuotientRing, basis: &SubmoduleBasis, degree_cap: Option<i64>) -> Result<SubmoduleBasis> {
    basis.require_gb()?;
    let mut shifts = Vec::with_capacity(basis.len());
    for (i, g) in basis.generators.iter().enumerate() {
        match g.homogeneous_degree(&basis.layout) {
            Ok(Some(d)) => shifts.push(d),
            _ if !ring.is_graded() => shifts.push(0),
            _ => return Err(Error::NotHomogeneous(format!("generator {i}"))),
        }
    }
    let source = FreeModuleLayout::graded(shifts);
    let phi = Matrix::new(source, basis.layout.clone(), basis.generators.clone())?;
    kernel(ring, &phi, degree_cap)
}

/// First element of `elements` outside `⟨container⟩`, if any.
pub fn first_non_member(
    ring: &QuotientRing,
    layout: &FreeModuleLayout,
    container: &[VectorElement],
    elements: &[VectorElement],
) -> Result<Option<VectorElement>> {
    let order = ModuleOrder::new(ring.ring(), layout);
    for g in container.iter().chain(elements) {
        g.check_rank(layout)?;
    }
    let basis = groebner_basis_unchecked(ring, layout, &order, container, None);
    let oracle = MembershipOracle::new(ring, &basis)?;
    Ok(elements.iter().find(|e| !oracle.contains(e)).cloned())
}

/// Indices of a minimal generating set of `⟨gens⟩` (graded input),
/// chosen greedily by degree and then input order.
pub fn minimal_generators(ring: &QuotientRing, layout: &FreeModuleLayout, gens: &[VectorElement]) -> Result<Vec<usize>> {
    let order = ModuleOrder::new(ring.ring(), layout);
    minimal_generators_in(ring, layout, &order, gens)
}

pub(crate) fn minimal_generators_in(
    ring: &QuotientRing,
    layout: &FreeModuleLayout,
    order: &ModuleOrder,
    gens: &[VectorElement],
) -> Result<Vec<usize>> {
    let mut keyed = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        g.check_rank(layout)?;
        match g.homogeneous_degree(layout) {
            Ok(Some(d)) => keyed.push((d, i)),
            Ok(None) => {}
            Err(()) => return Err(Error::NotHomogeneous(format!("generator {i}"))),
        }
    }
    keyed.sort();
    let ctx = ring.context(layout, order.clone());
    let mut b = GbBuilder::new(&ctx, None);
    let mut kept = Vec::new();
    for (d, i) in keyed {
        b.complete(Some(d));
        if b.add_generator(ModVec::from_element(&gens[i], order)).is_some() {
            kept.push(i);
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

/// Rechecks Buchberger's criterion from scratch: every S-vector of the
/// basis, including those with the relations of `I`, reduces to zero.
pub fn satisfies_buchberger_criterion(ring: &QuotientRing, basis: &SubmoduleBasis) -> bool {
    let ctx = ring.context(&basis.layout, basis.order.clone());
    let vs: Vec<ModVec> = basis.mod_vecs();
    let reducer = GbBuilder::with_basis(&ctx, vs.iter().cloned());
    let k = ring.ring().field();
    let ideal = ring.ideal_basis();
    for (i, a) in vs.iter().enumerate() {
        let mut a = a.clone();
        a.make_monic(k);
        let la = a.terms[0].clone();
        let mut s_vectors = Vec::new();
        for b in &vs[i + 1..] {
            let mut b = b.clone();
            b.make_monic(k);
            let lb = &b.terms[0];
            if lb.comp != la.comp {
                continue;
            }
            let l = la.mono.lcm(&lb.mono);
            let x = a.mul_term(k, &la.mono.quotient_of(&l), 1);
            let y = b.mul_term(k, &lb.mono.quotient_of(&l), k.neg(1));
            s_vectors.push(add_mod_vecs(&ctx, &x, &y));
        }
        for g in ideal {
            let lg = &g.terms()[0].0;
            let l = la.mono.lcm(lg);
            let x = a.mul_term(k, &la.mono.quotient_of(&l), 1);
            let gv = crate::algebra::vector::poly_in_component(g, la.comp);
            let y = ModVec { terms: gv }.mul_term(k, &lg.quotient_of(&l), k.neg(1));
            s_vectors.push(add_mod_vecs(&ctx, &x, &y));
        }
        if !s_vectors.into_iter().all(|s| reducer.reduces_to_zero(s)) {
            return false;
        }
    }
    true
}

fn add_mod_vecs(ctx: &GbContext, a: &ModVec, b: &ModVec) -> ModVec {
    let one = crate::algebra::monomial::Monomial::one(ctx.ring.nvars());
    let mut out = Vec::new();
    crate::algebra::vector::merge_scaled(&ctx.order, ctx.field(), &a.terms, &b.terms, None, &one, 1, &mut out);
    ModVec { terms: out }
}

#[cfg(test)]
mod tests;
