use std::collections::BTreeSet;

use super::{initial_form, valuation, FilteredPresentation};
use crate::algebra::{FreeModuleLayout, Matrix, ModuleOrder, Presentation, VectorElement};
use crate::error::{Error, Result};
use crate::groebner::{self, MembershipOracle, QuotientRing, SubmoduleBasis};
use crate::resolution::prune_presentation;

fn require_graded_ring(ring: &QuotientRing) -> Result<()> {
    if ring.is_graded() {
        Ok(())
    } else {
        Err(Error::NotHomogeneous("defining ideal".into()))
    }
}

fn weight_basis(ring: &QuotientRing, layout: &FreeModuleLayout, gens: &[VectorElement]) -> Result<SubmoduleBasis> {
    require_graded_ring(ring)?;
    groebner::groebner_basis(ring, layout, &ModuleOrder::new(ring.ring(), layout), gens, None)
}

fn gr_basis(ring: &QuotientRing, layout: &FreeModuleLayout, gens: &[VectorElement]) -> Result<SubmoduleBasis> {
    let gl = layout.gr_layout();
    groebner::groebner_basis(ring, &gl, &ModuleOrder::new(ring.ring(), &gl), gens, None)
}

/// `N* ⊆ gr(F)` for homogeneous `N ⊆ F`, as a reduced Gröbner basis in
/// the layout of `gr(F)`.
///
/// A Gröbner basis of `N` under the weight-refining order has initial
/// forms generating `N*`.
pub fn initial_submodule(ring: &QuotientRing, layout: &FreeModuleLayout, gens: &[VectorElement]) -> Result<SubmoduleBasis> {
    let gb = weight_basis(ring, layout, gens)?;
    let forms = gb.generators().iter().map(|g| initial_form(ring, g, layout)).collect::<Result<Vec<_>>>()?;
    gr_basis(ring, layout, &forms)
}

/// Homogeneous elements whose initial forms minimally generate `N*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    pub elements: Vec<VectorElement>,
    pub degrees: Vec<i64>,
    pub valuations: Vec<i64>,
    pub initial_forms: Vec<VectorElement>,
}

impl StandardBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Free module with one basis element per standard basis element,
    /// carrying its degree and valuation.
    pub fn layout(&self) -> FreeModuleLayout {
        FreeModuleLayout::new(self.degrees.clone(), self.valuations.clone()).expect("valuations are nonnegative")
    }

    /// `{deg - v}` over the elements.
    pub fn delta(&self) -> BTreeSet<i64> {
        self.degrees.iter().zip(&self.valuations).map(|(d, v)| d - v).collect()
    }
}

/// Minimal homogeneous standard basis of `N ⊆ F` with the induced
/// filtration `N ∩ F_p`.
pub fn minimal_standard_basis(ring: &QuotientRing, layout: &FreeModuleLayout, gens: &[VectorElement]) -> Result<StandardBasis> {
    let gb = weight_basis(ring, layout, gens)?;
    let forms = gb.generators().iter().map(|g| initial_form(ring, g, layout)).collect::<Result<Vec<_>>>()?;
    let keep = groebner::minimal_generators(ring, &layout.gr_layout(), &forms)?;
    let mut sb = StandardBasis { elements: Vec::new(), degrees: Vec::new(), valuations: Vec::new(), initial_forms: Vec::new() };
    for i in keep {
        let g = &gb.generators()[i];
        let d = g.homogeneous_degree(layout).ok().flatten().ok_or_else(|| Error::NotHomogeneous(format!("basis element {i}")))?;
        sb.elements.push(g.clone());
        sb.degrees.push(d);
        sb.valuations.push(valuation(ring, g, layout)?.expect("nonzero basis element"));
        sb.initial_forms.push(forms[i].clone());
    }
    Ok(sb)
}

/// Outcome of a standard basis test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasisCheck {
    /// The elements generate the module.
    pub generates: bool,
    /// Their initial forms generate the associated graded module.
    pub initial_forms_generate: bool,
    /// `gr(ker d) = ker(gr d)` for the map `d` from the free module on the
    /// elements, shifted by their degrees and valuations.
    pub kernel_criterion: bool,
    /// An element witnessing the first failure, if any.
    pub witness: Option<VectorElement>,
}

impl StandardBasisCheck {
    pub fn is_standard(&self) -> bool {
        self.generates && self.initial_forms_generate
    }
}

fn homogeneous_degrees(layout: &FreeModuleLayout, elements: &[VectorElement]) -> Result<Vec<i64>> {
    elements
        .iter()
        .enumerate()
        .map(|(i, e)| match e.homogeneous_degree(layout) {
            Ok(Some(d)) => Ok(d),
            Ok(None) => Err(Error::ZeroVector),
            Err(()) => Err(Error::NotHomogeneous(format!("element {i}"))),
        })
        .collect()
}

/// Generators of the kernel of `source ⊕ P -> target` given by `cols`
/// followed by `extra`, projected to `source`. This is the preimage of
/// `⟨extra⟩` under `source -> target`.
pub(crate) fn relative_kernel(
    ring: &QuotientRing,
    source: &FreeModuleLayout,
    cols: &[VectorElement],
    target: &FreeModuleLayout,
    extra: &[VectorElement],
) -> Result<Vec<VectorElement>> {
    let extra: Vec<VectorElement> = extra.iter().filter(|e| !e.is_zero()).cloned().collect();
    let p = FreeModuleLayout::graded(homogeneous_degrees(target, &extra)?);
    let mut all = cols.to_vec();
    all.extend(extra);
    let phi = Matrix::new(source.concat(&p), target.clone(), all)?;
    let k = groebner::kernel(ring, &phi, None)?;
    let idx: Vec<usize> = (0..source.rank()).collect();
    Ok(k.generators().iter().map(|g| g.select(&idx)).filter(|g| !g.is_zero()).collect())
}

/// `None` when `⟨a⟩ = ⟨b⟩`, otherwise an element of one missing from the other.
pub(crate) fn same_submodule(
    ring: &QuotientRing,
    layout: &FreeModuleLayout,
    a: &[VectorElement],
    b: &[VectorElement],
) -> Result<Option<VectorElement>> {
    if let Some(w) = groebner::first_non_member(ring, layout, a, b)? {
        return Ok(Some(w));
    }
    groebner::first_non_member(ring, layout, b, a)
}

/// Tests whether `elements` form a standard basis of `N = ⟨n_gens⟩ ⊆ F`
/// with the filtration induced from `F`.
pub fn is_standard_basis_of_submodule(
    ring: &QuotientRing,
    layout: &FreeModuleLayout,
    n_gens: &[VectorElement],
    elements: &[VectorElement],
) -> Result<StandardBasisCheck> {
    require_graded_ring(ring)?;
    let degrees = homogeneous_degrees(layout, elements)?;
    let generates_witness = same_submodule(ring, layout, elements, n_gens)?;
    let n_star = initial_submodule(ring, layout, n_gens)?;
    let forms = elements.iter().map(|e| initial_form(ring, e, layout)).collect::<Result<Vec<_>>>()?;
    let gl = layout.gr_layout();
    let forms_witness = groebner::first_non_member(ring, &gl, &forms, n_star.generators())?;

    let valuations = elements.iter().map(|e| Ok(valuation(ring, e, layout)?.expect("nonzero"))).collect::<Result<Vec<_>>>()?;
    let l = FreeModuleLayout::new(degrees, valuations)?;
    let ker_d = groebner::kernel(ring, &Matrix::new(l.clone(), layout.clone(), elements.to_vec())?, None)?;
    let gr_ker = initial_submodule(ring, &l, ker_d.generators())?;
    let ker_gr = groebner::kernel(ring, &Matrix::new(l.gr_layout(), gl, forms)?, None)?;
    let kernel_witness = same_submodule(ring, &l.gr_layout(), gr_ker.generators(), ker_gr.generators())?;

    Ok(StandardBasisCheck {
        generates: generates_witness.is_none(),
        initial_forms_generate: forms_witness.is_none(),
        kernel_criterion: kernel_witness.is_none(),
        witness: generates_witness.or(forms_witness).or(kernel_witness),
    })
}

/// Normal forms modulo `N` under the weight order; a normal form attains
/// the largest valuation among representatives of its class.
fn quotient_normal_forms(m: &FilteredPresentation) -> Result<MembershipOracle> {
    m.require_graded("valuations")?;
    let gb = weight_basis(m.ring(), m.layout(), m.relations())?;
    MembershipOracle::new(m.ring(), &gb)
}

/// Tests whether the images of `elements` (vectors of `F`) form a
/// standard basis of `M = F / N`.
pub fn is_standard_basis(m: &FilteredPresentation, elements: &[VectorElement]) -> Result<StandardBasisCheck> {
    let qv = quotient_normal_forms(m)?;
    let (ring, layout) = (m.ring(), m.layout());
    let r = ring.ring();
    for e in elements {
        e.check_rank(layout)?;
    }
    let nfs: Vec<VectorElement> = elements.iter().map(|e| qv.normal_form(e)).collect();
    let degrees = homogeneous_degrees(layout, &nfs)?;
    let units: Vec<VectorElement> = (0..layout.rank()).map(|i| VectorElement::unit(r, layout.rank(), i)).collect();
    let mut span = nfs.clone();
    span.extend(m.relations().iter().cloned());
    let generates_witness = groebner::first_non_member(ring, layout, &span, &units)?;

    let n_star = initial_submodule(ring, layout, m.relations())?;
    let forms = nfs.iter().map(|e| initial_form(ring, e, layout)).collect::<Result<Vec<_>>>()?;
    let gl = layout.gr_layout();
    let mut gr_span = forms.clone();
    gr_span.extend(n_star.generators().iter().cloned());
    let forms_witness = groebner::first_non_member(ring, &gl, &gr_span, &units)?;

    let valuations = nfs.iter().map(|e| Ok(valuation(ring, e, layout)?.expect("nonzero"))).collect::<Result<Vec<_>>>()?;
    let l = FreeModuleLayout::new(degrees, valuations)?;
    let ker_d = relative_kernel(ring, &l, &nfs, layout, m.relations())?;
    let gr_ker = initial_submodule(ring, &l, &ker_d)?;
    let ker_gr = relative_kernel(ring, &l.gr_layout(), &forms, &gl, n_star.generators())?;
    let kernel_witness = same_submodule(ring, &l.gr_layout(), gr_ker.generators(), &ker_gr)?;

    Ok(StandardBasisCheck {
        generates: generates_witness.is_none(),
        initial_forms_generate: forms_witness.is_none(),
        kernel_criterion: kernel_witness.is_none(),
        witness: generates_witness.or(forms_witness).or(kernel_witness),
    })
}

/// Indices `i` such that the images of the `e_i` form a minimal
/// homogeneous standard basis of `M`: increasing `v_i`, keeping `e_i`
/// when its initial form is not in `N*` plus the span of those kept.
pub(crate) fn module_standard_basis(m: &FilteredPresentation) -> Result<Vec<usize>> {
    m.require_graded("standard bases")?;
    let (ring, layout) = (m.ring(), m.layout());
    let r = ring.ring();
    let n_star = initial_submodule(ring, layout, m.relations())?;
    let gl = layout.gr_layout();
    let mut order: Vec<usize> = (0..layout.rank()).collect();
    order.sort_by_key(|&i| (layout.valuation(i), i));
    let mut span: Vec<VectorElement> = n_star.generators().to_vec();
    let mut kept = Vec::new();
    for i in order {
        let e = VectorElement::unit(r, layout.rank(), i);
        if groebner::first_non_member(ring, &gl, &span, std::slice::from_ref(&e))?.is_some() {
            span.push(e);
            kept.push(i);
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

/// `Δ(M) = {a'_i - v_i}` over a minimal homogeneous standard basis, with
/// `v(M) = max Δ`, `u(M) = min Δ`, and the generator degrees `D(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaInvariants {
    pub delta: BTreeSet<i64>,
    /// Generator degrees of a minimal homogeneous generating set.
    pub generator_degrees: BTreeSet<i64>,
    /// Indices of the presentation generators forming the standard basis.
    pub standard_basis: Vec<usize>,
}

impl DeltaInvariants {
    pub fn v(&self) -> Option<i64> {
        self.delta.last().copied()
    }

    pub fn u(&self) -> Option<i64> {
        self.delta.first().copied()
    }
}

pub fn delta_invariants(m: &FilteredPresentation) -> Result<DeltaInvariants> {
    let kept = module_standard_basis(m)?;
    let layout = m.layout();
    let delta = kept.iter().map(|&i| layout.weight(i)).collect();
    let pruned = prune_presentation(m.ring(), &Presentation { layout: layout.m_adic(), relations: m.relations().to_vec() })?;
    let generator_degrees = pruned.presentation.layout.degree_shifts().iter().copied().collect();
    Ok(DeltaInvariants { delta, generator_degrees, standard_basis: kept })
}
