//! Shifted free modules `F = ⊕ R(-a'_i)` with valuation shifts, their
//! elements, and the weight-refining module term order.

use std::cmp::Ordering;

use super::field::Coeff;
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// Rank, degree shifts `a'_i` and valuation shifts `v_i` of a free module.
///
/// Basis element `e_i` has degree `a'_i` and valuation `v_i`; the induced
/// special filtration is `F_p = ⊕ m^{p - v_i} e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeModuleLayout {
    degree_shifts: Vec<i64>,
    valuation_shifts: Vec<i64>,
}

impl FreeModuleLayout {
    pub fn new(degree_shifts: Vec<i64>, valuation_shifts: Vec<i64>) -> Result<Self> {
        if degree_shifts.len() != valuation_shifts.len() {
            return Err(Error::InvalidLayout(format!(
                "{} degree shifts but {} valuation shifts",
                degree_shifts.len(),
                valuation_shifts.len()
            )));
        }
        if let Some(v) = valuation_shifts.iter().find(|&&v| v < 0) {
            return Err(Error::InvalidLayout(format!("negative valuation shift {v}")));
        }
        Ok(FreeModuleLayout { degree_shifts, valuation_shifts })
    }

    /// Layout with all valuation shifts zero (the m-adic filtration).
    pub fn graded(degree_shifts: Vec<i64>) -> Self {
        let n = degree_shifts.len();
        FreeModuleLayout { degree_shifts, valuation_shifts: vec![0; n] }
    }

    pub fn zero() -> Self {
        FreeModuleLayout::default()
    }

    pub fn rank(&self) -> usize {
        self.degree_shifts.len()
    }

    pub fn degree_shifts(&self) -> &[i64] {
        &self.degree_shifts
    }

    pub fn valuation_shifts(&self) -> &[i64] {
        &self.valuation_shifts
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degree_shifts[i]
    }

    pub fn valuation(&self, i: usize) -> i64 {
        self.valuation_shifts[i]
    }

    /// `w_i = a'_i - v_i`.
    pub fn weight(&self, i: usize) -> i64 {
        self.degree_shifts[i] - self.valuation_shifts[i]
    }

    /// Layout of `gr(F)`: degrees are the valuation shifts.
    pub fn gr_layout(&self) -> FreeModuleLayout {
        FreeModuleLayout::graded(self.valuation_shifts.clone())
    }

    /// Same degrees, valuations reset to zero.
    pub fn m_adic(&self) -> FreeModuleLayout {
        FreeModuleLayout::graded(self.degree_shifts.clone())
    }

    pub fn select(&self, indices: &[usize]) -> FreeModuleLayout {
        FreeModuleLayout {
            degree_shifts: indices.iter().map(|&i| self.degree_shifts[i]).collect(),
            valuation_shifts: indices.iter().map(|&i| self.valuation_shifts[i]).collect(),
        }
    }

    pub fn concat(&self, other: &FreeModuleLayout) -> FreeModuleLayout {
        let mut d = self.degree_shifts.clone();
        d.extend_from_slice(&other.degree_shifts);
        let mut v = self.valuation_shifts.clone();
        v.extend_from_slice(&other.valuation_shifts);
        FreeModuleLayout { degree_shifts: d, valuation_shifts: v }
    }
}

/// Column vector `c = (c_1, ..., c_s)` in a free module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorElement {
    components: Vec<Polynomial>,
}

impl VectorElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        VectorElement { components }
    }

    pub fn zero(rank: usize) -> Self {
        VectorElement { components: vec![Polynomial::zero(); rank] }
    }

    pub fn unit(ring: &PolyRing, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.components[i] = ring.one();
        v
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn check_rank(&self, layout: &FreeModuleLayout) -> Result<()> {
        if self.rank() != layout.rank() {
            return Err(Error::LayoutMismatch { expected: layout.rank(), found: self.rank() });
        }
        Ok(())
    }

    /// Degree `j` if every nonzero component `c_i` is homogeneous of degree
    /// `j - a'_i`. `Ok(None)` for zero; `Err(())` if not homogeneous.
    pub fn homogeneous_degree(&self, layout: &FreeModuleLayout) -> std::result::Result<Option<i64>, ()> {
        let mut deg = None;
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(());
            }
            let d = c.degree().unwrap() as i64 + layout.degree(i);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Err(()),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, layout: &FreeModuleLayout) -> bool {
        self.homogeneous_degree(layout).is_ok()
    }

    pub fn add(&self, ring: &PolyRing, other: &VectorElement) -> VectorElement {
        VectorElement::new(self.components.iter().zip(&other.components).map(|(a, b)| ring.add(a, b)).collect())
    }

    pub fn sub(&self, ring: &PolyRing, other: &VectorElement) -> VectorElement {
        VectorElement::new(self.components.iter().zip(&other.components).map(|(a, b)| ring.sub(a, b)).collect())
    }

    pub fn scale_by(&self, ring: &PolyRing, f: &Polynomial) -> VectorElement {
        VectorElement::new(self.components.iter().map(|c| ring.mul(c, f)).collect())
    }

    pub fn select(&self, indices: &[usize]) -> VectorElement {
        VectorElement::new(indices.iter().map(|&i| self.components[i].clone()).collect())
    }

    pub fn concat(&self, other: &VectorElement) -> VectorElement {
        let mut c = self.components.clone();
        c.extend_from_slice(&other.components);
        VectorElement::new(c)
    }
}

/// Module term order: larger weight `w_i` first, then the monomial order,
/// then smaller component index. Optional blocks (lower block = larger)
/// take precedence over everything and give elimination orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    monomial: MonomialOrder,
    weights: Vec<i64>,
    blocks: Vec<u8>,
}

impl ModuleOrder {
    pub fn new(ring: &PolyRing, layout: &FreeModuleLayout) -> Self {
        ModuleOrder {
            monomial: ring.order(),
            weights: (0..layout.rank()).map(|i| layout.weight(i)).collect(),
            blocks: vec![0; layout.rank()],
        }
    }

    /// Elimination order on `first ⊕ second`, every term of `first` above
    /// every term of `second`.
    pub(crate) fn elimination(ring: &PolyRing, first: &FreeModuleLayout, second: &FreeModuleLayout) -> Self {
        let mut weights: Vec<i64> = (0..first.rank()).map(|i| first.weight(i)).collect();
        weights.extend((0..second.rank()).map(|i| second.weight(i)));
        let mut blocks = vec![0u8; first.rank()];
        blocks.extend(std::iter::repeat_n(1u8, second.rank()));
        ModuleOrder { monomial: ring.order(), weights, blocks }
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        self.monomial
    }

    pub fn weight(&self, comp: usize) -> i64 {
        self.weights[comp]
    }

    /// `Greater` when `(ca, ma)` is the larger term.
    #[inline]
    pub fn cmp_terms(&self, ca: usize, ma: &Monomial, cb: usize, mb: &Monomial) -> Ordering {
        if ca != cb {
            match self.blocks[cb].cmp(&self.blocks[ca]) {
                Ordering::Equal => {}
                o => return o,
            }
            match self.weights[ca].cmp(&self.weights[cb]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        match self.monomial.cmp(ma, mb) {
            Ordering::Equal => cb.cmp(&ca),
            o => o,
        }
    }
}

/// Leading term `(component, monomial, coefficient)` of `v`.
pub fn leading_term(v: &VectorElement, order: &ModuleOrder) -> Result<(usize, Monomial, Coeff)> {
    if v.rank() != order.rank() {
        return Err(Error::LayoutMismatch { expected: order.rank(), found: v.rank() });
    }
    let mut best: Option<(usize, &Monomial, Coeff)> = None;
    for (i, c) in v.components().iter().enumerate() {
        if let Some((m, a)) = c.leading_term() {
            let better = match best {
                None => true,
                Some((j, n, _)) => order.cmp_terms(i, m, j, n) == Ordering::Greater,
            };
            if better {
                best = Some((i, m, *a));
            }
        }
    }
    best.map(|(i, m, a)| (i, m.clone(), a)).ok_or(Error::ZeroVector)
}

/// Finitely presented module `F / N`; the layout may carry valuation shifts,
/// in which case it also describes the filtration induced by `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub layout: FreeModuleLayout,
    pub relations: Vec<VectorElement>,
}

impl Presentation {
    pub fn new(layout: FreeModuleLayout, relations: Vec<VectorElement>) -> Result<Self> {
        for r in &relations {
            r.check_rank(&layout)?;
        }
        Ok(Presentation { layout, relations })
    }

    pub fn free(layout: FreeModuleLayout) -> Self {
        Presentation { layout, relations: Vec::new() }
    }

    pub fn is_graded(&self) -> bool {
        self.relations.iter().all(|r| r.is_homogeneous(&self.layout))
    }

    pub fn require_graded(&self) -> Result<()> {
        if self.is_graded() {
            Ok(())
        } else {
            Err(Error::NotHomogeneous("presentation relations".into()))
        }
    }
}

/// Homomorphism `source -> target` given by its columns (images of the
/// source basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub source: FreeModuleLayout,
    pub target: FreeModuleLayout,
    pub columns: Vec<VectorElement>,
}

impl Matrix {
    pub fn new(source: FreeModuleLayout, target: FreeModuleLayout, columns: Vec<VectorElement>) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::LayoutMismatch { expected: source.rank(), found: columns.len() });
        }
        for c in &columns {
            c.check_rank(&target)?;
        }
        Ok(Matrix { source, target, columns })
    }

    pub fn identity(ring: &PolyRing, layout: &FreeModuleLayout) -> Self {
        let cols = (0..layout.rank()).map(|i| VectorElement::unit(ring, layout.rank(), i)).collect();
        Matrix { source: layout.clone(), target: layout.clone(), columns: cols }
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, r: usize, s: usize) -> &Polynomial {
        self.columns[s].component(r)
    }

    /// Every nonzero entry `m_rs` is homogeneous of degree `a'_s(source) - a'_r(target)`.
    pub fn is_homogeneous(&self) -> bool {
        self.columns.iter().enumerate().all(|(s, col)| {
            col.components().iter().enumerate().all(|(r, e)| {
                e.is_zero()
                    || (e.is_homogeneous()
                        && e.degree().unwrap() as i64 == self.source.degree(s) - self.target.degree(r))
            })
        })
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, ring: &PolyRing, other: &Matrix) -> Matrix {
        let columns = other.columns.iter().map(|c| self.apply(ring, c)).collect();
        Matrix { source: other.source.clone(), target: self.target.clone(), columns }
    }

    pub fn apply(&self, ring: &PolyRing, v: &VectorElement) -> VectorElement {
        let mut out = VectorElement::zero(self.rows());
        for (s, coeff) in v.components().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            out = out.add(ring, &self.columns[s].scale_by(ring, coeff));
        }
        out
    }
}
