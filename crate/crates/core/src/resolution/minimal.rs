use super::complex::GradedComplex;
use crate::algebra::{FreeModuleLayout, Matrix, Presentation, VectorElement};
use crate::error::{Error, Result};
use crate::groebner::{self, QuotientRing};

/// A pruned presentation and, for each surviving generator, its index in
/// the input layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrunedPresentation {
    pub presentation: Presentation,
    pub kept: Vec<usize>,
}

fn reduce_vector(ring: &QuotientRing, v: &VectorElement) -> VectorElement {
    VectorElement::new(v.components().iter().map(|p| ring.reduce(p)).collect())
}

/// Removes generators killed by relations with a unit entry and redundant
/// relations. The result presents an isomorphic module.
pub fn minimal_presentation(ring: &QuotientRing, p: &Presentation) -> Result<Presentation> {
    Ok(prune_presentation(ring, p)?.presentation)
}

pub fn prune_presentation(ring: &QuotientRing, p: &Presentation) -> Result<PrunedPresentation> {
    if ring.is_graded() {
        p.require_graded()?;
    }
    let r = ring.ring();
    let k = r.field();
    let mut rels: Vec<VectorElement> =
        p.relations.iter().map(|v| reduce_vector(ring, v)).filter(|v| !v.is_zero()).collect();
    let mut kept: Vec<usize> = (0..p.layout.rank()).collect();
    while let Some((ri, j, c)) = rels.iter().enumerate().find_map(|(ri, v)| {
        v.components().iter().enumerate().find_map(|(j, e)| {
            let c = e.constant_coeff();
            (c != 0).then_some((ri, j, c))
        })
    }) {
        // e_j = -(1/c) * sum_{i != j} rel_i e_i; substitute everywhere
        let pivot = rels.swap_remove(ri);
        let inv = k.inv(c);
        rels = rels
            .into_iter()
            .map(|v| {
                let f = v.component(j).clone();
                let v = if f.is_zero() { v } else { v.sub(r, &pivot.scale_by(r, &r.scale(&f, inv))) };
                let idx: Vec<usize> = (0..v.rank()).filter(|&i| i != j).collect();
                reduce_vector(ring, &v.select(&idx))
            })
            .filter(|v| !v.is_zero())
            .collect();
        kept.remove(j);
    }
    let layout = p.layout.select(&kept);
    let minimal = groebner::minimal_generators(ring, &layout, &rels)?;
    let relations = minimal.into_iter().map(|i| rels[i].clone()).collect();
    Ok(PrunedPresentation { presentation: Presentation { layout, relations }, kept })
}

fn column_degrees(layout: &FreeModuleLayout, cols: &[VectorElement]) -> Result<Vec<i64>> {
    cols.iter()
        .enumerate()
        .map(|(i, c)| match c.homogeneous_degree(layout) {
            Ok(Some(d)) => Ok(d),
            _ => Err(Error::NotHomogeneous(format!("column {i}"))),
        })
        .collect()
}

/// Minimal graded free resolution of `F/N` through `F_{n_max}`.
///
/// Each step takes the kernel of the previous differential and keeps a
/// minimal generating set. Modules past the end of a finite resolution are
/// stored as zero.
pub fn resolve_minimal(
    ring: &QuotientRing,
    p: &Presentation,
    n_max: usize,
    degree_cap: Option<i64>,
) -> Result<GradedComplex> {
    if !ring.is_graded() {
        return Err(Error::NotHomogeneous("defining ideal".into()));
    }
    let pruned = prune_presentation(ring, p)?;
    let f0 = pruned.presentation.layout.clone();
    let mut modules = vec![f0.clone()];
    let mut differentials = Vec::new();
    let mut truncated = false;
    let mut cols = pruned.presentation.relations;
    let mut target = f0;
    for _ in 1..=n_max {
        let source = FreeModuleLayout::graded(column_degrees(&target, &cols)?);
        let d = Matrix::new(source.clone(), target, cols)?;
        let next = if source.rank() == 0 {
            Vec::new()
        } else {
            let k = groebner::kernel(ring, &d, degree_cap)?;
            truncated |= k.is_truncated();
            let gens = k.into_generators();
            let keep = groebner::minimal_generators(ring, &source, &gens)?;
            keep.into_iter().map(|i| gens[i].clone()).collect()
        };
        modules.push(source.clone());
        differentials.push(d);
        cols = next;
        target = source;
    }
    let terminated = modules.iter().any(|m| m.rank() == 0) && !truncated;
    Ok(GradedComplex::from_parts(*ring.ring().field(), modules, differentials, terminated, truncated))
}
