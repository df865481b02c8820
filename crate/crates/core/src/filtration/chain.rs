use super::FilteredPresentation;
use crate::algebra::{FreeModuleLayout, Matrix, ModuleOrder, Presentation, VectorElement};
use crate::error::{Error, Result};
use crate::groebner::{self, MembershipOracle, QuotientRing};

fn oracle(ring: &QuotientRing, ambient: &FreeModuleLayout, gens: &[VectorElement]) -> Result<MembershipOracle> {
    let order = ModuleOrder::new(ring.ring(), ambient);
    let basis = groebner::groebner_basis(ring, ambient, &order, gens, None)?;
    MembershipOracle::new(ring, &basis)
}

/// Checks that submodules `𝔉_0 ⊇ 𝔉_1 ⊇ ... ⊇ 𝔉_s` of `ambient`, given by
/// homogeneous generators, satisfy `m 𝔉_p ⊆ 𝔉_{p+1}`, and encodes the
/// filtration `𝔉_p` (continued by `𝔉_{p+1} = m 𝔉_p` past `s`) on
/// `M = 𝔉_0` as a presentation with valuation shifts: one generator per
/// listed generator of `𝔉_p`, with valuation `p`.
pub fn validate_filtration(
    ring: &QuotientRing,
    ambient: &FreeModuleLayout,
    steps: &[Vec<VectorElement>],
) -> Result<FilteredPresentation> {
    if steps.is_empty() {
        return Err(Error::Input("a filtration needs at least one step".into()));
    }
    if !ring.is_graded() {
        return Err(Error::NotHomogeneous("defining ideal".into()));
    }
    let r = ring.ring();
    let mut degrees = Vec::new();
    let mut valuations = Vec::new();
    let mut columns = Vec::new();
    for (p, step) in steps.iter().enumerate() {
        for (j, g) in step.iter().enumerate() {
            g.check_rank(ambient)?;
            match g.homogeneous_degree(ambient) {
                Ok(Some(d)) => {
                    degrees.push(d);
                    valuations.push(p as i64);
                    columns.push(g.clone());
                }
                Ok(None) => {}
                Err(()) => return Err(Error::NotHomogeneous(format!("step {p}, generator {j}"))),
            }
        }
    }
    for p in 0..steps.len() - 1 {
        let current = oracle(ring, ambient, &steps[p])?;
        for (j, g) in steps[p + 1].iter().enumerate() {
            if !current.contains(g) {
                return Err(Error::Filtration { step: p + 1, generator: j, reason: format!("not contained in step {p}") });
            }
        }
        let next = oracle(ring, ambient, &steps[p + 1])?;
        for (j, g) in steps[p].iter().enumerate() {
            for k in 0..r.nvars() {
                if !next.contains(&g.scale_by(r, &r.var(k))) {
                    return Err(Error::Filtration {
                        step: p,
                        generator: j,
                        reason: format!("{} times it is not in step {}", r.var_names()[k], p + 1),
                    });
                }
            }
        }
    }
    let layout = FreeModuleLayout::new(degrees, valuations)?;
    let relations = groebner::kernel(ring, &Matrix::new(layout.clone(), ambient.clone(), columns)?, None)?.into_generators();
    FilteredPresentation::graded(ring.clone(), Presentation::new(layout, relations)?)
}
