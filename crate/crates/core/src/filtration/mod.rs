//! Filtered modules given by valuation shifts on a presentation: valuations,
//! initial forms, associated graded modules, standard bases, filtered
//! resolutions and shift bounds.

mod bounds;
mod chain;
mod filtered;
mod standard;
mod tangent;

pub use bounds::{homogeneous_type, verify_shift_bounds, HomogeneousTypeReport, ShiftBoundRow, ShiftBoundsReport};
pub use chain::validate_filtration;
pub use filtered::{filtered_resolution, FilteredResolution, FilteredResolutionChecks};
pub use standard::{
    delta_invariants, initial_submodule, is_standard_basis, is_standard_basis_of_submodule, minimal_standard_basis,
    DeltaInvariants, StandardBasis, StandardBasisCheck,
};
pub use tangent::{associated_graded, tangent_cone, TangentCone};

use crate::algebra::{FreeModuleLayout, Polynomial, Presentation, VectorElement};
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;

/// How the filtration on the module is specified.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FiltrationMode {
    /// Homogeneous presentation over a graded ring; the filtration is the
    /// special one induced by the valuation shifts.
    #[default]
    Graded,
    /// `R / J` over `R = S / I` with arbitrary `I`, `J` and the m-adic
    /// filtration; only the associated graded module is available.
    LocalCyclic,
}

impl FiltrationMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            FiltrationMode::Graded => "graded",
            FiltrationMode::LocalCyclic => "local-cyclic",
        }
    }
}

/// `M = F / N` with the filtration `F_p M = image of F_p F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredPresentation {
    ring: QuotientRing,
    presentation: Presentation,
    mode: FiltrationMode,
}

impl FilteredPresentation {
    pub fn graded(ring: QuotientRing, presentation: Presentation) -> Result<Self> {
        if !ring.is_graded() {
            return Err(Error::NotHomogeneous("defining ideal".into()));
        }
        presentation.require_graded()?;
        Ok(FilteredPresentation { ring, presentation, mode: FiltrationMode::Graded })
    }

    /// `R / J` with its m-adic filtration.
    pub fn local_cyclic(ring: QuotientRing, relations: Vec<Polynomial>) -> Result<Self> {
        for f in &relations {
            ring.ring().check(f)?;
        }
        let presentation = Presentation::new(
            FreeModuleLayout::graded(vec![0]),
            relations.into_iter().map(|f| VectorElement::new(vec![f])).collect(),
        )?;
        Ok(FilteredPresentation { ring, presentation, mode: FiltrationMode::LocalCyclic })
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn layout(&self) -> &FreeModuleLayout {
        &self.presentation.layout
    }

    pub fn relations(&self) -> &[VectorElement] {
        &self.presentation.relations
    }

    pub fn mode(&self) -> FiltrationMode {
        self.mode
    }

    /// The same module with the m-adic filtration.
    pub fn m_adic(&self) -> Presentation {
        Presentation { layout: self.layout().m_adic(), relations: self.presentation.relations.clone() }
    }

    pub(crate) fn require_graded(&self, what: &str) -> Result<()> {
        match self.mode {
            FiltrationMode::Graded => Ok(()),
            FiltrationMode::LocalCyclic => Err(Error::Unsupported(format!("{what} in local-cyclic mode"))),
        }
    }
}

fn reduced(ring: &QuotientRing, c: &VectorElement) -> VectorElement {
    VectorElement::new(c.components().iter().map(|p| ring.reduce(p)).collect())
}

/// `v(c) = min_i (ord(c_i) + v_i)` over a graded ring, with `None` for zero.
pub fn valuation(ring: &QuotientRing, c: &VectorElement, layout: &FreeModuleLayout) -> Result<Option<i64>> {
    c.check_rank(layout)?;
    Ok(reduced(ring, c)
        .components()
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.ord().map(|o| o as i64 + layout.valuation(i)))
        .min())
}

/// Initial form `c*` in `gr(F)`: the lowest forms of the components that
/// attain the valuation, zero elsewhere.
pub fn initial_form(ring: &QuotientRing, c: &VectorElement, layout: &FreeModuleLayout) -> Result<VectorElement> {
    c.check_rank(layout)?;
    let c = reduced(ring, c);
    let v = valuation(ring, &c, layout)?.ok_or(Error::ZeroVector)?;
    Ok(VectorElement::new(
        c.components()
            .iter()
            .enumerate()
            .map(|(i, p)| match p.ord() {
                Some(o) if o as i64 + layout.valuation(i) == v => p.lowest_form(),
                _ => Polynomial::zero(),
            })
            .collect(),
    ))
}
