//! Minimal graded free resolutions, Betti tables and regularity.

mod betti;
mod complex;
mod minimal;
mod regularity;

pub use betti::{betti, BettiTable};
pub use complex::{verify_complex, ComplexDiagnostics, GradedComplex};
pub(crate) use complex::exact_at;
pub use minimal::{minimal_presentation, prune_presentation, resolve_minimal, PrunedPresentation};
pub use regularity::{detect_periodicity, regularity, Periodicity, RegularityReport, RegularityStatus, RegularityValue};

#[cfg(test)]
mod tests;
