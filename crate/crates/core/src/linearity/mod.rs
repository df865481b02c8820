//! Linear parts of minimal complexes, the linearity defect, Koszul modules
//! and executable checks of the regularity statements that involve them.

mod checks;

pub use checks::{
    probe_question_one, verify_column_condition_regularity, verify_gr_regularity_koszul, verify_koszul_tor_pattern,
    verify_ld_local_formula, verify_ld_reg_formula, CheckReport, CheckStatus, Claim, ProbeReport,
};

use crate::algebra::{FreeModuleLayout, Matrix, Polynomial, Presentation, VectorElement};
use crate::error::{Error, Result};
use crate::filtration::{homogeneous_type, FilteredPresentation};
use crate::groebner::QuotientRing;
use crate::resolution::{exact_at, resolve_minimal, BettiTable, GradedComplex};

/// Default length of the vanishing tail needed to certify `ld = d`.
pub const DEFAULT_MARGIN: usize = 3;

fn is_linear_entry(e: &Polynomial) -> bool {
    e.ord() == Some(1) && e.degree() == Some(1)
}

/// The complex with every differential entry of degree above one
/// replaced by zero. Layouts are unchanged.
pub fn linear_part(c: &GradedComplex) -> Result<GradedComplex> {
    if !c.is_minimal() {
        return Err(Error::Contract("the linear part needs a minimal complex".into()));
    }
    let diffs = c
        .differentials()
        .iter()
        .map(|d| Matrix {
            source: d.source.clone(),
            target: d.target.clone(),
            columns: d
                .columns
                .iter()
                .map(|col| {
                    VectorElement::new(
                        col.components()
                            .iter()
                            .map(|e| if is_linear_entry(e) { e.clone() } else { Polynomial::zero() })
                            .collect(),
                    )
                })
                .collect(),
        })
        .collect();
    Ok(c.with_differentials(diffs))
}

/// `None` when `H_i(C) = 0`, else a generator of `ker d_i` outside
/// `im d_{i+1}`. Needs `1 <= i < length`.
pub fn homology_vanishes(ring: &QuotientRing, c: &GradedComplex, i: usize) -> Result<Option<VectorElement>> {
    if i == 0 || i >= c.length() {
        return Err(Error::Input(format!("homology at {i} needs d_{i} and d_{} inside a complex of length {}", i + 1, c.length())));
    }
    if c.module(i).rank() == 0 {
        return Ok(None);
    }
    exact_at(ring, c.differential(i), c.differential(i + 1))
}

/// Every column of every differential has a nonzero entry of degree one.
pub fn column_valuation_condition(c: &GradedComplex) -> Result<bool> {
    if !c.is_minimal() {
        return Err(Error::Contract("the column condition needs a minimal complex".into()));
    }
    Ok(c.differentials().iter().all(|d| d.columns.iter().all(|col| col.components().iter().any(is_linear_entry))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LdVerdict {
    /// `ld = 0`: the module is Koszul.
    Koszul,
    /// `ld = d > 0`.
    Exact(usize),
    /// The window only shows `ld >= b`.
    AtLeast(usize),
}

impl LdVerdict {
    pub fn certified(&self) -> Option<usize> {
        match self {
            LdVerdict::Koszul => Some(0),
            LdVerdict::Exact(d) => Some(*d),
            LdVerdict::AtLeast(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LdReport {
    pub window: usize,
    pub margin: usize,
    /// Indices `1 <= i <= window` with `H_i(lin 𝐅) ≠ 0`.
    pub nonvanishing: Vec<usize>,
    /// One kernel element outside the image per nonvanishing index.
    pub witnesses: Vec<(usize, VectorElement)>,
    pub verdict: LdVerdict,
    /// The resolution ended inside the window, so no margin was needed.
    pub terminated: bool,
    pub truncated: bool,
    /// For `ld = d > 0`: the `d`-th syzygy module has vanishing linear
    /// homology over the rest of the window.
    pub syzygy_cross_check: Option<bool>,
}

/// Linear homology of a minimal resolution computed through `window + 1`.
fn linear_homology(ring: &QuotientRing, c: &GradedComplex, window: usize) -> Result<Vec<(usize, VectorElement)>> {
    let lin = linear_part(c)?;
    let mut out = Vec::new();
    for i in 1..=window.min(lin.length().saturating_sub(1)) {
        if let Some(w) = homology_vanishes(ring, &lin, i)? {
            out.push((i, w));
        }
    }
    Ok(out)
}

/// `ld` from a minimal resolution computed through at least `window + 1`.
pub fn ld_of_resolution(ring: &QuotientRing, c: &GradedComplex, window: usize, margin: usize) -> Result<LdReport> {
    let witnesses = linear_homology(ring, c, window)?;
    let nonvanishing: Vec<usize> = witnesses.iter().map(|(i, _)| *i).collect();
    let d = nonvanishing.last().copied().unwrap_or(0);
    let terminated = c.terminated();
    let truncated = c.truncated();
    let certified = !truncated && (terminated || window >= d + margin);
    let verdict = match (certified, d) {
        (true, 0) => LdVerdict::Koszul,
        (true, d) => LdVerdict::Exact(d),
        (false, d) => LdVerdict::AtLeast(d),
    };
    let syzygy_cross_check = match verdict {
        LdVerdict::Exact(d) if d < c.length() => {
            let omega = Presentation { layout: c.module(d).clone(), relations: c.differential(d + 1).columns.clone() };
            let rest = window - d;
            let tail = resolve_minimal(ring, &omega, rest + 1, None)?;
            Some(linear_homology(ring, &tail, rest)?.is_empty())
        }
        _ => None,
    };
    Ok(LdReport { window, margin, nonvanishing, witnesses, verdict, terminated, truncated, syzygy_cross_check })
}

/// `ld(M)` from the linear part of the minimal resolution through
/// `n_max + 1`. The verdict is certified when the resolution ends in the
/// window or the last nonvanishing index is at least `margin` below `n_max`.
pub fn linearity_defect(
    ring: &QuotientRing,
    p: &Presentation,
    n_max: usize,
    degree_cap: Option<i64>,
    margin: usize,
) -> Result<LdReport> {
    let c = resolve_minimal(ring, p, n_max + 1, degree_cap)?;
    ld_of_resolution(ring, &c, n_max, margin)
}

/// Every step `i` of the table sits in the single degree `t_0 + i`.
pub fn is_linear(table: &BettiTable) -> bool {
    let Some(t0) = table.t(0) else { return true };
    (0..=table.length()).all(|i| table.degree_set(i).iter().all(|&j| j == t0 + i as i64))
}

/// The window observables that characterize Koszul modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulReport {
    pub ld: LdReport,
    /// The m-adic associated graded module has a linear resolution.
    pub associated_linear: bool,
    /// `β_i(M) = β_i(M^g)` in the window.
    pub homogeneous_type: bool,
}

impl KoszulReport {
    pub fn is_koszul(&self) -> bool {
        self.ld.verdict == LdVerdict::Koszul && self.associated_linear && self.homogeneous_type
    }
}

pub fn koszul_check(ring: &QuotientRing, p: &Presentation, n_max: usize, degree_cap: Option<i64>) -> Result<KoszulReport> {
    let ld = linearity_defect(ring, p, n_max, degree_cap, DEFAULT_MARGIN)?;
    let m = FilteredPresentation::graded(ring.clone(), Presentation { layout: p.layout.m_adic(), relations: p.relations.clone() })?;
    let ht = homogeneous_type(&m, n_max, degree_cap)?;
    Ok(KoszulReport { ld, associated_linear: is_linear(&ht.associated), homogeneous_type: ht.holds })
}

/// `k = R / m` as a cyclic presentation.
pub fn residue_field(ring: &QuotientRing) -> Presentation {
    let r = ring.ring();
    Presentation {
        layout: FreeModuleLayout::graded(vec![0]),
        relations: (0..r.nvars()).map(|i| VectorElement::new(vec![r.var(i)])).collect(),
    }
}
