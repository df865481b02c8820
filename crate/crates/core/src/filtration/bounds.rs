use super::tangent::associated_graded;
use super::{delta_invariants, FilteredPresentation};
use crate::error::Result;
use crate::resolution::{betti, resolve_minimal, BettiTable};

/// Total Betti numbers of `M` and `gr(M)` over a common window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousTypeReport {
    pub module: BettiTable,
    pub associated: BettiTable,
    /// `β_i(M) = β_i(gr M)` for every `i` in the window.
    pub holds: bool,
    /// Both resolutions ended inside the window, so `holds` is final.
    pub certified: bool,
    pub truncated: bool,
}

fn tables(m: &FilteredPresentation, n_max: usize, degree_cap: Option<i64>) -> Result<(BettiTable, BettiTable, bool, bool)> {
    m.require_graded("Betti comparisons")?;
    let c = resolve_minimal(m.ring(), &m.m_adic(), n_max, degree_cap)?;
    let (gr_ring, gr_pres) = associated_graded(m)?;
    let cg = resolve_minimal(&gr_ring, &gr_pres, n_max, degree_cap)?;
    let certified = c.terminated() && cg.terminated();
    let truncated = c.truncated() || cg.truncated();
    Ok((betti(&c)?, betti(&cg)?, certified, truncated))
}

pub fn homogeneous_type(m: &FilteredPresentation, n_max: usize, degree_cap: Option<i64>) -> Result<HomogeneousTypeReport> {
    let (module, associated, certified, truncated) = tables(m, n_max, degree_cap)?;
    let holds = module.totals() == associated.totals();
    Ok(HomogeneousTypeReport { module, associated, holds, certified, truncated })
}

/// Comparison of `t_i(M)` with `t_i(gr M)` at one step; `None` is `-∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftBoundRow {
    pub i: usize,
    pub t_module: Option<i64>,
    pub t_associated: Option<i64>,
    /// `t_i(M) <= t_i(gr M) + v(M)`.
    pub upper_holds: bool,
    /// `t_i(gr M) + u(M) <= t_i(M)`, checked only for modules of
    /// homogeneous type.
    pub lower_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftBoundsReport {
    pub v: Option<i64>,
    pub u: Option<i64>,
    pub homogeneous_type: bool,
    pub rows: Vec<ShiftBoundRow>,
    /// `max_i (t_i(M) - i) <= max_i (t_i(gr M) - i) + v(M)` over the window.
    pub regularity_upper: bool,
    /// `max_i (t_i(gr M) - i) + u(M) <= max_i (t_i(M) - i)`, for modules of
    /// homogeneous type.
    pub regularity_lower: Option<bool>,
    pub truncated: bool,
}

impl ShiftBoundsReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.upper_holds && r.lower_holds != Some(false))
            && self.regularity_upper
            && self.regularity_lower != Some(false)
    }
}

/// `a <= b + s` with `None` read as `-∞`.
fn le_shifted(a: Option<i64>, b: Option<i64>, s: i64) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => a <= b + s,
    }
}

pub fn verify_shift_bounds(m: &FilteredPresentation, n_max: usize, degree_cap: Option<i64>) -> Result<ShiftBoundsReport> {
    let inv = delta_invariants(m)?;
    let (module, associated, _, truncated) = tables(m, n_max, degree_cap)?;
    let homogeneous_type = module.totals() == associated.totals();
    let (v, u) = (inv.v(), inv.u());
    let rows = (0..=n_max)
        .map(|i| {
            let (tm, tg) = (module.t(i), associated.t(i));
            ShiftBoundRow {
                i,
                t_module: tm,
                t_associated: tg,
                upper_holds: v.is_none_or(|v| le_shifted(tm, tg, v)),
                lower_holds: homogeneous_type.then(|| u.is_none_or(|u| le_shifted(tg.map(|t| t + u), tm, 0))),
            }
        })
        .collect();
    let (rm, rg) = (module.max_slope_through(n_max), associated.max_slope_through(n_max));
    Ok(ShiftBoundsReport {
        v,
        u,
        homogeneous_type,
        rows,
        regularity_upper: v.is_none_or(|v| le_shifted(rm, rg, v)),
        regularity_lower: homogeneous_type.then(|| u.is_none_or(|u| le_shifted(rg.map(|r| r + u), rm, 0))),
        truncated,
    })
}
