use super::{column_valuation_condition, koszul_check, ld_of_resolution, residue_field, LdReport, DEFAULT_MARGIN};
use crate::algebra::Presentation;
use crate::error::Result;
use crate::filtration::{associated_graded, homogeneous_type, tangent_cone, FilteredPresentation};
use crate::groebner::QuotientRing;
use crate::resolution::{betti, regularity, resolve_minimal, BettiTable, GradedComplex, RegularityReport, RegularityValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The preconditions could not be established in the window.
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub label: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub status: CheckStatus,
    pub claims: Vec<Claim>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn skipped(note: impl Into<String>) -> Self {
        CheckReport { status: CheckStatus::Skipped, claims: Vec::new(), notes: vec![note.into()] }
    }

    fn from_claims(claims: Vec<Claim>, notes: Vec<String>) -> Self {
        let status = if claims.iter().all(|c| c.holds) { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckReport { status, claims, notes }
    }
}

fn claim(label: impl Into<String>, holds: bool) -> Claim {
    Claim { label: label.into(), holds }
}

fn resolve(ring: &QuotientRing, p: &Presentation, n: usize, cap: Option<i64>) -> Result<(GradedComplex, BettiTable)> {
    let c = resolve_minimal(ring, p, n, cap)?;
    let t = betti(&c)?;
    Ok((c, t))
}

/// Regularity as a number together with whether it is final; `None` for
/// the zero module or divergence.
fn numeric(report: &RegularityReport) -> (Option<i64>, bool) {
    match report.value {
        RegularityValue::Finite(v) => (Some(v), true),
        RegularityValue::AtLeast(v) => (Some(v), false),
        RegularityValue::NegInfinity | RegularityValue::Infinity => (None, report.status.is_exact()),
    }
}

/// With `d = ld(M)` certified: `reg(M) = max{t_i - i : i <= d}`, and
/// `reg(M) = t_0(M)` when `d = 0`.
pub fn verify_ld_reg_formula(ring: &QuotientRing, p: &Presentation, n_max: usize, degree_cap: Option<i64>) -> Result<CheckReport> {
    let c = resolve_minimal(ring, p, n_max + 1, degree_cap)?;
    let ld = ld_of_resolution(ring, &c, n_max, DEFAULT_MARGIN)?;
    let Some(d) = ld.verdict.certified() else {
        return Ok(CheckReport::skipped("linearity defect not certified in the window"));
    };
    let table = betti(&c)?;
    let formula = table.max_slope_through(d);
    let reference = table.max_slope_through(table.length());
    let mut notes = vec![format!("ld = {d}")];
    notes.push(if c.terminated() {
        "reference is the regularity of a finite resolution".into()
    } else {
        format!("reference is the maximum over the window of {} steps", table.length())
    });
    let mut claims = vec![claim(format!("reg = max(t_i - i : i <= {d})"), formula == reference)];
    if d == 0 {
        claims.push(claim("reg = t_0", reference == table.t(0)));
    }
    Ok(CheckReport::from_claims(claims, notes))
}

/// For a Koszul module generated in degrees `D`: `β_{n,j} = 0` unless
/// `j - n ∈ D`, and a strand that vanishes at step `n` stays zero.
pub fn verify_koszul_tor_pattern(ring: &QuotientRing, p: &Presentation, n_max: usize, degree_cap: Option<i64>) -> Result<CheckReport> {
    let k = koszul_check(ring, p, n_max, degree_cap)?;
    if !k.is_koszul() {
        return Ok(CheckReport::skipped("module is not Koszul in the window"));
    }
    let (_, table) = resolve(ring, p, n_max, degree_cap)?;
    let gens = table.degree_set(0);
    let strands = table.entries().iter().all(|&(n, j, _)| gens.contains(&(j - n as i64)));
    let mut persistent = true;
    for &a in &gens {
        let mut vanished = false;
        for n in 0..=n_max {
            let b = table.beta_ij(n, a + n as i64);
            if vanished && b != 0 {
                persistent = false;
            }
            vanished |= b == 0;
        }
    }
    Ok(CheckReport::from_claims(
        vec![claim("β_{n,j} = 0 for j - n outside D(M)", strands), claim("vanishing strands stay zero", persistent)],
        vec![format!("D(M) = {gens:?}")],
    ))
}

/// Regularity of `gr(M)` with the linearity defect of `gr(M)` as a hint.
fn gr_regularity(m: &FilteredPresentation, n_max: usize, cap: Option<i64>) -> Result<(BettiTable, RegularityReport, LdReport)> {
    let (gr_ring, gr_pres) = associated_graded(m)?;
    let c = resolve_minimal(&gr_ring, &gr_pres, n_max + 1, cap)?;
    let ld = ld_of_resolution(&gr_ring, &c, n_max, DEFAULT_MARGIN)?;
    let c = c.truncate(n_max);
    let table = betti(&c)?;
    let report = regularity(&table, &c, ld.verdict.certified().filter(|&d| d < n_max))?;
    Ok((table, report, ld))
}

/// A Koszul module of homogeneous type has `reg(gr M) = t_0(gr M)`.
pub fn verify_gr_regularity_koszul(m: &FilteredPresentation, n_max: usize, degree_cap: Option<i64>) -> Result<CheckReport> {
    m.require_graded("Koszul checks")?;
    let k = koszul_check(m.ring(), &m.m_adic(), n_max, degree_cap)?;
    if !k.is_koszul() {
        return Ok(CheckReport::skipped("module is not Koszul in the window"));
    }
    if !homogeneous_type(m, n_max, degree_cap)?.holds {
        return Ok(CheckReport::skipped("module is not of homogeneous type in the window"));
    }
    let (table, report, _) = gr_regularity(m, n_max, degree_cap)?;
    let t0 = table.t(0);
    let (value, exact) = numeric(&report);
    let mut claims = vec![claim("max(t_i - i) over the window = t_0(gr M)", table.max_slope_through(n_max) == t0)];
    let mut notes = vec![format!("regularity verdict: {}", report.status.as_str())];
    if exact {
        claims.push(claim("reg(gr M) = t_0(gr M)", value == t0));
    } else {
        notes.push("regularity of gr(M) only bounded below in the window".into());
    }
    Ok(CheckReport::from_claims(claims, notes))
}

/// With `ld(M) = d` certified and `M` of homogeneous type:
/// `reg(gr M) = max{t_i(gr M) - i : i <= d}`.
pub fn verify_ld_local_formula(m: &FilteredPresentation, n_max: usize, degree_cap: Option<i64>) -> Result<CheckReport> {
    m.require_graded("linearity defects")?;
    let c = resolve_minimal(m.ring(), &m.m_adic(), n_max + 1, degree_cap)?;
    let ld = ld_of_resolution(m.ring(), &c, n_max, DEFAULT_MARGIN)?;
    let Some(d) = ld.verdict.certified() else {
        return Ok(CheckReport::skipped("linearity defect not certified in the window"));
    };
    if !homogeneous_type(m, n_max, degree_cap)?.holds {
        return Ok(CheckReport::skipped("module is not of homogeneous type in the window"));
    }
    let (table, report, _) = gr_regularity(m, n_max, degree_cap)?;
    let formula = table.max_slope_through(d);
    let (value, exact) = numeric(&report);
    let reference = if exact { value } else { table.max_slope_through(n_max) };
    let notes = vec![
        format!("ld = {d}"),
        format!("regularity verdict for gr(M): {}", report.status.as_str()),
    ];
    Ok(CheckReport::from_claims(vec![claim(format!("reg(gr M) = max(t_i(gr M) - i : i <= {d})"), formula == reference)], notes))
}

/// When every column of the minimal resolution of `gr(M)` has a linear
/// entry, the regularity of `gr(M)` is `t_0(gr M)`.
pub fn verify_column_condition_regularity(m: &FilteredPresentation, n_max: usize, degree_cap: Option<i64>) -> Result<CheckReport> {
    let (gr_ring, gr_pres) = associated_graded(m)?;
    let c = resolve_minimal(&gr_ring, &gr_pres, n_max, degree_cap)?;
    if !column_valuation_condition(&c)? {
        return Ok(CheckReport::skipped("a column of the resolution of gr(M) has no linear entry"));
    }
    let table = betti(&c)?;
    let report = regularity(&table, &c, None)?;
    let t0 = table.t(0);
    let (value, _) = numeric(&report);
    Ok(CheckReport::from_claims(
        vec![
            claim("t_i(gr M) <= t_0(gr M) + i in the window", (0..=n_max).all(|i| table.t(i).is_none_or(|t| Some(t - i as i64) <= t0))),
            claim("regularity verdict value = t_0(gr M)", value == t0),
        ],
        vec![format!("regularity verdict: {}", report.status.as_str())],
    ))
}

/// Observations about the residue field relevant to whether finite
/// linearity defect of `k` forces `ld(k) = 0`. Never a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub graded: bool,
    /// `ld_R(k)` in the window; only over a graded ring.
    pub ld: Option<LdReport>,
    pub homogeneous_type: Option<bool>,
    /// `ld` of `k` over `gr(R)`.
    pub gr_ld: LdReport,
    pub gr_regularity: RegularityReport,
    pub observations: Vec<String>,
}

pub fn probe_question_one(ring: &QuotientRing, n_max: usize, degree_cap: Option<i64>) -> Result<ProbeReport> {
    let k = residue_field(ring);
    let gr_ring =
        if ring.is_graded() { ring.clone() } else { QuotientRing::new(ring.ring().clone(), tangent_cone(ring.ring(), ring.generators(), degree_cap)?.generators)? };
    let c = resolve_minimal(&gr_ring, &k, n_max + 1, degree_cap)?;
    let gr_ld = ld_of_resolution(&gr_ring, &c, n_max, DEFAULT_MARGIN)?;
    let c = c.truncate(n_max);
    let table = betti(&c)?;
    let gr_regularity = regularity(&table, &c, gr_ld.verdict.certified().filter(|&d| d < n_max))?;
    let mut observations = Vec::new();
    let (ld, homogeneous) = if ring.is_graded() {
        let m = FilteredPresentation::graded(ring.clone(), k.clone())?;
        let ht = homogeneous_type(&m, n_max, degree_cap)?.holds;
        (Some(gr_ld.clone()), Some(ht))
    } else {
        observations.push("local ring: ld over R is not computed, only the associated graded side".into());
        (None, None)
    };
    match gr_ld.verdict.certified() {
        Some(0) => observations.push("k has a linear resolution over gr(R) in the window".into()),
        Some(d) => observations.push(format!("ld(k) over gr(R) observed as {d} > 0")),
        None => observations.push("no evidence of finite linearity defect in the window".into()),
    }
    if let (Some(l), Some(true)) = (&ld, homogeneous) {
        if let Some(d) = l.verdict.certified() {
            observations.push(if d == 0 {
                "finite ld and homogeneous type observed together with ld = 0".into()
            } else {
                format!("finite ld = {d} > 0 with homogeneous type: would contradict the expected answer")
            });
        }
    }
    Ok(ProbeReport { graded: ring.is_graded(), ld, homogeneous_type: homogeneous, gr_ld, gr_regularity, observations })
}
