use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::betti::BettiTable;
use super::complex::GradedComplex;
use crate::algebra::{Matrix, Polynomial, PrimeField};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegularityStatus {
    ExactFinitePd,
    ExactCertifiedByLd,
    DivergentPeriodic,
    LowerBound,
}

impl RegularityStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegularityStatus::ExactFinitePd => "exact-finite-pd",
            RegularityStatus::ExactCertifiedByLd => "exact-certified-by-ld",
            RegularityStatus::DivergentPeriodic => "divergent-periodic",
            RegularityStatus::LowerBound => "lower-bound",
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RegularityStatus::ExactFinitePd | RegularityStatus::ExactCertifiedByLd)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegularityValue {
    Finite(i64),
    /// Regularity of the zero module.
    NegInfinity,
    Infinity,
    AtLeast(i64),
}

impl fmt::Display for RegularityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularityValue::Finite(v) => write!(f, "{v}"),
            RegularityValue::NegInfinity => write!(f, "-infinity"),
            RegularityValue::Infinity => write!(f, "infinity"),
            RegularityValue::AtLeast(v) => write!(f, ">= {v}"),
        }
    }
}

/// A repetition `d_i ≅ d_{i+period}` for all `i >= start` in the window,
/// with every degree moving up by `drift` per period.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Periodicity {
    pub start: usize,
    pub period: usize,
    pub drift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    /// `t_i - i` for each step; `None` when `F_i = 0`.
    pub slopes: Vec<Option<i64>>,
    pub status: RegularityStatus,
    pub value: RegularityValue,
    pub periodicity: Option<Periodicity>,
}

/// Regularity verdict from a window of the minimal resolution.
///
/// Exact when the resolution ends inside the window, or when a linearity
/// defect `d < n_max` is supplied (then `reg = max_{i <= d} (t_i - i)`).
/// Infinite when the differentials repeat with period `p` while degrees
/// drift by more than `p` per period. Otherwise only a lower bound.
pub fn regularity(table: &BettiTable, c: &GradedComplex, ld_hint: Option<usize>) -> Result<RegularityReport> {
    let n = table.length();
    if c.length() != n {
        return Err(Error::Input(format!("table covers {n} steps but the complex {}", c.length())));
    }
    let slopes: Vec<Option<i64>> = (0..=n).map(|i| table.t(i).map(|t| t - i as i64)).collect();
    let max_through = |m: usize| match table.max_slope_through(m) {
        Some(v) => RegularityValue::Finite(v),
        None => RegularityValue::NegInfinity,
    };
    if c.terminated() && !c.truncated() {
        return Ok(RegularityReport {
            slopes,
            status: RegularityStatus::ExactFinitePd,
            value: max_through(n),
            periodicity: None,
        });
    }
    if let Some(d) = ld_hint {
        if d >= n {
            return Err(Error::Input(format!("linearity defect {d} does not fit the window of {n} steps")));
        }
        return Ok(RegularityReport {
            slopes,
            status: RegularityStatus::ExactCertifiedByLd,
            value: max_through(d),
            periodicity: None,
        });
    }
    let periodicity = if c.truncated() { None } else { detect_periodicity(c, 4) };
    if let Some(p) = periodicity {
        if p.drift > p.period as i64 {
            return Ok(RegularityReport {
                slopes,
                status: RegularityStatus::DivergentPeriodic,
                value: RegularityValue::Infinity,
                periodicity,
            });
        }
    }
    let value = match table.max_slope_through(n) {
        Some(v) => RegularityValue::AtLeast(v),
        None => RegularityValue::NegInfinity,
    };
    Ok(RegularityReport { slopes, status: RegularityStatus::LowerBound, value, periodicity })
}

/// Smallest `(start, period)` with `start + 2 * period <= length` such that
/// every `d_i` with `i >= start` inside the window matches `d_{i+period}` up
/// to row and column permutations and nonzero scalars, with one uniform
/// degree drift.
pub fn detect_periodicity(c: &GradedComplex, max_period: usize) -> Option<Periodicity> {
    let n = c.length();
    for period in 1..=max_period {
        for start in 1..=n {
            if start + 2 * period > n {
                break;
            }
            if let Some(drift) = periodic_from(c, start, period) {
                return Some(Periodicity { start, period, drift });
            }
        }
    }
    None
}

fn periodic_from(c: &GradedComplex, start: usize, period: usize) -> Option<i64> {
    let n = c.length();
    let mut drift = None;
    for i in start..=n - period {
        let (a, b) = (c.differential(i), c.differential(i + period));
        if a.cols() == 0 || a.cols() != b.cols() || a.rows() != b.rows() {
            return None;
        }
        let delta = b.source.degree_shifts().iter().min()? - a.source.degree_shifts().iter().min()?;
        if drift.is_some_and(|d| d != delta) {
            return None;
        }
        drift = Some(delta);
        if !matrices_match(c.field(), a, b, delta) {
            return None;
        }
    }
    drift
}

fn normalize(k: &PrimeField, p: &Polynomial) -> Polynomial {
    match p.leading_term() {
        None => Polynomial::zero(),
        Some(&(_, c)) => {
            let inv = k.inv(c);
            Polynomial::from_sorted_unchecked(p.terms().iter().map(|(m, a)| (m.clone(), k.mul(*a, inv))).collect())
        }
    }
}

fn matrices_match(k: &PrimeField, a: &Matrix, b: &Matrix, delta: i64) -> bool {
    if !degrees_shift(a, b, delta) {
        return false;
    }
    let norm = |m: &Matrix| -> Vec<Vec<Polynomial>> {
        (0..m.rows()).map(|r| (0..m.cols()).map(|s| normalize(k, m.entry(r, s))).collect()).collect()
    };
    let (na, nb) = (norm(a), norm(b));
    let sig = |rows: &[Vec<Polynomial>]| -> Vec<Vec<u64>> {
        rows.iter()
            .map(|row| {
                let mut h: Vec<u64> = row
                    .iter()
                    .map(|p| {
                        let mut st = DefaultHasher::new();
                        p.hash(&mut st);
                        st.finish()
                    })
                    .collect();
                h.sort_unstable();
                h
            })
            .collect()
    };
    let (sa, sb) = (sig(&na), sig(&nb));
    let rows = RowData { a, b, na: &na, nb: &nb, sa: &sa, sb: &sb, delta };
    let mut used = vec![false; b.rows()];
    let mut sigma = vec![usize::MAX; a.rows()];
    let mut budget = 200_000usize;
    assign_rows(&rows, 0, &mut sigma, &mut used, &mut budget)
}

fn degrees_shift(a: &Matrix, b: &Matrix, delta: i64) -> bool {
    let shifted = |x: &[i64]| {
        let mut v: Vec<i64> = x.iter().map(|d| d + delta).collect();
        v.sort_unstable();
        v
    };
    let sorted = |x: &[i64]| {
        let mut v = x.to_vec();
        v.sort_unstable();
        v
    };
    shifted(a.source.degree_shifts()) == sorted(b.source.degree_shifts())
        && shifted(a.target.degree_shifts()) == sorted(b.target.degree_shifts())
}

struct RowData<'a> {
    a: &'a Matrix,
    b: &'a Matrix,
    na: &'a [Vec<Polynomial>],
    nb: &'a [Vec<Polynomial>],
    sa: &'a [Vec<u64>],
    sb: &'a [Vec<u64>],
    delta: i64,
}

fn assign_rows(d: &RowData<'_>, r: usize, sigma: &mut [usize], used: &mut [bool], budget: &mut usize) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if r == d.a.rows() {
        return columns_match(d.a, d.b, d.na, d.nb, d.delta, sigma);
    }
    for t in 0..d.b.rows() {
        if used[t] || d.b.target.degree(t) != d.a.target.degree(r) + d.delta || d.sa[r] != d.sb[t] {
            continue;
        }
        used[t] = true;
        sigma[r] = t;
        if assign_rows(d, r + 1, sigma, used, budget) {
            return true;
        }
        used[t] = false;
    }
    false
}

fn columns_match(a: &Matrix, b: &Matrix, na: &[Vec<Polynomial>], nb: &[Vec<Polynomial>], delta: i64, sigma: &[usize]) -> bool {
    let mut used = vec![false; b.cols()];
    'cols: for s in 0..a.cols() {
        for t in 0..b.cols() {
            if used[t] || b.source.degree(t) != a.source.degree(s) + delta {
                continue;
            }
            if (0..a.rows()).all(|r| na[r][s] == nb[sigma[r]][t]) {
                used[t] = true;
                continue 'cols;
            }
        }
        return false;
    }
    true
}
