use std::collections::BTreeMap;

use super::complex::GradedComplex;
use crate::error::{Error, Result};

/// Graded Betti numbers `β_{ij}` for `0 <= i <= n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    rows: Vec<BTreeMap<i64, usize>>,
}

impl BettiTable {
    pub fn from_degrees(degrees: &[Vec<i64>]) -> Self {
        let rows = degrees
            .iter()
            .map(|ds| {
                let mut m = BTreeMap::new();
                for &d in ds {
                    *m.entry(d).or_insert(0) += 1;
                }
                m
            })
            .collect();
        BettiTable { rows }
    }

    /// Number of homological steps covered, minus one.
    pub fn length(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn beta(&self, i: usize) -> usize {
        self.rows.get(i).map_or(0, |r| r.values().sum())
    }

    pub fn beta_ij(&self, i: usize, j: i64) -> usize {
        self.rows.get(i).and_then(|r| r.get(&j)).copied().unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..self.rows.len()).map(|i| self.beta(i)).collect()
    }

    /// `t_i`, `None` standing for `-∞` (when `F_i = 0`).
    pub fn t(&self, i: usize) -> Option<i64> {
        self.rows.get(i).and_then(|r| r.keys().next_back().copied())
    }

    /// Smallest degree in step `i`.
    pub fn min_degree(&self, i: usize) -> Option<i64> {
        self.rows.get(i).and_then(|r| r.keys().next().copied())
    }

    /// `D(F_i)` as a sorted set.
    pub fn degree_set(&self, i: usize) -> Vec<i64> {
        self.rows.get(i).map_or_else(Vec::new, |r| r.keys().copied().collect())
    }

    /// Nonzero entries `(i, j, β_{ij})` in increasing `(i, j)`.
    pub fn entries(&self) -> Vec<(usize, i64, usize)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(&j, &b)| (i, j, b))).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// `max_{i <= n} (t_i - i)`; `None` if all steps up to `n` vanish.
    pub fn max_slope_through(&self, n: usize) -> Option<i64> {
        (0..=n.min(self.length())).filter_map(|i| self.t(i).map(|t| t - i as i64)).max()
    }

    /// Classic text layout: row `j - i`, column `i`, as in `betti` tables
    /// of common computer algebra systems.
    pub fn to_text(&self) -> String {
        let entries = self.entries();
        if entries.is_empty() {
            return "zero module\n".to_string();
        }
        let lo = entries.iter().map(|&(i, j, _)| j - i as i64).min().unwrap();
        let hi = entries.iter().map(|&(i, j, _)| j - i as i64).max().unwrap();
        let cols = self.rows.len();
        let width = (0..cols).map(|i| self.beta(i).to_string().len()).max().unwrap().max(cols.to_string().len()) + 1;
        let label = (hi.to_string().len().max(lo.to_string().len()) + 1).max("total:".len());
        let mut out = format!("{:>label$}", "");
        for i in 0..cols {
            out.push_str(&format!("{i:>width$}"));
        }
        out.push('\n');
        out.push_str(&format!("{:>label$}", "total:"));
        for i in 0..cols {
            out.push_str(&format!("{:>width$}", self.beta(i)));
        }
        out.push('\n');
        for row in lo..=hi {
            out.push_str(&format!("{:>label$}", format!("{row}:")));
            for i in 0..cols {
                let b = self.beta_ij(i, row + i as i64);
                let cell = if b == 0 { ".".to_string() } else { b.to_string() };
                out.push_str(&format!("{cell:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Betti table of a minimal complex.
pub fn betti(c: &GradedComplex) -> Result<BettiTable> {
    if !c.is_minimal() {
        return Err(Error::Contract("Betti numbers need a minimal complex".into()));
    }
    let degrees: Vec<Vec<i64>> = c.modules().iter().map(|m| m.degree_shifts().to_vec()).collect();
    Ok(BettiTable::from_degrees(&degrees))
}
