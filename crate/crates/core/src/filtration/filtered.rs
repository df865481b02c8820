use super::standard::{initial_submodule, minimal_standard_basis, module_standard_basis, relative_kernel, same_submodule};
use super::tangent::associated_graded;
use super::{delta_invariants, FilteredPresentation};
use crate::algebra::{Matrix, Polynomial, VectorElement};
use crate::error::Result;
use crate::groebner;
use crate::resolution::{resolve_minimal, BettiTable, GradedComplex};

/// A filtered resolution `𝐅` of `M` built from minimal homogeneous
/// standard bases, and the complex `𝐆 = gr(𝐅)` of initial forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredResolution {
    /// Layouts carry both degree and valuation shifts.
    pub filtered: GradedComplex,
    /// Layouts of `gr(F_i)`, degrees equal to the valuation shifts.
    pub associated: GradedComplex,
    pub checks: FilteredResolutionChecks,
}

/// Per-step verification of the construction; entries are `(n, ok)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FilteredResolutionChecks {
    /// `gr(d_n)` computed entrywise equals the initial form matrix `δ_n`.
    pub strict: Vec<(usize, bool)>,
    /// `ker δ_n = gr(ker d_n)`.
    pub gr_kernel: Vec<(usize, bool)>,
    /// `{a'_j - a_j}` over the basis of `F_n` lies in `Δ(M)`.
    pub delta_containment: Vec<(usize, bool)>,
    /// `𝐆` is minimal.
    pub associated_minimal: bool,
    /// `𝐆` has the graded Betti numbers of `gr(M)`.
    pub betti_match: bool,
    pub messages: Vec<String>,
}

impl FilteredResolutionChecks {
    pub fn all_pass(&self) -> bool {
        let ok = |v: &[(usize, bool)]| v.iter().all(|(_, b)| *b);
        ok(&self.strict) && ok(&self.gr_kernel) && ok(&self.delta_containment) && self.associated_minimal && self.betti_match
    }
}

/// Entrywise `gr(d)`: entry `(r, s)` keeps its lowest form when
/// `ord + a_{n-1,r} = a_{n,s}` and becomes zero otherwise.
fn entrywise_gr(d: &Matrix) -> Vec<VectorElement> {
    d.columns
        .iter()
        .enumerate()
        .map(|(s, col)| {
            VectorElement::new(
                col.components()
                    .iter()
                    .enumerate()
                    .map(|(r, e)| match e.ord() {
                        Some(o) if o as i64 + d.target.valuation(r) == d.source.valuation(s) => e.lowest_form(),
                        _ => Polynomial::zero(),
                    })
                    .collect(),
            )
        })
        .collect()
}

fn degree_rows(c: &GradedComplex) -> BettiTable {
    let rows: Vec<Vec<i64>> = c.modules().iter().map(|m| m.degree_shifts().to_vec()).collect();
    BettiTable::from_degrees(&rows)
}

/// Builds `𝐅` through `F_{n_max}`: `F_0` on a minimal standard basis of
/// `M`, then each `F_n` on a minimal homogeneous standard basis of
/// `ker d_{n-1}` with its induced filtration.
pub fn filtered_resolution(m: &FilteredPresentation, n_max: usize, degree_cap: Option<i64>) -> Result<FilteredResolution> {
    m.require_graded("filtered resolutions")?;
    let ring = m.ring();
    let r = ring.ring();
    let delta_m = delta_invariants(m)?.delta;
    let kept = module_standard_basis(m)?;
    let layout = m.layout();
    let f0 = layout.select(&kept);
    let mut kernel_gens = if kept.len() == layout.rank() {
        m.relations().to_vec()
    } else {
        let cols: Vec<VectorElement> = kept.iter().map(|&i| VectorElement::unit(r, layout.rank(), i)).collect();
        relative_kernel(ring, &f0, &cols, layout, m.relations())?
    };

    let mut checks = FilteredResolutionChecks::default();
    let mut f_modules = vec![f0.clone()];
    let mut g_modules = vec![f0.gr_layout()];
    let (mut f_diffs, mut g_diffs) = (Vec::new(), Vec::new());
    let mut truncated = false;
    let mut target = f0;
    for n in 1..=n_max {
        let kernel_gens_nonzero: Vec<VectorElement> = kernel_gens.iter().filter(|v| !v.is_zero()).cloned().collect();
        let sb = minimal_standard_basis(ring, &target, &kernel_gens_nonzero)?;
        let source = sb.layout();
        let d = Matrix::new(source.clone(), target.clone(), sb.elements.clone())?;
        let delta_n = Matrix::new(source.gr_layout(), target.gr_layout(), sb.initial_forms.clone())?;

        let strict = entrywise_gr(&d) == sb.initial_forms;
        if !strict {
            checks.messages.push(format!("gr(d_{n}) differs from the initial forms"));
        }
        checks.strict.push((n, strict));
        let contained = sb.delta().is_subset(&delta_m);
        if !contained {
            checks.messages.push(format!("Δ(F_{n}) is not contained in Δ(M)"));
        }
        checks.delta_containment.push((n, contained));

        kernel_gens = if source.rank() == 0 {
            Vec::new()
        } else {
            let k = groebner::kernel(ring, &d, degree_cap)?;
            truncated |= k.is_truncated();
            k.into_generators()
        };
        let gr_ok = if source.rank() == 0 {
            true
        } else {
            let gr_ker = initial_submodule(ring, &source, &kernel_gens)?;
            let ker_delta = groebner::kernel(ring, &delta_n, degree_cap)?;
            truncated |= ker_delta.is_truncated();
            same_submodule(ring, &source.gr_layout(), gr_ker.generators(), ker_delta.generators())?.is_none()
        };
        if !gr_ok {
            checks.messages.push(format!("ker δ_{n} differs from gr(ker d_{n})"));
        }
        checks.gr_kernel.push((n, gr_ok));

        f_modules.push(source.clone());
        g_modules.push(source.gr_layout());
        f_diffs.push(d);
        g_diffs.push(delta_n);
        target = source;
    }
    let terminated = f_modules.iter().any(|l| l.rank() == 0) && !truncated;
    let field = *r.field();
    let filtered = GradedComplex::from_parts(field, f_modules, f_diffs, terminated, truncated);
    let associated = GradedComplex::from_parts(field, g_modules, g_diffs, terminated, truncated);

    checks.associated_minimal = associated.is_minimal();
    if !checks.associated_minimal {
        checks.messages.push("gr(𝐅) is not minimal".into());
    }
    let (gr_ring, gr_pres) = associated_graded(m)?;
    let reference = resolve_minimal(&gr_ring, &gr_pres, n_max, degree_cap)?;
    checks.betti_match = degree_rows(&reference) == degree_rows(&associated);
    if !checks.betti_match {
        checks.messages.push("gr(𝐅) and the minimal resolution of gr(M) have different Betti numbers".into());
    }
    Ok(FilteredResolution { filtered, associated, checks })
}
