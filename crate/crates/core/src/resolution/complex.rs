use crate::algebra::{FreeModuleLayout, Matrix, PrimeField, VectorElement};
use crate::error::{Error, Result};
use crate::groebner::{self, MembershipOracle, QuotientRing};

/// A chain `F_n -> ... -> F_1 -> F_0` of shifted free modules.
///
/// `modules[i]` is `F_i` and `differentials[i - 1]` is `d_i : F_i -> F_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    field: PrimeField,
    modules: Vec<FreeModuleLayout>,
    differentials: Vec<Matrix>,
    terminated: bool,
    truncated: bool,
}

impl GradedComplex {
    pub fn new(field: PrimeField, modules: Vec<FreeModuleLayout>, differentials: Vec<Matrix>) -> Result<Self> {
        if modules.is_empty() || differentials.len() + 1 != modules.len() {
            return Err(Error::Input(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.source != modules[i + 1] || d.target != modules[i] {
                return Err(Error::Input(format!("differential {} does not match its modules", i + 1)));
            }
        }
        let terminated = modules.iter().any(|m| m.rank() == 0);
        Ok(GradedComplex { field, modules, differentials, terminated, truncated: false })
    }

    pub(crate) fn from_parts(
        field: PrimeField,
        modules: Vec<FreeModuleLayout>,
        differentials: Vec<Matrix>,
        terminated: bool,
        truncated: bool,
    ) -> Self {
        GradedComplex { field, modules, differentials, terminated, truncated }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// Highest homological index stored.
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, i: usize) -> &FreeModuleLayout {
        &self.modules[i]
    }

    pub fn modules(&self) -> &[FreeModuleLayout] {
        &self.modules
    }

    /// `d_i` for `1 <= i <= length()`.
    pub fn differential(&self, i: usize) -> &Matrix {
        &self.differentials[i - 1]
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(FreeModuleLayout::rank).collect()
    }

    /// Some `F_i` inside the window is zero, so the resolution is finite.
    pub fn terminated(&self) -> bool {
        self.terminated
    }

    /// A degree cap interrupted a kernel computation.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// No differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| {
            d.columns.iter().all(|c| c.components().iter().all(|e| e.is_zero() || e.ord() != Some(0)))
        })
    }

    /// Same modules, differentials replaced.
    pub(crate) fn with_differentials(&self, differentials: Vec<Matrix>) -> GradedComplex {
        GradedComplex { differentials, ..self.clone() }
    }

    /// Keeps `F_0 .. F_n`.
    pub fn truncate(&self, n: usize) -> GradedComplex {
        let n = n.min(self.length());
        GradedComplex {
            field: self.field,
            modules: self.modules[..=n].to_vec(),
            differentials: self.differentials[..n].to_vec(),
            terminated: self.modules[..=n].iter().any(|m| m.rank() == 0),
            truncated: self.truncated,
        }
    }
}

/// Results of [`verify_complex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDiagnostics {
    pub squares_to_zero: bool,
    pub homogeneous: bool,
    pub minimal: bool,
    /// `(i, exact at F_i)` for `1 <= i <= length - 1`.
    pub exactness: Vec<(usize, bool)>,
    pub messages: Vec<String>,
}

impl ComplexDiagnostics {
    pub fn exact(&self) -> bool {
        self.exactness.iter().all(|(_, ok)| *ok)
    }

    pub fn all_pass(&self) -> bool {
        self.squares_to_zero && self.homogeneous && self.minimal && self.exact()
    }
}

fn reduce_vector(ring: &QuotientRing, v: &VectorElement) -> VectorElement {
    VectorElement::new(v.components().iter().map(|p| ring.reduce(p)).collect())
}

/// `d_i ∘ d_{i+1} = 0`, homogeneity, minimality, and exactness at
/// `F_1 .. F_{n-1}` (kernel generators of `d_i` lie in the image of `d_{i+1}`).
pub fn verify_complex(ring: &QuotientRing, c: &GradedComplex) -> ComplexDiagnostics {
    let r = ring.ring();
    let mut messages = Vec::new();
    let mut squares_to_zero = true;
    for i in 1..c.length() {
        let comp = c.differential(i).compose(r, c.differential(i + 1));
        if !comp.columns.iter().all(|col| reduce_vector(ring, col).is_zero()) {
            squares_to_zero = false;
            messages.push(format!("d_{i} ∘ d_{} is not zero", i + 1));
        }
    }
    let mut homogeneous = true;
    for i in 1..=c.length() {
        if !c.differential(i).is_homogeneous() {
            homogeneous = false;
            messages.push(format!("d_{i} is not homogeneous"));
        }
    }
    let minimal = c.is_minimal();
    if !minimal {
        messages.push("a differential has a unit entry".into());
    }
    let mut exactness = Vec::new();
    if homogeneous {
        for i in 1..c.length() {
            let ok = match exact_at(ring, c.differential(i), c.differential(i + 1)) {
                Ok(None) => true,
                Ok(Some(_)) => false,
                Err(e) => {
                    messages.push(format!("exactness at {i}: {e}"));
                    false
                }
            };
            if !ok {
                messages.push(format!("not exact at F_{i}"));
            }
            exactness.push((i, ok));
        }
    }
    ComplexDiagnostics { squares_to_zero, homogeneous, minimal, exactness, messages }
}

/// `None` when `ker d ⊆ im e`; otherwise a kernel generator outside the image.
pub(crate) fn exact_at(ring: &QuotientRing, d: &Matrix, e: &Matrix) -> Result<Option<VectorElement>> {
    let k = groebner::kernel(ring, d, None)?;
    let order = crate::algebra::ModuleOrder::new(ring.ring(), &e.target);
    let image = groebner::groebner_basis(ring, &e.target, &order, &e.columns, None)?;
    let oracle = MembershipOracle::new(ring, &image)?;
    Ok(k.generators().iter().find(|g| !oracle.contains(g)).cloned())
}
