//! The JSON problem format and its validation into core objects.

use std::fmt;

use gradres_core::algebra::{parse_polynomial, FreeModuleLayout, MonomialOrder, PolyRing, Polynomial, Presentation, PrimeField, VectorElement};
use gradres_core::filtration::{validate_filtration, FilteredPresentation};
use gradres_core::groebner::QuotientRing;
use serde::{Deserialize, Serialize};

pub const DEFAULT_CHARACTERISTIC: u32 = 32003;
pub const DEFAULT_N_MAX: usize = 8;
pub const DEFAULT_DEGREE_CAP: i64 = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    #[serde(default = "default_characteristic")]
    pub characteristic: u32,
    pub variables: Vec<String>,
    #[serde(default)]
    pub ideal: Vec<String>,
    #[serde(default)]
    pub mode: ModeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<FiltrationSpec>,
    #[serde(default)]
    pub options: OptionsSpec,
}

fn default_characteristic() -> u32 {
    DEFAULT_CHARACTERISTIC
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeSpec {
    #[default]
    Graded,
    LocalCyclic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_shifts: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation_shifts: Option<Vec<i64>>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

/// Submodules `𝔉_0 ⊇ 𝔉_1 ⊇ ...` of the free module, each listed by generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiltrationSpec {
    pub steps: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

/// A rejected input, located by a JSON pointer into the document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub pointer: String,
    pub message: String,
}

impl SpecError {
    fn at(pointer: impl Into<String>, message: impl fmt::Display) -> Self {
        SpecError { pointer: pointer.into(), message: message.to_string() }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "document root" } else { &self.pointer };
        write!(f, "{at}: {}", self.message)
    }
}

impl std::error::Error for SpecError {}

/// Converts a serde path such as `module.relations[0][1]` to a JSON pointer.
fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out.push_str(&format!("/{index}")),
            Segment::Map { key } => out.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { variant } => out.push_str(&format!("/{variant}")),
            Segment::Unknown => {}
        }
    }
    out
}

pub fn parse_spec(text: &str) -> Result<ProblemSpec, SpecError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer = pointer_of(e.path());
        let inner = e.into_inner();
        // serde reports line/column in the message; the pointer is more useful
        let msg = inner.to_string();
        let msg = msg.split(" at line ").next().unwrap_or(&msg).to_string();
        SpecError::at(pointer, msg)
    })
}

/// Command-line overrides of the spec options.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub steps: Option<usize>,
    pub degree_cap: Option<i64>,
    pub order: Option<String>,
}

/// A validated problem: the ring, the filtered module and the window.
#[derive(Clone, Debug)]
pub struct Problem {
    pub ring: QuotientRing,
    pub module: FilteredPresentation,
    pub n_max: usize,
    pub degree_cap: i64,
    /// `J` for local-cyclic input.
    pub local_relations: Option<Vec<Polynomial>>,
}

impl Problem {
    pub fn cap(&self) -> Option<i64> {
        Some(self.degree_cap)
    }
}

fn parse_poly(text: &str, ring: &PolyRing, pointer: String) -> Result<Polynomial, SpecError> {
    parse_polynomial(text, ring).map_err(|e| SpecError::at(pointer, e))
}

fn parse_vector(texts: &[String], rank: usize, ring: &PolyRing, pointer: &str) -> Result<VectorElement, SpecError> {
    if texts.len() != rank {
        return Err(SpecError::at(pointer, format!("expected {rank} components, found {}", texts.len())));
    }
    let comps = texts.iter().enumerate().map(|(k, t)| parse_poly(t, ring, format!("{pointer}/{k}"))).collect::<Result<_, _>>()?;
    Ok(VectorElement::new(comps))
}

fn shifts(given: &Option<Vec<i64>>, rank: usize, pointer: &str) -> Result<Vec<i64>, SpecError> {
    match given {
        None => Ok(vec![0; rank]),
        Some(v) if v.len() == rank => Ok(v.clone()),
        Some(v) => Err(SpecError::at(pointer, format!("expected {rank} entries, found {}", v.len()))),
    }
}

impl ProblemSpec {
    pub fn validate(&self, overrides: &Overrides) -> Result<Problem, SpecError> {
        let field = PrimeField::new(self.characteristic).map_err(|e| SpecError::at("/characteristic", e))?;
        let order_name = overrides.order.clone().or_else(|| self.options.order.clone());
        let order = match &order_name {
            None => MonomialOrder::default(),
            Some(name) => MonomialOrder::parse(name).map_err(|e| SpecError::at("/options/order", e))?,
        };
        if self.variables.is_empty() {
            return Err(SpecError::at("/variables", "at least one variable is needed"));
        }
        let ring = PolyRing::new(field, self.variables.clone(), order).map_err(|e| SpecError::at("/variables", e))?;
        let ideal = self
            .ideal
            .iter()
            .enumerate()
            .map(|(i, t)| parse_poly(t, &ring, format!("/ideal/{i}")))
            .collect::<Result<Vec<_>, _>>()?;
        let quotient = QuotientRing::new(ring.clone(), ideal).map_err(|e| SpecError::at("/ideal", e))?;
        let n_max = overrides.steps.or(self.options.n_max).unwrap_or(DEFAULT_N_MAX);
        let degree_cap = overrides.degree_cap.or(self.options.degree_cap).unwrap_or(DEFAULT_DEGREE_CAP);
        if degree_cap < 0 {
            return Err(SpecError::at("/options/degree_cap", "must be non-negative"));
        }
        let (module, local_relations) = match self.mode {
            ModeSpec::Graded => (self.graded_module(&quotient)?, None),
            ModeSpec::LocalCyclic => {
                let j = self.local_module(&ring)?;
                (FilteredPresentation::local_cyclic(quotient.clone(), j.clone()).map_err(|e| SpecError::at("/module", e))?, Some(j))
            }
        };
        Ok(Problem { ring: quotient, module, n_max, degree_cap, local_relations })
    }

    fn graded_module(&self, quotient: &QuotientRing) -> Result<FilteredPresentation, SpecError> {
        let ring = quotient.ring();
        if !quotient.is_graded() {
            return Err(SpecError::at("/ideal", "graded mode needs homogeneous ideal generators; use mode local-cyclic"));
        }
        let cyclic = ModuleSpec { rank: 1, degree_shifts: None, valuation_shifts: None, relations: Vec::new() };
        let spec = self.module.as_ref().unwrap_or(&cyclic);
        let degrees = shifts(&spec.degree_shifts, spec.rank, "/module/degree_shifts")?;
        if let Some(f) = &self.filtration {
            if !spec.relations.is_empty() {
                return Err(SpecError::at("/module/relations", "a filtration chain lives in a free module; leave relations empty"));
            }
            if spec.valuation_shifts.is_some() {
                return Err(SpecError::at("/module/valuation_shifts", "valuations come from the filtration chain"));
            }
            let ambient = FreeModuleLayout::graded(degrees);
            let mut steps = Vec::new();
            for (p, step) in f.steps.iter().enumerate() {
                let gens = step
                    .iter()
                    .enumerate()
                    .map(|(j, v)| parse_vector(v, spec.rank, ring, &format!("/filtration/steps/{p}/{j}")))
                    .collect::<Result<Vec<_>, _>>()?;
                steps.push(gens);
            }
            return validate_filtration(quotient, &ambient, &steps).map_err(|e| SpecError::at("/filtration/steps", e));
        }
        let valuations = shifts(&spec.valuation_shifts, spec.rank, "/module/valuation_shifts")?;
        let layout = FreeModuleLayout::new(degrees, valuations).map_err(|e| SpecError::at("/module/valuation_shifts", e))?;
        let relations = spec
            .relations
            .iter()
            .enumerate()
            .map(|(i, v)| parse_vector(v, spec.rank, ring, &format!("/module/relations/{i}")))
            .collect::<Result<Vec<_>, _>>()?;
        for (i, r) in relations.iter().enumerate() {
            if !r.is_homogeneous(&layout) {
                return Err(SpecError::at(format!("/module/relations/{i}"), "relation is not homogeneous for the degree shifts"));
            }
        }
        let p = Presentation::new(layout, relations).map_err(|e| SpecError::at("/module", e))?;
        FilteredPresentation::graded(quotient.clone(), p).map_err(|e| SpecError::at("/module", e))
    }

    fn local_module(&self, ring: &PolyRing) -> Result<Vec<Polynomial>, SpecError> {
        if self.filtration.is_some() {
            return Err(SpecError::at("/filtration", "local-cyclic mode uses the m-adic filtration only"));
        }
        let Some(spec) = &self.module else { return Ok(Vec::new()) };
        if spec.rank != 1 {
            return Err(SpecError::at("/module/rank", "local-cyclic mode needs a cyclic module"));
        }
        for (key, given) in [("degree_shifts", &spec.degree_shifts), ("valuation_shifts", &spec.valuation_shifts)] {
            if given.as_ref().is_some_and(|v| v.iter().any(|&s| s != 0)) {
                return Err(SpecError::at(format!("/module/{key}"), "local-cyclic mode has no shifts"));
            }
        }
        spec.relations
            .iter()
            .enumerate()
            .map(|(i, v)| Ok(parse_vector(v, 1, ring, &format!("/module/relations/{i}"))?.into_components().remove(0)))
            .collect()
    }
}
