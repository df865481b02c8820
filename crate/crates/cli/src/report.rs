//! Reports: a JSON object with sorted keys plus a plain-text rendering.

use gradres_core::algebra::{format_polynomial, FreeModuleLayout, PolyRing, Polynomial, VectorElement};
use gradres_core::linearity::{CheckReport, LdReport, LdVerdict};
use gradres_core::resolution::{BettiTable, ComplexDiagnostics, GradedComplex, RegularityReport, RegularityValue};
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub json: Map<String, Value>,
    pub text: String,
    /// `Some(false)` when a verify-style assertion failed.
    pub passed: Option<bool>,
}

impl Report {
    pub fn set(&mut self, key: &str, value: Value) {
        self.json.insert(key.to_string(), value);
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn block(&mut self, title: &str, body: &str) {
        self.line(format!("{title}:"));
        for l in body.lines() {
            self.line(format!("  {l}"));
        }
    }

    /// Records an assertion; the report passes only if all of them hold.
    pub fn assert(&mut self, holds: bool) {
        self.passed = Some(self.passed.unwrap_or(true) && holds);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&Value::Object(self.json.clone())).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

pub fn poly(f: &Polynomial, r: &PolyRing) -> String {
    format_polynomial(f, r)
}

pub fn polys(fs: &[Polynomial], r: &PolyRing) -> Value {
    Value::Array(fs.iter().map(|f| Value::String(poly(f, r))).collect())
}

pub fn vector(v: &VectorElement, r: &PolyRing) -> Value {
    polys(v.components(), r)
}

pub fn vectors(vs: &[VectorElement], r: &PolyRing) -> Value {
    Value::Array(vs.iter().map(|v| vector(v, r)).collect())
}

pub fn vector_text(v: &VectorElement, r: &PolyRing) -> String {
    let parts: Vec<String> = v.components().iter().map(|f| poly(f, r)).collect();
    format!("({})", parts.join(", "))
}

pub fn layout(l: &FreeModuleLayout) -> Value {
    json!({"degree_shifts": l.degree_shifts(), "valuation_shifts": l.valuation_shifts()})
}

pub fn betti(t: &BettiTable) -> Value {
    let entries: Vec<Value> = t.entries().into_iter().map(|(i, j, b)| json!([i, j, b])).collect();
    json!({"entries": entries, "totals": t.totals()})
}

fn value_json(v: RegularityValue) -> Value {
    match v {
        RegularityValue::Finite(v) | RegularityValue::AtLeast(v) => json!(v),
        RegularityValue::Infinity => json!("infinity"),
        RegularityValue::NegInfinity => json!("-infinity"),
    }
}

/// The verdict itself; slopes and periodicity go to [`regularity_details`].
pub fn regularity(r: &RegularityReport) -> Value {
    json!({"status": r.status.as_str(), "value": value_json(r.value)})
}

pub fn regularity_details(r: &RegularityReport) -> Value {
    let periodicity = r.periodicity.map(|p| json!({"drift": p.drift, "period": p.period, "start": p.start}));
    json!({"periodicity": periodicity, "slopes": r.slopes})
}

pub fn regularity_text(r: &RegularityReport) -> String {
    let mut s = format!("{} ({})", r.value, r.status.as_str());
    if let Some(p) = r.periodicity {
        s.push_str(&format!(", period {} from step {} with degree drift {}", p.period, p.start, p.drift));
    }
    s
}

pub fn ld_verdict(v: LdVerdict) -> Value {
    match v {
        LdVerdict::Koszul => json!({"verdict": "koszul"}),
        LdVerdict::Exact(d) => json!({"value": d, "verdict": "exact"}),
        LdVerdict::AtLeast(d) => json!({"value": d, "verdict": "at-least"}),
    }
}

pub fn ld_verdict_text(v: LdVerdict) -> String {
    match v {
        LdVerdict::Koszul => "0 (Koszul)".into(),
        LdVerdict::Exact(d) => d.to_string(),
        LdVerdict::AtLeast(d) => format!(">= {d} (not certified in the window)"),
    }
}

pub fn ld_details(l: &LdReport, r: &PolyRing) -> Value {
    let witnesses: Vec<Value> = l.witnesses.iter().map(|(i, w)| json!({"index": i, "cycle": vector(w, r)})).collect();
    json!({
        "margin": l.margin,
        "nonvanishing": l.nonvanishing,
        "syzygy_cross_check": l.syzygy_cross_check,
        "terminated": l.terminated,
        "truncated": l.truncated,
        "window": l.window,
        "witnesses": witnesses,
    })
}

pub fn complex(c: &GradedComplex, r: &PolyRing) -> Value {
    let modules: Vec<Value> = c.modules().iter().map(layout).collect();
    let differentials: Vec<Value> = c.differentials().iter().map(|d| vectors(&d.columns, r)).collect();
    json!({"differentials": differentials, "modules": modules, "terminated": c.terminated(), "truncated": c.truncated()})
}

pub fn complex_text(c: &GradedComplex, r: &PolyRing) -> String {
    let mut out = String::new();
    for (i, m) in c.modules().iter().enumerate() {
        out.push_str(&format!("F_{i}: degrees {:?}", m.degree_shifts()));
        if m.valuation_shifts().iter().any(|&v| v != 0) {
            out.push_str(&format!(", valuations {:?}", m.valuation_shifts()));
        }
        out.push('\n');
        if i > 0 {
            for col in &c.differential(i).columns {
                out.push_str(&format!("  {}\n", vector_text(col, r)));
            }
        }
    }
    if c.truncated() {
        out.push_str("degree cap reached: later steps may be incomplete\n");
    }
    out
}

pub fn diagnostics(d: &ComplexDiagnostics) -> Value {
    let exactness: Vec<Value> = d.exactness.iter().map(|(i, ok)| json!([i, ok])).collect();
    json!({
        "exactness": exactness,
        "homogeneous": d.homogeneous,
        "messages": d.messages,
        "minimal": d.minimal,
        "pass": d.all_pass(),
        "squares_to_zero": d.squares_to_zero,
    })
}

pub fn check(c: &CheckReport) -> Value {
    let claims: Vec<Value> = c.claims.iter().map(|k| json!({"holds": k.holds, "label": k.label})).collect();
    json!({"claims": claims, "notes": c.notes, "status": c.status.as_str()})
}

pub fn check_text(name: &str, c: &CheckReport) -> String {
    let mut out = format!("{name}: {}\n", c.status.as_str());
    for k in &c.claims {
        out.push_str(&format!("  [{}] {}\n", if k.holds { "ok" } else { "FAILED" }, k.label));
    }
    for n in &c.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    out
}
