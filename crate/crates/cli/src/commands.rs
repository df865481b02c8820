//! One function per subcommand, each producing a [`Report`].

use gradres_core::algebra::{Polynomial, Presentation, VectorElement};
use gradres_core::filtration::{
    associated_graded, delta_invariants, filtered_resolution, homogeneous_type, initial_form, initial_submodule, is_standard_basis,
    tangent_cone, verify_shift_bounds, FiltrationMode,
};
use gradres_core::groebner::QuotientRing;
use gradres_core::linearity::{
    homology_vanishes, koszul_check, ld_of_resolution, linear_part, probe_question_one, verify_column_condition_regularity,
    verify_gr_regularity_koszul, verify_koszul_tor_pattern, verify_ld_local_formula, verify_ld_reg_formula, CheckStatus, LdReport,
    DEFAULT_MARGIN,
};
use gradres_core::resolution::{betti, regularity, resolve_minimal, verify_complex, BettiTable, GradedComplex, RegularityReport, RegularityStatus};
use gradres_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::{self as out, Report};
use crate::spec::Problem;

fn require_graded(p: &Problem, what: &str) -> Result<()> {
    match p.module.mode() {
        FiltrationMode::Graded => Ok(()),
        FiltrationMode::LocalCyclic => Err(Error::Unsupported(format!("{what} in local-cyclic mode; use gr, verify or probe-q1"))),
    }
}

/// A minimal resolution through `n + 1` together with everything read off
/// its first `n` steps.
struct Resolved {
    complex: GradedComplex,
    table: BettiTable,
    regularity: RegularityReport,
    ld: LdReport,
}

fn resolve_with_ld(ring: &QuotientRing, pres: &Presentation, n: usize, cap: Option<i64>) -> Result<Resolved> {
    let long = resolve_minimal(ring, pres, n + 1, cap)?;
    let ld = ld_of_resolution(ring, &long, n, DEFAULT_MARGIN)?;
    let complex = long.truncate(n);
    let table = betti(&complex)?;
    let regularity = regularity(&table, &complex, ld.verdict.certified().filter(|&d| d < n))?;
    Ok(Resolved { complex, table, regularity, ld })
}

fn put_regularity(rep: &mut Report, key: &str, r: &RegularityReport) {
    rep.set(key, out::regularity(r));
    rep.set(&format!("{key}_details"), out::regularity_details(r));
}

pub fn resolve(p: &Problem) -> Result<Report> {
    require_graded(p, "resolutions of M")?;
    let r = p.ring.ring();
    let c = resolve_minimal(&p.ring, &p.module.m_adic(), p.n_max, p.cap())?;
    let diag = verify_complex(&p.ring, &c);
    let table = betti(&c)?;
    let mut rep = Report::default();
    rep.set("resolution", out::complex(&c, r));
    rep.set("betti", out::betti(&table));
    rep.set("diagnostics", out::diagnostics(&diag));
    rep.block("minimal resolution", &out::complex_text(&c, r));
    rep.block("Betti table", &table.to_text());
    rep.line(format!("diagnostics: {}", if diag.all_pass() { "pass" } else { "FAILED" }));
    for m in &diag.messages {
        rep.line(format!("  {m}"));
    }
    Ok(rep)
}

pub fn betti_table(p: &Problem) -> Result<Report> {
    require_graded(p, "Betti tables of M")?;
    let c = resolve_minimal(&p.ring, &p.module.m_adic(), p.n_max, p.cap())?;
    let table = betti(&c)?;
    let mut rep = Report::default();
    rep.set("betti", out::betti(&table));
    rep.set("terminated", json!(c.terminated()));
    rep.set("truncated", json!(c.truncated()));
    rep.text.push_str(&table.to_text());
    Ok(rep)
}

pub fn reg(p: &Problem) -> Result<Report> {
    require_graded(p, "regularity of M")?;
    let res = resolve_with_ld(&p.ring, &p.module.m_adic(), p.n_max, p.cap())?;
    let mut rep = Report::default();
    put_regularity(&mut rep, "regularity", &res.regularity);
    rep.set("betti", out::betti(&res.table));
    rep.line(format!("reg(M) = {}", out::regularity_text(&res.regularity)));
    rep.line(format!("slopes t_i - i: {}", slopes_text(&res.regularity)));
    Ok(rep)
}

fn slopes_text(r: &RegularityReport) -> String {
    let parts: Vec<String> = r.slopes.iter().map(|s| s.map_or("-".into(), |v| v.to_string())).collect();
    parts.join(" ")
}

pub fn gr(p: &Problem) -> Result<Report> {
    let r = p.ring.ring();
    let (gr_ring, gr_pres) = associated_graded(&p.module)?;
    let res = resolve_with_ld(&gr_ring, &gr_pres, p.n_max, p.cap())?;
    let mut rep = Report::default();
    rep.set("ring_ideal", out::polys(gr_ring.ideal_basis(), r));
    rep.set("layout", out::layout(&gr_pres.layout));
    rep.set("relations", out::vectors(&gr_pres.relations, r));
    rep.set("betti", out::betti(&res.table));
    put_regularity(&mut rep, "regularity", &res.regularity);
    rep.line(format!("gr(R) = S / ({})", join_polys(gr_ring.ideal_basis(), p)));
    if let Some(j) = &p.local_relations {
        let cone = cone_of_sum(p, j)?;
        rep.set("tangent_cone", out::polys(&cone, r));
        rep.line(format!("(I + J)* = ({})", join_polys(&cone, p)));
    }
    rep.line(format!("relations of gr(M) ({}):", gr_pres.relations.len()));
    for v in &gr_pres.relations {
        rep.line(format!("  {}", out::vector_text(v, r)));
    }
    rep.block("Betti table of gr(M)", &res.table.to_text());
    rep.line(format!("reg(gr M) = {}", out::regularity_text(&res.regularity)));
    Ok(rep)
}

fn join_polys(fs: &[Polynomial], p: &Problem) -> String {
    let parts: Vec<String> = fs.iter().map(|f| out::poly(f, p.ring.ring())).collect();
    parts.join(", ")
}

/// `(I + J)*` in the polynomial ring.
fn cone_of_sum(p: &Problem, j: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut gens = p.ring.generators().to_vec();
    gens.extend(j.iter().cloned());
    Ok(tangent_cone(p.ring.ring(), &gens, p.cap())?.generators)
}

pub fn std_basis(p: &Problem) -> Result<Report> {
    require_graded(p, "standard bases")?;
    let r = p.ring.ring();
    let m = &p.module;
    let layout = m.layout();
    let inv = delta_invariants(m)?;
    let elements: Vec<VectorElement> = inv.standard_basis.iter().map(|&i| VectorElement::unit(r, layout.rank(), i)).collect();
    let check = is_standard_basis(m, &elements)?;
    let n_star = initial_submodule(&p.ring, layout, m.relations())?;
    let forms = elements.iter().map(|e| initial_form(&p.ring, e, layout)).collect::<Result<Vec<_>>>()?;
    let basis: Vec<Value> = inv
        .standard_basis
        .iter()
        .zip(&forms)
        .map(|(&i, f)| json!({"degree": layout.degree(i), "generator": i, "initial_form": out::vector(f, r), "valuation": layout.valuation(i)}))
        .collect();
    let mut rep = Report::default();
    rep.set("standard_basis", Value::Array(basis));
    rep.set("initial_submodule", out::vectors(n_star.generators(), r));
    rep.set("delta", json!(inv.delta));
    rep.set("generator_degrees", json!(inv.generator_degrees));
    rep.set("v", json!(inv.v()));
    rep.set("u", json!(inv.u()));
    rep.set(
        "criteria",
        json!({
            "generates": check.generates,
            "initial_forms_generate": check.initial_forms_generate,
            "kernel_criterion": check.kernel_criterion,
            "witness": check.witness.as_ref().map(|w| out::vector(w, r)),
        }),
    );
    rep.line("minimal homogeneous standard basis:");
    for &i in &inv.standard_basis {
        rep.line(format!("  e_{i}: degree {}, valuation {}", layout.degree(i), layout.valuation(i)));
    }
    rep.line("initial submodule N*:");
    for v in n_star.generators() {
        rep.line(format!("  {}", out::vector_text(v, r)));
    }
    rep.line(format!("Delta(M) = {:?}, v(M) = {}, u(M) = {}", inv.delta, opt(inv.v()), opt(inv.u())));
    rep.line(format!("D(M) = {:?}", inv.generator_degrees));
    rep.line(format!(
        "criteria: generates {}, initial forms generate {}, kernel criterion {}",
        check.generates, check.initial_forms_generate, check.kernel_criterion
    ));
    Ok(rep)
}

fn opt(v: Option<i64>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

pub fn filtered_res(p: &Problem) -> Result<Report> {
    require_graded(p, "filtered resolutions")?;
    let r = p.ring.ring();
    let fr = filtered_resolution(&p.module, p.n_max, p.cap())?;
    let ch = &fr.checks;
    let pairs = |v: &[(usize, bool)]| -> Value { Value::Array(v.iter().map(|(i, ok)| json!([i, ok])).collect()) };
    let mut rep = Report::default();
    rep.set("filtered", out::complex(&fr.filtered, r));
    rep.set("associated", out::complex(&fr.associated, r));
    rep.set(
        "checks",
        json!({
            "associated_minimal": ch.associated_minimal,
            "betti_match": ch.betti_match,
            "delta_containment": pairs(&ch.delta_containment),
            "gr_kernel": pairs(&ch.gr_kernel),
            "messages": ch.messages,
            "pass": ch.all_pass(),
            "strict": pairs(&ch.strict),
        }),
    );
    rep.assert(ch.all_pass());
    rep.block("filtered resolution F", &out::complex_text(&fr.filtered, r));
    rep.block("associated graded resolution G", &out::complex_text(&fr.associated, r));
    rep.line(format!("checks: {}", if ch.all_pass() { "pass" } else { "FAILED" }));
    for m in &ch.messages {
        rep.line(format!("  {m}"));
    }
    Ok(rep)
}

pub fn homtype(p: &Problem) -> Result<Report> {
    require_graded(p, "homogeneous type")?;
    let ht = homogeneous_type(&p.module, p.n_max, p.cap())?;
    let mut rep = Report::default();
    rep.set("module", out::betti(&ht.module));
    rep.set("associated", out::betti(&ht.associated));
    rep.set("homogeneous_type", json!(ht.holds));
    rep.set("certified", json!(ht.certified));
    rep.set("truncated", json!(ht.truncated));
    rep.block("Betti table of M", &ht.module.to_text());
    rep.block("Betti table of gr(M)", &ht.associated.to_text());
    let scope = if ht.holds && !ht.certified { " (within the window)" } else { "" };
    rep.line(format!("homogeneous type: {}{scope}", ht.holds));
    Ok(rep)
}

pub fn bounds(p: &Problem) -> Result<Report> {
    require_graded(p, "shift bounds")?;
    let b = verify_shift_bounds(&p.module, p.n_max, p.cap())?;
    let rows: Vec<Value> = b
        .rows
        .iter()
        .map(|w| json!({"i": w.i, "lower_holds": w.lower_holds, "t_associated": w.t_associated, "t_module": w.t_module, "upper_holds": w.upper_holds}))
        .collect();
    let mut rep = Report::default();
    rep.set("v", json!(b.v));
    rep.set("u", json!(b.u));
    rep.set("homogeneous_type", json!(b.homogeneous_type));
    rep.set("rows", Value::Array(rows));
    rep.set("regularity_upper", json!(b.regularity_upper));
    rep.set("regularity_lower", json!(b.regularity_lower));
    rep.set("truncated", json!(b.truncated));
    rep.set("pass", json!(b.holds()));
    rep.assert(b.holds());
    rep.line(format!("v(M) = {}, u(M) = {}, homogeneous type: {}", opt(b.v), opt(b.u), b.homogeneous_type));
    rep.line(" i  t_i(M)  t_i(gr)  upper  lower");
    for w in &b.rows {
        let lower = w.lower_holds.map_or("-".to_string(), |h| h.to_string());
        rep.line(format!("{:>2}  {:>6}  {:>7}  {:>5}  {:>5}", w.i, opt(w.t_module), opt(w.t_associated), w.upper_holds, lower));
    }
    rep.line(format!("regularity upper bound: {}", b.regularity_upper));
    if let Some(l) = b.regularity_lower {
        rep.line(format!("regularity lower bound: {l}"));
    }
    Ok(rep)
}

pub fn lin(p: &Problem) -> Result<Report> {
    require_graded(p, "linear parts")?;
    let r = p.ring.ring();
    let c = resolve_minimal(&p.ring, &p.module.m_adic(), p.n_max + 1, p.cap())?;
    let l = linear_part(&c)?;
    let mut homology = Vec::new();
    for i in 1..l.length() {
        let w = homology_vanishes(&p.ring, &l, i)?;
        homology.push(json!({"index": i, "vanishes": w.is_none(), "witness": w.as_ref().map(|w| out::vector(w, r))}));
    }
    let mut rep = Report::default();
    rep.set("linear_part", out::complex(&l.truncate(p.n_max), r));
    rep.set("homology", Value::Array(homology.clone()));
    rep.block("linear part", &out::complex_text(&l.truncate(p.n_max), r));
    for h in &homology {
        let vanishes = h["vanishes"].as_bool().unwrap_or(false);
        rep.line(format!("H_{}(lin F) {}", h["index"], if vanishes { "= 0" } else { "!= 0" }));
    }
    Ok(rep)
}

pub fn ld(p: &Problem) -> Result<Report> {
    require_graded(p, "linearity defects")?;
    let res = resolve_with_ld(&p.ring, &p.module.m_adic(), p.n_max, p.cap())?;
    let mut rep = Report::default();
    rep.set("ld", out::ld_verdict(res.ld.verdict));
    rep.set("ld_details", out::ld_details(&res.ld, p.ring.ring()));
    rep.line(format!("ld(M) = {}", out::ld_verdict_text(res.ld.verdict)));
    rep.line(format!("nonvanishing linear homology at {:?} (window {}, margin {})", res.ld.nonvanishing, res.ld.window, res.ld.margin));
    if let Some(x) = res.ld.syzygy_cross_check {
        rep.line(format!("syzygy cross-check: {x}"));
    }
    Ok(rep)
}

pub fn koszul(p: &Problem) -> Result<Report> {
    require_graded(p, "Koszul checks")?;
    let k = koszul_check(&p.ring, &p.module.m_adic(), p.n_max, p.cap())?;
    let mut rep = Report::default();
    rep.set("koszul", json!(k.is_koszul()));
    rep.set("ld", out::ld_verdict(k.ld.verdict));
    rep.set("associated_linear", json!(k.associated_linear));
    rep.set("homogeneous_type", json!(k.homogeneous_type));
    rep.line(format!("Koszul in the window: {}", k.is_koszul()));
    rep.line(format!("  ld(M) = {}", out::ld_verdict_text(k.ld.verdict)));
    rep.line(format!("  m-adic gr(M) has a linear resolution: {}", k.associated_linear));
    rep.line(format!("  homogeneous type: {}", k.homogeneous_type));
    Ok(rep)
}

pub fn probe_q1(p: &Problem) -> Result<Report> {
    let pr = probe_question_one(&p.ring, p.n_max, p.cap())?;
    let mut rep = Report::default();
    rep.set("graded", json!(pr.graded));
    rep.set("ld", pr.ld.as_ref().map_or(Value::Null, |l| out::ld_verdict(l.verdict)));
    rep.set("homogeneous_type", json!(pr.homogeneous_type));
    rep.set("gr_ld", out::ld_verdict(pr.gr_ld.verdict));
    put_regularity(&mut rep, "gr_regularity", &pr.gr_regularity);
    rep.set("observations", json!(pr.observations));
    rep.line(format!("ld of k over gr(R): {}", out::ld_verdict_text(pr.gr_ld.verdict)));
    rep.line(format!("reg of k over gr(R): {}", out::regularity_text(&pr.gr_regularity)));
    for o in &pr.observations {
        rep.line(format!("- {o}"));
    }
    Ok(rep)
}

pub fn verify(p: &Problem) -> Result<Report> {
    let mut rep = Report::default();
    let mut checks = serde_json::Map::new();
    let mut record = |rep: &mut Report, name: &str, c: gradres_core::linearity::CheckReport| {
        rep.assert(c.status != CheckStatus::Fail);
        rep.text.push_str(&out::check_text(name, &c));
        checks.insert(name.to_string(), out::check(&c));
    };
    let (gr_ring, gr_pres) = associated_graded(&p.module)?;
    let gc = resolve_minimal(&gr_ring, &gr_pres, p.n_max, p.cap())?;
    let gd = verify_complex(&gr_ring, &gc);
    rep.assert(gd.all_pass());
    rep.set("gr_resolution_diagnostics", out::diagnostics(&gd));
    rep.line(format!("resolution of gr(M): {}", if gd.all_pass() { "pass" } else { "FAILED" }));
    if p.module.mode() == FiltrationMode::Graded {
        let c = resolve_minimal(&p.ring, &p.module.m_adic(), p.n_max, p.cap())?;
        let d = verify_complex(&p.ring, &c);
        rep.assert(d.all_pass());
        rep.set("resolution_diagnostics", out::diagnostics(&d));
        rep.line(format!("resolution of M: {}", if d.all_pass() { "pass" } else { "FAILED" }));
        let fr = filtered_resolution(&p.module, p.n_max, p.cap())?;
        rep.assert(fr.checks.all_pass());
        rep.set("filtered_resolution", json!(fr.checks.all_pass()));
        rep.line(format!("filtered resolution: {}", if fr.checks.all_pass() { "pass" } else { "FAILED" }));
        let b = verify_shift_bounds(&p.module, p.n_max, p.cap())?;
        rep.assert(b.holds());
        rep.set("shift_bounds", json!(b.holds()));
        rep.line(format!("shift bounds: {}", if b.holds() { "pass" } else { "FAILED" }));
        let pres = p.module.m_adic();
        record(&mut rep, "ld_regularity_formula", verify_ld_reg_formula(&p.ring, &pres, p.n_max, p.cap())?);
        record(&mut rep, "koszul_tor_pattern", verify_koszul_tor_pattern(&p.ring, &pres, p.n_max, p.cap())?);
        record(&mut rep, "koszul_gr_regularity", verify_gr_regularity_koszul(&p.module, p.n_max, p.cap())?);
        record(&mut rep, "ld_gr_regularity_formula", verify_ld_local_formula(&p.module, p.n_max, p.cap())?);
    }
    record(&mut rep, "column_condition_regularity", verify_column_condition_regularity(&p.module, p.n_max, p.cap())?);
    rep.set("checks", Value::Object(checks));
    let pass = rep.passed.unwrap_or(true);
    rep.set("pass", json!(pass));
    rep.line(format!("overall: {}", if pass { "pass" } else { "FAILED" }));
    Ok(rep)
}

pub fn demo_contro(p: &Problem) -> Result<Report> {
    let r = p.ring.ring();
    let m = &p.module;
    let n_star = initial_submodule(&p.ring, m.layout(), m.relations())?;
    let module = resolve_with_ld(&p.ring, &m.m_adic(), p.n_max, p.cap())?;
    let (gr_ring, gr_pres) = associated_graded(m)?;
    let assoc = resolve_with_ld(&gr_ring, &gr_pres, p.n_max, p.cap())?;
    let homogeneous = module.table.totals() == assoc.table.totals();
    let mut rep = Report::default();
    rep.set("initial_submodule", out::vectors(n_star.generators(), r));
    rep.set("betti_module", out::betti(&module.table));
    rep.set("betti_associated", out::betti(&assoc.table));
    rep.set("homogeneous_type", json!(homogeneous));
    put_regularity(&mut rep, "regularity_module", &module.regularity);
    put_regularity(&mut rep, "regularity_associated", &assoc.regularity);
    rep.set("associated_resolution", out::complex(&assoc.complex, r));
    rep.line("N* =");
    for v in n_star.generators() {
        rep.line(format!("  {}", out::vector_text(v, r)));
    }
    rep.block("Betti table of M", &module.table.to_text());
    rep.block("Betti table of gr(M)", &assoc.table.to_text());
    rep.line(format!("homogeneous type: {homogeneous}"));
    rep.line(format!("reg(M) = {}", out::regularity_text(&module.regularity)));
    rep.line(format!("reg(gr M) = {}", out::regularity_text(&assoc.regularity)));
    rep.assert(!homogeneous);
    rep.assert(module.regularity.status.is_exact() && module.regularity.value == gradres_core::resolution::RegularityValue::Finite(2));
    rep.assert(assoc.regularity.status == RegularityStatus::DivergentPeriodic);
    Ok(rep)
}

pub fn demo_cyclic(p: &Problem) -> Result<Report> {
    let r = p.ring.ring();
    let j = p.local_relations.as_deref().ok_or_else(|| Error::Input("the cyclic demo needs local-cyclic input".into()))?;
    let cone = cone_of_sum(p, j)?;
    let (gr_ring, gr_pres) = associated_graded(&p.module)?;
    let res = resolve_with_ld(&gr_ring, &gr_pres, p.n_max, p.cap())?;
    let totals = res.table.totals();
    let periodic_from_3 = (3..p.n_max).all(|i| totals[i] == totals[i + 1]);
    let mut rep = Report::default();
    rep.set("ring_ideal", out::polys(gr_ring.ideal_basis(), r));
    rep.set("tangent_cone", out::polys(&cone, r));
    rep.set("betti", out::betti(&res.table));
    rep.set("betti_stable_from_3", json!(periodic_from_3));
    put_regularity(&mut rep, "regularity", &res.regularity);
    rep.line(format!("gr(R) = S / ({})", join_polys(gr_ring.ideal_basis(), p)));
    rep.line(format!("(I + J)* = ({})", join_polys(&cone, p)));
    rep.block("Betti table of (R/J)^g", &res.table.to_text());
    rep.line(format!("beta_i = beta_(i+1) for 3 <= i < {}: {periodic_from_3}", p.n_max));
    rep.line(format!("reg((R/J)^g) = {}", out::regularity_text(&res.regularity)));
    rep.line(format!("slopes t_i - i: {}", slopes_text(&res.regularity)));
    rep.assert(periodic_from_3);
    rep.assert(!res.regularity.status.is_exact());
    Ok(rep)
}
