use super::standard::initial_submodule;
use super::{FilteredPresentation, FiltrationMode};
use crate::algebra::{FreeModuleLayout, Monomial, MonomialOrder, PolyRing, Polynomial, Presentation, VectorElement};
use crate::error::Result;
use crate::groebner::{self, QuotientRing};

/// Generators of the ideal of lowest forms `I*` of an ideal `I ⊆ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentCone {
    /// Reduced Gröbner basis of `I*` in the order of the input ring.
    pub generators: Vec<Polynomial>,
    /// A degree cap interrupted one of the Gröbner computations.
    pub truncated: bool,
}

fn homogenizing_name(ring: &PolyRing) -> String {
    let mut name = "h".to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// Maps `f ∈ S` into `S[h]` with `h` at position `at`, homogenizing.
fn homogenize(f: &Polynomial, target: &PolyRing, at: usize) -> Polynomial {
    let top = f.degree().unwrap_or(0);
    target.from_terms(
        f.terms()
            .iter()
            .map(|(m, c)| (insert_exponent(m, at, top - m.degree()), *c))
            .collect(),
    )
}

fn insert_exponent(m: &Monomial, at: usize, e: u32) -> Monomial {
    let mut exps: Vec<u32> = m.exponents().iter().map(|&x| x as u32).collect();
    exps.insert(at, e);
    Monomial::from_exponents(&exps).expect("exponents fit")
}

fn move_variable(f: &Polynomial, from: usize, to: usize, target: &PolyRing) -> Polynomial {
    target.from_terms(
        f.terms()
            .iter()
            .map(|(m, c)| {
                let mut exps: Vec<u32> = m.exponents().iter().map(|&x| x as u32).collect();
                let e = exps.remove(from);
                exps.insert(to, e);
                (Monomial::from_exponents(&exps).expect("exponents fit"), *c)
            })
            .collect(),
    )
}

fn ideal_gb(ring: &PolyRing, gens: &[Polynomial], cap: Option<i64>) -> (Vec<Polynomial>, bool) {
    let layout = FreeModuleLayout::graded(vec![0]);
    let q = QuotientRing::polynomial(ring.clone());
    let order = crate::algebra::ModuleOrder::new(ring, &layout);
    let vs: Vec<VectorElement> = gens.iter().filter(|g| !g.is_zero()).map(|g| VectorElement::new(vec![g.clone()])).collect();
    let gb = groebner::groebner_basis(&q, &layout, &order, &vs, cap).expect("homogeneous input");
    let truncated = gb.is_truncated();
    (gb.into_generators().into_iter().map(|v| v.into_components().pop().unwrap()).collect(), truncated)
}

/// `I*` for `I = ⟨gens⟩ ⊆ S`, through homogenization.
///
/// With `h` a new variable, a degrevlex basis of `⟨f^h⟩` (h last) divided
/// by powers of `h` generates the saturation `I^h`. Its deglex basis with
/// `h` first has leading terms in the top `h`-power part, and those parts
/// at `h = 1` generate `I*`.
pub fn tangent_cone(ring: &PolyRing, gens: &[Polynomial], degree_cap: Option<i64>) -> Result<TangentCone> {
    for g in gens {
        ring.check(g)?;
    }
    let n = ring.nvars();
    let mut names = ring.var_names().to_vec();
    let h = homogenizing_name(ring);
    names.push(h.clone());
    let last = PolyRing::new(*ring.field(), names, MonomialOrder::DegRevLex)?;
    let homogenized: Vec<Polynomial> = gens.iter().map(|g| homogenize(g, &last, n)).collect();
    let (gb, t1) = ideal_gb(&last, &homogenized, degree_cap);
    let saturated: Vec<Polynomial> = gb
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|(m, _)| m.exponent(n)).min().unwrap_or(0);
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut e: Vec<u32> = m.exponents().iter().map(|&x| x as u32).collect();
                    e[n] -= k;
                    (Monomial::from_exponents(&e).expect("exponents fit"), *c)
                })
                .collect();
            last.from_terms(terms)
        })
        .collect();

    let mut first_names = vec![h];
    first_names.extend(ring.var_names().iter().cloned());
    let first = PolyRing::new(*ring.field(), first_names, MonomialOrder::DegLex)?;
    let moved: Vec<Polynomial> = saturated.iter().map(|g| move_variable(g, n, 0, &first)).collect();
    let (gb, t2) = ideal_gb(&first, &moved, degree_cap);
    let lowest: Vec<Polynomial> = gb
        .iter()
        .map(|g| {
            let top = g.terms().iter().map(|(m, _)| m.exponent(0)).max().unwrap_or(0);
            ring.from_terms(
                g.terms()
                    .iter()
                    .filter(|(m, _)| m.exponent(0) == top)
                    .map(|(m, c)| {
                        let e: Vec<u32> = m.exponents()[1..].iter().map(|&x| x as u32).collect();
                        (Monomial::from_exponents(&e).expect("exponents fit"), *c)
                    })
                    .collect(),
            )
        })
        .collect();
    let (generators, t3) = ideal_gb(ring, &lowest, None);
    Ok(TangentCone { generators, truncated: t1 || t2 || t3 })
}

/// `gr(M)` over `gr(R)`.
///
/// Graded mode: `gr(F) / N*` over `R` itself. Local-cyclic mode:
/// `S / (I + J)*` over `S / I*`.
pub fn associated_graded(m: &FilteredPresentation) -> Result<(QuotientRing, Presentation)> {
    match m.mode() {
        FiltrationMode::Graded => {
            let n_star = initial_submodule(m.ring(), m.layout(), m.relations())?;
            Ok((m.ring().clone(), Presentation::new(m.layout().gr_layout(), n_star.into_generators())?))
        }
        FiltrationMode::LocalCyclic => {
            let ring = m.ring().ring();
            let i_star = tangent_cone(ring, m.ring().generators(), None)?;
            let mut all = m.ring().generators().to_vec();
            all.extend(m.relations().iter().map(|v| v.component(0).clone()));
            let sum_star = tangent_cone(ring, &all, None)?;
            let gr_ring = QuotientRing::new(ring.clone(), i_star.generators)?;
            let relations = sum_star
                .generators
                .iter()
                .map(|f| gr_ring.reduce(f))
                .filter(|f| !f.is_zero())
                .map(|f| VectorElement::new(vec![f]))
                .collect();
            Ok((gr_ring, Presentation::new(FreeModuleLayout::graded(vec![0]), relations)?))
        }
    }
}
