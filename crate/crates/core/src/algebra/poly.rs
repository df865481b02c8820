use std::cmp::Ordering;

use super::field::{Coeff, PrimeField};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Sparse polynomial; terms sorted by decreasing monomial under the ring's
/// order, no zero coefficients, no repeated monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Order of vanishing at the origin: least total degree (`None` = +infinity).
    pub fn ord(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    /// Constant coefficient (zero if absent).
    pub fn constant_coeff(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Terms of exactly the given degree.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial { terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect() }
    }

    /// Lowest-degree form (the initial form for the m-adic filtration).
    pub fn lowest_form(&self) -> Polynomial {
        match self.ord() {
            None => Polynomial::zero(),
            Some(d) => self.homogeneous_part(d),
        }
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Coeff)>) -> Self {
        Polynomial { terms }
    }
}

/// `k[x_1..x_n]` with a fixed monomial order and variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::Input(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Input(format!("duplicate variable `{v}`")));
            }
        }
        Ok(PolyRing { field, vars, order })
    }

    /// Convenience constructor over the default field with degrevlex.
    pub fn with_vars(names: &[&str]) -> Self {
        Self::new(PrimeField::default(), names.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
            .expect("valid variable names")
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { order, ..self.clone() }
    }

    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(Monomial::one(self.nvars()), c)] }
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial { terms: vec![(Monomial::var(self.nvars(), i), 1)] }
    }

    pub fn term(&self, m: Monomial, c: Coeff) -> Polynomial {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds a canonical polynomial from arbitrary terms (combines duplicates,
    /// drops zeros, sorts).
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % self.field.characteristic();
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial { terms: out }
    }

    pub fn check(&self, f: &Polynomial) -> Result<()> {
        for (m, _) in &f.terms {
            if m.nvars() != self.nvars() {
                return Err(Error::VariableMismatch { expected: self.nvars(), found: m.nvars() });
            }
        }
        Ok(())
    }

    /// Checked arithmetic entry point.
    pub fn arith(&self, f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(match op {
            ArithOp::Add => self.add(f, g),
            ArithOp::Sub => self.sub(f, g),
            ArithOp::Mul => self.mul(f, g),
        })
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, 1, g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, self.field.neg(1), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: Coeff) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(*a, c))).collect() }
    }

    /// `c * m * f`.
    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: Coeff) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|(n, a)| (n.mul(m), self.field.mul(*a, c))).collect() }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = self.merge(&acc, 1, &self.mul_term(big, m, *c));
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut result = self.one();
        let mut base = f.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_term() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(f, self.field.inv(*c)),
        }
    }

    /// `f + c * g`.
    pub fn merge(&self, f: &Polynomial, c: Coeff, g: &Polynomial) -> Polynomial {
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        let k = &self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            let (fm, fc) = &f.terms[i];
            let (gm, gc) = &g.terms[j];
            match self.order.cmp(fm, gm) {
                Ordering::Greater => {
                    out.push((fm.clone(), *fc));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.clone(), k.mul(*gc, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = k.add(*fc, k.mul(*gc, c));
                    if s != 0 {
                        out.push((fm.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        out.extend(g.terms[j..].iter().map(|(m, a)| (m.clone(), k.mul(*a, c))));
        Polynomial { terms: out }
    }

    /// Re-sorts a polynomial coming from a ring with another order.
    pub fn resort(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.clone())
    }
}
