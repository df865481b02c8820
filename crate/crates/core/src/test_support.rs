use crate::algebra::{parse_polynomial, PolyRing, Polynomial, VectorElement};
use crate::groebner::QuotientRing;

pub fn ring(vars: &[&str]) -> PolyRing {
    PolyRing::with_vars(vars)
}

pub fn poly(r: &PolyRing, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

pub fn vector(r: &PolyRing, comps: &[&str]) -> VectorElement {
    VectorElement::new(comps.iter().map(|s| poly(r, s)).collect())
}

pub fn quotient(vars: &[&str], ideal: &[&str]) -> QuotientRing {
    let r = ring(vars);
    let gens = ideal.iter().map(|s| poly(&r, s)).collect();
    QuotientRing::new(r, gens).unwrap()
}

use crate::algebra::{Coeff, Monomial, PrimeField};

/// All monomials of degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix).unwrap());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Basis of the right nullspace of a dense matrix over `F_p` (rows x cols).
pub fn nullspace(k: &PrimeField, mut a: Vec<Vec<Coeff>>, cols: usize) -> Vec<Vec<Coeff>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..a.len()).find(|&r| a[r][col] != 0) else { continue };
        a.swap(row, p);
        let inv = k.inv(a[row][col]);
        for x in a[row].iter_mut() {
            *x = k.mul(*x, inv);
        }
        for r in 0..a.len() {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..cols {
                    let v = k.mul(f, a[row][c]);
                    a[r][c] = k.sub(a[r][c], v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(a[r][f]);
            }
            v
        })
        .collect()
}
