//! Exact positivity of univariate polynomials on `(0, ∞)` via Sturm sequences.

use num_traits::{Signed, Zero};

use crate::poly::Poly;
use crate::rational::Rational;

/// Dense ascending coefficients of a polynomial in at most one variable.
/// Returns `None` when more than one variable occurs.
fn dense(p: &Poly) -> Option<Vec<Rational>> {
    let vars = p.variables();
    if vars.len() > 1 {
        return None;
    }
    let Some(&var) = vars.first() else {
        return Some(vec![p.as_constant().unwrap_or_else(Rational::zero)]);
    };
    let mut coeffs = vec![Rational::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponent(var) as usize] = c.clone();
    }
    Some(coeffs)
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn derivative(v: &[Rational]) -> Vec<Rational> {
    if v.len() <= 1 {
        return vec![Rational::zero()];
    }
    v.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
        .collect()
}

/// Remainder of `a` divided by `b` (`b` nonzero, trimmed).
fn remainder(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db && !is_zero(&r) {
        let dr = r.len() - 1;
        let factor = &r[dr] / lead;
        for (k, bc) in b.iter().enumerate() {
            let idx = dr - db + k;
            r[idx] = &r[idx] - &factor * bc;
        }
        r.pop();
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    trim(r)
}

fn variations(signs: impl Iterator<Item = Rational>) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for s in signs {
        if s.is_zero() {
            continue;
        }
        let pos = s.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

/// Number of distinct real roots in `(0, ∞)` of a polynomial with nonzero
/// constant term.
fn positive_root_count(p: &[Rational]) -> usize {
    let mut seq = vec![p.to_vec(), trim(derivative(p))];
    while !is_zero(seq.last().unwrap()) {
        let n = seq.len();
        let r = remainder(&seq[n - 2], &seq[n - 1]);
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq.pop();
    let at_zero = variations(seq.iter().map(|s| s[0].clone()));
    let at_inf = variations(seq.iter().map(|s| s.last().unwrap().clone()));
    at_zero - at_inf
}

/// `true` iff `p`, a polynomial in at most one variable, is strictly positive
/// at every positive value of that variable. Returns `false` for polynomials
/// in several variables.
pub fn positive_on_half_line(p: &Poly) -> bool {
    let Some(coeffs) = dense(p) else {
        return false;
    };
    let coeffs = trim(coeffs);
    if is_zero(&coeffs) {
        return false;
    }
    // Dividing out powers of the variable does not change the sign on (0, ∞).
    let start = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let reduced = coeffs[start..].to_vec();
    if !reduced.last().unwrap().is_positive() {
        return false;
    }
    reduced.len() == 1 || positive_root_count(&reduced) == 0
}

/// `true` iff `p` is zero or strictly positive on `(0, ∞)`.
pub fn nonneg_or_zero(p: &Poly) -> bool {
    p.is_zero() || positive_on_half_line(p)
}
