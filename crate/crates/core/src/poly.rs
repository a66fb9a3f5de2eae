//! Sparse multivariate polynomials in the diagonal variables `d_1, d_2, …`
//! with exact rational coefficients.
//!
//! The ring itself places no bound on degrees (up to 15 per variable); the
//! per-variable degree bound of 2 that every determinantal object obeys is
//! only enforced by [`Poly::collect`], the entry point used by certificates.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{lcm_of_denominators, parse_rational, Rational};

/// Maximum number of distinct variables a monomial can carry.
pub const MAX_VARS: usize = 16;
const BITS: u32 = 4;
const NIBBLE: u64 = 0xF;

/// Product of powers of `d_1..d_16`, packed four bits per exponent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// The variable `d_i` (1-based).
    pub fn var(i: usize) -> Monomial {
        Self::ONE.with_exponent(i, 1)
    }

    pub fn from_exponents(exps: &[(usize, u32)]) -> Monomial {
        exps.iter().fold(Self::ONE, |m, &(i, e)| {
            m.with_exponent(i, m.exponent(i) + e)
        })
    }

    pub fn exponent(self, i: usize) -> u32 {
        assert!(
            (1..=MAX_VARS).contains(&i),
            "variable index d{i} out of range"
        );
        ((self.0 >> (BITS * (i as u32 - 1))) & NIBBLE) as u32
    }

    pub fn with_exponent(self, i: usize, e: u32) -> Monomial {
        assert!(
            (1..=MAX_VARS).contains(&i),
            "variable index d{i} out of range"
        );
        assert!(e as u64 <= NIBBLE, "exponent {e} of d{i} overflows");
        let shift = BITS * (i as u32 - 1);
        Monomial((self.0 & !(NIBBLE << shift)) | ((e as u64) << shift))
    }

    pub fn degree(self) -> u32 {
        self.vars().map(|(_, e)| e).sum()
    }

    /// `(variable, exponent)` pairs with nonzero exponent, ascending.
    pub fn vars(self) -> impl Iterator<Item = (usize, u32)> {
        (1..=MAX_VARS)
            .map(move |i| (i, self.exponent(i)))
            .filter(|&(_, e)| e > 0)
    }

    pub fn without(self, i: usize) -> Monomial {
        self.with_exponent(i, 0)
    }

    /// Graded order: total degree first, then larger exponents of
    /// lower-indexed variables first.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in 1..=MAX_VARS {
                match other.exponent(i).cmp(&self.exponent(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        let mut out = 0u64;
        for k in 0..MAX_VARS as u32 {
            let shift = BITS * k;
            let e = ((self.0 >> shift) & NIBBLE) + ((rhs.0 >> shift) & NIBBLE);
            assert!(e <= NIBBLE, "exponent overflow in monomial product");
            out |= e << shift;
        }
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vars()
            .map(|(i, e)| {
                if e == 1 {
                    format!("d{i}")
                } else {
                    format!("d{i}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sign pattern of the coefficients of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignClass {
    IdenticallyZero,
    /// All coefficients `>= 0`, at least one positive: the polynomial is
    /// strictly positive on the open positive orthant.
    NonnegStrict,
    /// All coefficients `<= 0`, at least one negative.
    NonposStrict,
    Mixed,
}

/// Assignment of positive rational values to the variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Point {
    values: BTreeMap<usize, Rational>,
}

impl Point {
    /// Assigns `values[k]` to `d_{k+1}`.
    pub fn from_slice(values: &[Rational]) -> Point {
        Point {
            values: values
                .iter()
                .enumerate()
                .map(|(k, v)| (k + 1, v.clone()))
                .collect(),
        }
    }

    pub fn set(&mut self, var: usize, value: Rational) {
        self.values.insert(var, value);
    }

    pub fn get(&self, var: usize) -> Option<&Rational> {
        self.values.get(&var)
    }

    pub fn is_positive(&self) -> bool {
        self.values.values().all(|v| v.is_positive())
    }
}

/// Sparse polynomial; never stores a zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::monomial(Monomial::ONE, c)
    }

    pub fn var(i: usize) -> Poly {
        Poly::monomial(Monomial::var(i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value of a constant polynomial, `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }

    /// Variables that occur, ascending.
    pub fn variables(&self) -> Vec<usize> {
        let mask = self.terms.keys().fold(0u64, |acc, m| {
            m.vars().fold(acc, |a, (i, _)| a | 1 << (i - 1))
        });
        (1..=MAX_VARS)
            .filter(|i| mask >> (i - 1) & 1 == 1)
            .collect()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Sets `d_i = 0`.
    pub fn substitute_zero(&self, i: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(i) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Splits `p = p2·d_i² + p1·d_i + p0`, returning `(p0, p1, p2)`.
    pub fn collect(&self, i: usize) -> Result<(Poly, Poly, Poly)> {
        let degree = self.degree_in(i);
        if degree > 2 {
            return Err(Error::DegreeTooHigh { var: i, degree });
        }
        let mut parts = [Poly::zero(), Poly::zero(), Poly::zero()];
        for (m, c) in &self.terms {
            let e = m.exponent(i) as usize;
            parts[e].terms.insert(m.without(i), c.clone());
        }
        let [p0, p1, p2] = parts;
        Ok((p0, p1, p2))
    }

    pub fn evaluate(&self, x: &Point) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.vars() {
                let v = x.get(i).ok_or(Error::MissingVariable(i))?;
                for _ in 0..e {
                    term *= v;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Floating-point evaluation with `values[k]` bound to `d_{k+1}`.
    pub fn evaluate_f64(&self, values: &[f64]) -> Result<f64> {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut term = crate::rational::to_f64(c);
            for (i, e) in m.vars() {
                let v = values.get(i - 1).ok_or(Error::MissingVariable(i))?;
                term *= v.powi(e as i32);
            }
            total += term;
        }
        Ok(total)
    }

    pub fn coeffwise_sign(&self) -> SignClass {
        if self.is_zero() {
            return SignClass::IdenticallyZero;
        }
        let pos = self.terms.values().any(|c| c.is_positive());
        let neg = self.terms.values().any(|c| c.is_negative());
        match (pos, neg) {
            (true, false) => SignClass::NonnegStrict,
            (false, true) => SignClass::NonposStrict,
            _ => SignClass::Mixed,
        }
    }

    /// Terms in canonical rendering order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<(Monomial, Rational)> =
            self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| a.0.graded_cmp(&b.0));
        v
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the canonical rendering (`3 - 4*d1*d2 + 2*d2^2`); factors may
    /// appear in any order and repeated variables multiply.
    fn from_str(s: &str) -> Result<Poly> {
        let bad = |message: String| Error::Parse { line: 1, message };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial".into()));
        }
        // split into signed terms
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (k, ch) in compact.chars().enumerate() {
            let after_caret = current.ends_with('^');
            if (ch == '+' || ch == '-') && !after_caret {
                if k > 0 {
                    if current.is_empty() {
                        return Err(bad(format!("dangling sign in {s:?}")));
                    }
                    pieces.push((negative, std::mem::take(&mut current)));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(bad(format!("dangling sign in {s:?}")));
        }
        pieces.push((negative, current));

        let mut p = Poly::zero();
        for (negative, term) in pieces {
            let mut coeff = Rational::one();
            let mut mono = Monomial::ONE;
            for factor in term.split('*') {
                if let Some(rest) = factor.strip_prefix('d') {
                    let (idx, exp) = match rest.split_once('^') {
                        Some((i, e)) => (i, e),
                        None => (rest, "1"),
                    };
                    let i: usize = idx
                        .parse()
                        .map_err(|_| bad(format!("bad variable {factor:?}")))?;
                    let e: u32 = exp
                        .parse()
                        .map_err(|_| bad(format!("bad exponent {factor:?}")))?;
                    if !(1..=MAX_VARS).contains(&i) {
                        return Err(bad(format!("variable index out of range in {factor:?}")));
                    }
                    mono = mono * Monomial::from_exponents(&[(i, e)]);
                } else {
                    coeff *= parse_rational(factor).map_err(bad)?;
                }
            }
            p.add_term(mono, if negative { -coeff } else { coeff });
        }
        Ok(p)
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Poly, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        // Accumulate integer numerators over a common denominator and reduce
        // each output coefficient once.
        let integral = |p: &Poly| -> (BigInt, Vec<(Monomial, BigInt)>) {
            let l = lcm_of_denominators(p.terms.values());
            let nums = p
                .terms
                .iter()
                .map(|(m, c)| (*m, c.numer() * (&l / c.denom())))
                .collect();
            (l, nums)
        };
        let (l1, a) = integral(self);
        let (l2, b) = integral(rhs);
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &a {
            for (m2, c2) in &b {
                *acc.entry(*m1 * *m2).or_default() += c1 * c2;
            }
        }
        let denom = l1 * l2;
        Poly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, Rational::new(c, denom.clone())))
                .collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}
