//! Exact primitives for the constant-input second step: real quadratic roots
//! as quadratic surds, open interval sets on the positive half-line, and the
//! decision procedures built on them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::rational::{rat, Rational};

/// A real number `rational + coef * sqrt(radicand)` with `radicand > 0`.
/// Perfect-square radicands are folded into the rational part.
#[derive(Clone, Debug)]
pub struct Surd {
    rational: Rational,
    coef: Rational,
    radicand: Rational,
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let exact = |v: &BigInt| {
        let r = v.sqrt();
        (&r * &r == *v).then_some(r)
    };
    Some(Rational::new(exact(x.numer())?, exact(x.denom())?))
}

impl Surd {
    pub fn rational(x: Rational) -> Surd {
        Surd {
            rational: x,
            coef: Rational::zero(),
            radicand: Rational::zero(),
        }
    }

    fn new(rational: Rational, coef: Rational, radicand: Rational) -> Surd {
        match rational_sqrt(&radicand) {
            Some(root) => Surd::rational(rational + coef * root),
            None => Surd {
                rational,
                coef,
                radicand,
            },
        }
    }

    /// Sign of `self - x`.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        let s = &self.rational - x;
        if self.coef.is_zero() {
            return s.cmp(&Rational::zero());
        }
        let t_pos = self.coef.is_positive();
        if !s.is_negative() && t_pos {
            return Ordering::Greater;
        }
        if !s.is_positive() && !t_pos {
            return Ordering::Less;
        }
        // s and the surd term have opposite signs: the larger magnitude wins
        let s2 = &s * &s;
        let t2 = &self.coef * &self.coef * &self.radicand;
        match s2.cmp(&t2) {
            Ordering::Greater => s.cmp(&Rational::zero()),
            Ordering::Less if t_pos => Ordering::Greater,
            Ordering::Less => Ordering::Less,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.cmp_rational(&Rational::zero()) == Ordering::Greater
    }

    pub fn to_f64(&self) -> f64 {
        use crate::rational::to_f64;
        to_f64(&self.rational) + to_f64(&self.coef) * to_f64(&self.radicand).sqrt()
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Surd) -> bool {
        // 1 and an irrational square root are linearly independent over Q
        self.rational == other.rational
            && self.coef.signum() == other.coef.signum()
            && &self.coef * &self.coef * &self.radicand
                == &other.coef * &other.coef * &other.radicand
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_zero() {
            write!(f, "{}", self.rational)
        } else {
            write!(
                f,
                "{} + ({})*sqrt({})",
                self.rational, self.coef, self.radicand
            )
        }
    }
}

/// Real zero set of a polynomial of degree at most two.
#[derive(Clone, Debug, PartialEq)]
pub enum Zeros {
    /// The polynomial is identically zero.
    Everywhere,
    /// Distinct real roots in increasing order.
    Roots(Vec<Surd>),
}

/// `a d² + b d + c` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Quadratic {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Quadratic {
        Quadratic { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Quadratic {
        Quadratic::new(rat(a), rat(b), rat(c))
    }

    pub fn discriminant(&self) -> Rational {
        &self.b * &self.b - rat(4) * &self.a * &self.c
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        (&self.a * x + &self.b) * x + &self.c
    }

    pub fn zeros(&self) -> Zeros {
        if self.a.is_zero() {
            if self.b.is_zero() {
                return if self.c.is_zero() {
                    Zeros::Everywhere
                } else {
                    Zeros::Roots(Vec::new())
                };
            }
            return Zeros::Roots(vec![Surd::rational(-&self.c / &self.b)]);
        }
        let disc = self.discriminant();
        let center = -&self.b / (rat(2) * &self.a);
        match disc.cmp(&Rational::zero()) {
            Ordering::Less => Zeros::Roots(Vec::new()),
            Ordering::Equal => Zeros::Roots(vec![Surd::rational(center)]),
            Ordering::Greater => {
                let half_width = (rat(1) / (rat(2) * &self.a)).abs();
                Zeros::Roots(vec![
                    Surd::new(center.clone(), -half_width.clone(), disc.clone()),
                    Surd::new(center, half_width, disc),
                ])
            }
        }
    }

    /// Distinct roots in `(0, ∞)`, or `None` when the polynomial vanishes
    /// identically.
    pub fn positive_roots(&self) -> Option<Vec<Surd>> {
        match self.zeros() {
            Zeros::Everywhere => None,
            Zeros::Roots(rs) => Some(rs.into_iter().filter(Surd::is_positive).collect()),
        }
    }
}

/// Endpoint of an open interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Finite(Rational),
    Infinity,
}

/// Open interval `(lo, hi)` with a finite lower end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Bound,
}

impl Interval {
    pub fn contains(&self, x: &Surd) -> bool {
        if x.cmp_rational(&self.lo) != Ordering::Greater {
            return false;
        }
        match &self.hi {
            Bound::Infinity => true,
            Bound::Finite(h) => x.cmp_rational(h) == Ordering::Less,
        }
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        self.contains(&Surd::rational(x.clone()))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.hi {
            Bound::Infinity => write!(f, "({}, inf)", self.lo),
            Bound::Finite(h) => write!(f, "({}, {})", self.lo, h),
        }
    }
}

/// Disjoint union of open intervals inside `(0, ∞)`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalSet {
    pub intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> IntervalSet {
        IntervalSet::default()
    }

    pub fn half_line() -> IntervalSet {
        IntervalSet {
            intervals: vec![Interval {
                lo: Rational::zero(),
                hi: Bound::Infinity,
            }],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &Surd) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        self.contains(&Surd::rational(x.clone()))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "empty");
        }
        for (k, i) in self.intervals.iter().enumerate() {
            if k > 0 {
                write!(f, " u ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Affine form `constant + slope * d`.
#[derive(Clone, Debug)]
struct Affine {
    constant: Rational,
    slope: Rational,
}

impl Affine {
    fn eval(&self, d: &Rational) -> Rational {
        &self.constant + &self.slope * d
    }

    fn root(&self) -> Option<Rational> {
        (!self.slope.is_zero()).then(|| -&self.constant / &self.slope)
    }
}

/// `{d > 0 : l1(d) * l2(d) > 0}` computed by sign analysis between the
/// positive roots of the two factors.
fn product_positive_set(l1: &Affine, l2: &Affine) -> IntervalSet {
    let mut cuts: Vec<Rational> = [l1.root(), l2.root()]
        .into_iter()
        .flatten()
        .filter(|r| r.is_positive())
        .collect();
    cuts.sort();
    cuts.dedup();
    let mut ends: Vec<Rational> = vec![Rational::zero()];
    ends.extend(cuts);
    let mut out = IntervalSet::empty();
    for k in 0..ends.len() {
        let lo = ends[k].clone();
        let (hi, sample) = match ends.get(k + 1) {
            Some(h) => (Bound::Finite(h.clone()), (&lo + h) / rat(2)),
            None => (Bound::Infinity, &lo + rat(1)),
        };
        if (l1.eval(&sample) * l2.eval(&sample)).is_positive() {
            out.intervals.push(Interval { lo, hi });
        }
    }
    out
}

/// The set `S = {d > 0 : (-d·Q01 + P11)(d·P00 + Q10) > 0}` of scalings on
/// which both depth-one nodes have a nonzero real or imaginary part with the
/// same orientation.
pub fn region_s(p00: &Rational, q01: &Rational, p11: &Rational, q10: &Rational) -> IntervalSet {
    product_positive_set(
        &Affine {
            constant: p11.clone(),
            slope: -q01,
        },
        &Affine {
            constant: q10.clone(),
            slope: p00.clone(),
        },
    )
}

/// `true` iff the quadratic `q` has no zero inside `s` (an identically zero
/// quadratic has zeros everywhere).
pub fn quadratic_zero_location(q: &Quadratic, s: &IntervalSet) -> bool {
    match q.zeros() {
        Zeros::Everywhere => s.is_empty(),
        Zeros::Roots(rs) => !rs.iter().any(|r| s.contains(r)),
    }
}

/// Nondegenerate half of the second step: the quadratic
/// `F(00,01) d² + (G(00,11) − G(10,01)) d + F(10,11)` must not vanish on
/// [`region_s`]. Returns `true` when the condition holds.
#[allow(clippy::too_many_arguments)]
pub fn step2_nondegenerate(
    f_00_01: &Rational,
    g_cross: &Rational,
    f_10_11: &Rational,
    p00: &Rational,
    q01: &Rational,
    p11: &Rational,
    q10: &Rational,
) -> bool {
    let q = Quadratic::new(f_00_01.clone(), g_cross.clone(), f_10_11.clone());
    quadratic_zero_location(&q, &region_s(p00, q01, p11, q10))
}

/// Solution set in `d` of an affine equation.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Solutions {
    None,
    At(Rational),
    Any,
}

impl Solutions {
    fn of(l: &Affine) -> Solutions {
        match l.root() {
            Some(r) => Solutions::At(r),
            None if l.constant.is_zero() => Solutions::Any,
            None => Solutions::None,
        }
    }

    fn meet(self, other: Solutions) -> Solutions {
        match (self, other) {
            (Solutions::None, _) | (_, Solutions::None) => Solutions::None,
            (Solutions::Any, s) | (s, Solutions::Any) => s,
            (Solutions::At(a), Solutions::At(b)) => {
                if a == b {
                    Solutions::At(a)
                } else {
                    Solutions::None
                }
            }
        }
    }
}

/// Decides whether the system
/// `d·P00 + Q10 = 0`, `−d·Q01 + P11 = 0`, `(−d·Q00 + P10)(d·P01 + Q11) < 0`
/// (with `Q00² + P10² ≠ 0`) has a solution `d > 0`.
/// Returns `true` when there is none, which is the certifying outcome.
#[allow(clippy::too_many_arguments)]
pub fn step2_q0_system(
    p00: &Rational,
    q00: &Rational,
    p10: &Rational,
    q10: &Rational,
    p01: &Rational,
    q01: &Rational,
    p11: &Rational,
    q11: &Rational,
) -> bool {
    if q00.is_zero() && p10.is_zero() {
        return true;
    }
    let eq1 = Affine {
        constant: q10.clone(),
        slope: p00.clone(),
    };
    let eq2 = Affine {
        constant: p11.clone(),
        slope: -q01,
    };
    // h(d) < 0  <=>  (P10 − Q00 d)(−Q11 − P01 d) > 0
    let left = Affine {
        constant: p10.clone(),
        slope: -q00,
    };
    let right = Affine {
        constant: -q11,
        slope: -p01,
    };
    match Solutions::of(&eq1).meet(Solutions::of(&eq2)) {
        Solutions::None => true,
        Solutions::At(d) => !(d.is_positive() && (left.eval(&d) * right.eval(&d)).is_positive()),
        Solutions::Any => product_positive_set(&left, &right).is_empty(),
    }
}

/// Positive zero set of `F·d² + 2G·d + F'` given the structural identity
/// `G² + H² = F·F'`, where `H` is the matching cross term.
fn structured_zeros(
    f_lead: &Rational,
    f_const: &Rational,
    h: &Rational,
    g: &Rational,
) -> Solutions {
    if f_lead.is_positive() {
        if h.is_zero() && g.is_negative() {
            Solutions::At(-g / f_lead)
        } else {
            Solutions::None
        }
    } else if f_const.is_zero() {
        Solutions::Any
    } else {
        Solutions::None
    }
}

/// Degenerate half of the second step: decides whether the two quadratics
/// `F00 d² + 2 G(00,10) d + F10` and `F01 d² + 2 G(01,11) d + F11`
/// have a common zero `d > 0`. Returns `true` when they do not.
///
/// When the inputs satisfy `G(00,10)² + F(00,10)² = F00·F10` (and likewise
/// for the second pair), as they always do for inputs derived from a matrix,
/// each quadratic has a positive zero only in the double-root case
/// `F(00,10) = 0, G(00,10) < 0`, and the test reduces to comparing the two
/// double roots. Other inputs fall back to comparing the exact roots.
#[allow(clippy::too_many_arguments)]
pub fn degenerate_step2(
    f00: &Rational,
    f01: &Rational,
    f10: &Rational,
    f11: &Rational,
    f_00_10: &Rational,
    f_01_11: &Rational,
    g_00_10: &Rational,
    g_01_11: &Rational,
) -> bool {
    let structured = !f00.is_negative()
        && !f01.is_negative()
        && !f10.is_negative()
        && !f11.is_negative()
        && g_00_10 * g_00_10 + f_00_10 * f_00_10 == f00 * f10
        && g_01_11 * g_01_11 + f_01_11 * f_01_11 == f01 * f11;
    if structured {
        let first = structured_zeros(f00, f10, f_00_10, g_00_10);
        let second = structured_zeros(f01, f11, f_01_11, g_01_11);
        return match (first, second) {
            (Solutions::None, _) | (_, Solutions::None) => true,
            (Solutions::At(_), Solutions::At(_)) => {
                // both roots −G/F coincide iff G(01,11)·F00 − G(00,10)·F01 = 0
                !(g_01_11 * f00 - g_00_10 * f01).is_zero()
            }
            _ => false,
        };
    }
    let q0 = Quadratic::new(f00.clone(), rat(2) * g_00_10, f10.clone());
    let q1 = Quadratic::new(f01.clone(), rat(2) * g_01_11, f11.clone());
    match (q0.positive_roots(), q1.positive_roots()) {
        (Some(r), _) | (_, Some(r)) if r.is_empty() => true,
        (None, _) | (_, None) => false,
        (Some(r0), Some(r1)) => !r0.iter().any(|x| r1.contains(x)),
    }
}
