//! Brute-force oracles for the constant-input decision primitives.

use dstab_core::certifier::{Bound, Interval, IntervalSet, Quadratic};
use dstab_core::rational::{rat, ratio, Rational};
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn small(r: &mut ChaCha8Rng, range: i64) -> Rational {
    ratio(r.gen_range(-range..=range), r.gen_range(1..=3))
}

pub fn sgn(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn in_set(s: &IntervalSet, x: &Rational) -> bool {
    s.intervals.iter().any(|iv| {
        &iv.lo < x
            && match &iv.hi {
                Bound::Finite(h) => x < h,
                Bound::Infinity => true,
            }
    })
}

/// Root isolation: a Cauchy bound closes the line, the vertex splits it into
/// strictly monotone pieces, and a root lies strictly inside a piece of an
/// interval iff the endpoint values have opposite signs.
pub fn oracle_no_zero(q: &Quadratic, s: &IntervalSet) -> bool {
    let (a, b, c) = (&q.a, &q.b, &q.c);
    if a.is_zero() {
        if b.is_zero() {
            return !c.is_zero() || s.intervals.is_empty();
        }
        return !in_set(s, &(-c / b));
    }
    let bound = rat(1) + b.abs().max(c.abs()) / a.abs();
    let vertex = -b / (rat(2) * a);
    if q.eval(&vertex).is_zero() {
        return !in_set(s, &vertex);
    }
    for iv in &s.intervals {
        let hi = match &iv.hi {
            Bound::Finite(h) => h.clone().min(bound.clone()),
            Bound::Infinity => bound.clone(),
        };
        for (pl, ph) in [
            (-bound.clone(), vertex.clone()),
            (vertex.clone(), bound.clone()),
        ] {
            let l = iv.lo.clone().max(pl);
            let h = hi.clone().min(ph);
            if l < h && sgn(&q.eval(&l)) * sgn(&q.eval(&h)) < 0 {
                return false;
            }
        }
    }
    true
}

pub fn random_interval_set(r: &mut ChaCha8Rng) -> IntervalSet {
    let mut ends: Vec<Rational> = (0..4)
        .map(|_| ratio(r.gen_range(0..=12), r.gen_range(1..=2)))
        .collect();
    ends.sort();
    ends.dedup();
    let mut set = IntervalSet::empty();
    let count = r.gen_range(0..=2).min(ends.len() / 2 + ends.len() % 2);
    let mut k = 0;
    for i in 0..count {
        if k >= ends.len() {
            break;
        }
        let lo = ends[k].clone();
        let hi = if i + 1 == count && r.gen_bool(0.3) || k + 1 >= ends.len() {
            Bound::Infinity
        } else {
            Bound::Finite(ends[k + 1].clone())
        };
        let done = matches!(hi, Bound::Infinity);
        set.intervals.push(Interval { lo, hi });
        if done {
            break;
        }
        k += 2;
    }
    set
}

pub fn random_quadratic(r: &mut ChaCha8Rng) -> Quadratic {
    match r.gen_range(0..4) {
        // rational roots, often inside the sampled intervals
        0 | 1 => {
            let (x, y) = (
                ratio(r.gen_range(-4..=12), r.gen_range(1..=2)),
                ratio(r.gen_range(-4..=12), r.gen_range(1..=2)),
            );
            let k = small(r, 3);
            let a = if r.gen_bool(0.15) { rat(0) } else { k.clone() };
            if a.is_zero() {
                Quadratic::new(rat(0), k.clone(), -(k * x))
            } else {
                Quadratic::new(a.clone(), -(&a * (&x + &y)), a * x * y)
            }
        }
        2 => Quadratic::new(small(r, 5), small(r, 9), small(r, 9)),
        _ => {
            let zero = |r: &mut ChaCha8Rng| if r.gen_bool(0.5) { rat(0) } else { small(r, 4) };
            Quadratic::new(zero(r), zero(r), zero(r))
        }
    }
}

/// Solves the two equations through their least-squares candidate and
/// checks the remaining conditions exactly.
pub fn q0_oracle(v: &[Rational; 8]) -> bool {
    let [p00, q00, p10, q10, p01, q01, p11, q11] = v.clone();
    let h = |d: &Rational| (&p10 - &q00 * d) * (-&q11 - &p01 * d);
    let denom = &p00 * &p00 + &q01 * &q01;
    if !denom.is_zero() {
        let d = (&p11 * &q01 - &p00 * &q10) / denom;
        let solves = (&p00 * &d + &q10).is_zero() && (&p11 - &q01 * &d).is_zero();
        return !(solves && d.is_positive() && h(&d).is_positive());
    }
    if !q10.is_zero() || !p11.is_zero() {
        return true;
    }
    // both equations vanish identically; search the inequality directly
    let mut probes = vec![rat(1), rat(1000)];
    for root in [
        (!q00.is_zero()).then(|| &p10 / &q00),
        (!p01.is_zero()).then(|| -&q11 / &p01),
    ]
    .into_iter()
    .flatten()
    {
        for eps in [ratio(1, 1000), ratio(-1, 1000)] {
            probes.push(&root + eps);
        }
    }
    !probes.iter().any(|d| d.is_positive() && h(d).is_positive())
}

/// Common zero of the two quadratics on a grid that contains every root the
/// generator can produce.
pub fn grid_common_zero(
    f00: &Rational,
    f01: &Rational,
    f10: &Rational,
    f11: &Rational,
    g0: &Rational,
    g1: &Rational,
) -> bool {
    let two = rat(2);
    (1..=12 * 40).map(|k| ratio(k, 12)).any(|d| {
        (f00 * &d * &d + &two * g0 * &d + f10).is_zero()
            && (f01 * &d * &d + &two * g1 * &d + f11).is_zero()
    })
}

/// Random inputs to the `Q₀ = 0` system; most instances make both equations
/// share a root so that the inequality is actually exercised.
pub fn q0_instance(r: &mut ChaCha8Rng) -> [Rational; 8] {
    let mut v: [Rational; 8] = std::array::from_fn(|_| {
        if r.gen_bool(0.25) {
            rat(0)
        } else {
            ratio(r.gen_range(-4..=4), r.gen_range(1..=2))
        }
    });
    if r.gen_bool(0.6) {
        let d0 = ratio(r.gen_range(-3..=6), r.gen_range(1..=3));
        v[3] = -(&v[0] * &d0);
        v[6] = &v[5] * &d0;
    }
    v
}

/// Inputs `(F00, F01, F10, F11, F(00,10), F(01,11), G(00,10), G(01,11))`
/// whose positive roots all lie on the grid of [`degenerate_oracle`].
/// Every fifth instance is unstructured.
pub fn degenerate_instance(r: &mut ChaCha8Rng, k: usize) -> [Rational; 8] {
    let pick = |r: &mut ChaCha8Rng| {
        if r.gen_bool(0.2) {
            0
        } else {
            r.gen_range(-4i64..=4)
        }
    };
    if k % 5 == 4 {
        let quad = |r: &mut ChaCha8Rng| {
            let (x, y) = (
                ratio(r.gen_range(-6..=24), 4),
                ratio(r.gen_range(-6..=24), 4),
            );
            let a = rat(pick(r));
            (a.clone(), -(&a * (&x + &y)) / rat(2), a * x * y)
        };
        let (f00, g0, f10) = quad(r);
        let (f01, g1, f11) = if r.gen_bool(0.5) {
            (&f00 * rat(2), &g0 * rat(2), &f10 * rat(2))
        } else {
            quad(r)
        };
        return [f00, f01, f10, f11, rat(7), rat(7), g0, g1];
    }
    // each quadratic is |(p d + q') + i(q d − p')|²
    let pair = |r: &mut ChaCha8Rng, d0: &Rational| {
        let (p0, q0) = (rat(pick(r)), rat(pick(r)));
        let (p1, q1) = if r.gen_bool(0.6) {
            (&q0 * d0, -(&p0 * d0))
        } else {
            (rat(pick(r)), rat(pick(r)))
        };
        (
            &p0 * &p0 + &q0 * &q0,
            &p1 * &p1 + &q1 * &q1,
            &p0 * &p1 + &q0 * &q1,
            &p0 * &q1 - &q0 * &p1,
        )
    };
    let d0 = ratio(r.gen_range(1..=24), 3);
    let d1 = if r.gen_bool(0.5) {
        d0.clone()
    } else {
        ratio(r.gen_range(1..=24), 3)
    };
    let (f00, f10, c0, g0) = pair(r, &d0);
    let (f01, f11, c1, g1) = pair(r, &d1);
    [f00, f01, f10, f11, c0, c1, g0, g1]
}

/// `true` when the two quadratics have no common zero on the grid.
pub fn degenerate_oracle(v: &[Rational; 8]) -> bool {
    !grid_common_zero(&v[0], &v[1], &v[2], &v[3], &v[6], &v[7])
}
