//! Seeded generator of positive-stable test matrices.
//!
//! The default ensemble imitates hand-made examples of D-stable matrices:
//! a dominant positive diagonal of magnitude about 100 and Gaussian
//! off-diagonal noise, every entry rounded to two decimals so that the
//! matrix is exactly representable as rationals with denominator 100.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Parameters of the random ensemble. Rendered and parsed as
/// `lead=100,diag=20..120,sigma=30,budget=1000`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorStyle {
    /// Value of the first diagonal entry.
    pub lead: f64,
    /// Range of the remaining diagonal entries, drawn uniformly.
    pub diag_lo: f64,
    pub diag_hi: f64,
    /// Standard deviation of the off-diagonal entries.
    pub sigma: f64,
    /// Maximum number of draws before giving up on finding a stable matrix.
    pub budget: usize,
}

impl Default for GeneratorStyle {
    fn default() -> Self {
        GeneratorStyle {
            lead: 100.0,
            diag_lo: 20.0,
            diag_hi: 120.0,
            sigma: 30.0,
            budget: 1000,
        }
    }
}

impl fmt::Display for GeneratorStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lead={},diag={}..{},sigma={},budget={}",
            self.lead, self.diag_lo, self.diag_hi, self.sigma, self.budget
        )
    }
}

impl FromStr for GeneratorStyle {
    type Err = Error;

    /// Unspecified keys keep their defaults; `default` alone is accepted.
    fn from_str(s: &str) -> Result<GeneratorStyle> {
        let mut style = GeneratorStyle::default();
        let bad = |msg: String| Error::InvalidConfig(format!("generator style: {msg}"));
        for part in s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty() && *p != "default")
        {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {part:?}")))?;
            let num = |v: &str| {
                v.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| bad(format!("bad number {v:?}")))
            };
            match key.trim() {
                "lead" => style.lead = num(value)?,
                "sigma" => style.sigma = num(value)?,
                "budget" => {
                    style.budget = value
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("bad budget {value:?}")))?
                }
                "diag" => {
                    let (lo, hi) = value
                        .split_once("..")
                        .ok_or_else(|| bad(format!("diag expects lo..hi, got {value:?}")))?;
                    style.diag_lo = num(lo)?;
                    style.diag_hi = num(hi)?;
                }
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        if !(style.sigma >= 0.0 && style.diag_lo <= style.diag_hi && style.budget > 0) {
            return Err(bad(format!("inconsistent parameters {style}")));
        }
        Ok(style)
    }
}

fn cents(x: f64) -> Rational {
    Rational::new(BigInt::from((x * 100.0).round() as i64), BigInt::from(100))
}

/// Draws matrices from `style` until one is positive stable. The result is
/// a function of `(n, seed, style)` only.
pub fn random_stable_matrix(n: usize, seed: u64, style: &GeneratorStyle) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, style.sigma)
        .map_err(|e| Error::InvalidConfig(format!("generator style: {e}")))?;
    for _ in 0..style.budget {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let x = match (i, j) {
                            (0, 0) => style.lead,
                            _ if i == j => {
                                if style.diag_lo < style.diag_hi {
                                    rng.gen_range(style.diag_lo..style.diag_hi)
                                } else {
                                    style.diag_lo
                                }
                            }
                            _ => noise.sample(&mut rng),
                        };
                        cents(x)
                    })
                    .collect()
            })
            .collect();
        let a = Matrix::from_rows(rows)?;
        if a.is_positive_stable() {
            return Ok(a);
        }
    }
    Err(Error::RejectionBudget {
        attempts: style.budget,
    })
}
