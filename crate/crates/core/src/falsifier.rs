//! Randomized disproof of D-stability.
//!
//! Samples positive diagonal matrices `D` and looks for an eigenvalue of
//! `DA` with nonpositive real part. A hit from the floating-point search is
//! only reported after the rationalized `DA` fails the exact Routh–Hurwitz
//! test, so every counterexample is a proof. No hit proves nothing.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{from_f64, Rational};

/// Relative slack below which a floating-point margin counts as a candidate.
pub const MARGIN_GUARD: f64 = 1e-9;

/// Probes over all subsets are generated up to this dimension.
const SUBSET_PROBE_MAX_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagonalSample {
    pub d: Vec<f64>,
    pub seed: u64,
    pub trial: usize,
    /// `true` for the deterministic probes that precede random draws.
    pub probe: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub re: f64,
    pub im: f64,
}

/// A positive diagonal `D` for which `DA` is not positive stable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub sample: DiagonalSample,
    pub eigenvalue: Eigenvalue,
    /// Smallest real part among the eigenvalues of `DA`.
    pub margin: f64,
    /// The sample's entries as exact rationals, as used for verification.
    pub exact_d: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FalsifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub lo: f64,
    pub hi: f64,
}

impl Default for FalsifyConfig {
    fn default() -> Self {
        FalsifyConfig {
            trials: 10_000,
            seed: 0,
            lo: 1e-3,
            hi: 1e3,
        }
    }
}

fn to_dmatrix(a: &Matrix) -> DMatrix<f64> {
    let n = a.dim();
    let rows = a.to_f64_rows();
    DMatrix::from_fn(n, n, |i, j| rows[i][j])
}

fn eigenvalues(m: DMatrix<f64>) -> Option<Vec<Complex<f64>>> {
    Schur::try_new(m, f64::EPSILON, 10_000)
        .map(|s| s.complex_eigenvalues().iter().copied().collect())
}

/// Eigenvalue of `DA` with the smallest real part.
pub fn spectral_margin(a: &Matrix, d: &[f64]) -> Result<Complex<f64>> {
    margin_of(&to_dmatrix(a), d)
}

fn margin_of(a: &DMatrix<f64>, d: &[f64]) -> Result<Complex<f64>> {
    let da = DMatrix::from_fn(a.nrows(), a.ncols(), |i, j| d[i] * a[(i, j)]);
    let eig = eigenvalues(da.clone()).or_else(|| {
        // nudge off a non-convergent configuration
        let scale = da.amax().max(1.0) * 1e-12;
        let jitter = DMatrix::from_fn(da.nrows(), da.ncols(), |i, j| {
            scale * ((i * 7 + j * 13) % 5) as f64
        });
        eigenvalues(da + jitter)
    });
    eig.ok_or(Error::Eigensolver)?
        .into_iter()
        .min_by(|x, y| x.re.total_cmp(&y.re))
        .ok_or(Error::Empty)
}

/// `|det(A + iD)|²` in floating point.
pub fn johnson_f(a: &Matrix, d: &[f64]) -> f64 {
    let n = a.dim();
    let rows = a.to_f64_rows();
    let m = DMatrix::from_fn(n, n, |i, j| {
        Complex::new(rows[i][j], if i == j { d[i] } else { 0.0 })
    });
    m.determinant().norm_sqr()
}

/// `|det(A + iD)|²` computed exactly by Gaussian elimination over the
/// Gaussian rationals.
pub fn johnson_f_exact(a: &Matrix, d: &[Rational]) -> Rational {
    let n = a.dim();
    let mut m: Vec<Vec<Complex<Rational>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let im = if i == j {
                        d[i].clone()
                    } else {
                        Rational::zero()
                    };
                    Complex::new(a.get(i, j).clone(), im)
                })
                .collect()
        })
        .collect();
    let mut det = Complex::new(Rational::one(), Rational::zero());
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let inv = Complex::new(Rational::one(), Rational::zero()) / m[col][col].clone();
        det *= m[col][col].clone();
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let factor = row[col].clone() * inv.clone();
            if factor.is_zero() {
                continue;
            }
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
    }
    det.norm_sqr()
}

fn probes(n: usize, lo: f64, hi: f64) -> Vec<Vec<f64>> {
    let clamp = |x: f64| x.clamp(lo, hi);
    let mut out = vec![vec![clamp(1.0); n]];
    if n <= SUBSET_PROBE_MAX_DIM {
        // a negative principal minor on a subset shows up once that subset dominates
        for mask in 1u32..(1 << n) - 1 {
            out.push(
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { hi } else { clamp(1.0) })
                    .collect(),
            );
        }
    }
    for k in [1, -1, 2, -2, 3, -3] {
        for i in 0..n {
            let mut d = vec![clamp(1.0); n];
            d[i] = clamp(10f64.powi(k));
            out.push(d);
        }
    }
    out
}

fn random_sample(n: usize, cfg: &FalsifyConfig, trial: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial as u64);
    let (a, b) = (cfg.lo.ln(), cfg.hi.ln());
    (0..n).map(|_| rng.gen_range(a..b).exp()).collect()
}

fn verify(a: &Matrix, d: &[f64]) -> Result<Option<Vec<Rational>>> {
    let exact = d.iter().map(|&x| from_f64(x)).collect::<Result<Vec<_>>>()?;
    Ok((!a.scale_rows(&exact).is_positive_stable()).then_some(exact))
}

/// Searches `cfg.trials` positive diagonals (deterministic probes first,
/// then log-uniform draws on `[lo, hi]`) for one that destabilizes `DA`.
/// The result depends only on `a` and `cfg`.
pub fn falsify(a: &Matrix, cfg: &FalsifyConfig) -> Result<Option<Counterexample>> {
    if !(cfg.lo > 0.0 && cfg.lo < cfg.hi && cfg.hi.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "sampling range ({}, {}) must satisfy 0 < lo < hi",
            cfg.lo, cfg.hi
        )));
    }
    let n = a.dim();
    let af = to_dmatrix(a);
    let probes = probes(n, cfg.lo, cfg.hi);
    let attempt = |trial: usize| -> Option<Result<Counterexample>> {
        let (d, probe) = match probes.get(trial) {
            Some(p) => (p.clone(), true),
            None => (random_sample(n, cfg, trial), false),
        };
        let lambda = match margin_of(&af, &d) {
            Ok(l) => l,
            Err(e) => return Some(Err(e)),
        };
        let scale = d.iter().cloned().fold(0.0, f64::max) * af.amax().max(1.0);
        if lambda.re > MARGIN_GUARD * scale {
            return None;
        }
        match verify(a, &d) {
            Ok(Some(exact)) => Some(Ok(Counterexample {
                sample: DiagonalSample {
                    d,
                    seed: cfg.seed,
                    trial,
                    probe,
                },
                eigenvalue: Eigenvalue {
                    re: lambda.re,
                    im: lambda.im,
                },
                margin: lambda.re,
                exact_d: exact.iter().map(|x| x.to_string()).collect(),
            })),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    };
    (0..cfg.trials)
        .into_par_iter()
        .find_map_first(attempt)
        .transpose()
}
