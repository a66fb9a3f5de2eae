//! Random-ensemble experiments: how often does a test certify a random
//! stable matrix?

use std::time::Instant;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generator::{random_stable_matrix, GeneratorStyle};
use super::pipeline::{check, CheckConfig, DepthChoice};
use crate::certifier::TestSelection;
use crate::error::{Error, Result};
use crate::matrix::DEFAULT_MINOR_CAP;
use crate::report::{Verdict, SCHEMA};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub style: GeneratorStyle,
    pub test: TestSelection,
    /// Defaults to the deepest level `n − 2`.
    pub depth: Option<usize>,
    pub refine: bool,
    pub minor_cap: usize,
}

impl ExperimentConfig {
    pub fn new(n: usize, trials: usize, seed: u64) -> ExperimentConfig {
        ExperimentConfig {
            n,
            trials,
            seed,
            style: GeneratorStyle::default(),
            test: TestSelection::I,
            depth: None,
            refine: false,
            minor_cap: DEFAULT_MINOR_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub certified: usize,
    pub inconclusive: usize,
    pub failed_necessary: usize,
    pub falsified: usize,
}

impl VerdictCounts {
    pub fn total(&self) -> usize {
        self.certified + self.inconclusive + self.failed_necessary + self.falsified
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentStats {
    pub schema: String,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Rendered generator style, so the ensemble is recorded with the result.
    pub generator: String,
    pub test: TestSelection,
    pub depth: usize,
    pub refine: bool,
    pub counts: VerdictCounts,
    /// Fraction of trials certified.
    pub hit_rate: f64,
    /// 95% Wilson score interval for the hit rate.
    pub wilson_low: f64,
    pub wilson_high: f64,
    pub wall_seconds: f64,
}

/// Wilson score interval for `successes` out of `trials` at normal quantile `z`.
pub fn wilson_interval(successes: usize, trials: usize, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let center = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z / (1.0 + z2 / n) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Seed of the matrix used in trial `index`.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng.next_u64()
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentStats> {
    if cfg.n < 2 {
        return Err(Error::DimensionTooSmall { n: cfg.n, min: 2 });
    }
    if cfg.n > cfg.minor_cap {
        return Err(Error::CapExceeded {
            n: cfg.n,
            cap: cfg.minor_cap,
        });
    }
    let depth = cfg.depth.unwrap_or(cfg.n - 2);
    let check_cfg = CheckConfig {
        test: cfg.test,
        depth: DepthChoice::Fixed(depth),
        refine: cfg.refine,
        minor_cap: cfg.minor_cap,
        ..CheckConfig::default()
    };
    let start = Instant::now();
    let verdicts = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let a = random_stable_matrix(cfg.n, trial_seed(cfg.seed, i), &cfg.style)?;
            Ok(check(&a, &check_cfg)?.verdict)
        })
        .collect::<Result<Vec<Verdict>>>()?;
    let mut counts = VerdictCounts::default();
    for v in verdicts {
        match v {
            Verdict::Certified => counts.certified += 1,
            Verdict::Inconclusive => counts.inconclusive += 1,
            Verdict::FailedNecessary => counts.failed_necessary += 1,
            Verdict::Falsified => counts.falsified += 1,
            Verdict::NotStable => unreachable!("generator only returns stable matrices"),
        }
    }
    let hit_rate = if cfg.trials == 0 {
        0.0
    } else {
        counts.certified as f64 / cfg.trials as f64
    };
    let (wilson_low, wilson_high) = wilson_interval(counts.certified, cfg.trials, 1.959964);
    Ok(ExperimentStats {
        schema: SCHEMA.to_string(),
        n: cfg.n,
        trials: cfg.trials,
        seed: cfg.seed,
        generator: cfg.style.to_string(),
        test: cfg.test,
        depth,
        refine: cfg.refine,
        counts,
        hit_rate,
        wilson_low,
        wilson_high,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}
