//! The ordered check pipeline: cheap exact filters first, then the
//! falsifier, then certificates of increasing cost.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certifier::{
    exact_second_step, run_test, step1_sufficient, Step1, TestKind, TestSelection,
};
use crate::error::{Error, Result};
use crate::falsifier::{falsify, FalsifyConfig};
use crate::matrix::{necessary_filter, Matrix, MinorTable, PClass, DEFAULT_MINOR_CAP};
use crate::recursion::{seed_pair, DetTree};
use crate::report::{Attempt, Method, TestReport, Verdict};

/// Environment variable overriding the principal-minor enumeration cap.
pub const MINOR_CAP_ENV: &str = "DSTAB_MINOR_CAP";

pub fn minor_cap_from_env() -> Result<usize> {
    match std::env::var(MINOR_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("{MINOR_CAP_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MINOR_CAP),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DepthChoice {
    Fixed(usize),
    /// Every depth from 0 to `n − 2`, stopping at the first certificate.
    Auto,
}

impl FromStr for DepthChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<DepthChoice> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(DepthChoice::Auto);
        }
        s.parse().map(DepthChoice::Fixed).map_err(|_| {
            Error::InvalidConfig(format!("depth must be a number or 'auto', got {s:?}"))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub test: TestSelection,
    pub depth: DepthChoice,
    pub refine: bool,
    /// Extra attempts on random simultaneous row/column permutations.
    pub permutations: usize,
    pub falsify: Option<FalsifyConfig>,
    /// Seed for the permutation draws.
    pub seed: u64,
    pub minor_cap: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            test: TestSelection::Both,
            depth: DepthChoice::Auto,
            refine: false,
            permutations: 0,
            falsify: None,
            seed: 0,
            minor_cap: DEFAULT_MINOR_CAP,
        }
    }
}

fn depths(n: usize, choice: DepthChoice) -> Result<Vec<usize>> {
    let max = n.saturating_sub(2);
    match choice {
        DepthChoice::Auto => Ok((0..=max).collect()),
        DepthChoice::Fixed(d) if d <= max => Ok(vec![d]),
        DepthChoice::Fixed(d) => Err(Error::DepthOutOfRange { depth: d, max }),
    }
}

fn permutation(n: usize, seed: u64, round: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    if round > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(round as u64);
        perm.shuffle(&mut rng);
    }
    perm
}

fn falsified(report: &mut TestReport, a: &Matrix, cfg: &CheckConfig) -> Result<bool> {
    if let Some(fc) = &cfg.falsify {
        if let Some(cx) = falsify(a, fc)? {
            report.verdict = Verdict::Falsified;
            report.counterexample = Some(cx);
            return Ok(true);
        }
    }
    Ok(false)
}

/// Runs the full pipeline on `a`: stability, the P₀⁺ filter, the optional
/// falsifier, depth-one sign certificates, Tests I/II over the requested
/// depths and permutations, and for 2×2 matrices the exact second step.
/// The first decisive stage determines the verdict.
pub fn check(a: &Matrix, cfg: &CheckConfig) -> Result<TestReport> {
    let n = a.dim();
    let depth_list = depths(n, cfg.depth)?;
    let mut report = TestReport::new(n, Verdict::Inconclusive);
    if !a.is_positive_stable() {
        report.verdict = Verdict::NotStable;
        return Ok(report);
    }
    let minors = a.all_principal_minors(cfg.minor_cap)?;
    report.p_class = Some(PClass::of(&minors));
    if !necessary_filter(&minors) {
        report.verdict = Verdict::FailedNecessary;
        falsified(&mut report, a, cfg)?;
        return Ok(report);
    }
    if falsified(&mut report, a, cfg)? {
        return Ok(report);
    }
    if n == 1 {
        report.verdict = Verdict::Certified;
        report.method = Some(Method::Scalar);
        return Ok(report);
    }
    certify(a, &minors, &depth_list, cfg, &mut report)?;
    if report.verdict != Verdict::Certified && n == 2 {
        let step = exact_second_step(&minors)?;
        report.second_step = Some(step);
        if step.holds() {
            report.verdict = Verdict::Certified;
            report.method = Some(Method::SecondStep);
        }
    }
    Ok(report)
}

fn certify(
    a: &Matrix,
    minors: &MinorTable,
    depth_list: &[usize],
    cfg: &CheckConfig,
    report: &mut TestReport,
) -> Result<()> {
    let n = a.dim();
    let kinds = cfg.test.kinds();
    for round in 0..=cfg.permutations {
        let perm = permutation(n, cfg.seed, round);
        let permuted_minors;
        let minors = if round == 0 {
            minors
        } else {
            permuted_minors = a.permuted(&perm).all_principal_minors(cfg.minor_cap)?;
            &permuted_minors
        };
        let seeds = seed_pair(&DetTree::from_minors(minors, 1)?)?;
        let step1 = match step1_sufficient(&seeds) {
            Some(Step1::F) if kinds.contains(&TestKind::I) => Some((Method::Step1F, TestKind::I)),
            Some(Step1::G) if kinds.contains(&TestKind::II) => Some((Method::Step1G, TestKind::II)),
            _ => None,
        };
        if let Some((method, test)) = step1 {
            report.verdict = Verdict::Certified;
            report.method = Some(method);
            report.test = Some(test);
            report.depth = Some(0);
            report.permutation = Some(perm);
            return Ok(());
        }
        for &depth in depth_list {
            for &kind in kinds {
                let poly = match kind {
                    TestKind::I => &seeds.f,
                    TestKind::II => &seeds.g,
                };
                let outcome = run_test(poly, kind, n, depth, cfg.refine)?;
                report.attempts.push(Attempt {
                    test: kind,
                    depth,
                    permutation: perm.clone(),
                    certified: outcome.certified,
                });
                report.nodes = outcome.nodes;
                report.refinements = outcome.refinements;
                if outcome.certified {
                    report.verdict = Verdict::Certified;
                    report.method = Some(Method::Hierarchy);
                    report.test = Some(kind);
                    report.depth = Some(depth);
                    report.permutation = Some(perm);
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}
