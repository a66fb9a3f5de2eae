//! Verdicts and the serializable report produced by a check.

use serde::{Deserialize, Serialize};

use crate::certifier::{NodeReport, RefinementTrace, SecondStep, TestKind};
use crate::falsifier::Counterexample;
use crate::matrix::PClass;

/// Version tag written into every JSON report.
pub const SCHEMA: &str = "dstab-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Certified,
    /// No certificate and no disproof. Never evidence of instability.
    Inconclusive,
    NotStable,
    FailedNecessary,
    Falsified,
}

impl Verdict {
    /// Process exit status for the command line.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Certified => 0,
            Verdict::NotStable | Verdict::FailedNecessary | Verdict::Falsified => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// The certificate that settled a `Certified` verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    /// A stable 1×1 matrix is a positive scalar.
    Scalar,
    Step1F,
    Step1G,
    Hierarchy,
    /// Constant-input decision for 2×2 matrices.
    SecondStep,
}

/// One run of a test at a given depth on a given simultaneous permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attempt {
    pub test: TestKind,
    pub depth: usize,
    /// `perm[i]` is the original index placed at position `i` (0-based).
    pub permutation: Vec<usize>,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub schema: String,
    pub n: usize,
    pub verdict: Verdict,
    pub method: Option<Method>,
    pub test: Option<TestKind>,
    pub depth: Option<usize>,
    pub permutation: Option<Vec<usize>>,
    pub p_class: Option<PClass>,
    pub attempts: Vec<Attempt>,
    /// Node classifications of the deciding (or last) hierarchy run.
    pub nodes: Vec<NodeReport>,
    pub refinements: Vec<RefinementTrace>,
    pub second_step: Option<SecondStep>,
    pub counterexample: Option<Counterexample>,
}

impl TestReport {
    pub fn new(n: usize, verdict: Verdict) -> TestReport {
        TestReport {
            schema: SCHEMA.to_string(),
            n,
            verdict,
            method: None,
            test: None,
            depth: None,
            permutation: None,
            p_class: None,
            attempts: Vec::new(),
            nodes: Vec::new(),
            refinements: Vec::new(),
            second_step: None,
            counterexample: None,
        }
    }
}
