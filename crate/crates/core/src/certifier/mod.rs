//! Sufficient certificates of D-stability.

pub mod exact;
pub mod hierarchy;
pub mod quadratic;
pub mod tree;
pub mod univariate;

pub use exact::{exact_second_step, SecondStep};
pub use hierarchy::{
    refine, run_test, HierarchyOutcome, NodeReport, NodeStatus, RefinementAttempt, RefinementTrace,
    Route, TestKind, TestSelection,
};
pub use quadratic::{
    degenerate_step2, quadratic_zero_location, region_s, step2_nondegenerate, step2_q0_system,
    Bound, Interval, IntervalSet, Quadratic, Surd, Zeros,
};
pub use tree::{
    coeff_tree_via_pairs, level_variable, seed_poly, symbolic_tree, CoeffTree, FgExpr, FgKind,
    Seed, TernaryPath,
};
pub use univariate::positive_on_half_line;

use crate::poly::SignClass;
use crate::recursion::PairFG;

/// Which depth-one sign pattern settles the question immediately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step1 {
    /// `F(0,1)` has nonnegative coefficients with one positive.
    F,
    /// `G(0,1)` has nonnegative coefficients with one positive.
    G,
}

/// Coefficient-sign certificate on the depth-one pair polynomials.
pub fn step1_sufficient(seeds: &PairFG) -> Option<Step1> {
    if seeds.f.coeffwise_sign() == SignClass::NonnegStrict {
        Some(Step1::F)
    } else if seeds.g.coeffwise_sign() == SignClass::NonnegStrict {
        Some(Step1::G)
    } else {
        None
    }
}
