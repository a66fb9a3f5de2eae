//! Tests I and II: sign certification of coefficient trees, with optional
//! discriminant refinement for nodes in at most two variables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::tree::{level_variable, Seed, TernaryPath};
use super::univariate::{nonneg_or_zero, positive_on_half_line};
use crate::error::{Error, Result};
use crate::poly::{Poly, SignClass};
use crate::rational::rat;

/// The two branched tests. Test I grows the tree from `F(0,1)`, Test II
/// from `G(0,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TestKind {
    I,
    II,
}

impl TestKind {
    pub fn seed(self) -> Seed {
        match self {
            TestKind::I => Seed::F01,
            TestKind::II => Seed::G01,
        }
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TestKind::I => "I",
            TestKind::II => "II",
        })
    }
}

/// Which tests a run may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TestSelection {
    I,
    II,
    Both,
}

impl TestSelection {
    pub fn kinds(self) -> &'static [TestKind] {
        match self {
            TestSelection::I => &[TestKind::I],
            TestSelection::II => &[TestKind::II],
            TestSelection::Both => &[TestKind::I, TestKind::II],
        }
    }
}

impl FromStr for TestSelection {
    type Err = Error;
    fn from_str(s: &str) -> Result<TestSelection> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(TestSelection::I),
            "ii" | "2" => Ok(TestSelection::II),
            "both" => Ok(TestSelection::Both),
            _ => Err(Error::InvalidConfig(format!("unknown test {s:?}"))),
        }
    }
}

/// Outcome of certifying one tree node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeStatus {
    /// Strictly positive on the open orthant.
    Strict,
    /// Identically zero, or nonnegative via children none of which is strict.
    Nonneg,
    Failed,
}

/// How a node's status was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    Coefficients,
    Refinement,
    Children,
    /// Sign pattern fails and no deeper level or refinement applies.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeReport {
    pub path: String,
    pub level: usize,
    pub variables: usize,
    pub sign: SignClass,
    pub status: NodeStatus,
    pub route: Route,
    pub poly: Poly,
}

/// One attempt to certify `a x² + b x + c > 0` for a chosen variable `x`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinementAttempt {
    pub variable: usize,
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub b_squared: Poly,
    pub four_ac: Poly,
    /// `b² − 4ac`; the refinement needs it negative.
    pub discriminant: Poly,
    /// What established positivity, if anything.
    pub certified_by: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinementTrace {
    pub path: String,
    pub poly: Poly,
    pub attempts: Vec<RefinementAttempt>,
    pub certified: bool,
}

/// Result of running one test at one depth.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HierarchyOutcome {
    pub test: TestKind,
    pub depth: usize,
    pub certified: bool,
    pub nodes: Vec<NodeReport>,
    pub refinements: Vec<RefinementTrace>,
}

fn attempt(poly: &Poly, var: usize) -> Result<RefinementAttempt> {
    let (c, b, a) = poly.collect(var)?;
    let b_squared = &b * &b;
    let four_ac = (&a * &c).scale(&rat(4));
    let discriminant = &b_squared - &four_ac;
    let certified_by = if poly.variables().len() <= 1 {
        positive_on_half_line(poly).then(|| "sturm".to_string())
    } else if a.is_zero() {
        (nonneg_or_zero(&b) && positive_on_half_line(&c)).then(|| "linear".to_string())
    } else if positive_on_half_line(&a) && nonneg_or_zero(&b) && positive_on_half_line(&c) {
        Some("positive-coefficients".to_string())
    } else if positive_on_half_line(&a) && positive_on_half_line(&-&discriminant) {
        Some("discriminant".to_string())
    } else {
        None
    };
    Ok(RefinementAttempt {
        variable: var,
        a,
        b,
        c,
        b_squared,
        four_ac,
        discriminant,
        certified_by,
    })
}

/// Tries to prove `poly > 0` on the open orthant for a polynomial in at
/// most two variables, choosing each variable as the quadratic one in turn
/// (highest index first).
pub fn refine(path: &TernaryPath, poly: &Poly) -> Result<RefinementTrace> {
    let mut vars = poly.variables();
    vars.reverse();
    let mut attempts = Vec::new();
    for var in vars {
        let a = attempt(poly, var)?;
        let done = a.certified_by.is_some();
        attempts.push(a);
        if done {
            break;
        }
    }
    let certified = attempts.iter().any(|a| a.certified_by.is_some());
    Ok(RefinementTrace {
        path: path.to_string(),
        poly: poly.clone(),
        attempts,
        certified,
    })
}

struct Walker {
    n: usize,
    depth: usize,
    refine: bool,
    nodes: Vec<NodeReport>,
    refinements: Vec<RefinementTrace>,
}

impl Walker {
    fn visit(&mut self, path: TernaryPath, poly: Poly) -> Result<NodeStatus> {
        let sign = poly.coeffwise_sign();
        let variables = poly.variables().len();
        let (status, route) = match sign {
            SignClass::NonnegStrict => (NodeStatus::Strict, Route::Coefficients),
            SignClass::IdenticallyZero => (NodeStatus::Nonneg, Route::Coefficients),
            SignClass::NonposStrict | SignClass::Mixed => self.descend(&path, &poly, variables)?,
        };
        self.nodes.push(NodeReport {
            path: path.to_string(),
            level: path.level(),
            variables,
            sign,
            status,
            route,
            poly,
        });
        Ok(status)
    }

    fn descend(
        &mut self,
        path: &TernaryPath,
        poly: &Poly,
        variables: usize,
    ) -> Result<(NodeStatus, Route)> {
        if self.refine && variables <= 2 && variables > 0 {
            let trace = refine(path, poly)?;
            let ok = trace.certified;
            self.refinements.push(trace);
            if ok {
                return Ok((NodeStatus::Strict, Route::Refinement));
            }
        }
        if path.level() >= self.depth {
            return Ok((NodeStatus::Failed, Route::Exhausted));
        }
        let var = level_variable(self.n, path.level() + 1);
        let (c0, c1, c2) = poly.collect(var)?;
        let mut strict = false;
        for (k, child) in [(1u8, c2), (2, c1), (3, c0)] {
            match self.visit(path.child(k), child)? {
                NodeStatus::Failed => return Ok((NodeStatus::Failed, Route::Children)),
                NodeStatus::Strict => strict = true,
                NodeStatus::Nonneg => {}
            }
        }
        let status = if strict {
            NodeStatus::Strict
        } else {
            NodeStatus::Nonneg
        };
        Ok((status, Route::Children))
    }
}

/// Runs one test on its seed polynomial. A node certifies when its
/// coefficients are all nonnegative, when refinement proves it positive, or
/// when all three of its children certify; the tree is certified when the
/// root certifies with strict positivity somewhere below it.
pub fn run_test(
    seed_poly: &Poly,
    test: TestKind,
    n: usize,
    depth: usize,
    refine: bool,
) -> Result<HierarchyOutcome> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    if depth > n - 2 {
        return Err(Error::DepthOutOfRange { depth, max: n - 2 });
    }
    let mut walker = Walker {
        n,
        depth,
        refine,
        nodes: Vec::new(),
        refinements: Vec::new(),
    };
    let status = walker.visit(TernaryPath::root(), seed_poly.clone())?;
    let mut nodes = walker.nodes;
    nodes.sort_by(|a, b| (a.level, &a.path).cmp(&(b.level, &b.path)));
    let mut refinements = walker.refinements;
    refinements.sort_by(|a, b| (a.path.len(), &a.path).cmp(&(b.path.len(), &b.path)));
    Ok(HierarchyOutcome {
        test,
        depth,
        certified: status == NodeStatus::Strict,
        nodes,
        refinements,
    })
}
