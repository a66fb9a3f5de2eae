//! Plain-text rendering of reports.

use std::fmt::Write;

use dstab_core::certifier::{NodeStatus, TestSelection};
use dstab_core::harness::ExperimentStats;
use dstab_core::report::{Method, TestReport};

pub fn report(r: &TestReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "verdict: {}", r.verdict);
    if let Some(method) = r.method {
        let detail = match (method, r.test, r.depth) {
            (Method::Hierarchy, Some(t), Some(d)) => format!("Test {t} at depth {d}"),
            (Method::Step1F, ..) => "F(0,1) has nonnegative coefficients".to_string(),
            (Method::Step1G, ..) => "G(0,1) has nonnegative coefficients".to_string(),
            (Method::Scalar, ..) => "positive 1x1 matrix".to_string(),
            (Method::SecondStep, ..) => "exact 2x2 second step".to_string(),
            _ => String::new(),
        };
        let _ = writeln!(out, "certificate: {detail}");
    }
    if let Some(perm) = r
        .permutation
        .as_ref()
        .filter(|p| p.iter().enumerate().any(|(i, &j)| i != j))
    {
        let one_based: Vec<String> = perm.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "permutation: {}", one_based.join(" "));
    }
    if let Some(class) = r.p_class {
        let _ = writeln!(out, "principal minors: {class:?}");
    }
    if !r.attempts.is_empty() {
        let _ = writeln!(out, "attempts:");
        for a in &r.attempts {
            let mark = if a.certified { "certified" } else { "no" };
            let _ = writeln!(out, "  Test {} depth {}: {mark}", a.test, a.depth);
        }
    }
    if !r.nodes.is_empty() {
        let _ = writeln!(out, "nodes:");
        for node in &r.nodes {
            let status = match node.status {
                NodeStatus::Strict => "strict",
                NodeStatus::Nonneg => "nonneg",
                NodeStatus::Failed => "failed",
            };
            let _ = writeln!(
                out,
                "  c[{}] vars={} sign={:?} {status} via {:?}: {}",
                node.path, node.variables, node.sign, node.route, node.poly
            );
        }
    }
    if !r.refinements.is_empty() {
        let _ = writeln!(out, "refinements:");
        for t in &r.refinements {
            let _ = writeln!(out, "  c[{}] = {}", t.path, t.poly);
            for a in &t.attempts {
                let _ = writeln!(
                    out,
                    "    in d{}: a = {}; b = {}; c = {}; b^2 = {}; 4ac = {}; b^2 - 4ac = {} => {}",
                    a.variable,
                    a.a,
                    a.b,
                    a.c,
                    a.b_squared,
                    a.four_ac,
                    a.discriminant,
                    a.certified_by.as_deref().unwrap_or("not certified")
                );
            }
        }
    }
    if let Some(s) = &r.second_step {
        let _ = writeln!(
            out,
            "second step: nondegenerate={} q0-system={} degenerate={}",
            s.nondegenerate, s.q0_system, s.degenerate
        );
    }
    if let Some(cx) = &r.counterexample {
        let d: Vec<String> = cx.sample.d.iter().map(|x| format!("{x:e}")).collect();
        let _ = writeln!(
            out,
            "counterexample: d = [{}], eigenvalue {:e} {:+e}i (trial {})",
            d.join(", "),
            cx.eigenvalue.re,
            cx.eigenvalue.im,
            cx.sample.trial
        );
    }
    out
}

pub fn experiment(s: &ExperimentStats) -> String {
    let test = match s.test {
        TestSelection::I => "I",
        TestSelection::II => "II",
        TestSelection::Both => "I+II",
    };
    format!(
        "n = {}, trials = {}, seed = {}\n\
         generator: {}\n\
         test {} at depth {}{}\n\
         certified {}, inconclusive {}, failed necessary {}, falsified {}\n\
         hit rate {:.3e} (95% Wilson [{:.3e}, {:.3e}])\n\
         wall time {:.2} s\n",
        s.n,
        s.trials,
        s.seed,
        s.generator,
        test,
        s.depth,
        if s.refine { " with refinement" } else { "" },
        s.counts.certified,
        s.counts.inconclusive,
        s.counts.failed_necessary,
        s.counts.falsified,
        s.hit_rate,
        s.wilson_low,
        s.wilson_high,
        s.wall_seconds
    )
}
