//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Tolerances and time limits are the constants below.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::oracles::*;
use common::*;
use dstab_core::certifier::{
    degenerate_step2, quadratic_zero_location, region_s, step2_q0_system, CoeffTree, Seed,
    TestKind, TestSelection,
};
use dstab_core::falsifier::{falsify, johnson_f, johnson_f_exact, FalsifyConfig};
use dstab_core::harness::{
    check, expand_dump, run_experiment, CheckConfig, DepthChoice, ExperimentConfig,
};
use dstab_core::matrix::DEFAULT_MINOR_CAP;
use dstab_core::poly::{Monomial, Point};
use dstab_core::rational::{rat, to_f64};
use dstab_core::recursion::{
    combine, fg_pair, leaf_pair, node_det_direct, terminal_pair, DetTree, NodeLabel,
};
use dstab_core::report::Verdict;
use dstab_core::{IndexSet, Poly};
use rand::Rng;

const EXPANSION_LIMIT: Duration = Duration::from_secs(1);
const VERDICT_LIMIT: Duration = Duration::from_secs(5);
const PUBLISHED_LIMIT: Duration = Duration::from_secs(30);
const EXPERIMENT_LIMIT: Duration = Duration::from_secs(600);
const JOHNSON_FLOAT_REL_TOL: f64 = 1e-9;
const HIT_RATE_BAND: (f64, f64) = (1e-4, 1e-2);
const EXPERIMENT_SEED: u64 = 2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        match $cond {
            true => {}
            false => return Err(format!($($msg)*)),
        }
    };
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    ensure!(t < limit, "took {t:.2?}, limit {limit:?}");
    Ok(format!("{t:.2?}"))
}

fn golden_expansion() -> Outcome {
    let start = Instant::now();
    let dump = expand_dump(&worked_example(), 1, Seed::F01, DEFAULT_MINOR_CAP)
        .map_err(|e| e.to_string())?;
    let elapsed = within(start, EXPANSION_LIMIT)?;
    let coeff = |e: &[(usize, u32)]| dump.f01.coeff(&Monomial::from_exponents(e));
    for (mono, want) in [
        (vec![], 3),
        (vec![(4, 2)], 3),
        (vec![(1, 1), (2, 1)], -4),
        (vec![(3, 2)], 12),
        (vec![(1, 2), (2, 2), (3, 2), (4, 2)], 2),
    ] {
        ensure!(
            coeff(&mono) == rat(want),
            "coefficient of {mono:?} is {}",
            coeff(&mono)
        );
    }
    Ok(format!("{} terms, {elapsed}", dump.f01.num_terms()))
}

fn golden_tree() -> Outcome {
    let tree = CoeffTree::build(&worked_example(), Seed::F01, 2, DEFAULT_MINOR_CAP)
        .map_err(|e| e.to_string())?;
    let at = |s: &str| tree.get(&s.parse().unwrap()).unwrap().clone();
    ensure!(at("2").is_zero(), "c2 = {}", at("2"));
    ensure!(at("1") == at("3"), "c1 and c3 differ");
    for (path, want) in [
        ("21", "d1 + 4*d1*d2^2"),
        ("11", "12 - 8*d1*d2 + 8*d2^2 + 2*d1^2*d2^2"),
        ("31", "3 - 4*d1*d2 + 2*d2^2 + 2*d1^2*d2^2"),
    ] {
        ensure!(at(path) == p(want), "c{path} = {}", at(path));
    }
    Ok("c2 = 0, c1 = c3, c21 c11 c31 exact".into())
}

fn golden_verdict() -> Outcome {
    let start = Instant::now();
    let cfg = CheckConfig {
        test: TestSelection::I,
        depth: DepthChoice::Fixed(3),
        refine: true,
        ..CheckConfig::default()
    };
    let report = check(&worked_example(), &cfg).map_err(|e| e.to_string())?;
    let elapsed = within(start, VERDICT_LIMIT)?;
    ensure!(
        report.verdict == Verdict::Certified,
        "verdict {}",
        report.verdict
    );
    for (path, disc) in [("31", "-24 - 8*d1^2"), ("11", "-384 - 32*d1^2")] {
        let trace = report
            .refinements
            .iter()
            .find(|t| t.path == path)
            .ok_or(format!("no refinement of c{path}"))?;
        let hit = trace.attempts.iter().find(|a| a.certified_by.is_some());
        ensure!(
            trace.certified && hit.is_some_and(|a| a.discriminant == p(disc)),
            "c{path} not certified through discriminant {disc}"
        );
    }
    Ok(format!("Certified, {elapsed}"))
}

fn published() -> Outcome {
    let start = Instant::now();
    for (file, test, kind) in [
        ("test1_5x5.txt", TestSelection::I, TestKind::I),
        ("test2_5x5.txt", TestSelection::II, TestKind::II),
        ("test1_6x6.txt", TestSelection::I, TestKind::I),
    ] {
        let a = load(file);
        let cfg = CheckConfig {
            test,
            depth: DepthChoice::Fixed(a.dim() - 2),
            ..CheckConfig::default()
        };
        let report = check(&a, &cfg).map_err(|e| e.to_string())?;
        ensure!(
            report.verdict == Verdict::Certified && report.test == Some(kind),
            "{file}: {} by {:?}",
            report.verdict,
            report.test
        );
    }
    within(start, PUBLISHED_LIMIT)
}

fn oracle_equivalence() -> Outcome {
    let mut nodes = 0;
    for a in random_corpus() {
        let n = a.dim();
        let tree = DetTree::build(&a, n - 1, DEFAULT_MINOR_CAP).map_err(|e| e.to_string())?;
        let minors = a
            .all_principal_minors(DEFAULT_MINOR_CAP)
            .map_err(|e| e.to_string())?;
        for k in 0..n {
            for s in NodeLabel::all_of_length(k) {
                let direct = node_det_direct(&a, &s).map_err(|e| e.to_string())?;
                let got = tree.get(&s).unwrap();
                ensure!(got.p == direct.p && got.q == direct.q, "node {s} of\n{a}");
                nodes += 1;
            }
        }
        for s in NodeLabel::all_of_length(n - 1) {
            let leaf = leaf_pair(&minors, &s).map_err(|e| e.to_string())?;
            let alpha = s.kept(n);
            let with_one: Vec<usize> = std::iter::once(1).chain(alpha.iter().copied()).collect();
            let big = a
                .principal_minor(&IndexSet::new(with_one).unwrap())
                .unwrap();
            let small = a.principal_minor(&IndexSet::new(alpha).unwrap()).unwrap();
            ensure!(
                leaf.p == Poly::constant(big) && leaf.q == Poly::monomial(Monomial::var(1), small),
                "leaf {s}"
            );
            let merged = combine(
                n,
                &s,
                &terminal_pair(&minors, &s.child(0)).unwrap(),
                &terminal_pair(&minors, &s.child(1)).unwrap(),
            );
            ensure!(
                merged.p == leaf.p && merged.q == leaf.q,
                "leaf {s} vs terminals"
            );
        }
    }
    Ok(format!("{nodes} nodes exact"))
}

fn identities() -> Outcome {
    let mut checked = 0;
    for a in random_corpus() {
        let n = a.dim();
        let tree = DetTree::build(&a, n - 1, DEFAULT_MINOR_CAP).map_err(|e| e.to_string())?;
        let node = |s: &NodeLabel| tree.get(s).unwrap();
        let fg = |s: &NodeLabel, t: &NodeLabel| fg_pair(node(s), node(t)).unwrap();
        for k in 0..n - 1 {
            let d = Poly::var(n - k);
            let d2 = &d * &d;
            let labels = NodeLabel::all_of_length(k);
            for s in &labels {
                let (s0, s1) = (s.child(0), s.child(1));
                // det = i·d·det(deleted) + det(zeroed)
                let (here, del, zer) = (node(s), node(&s0), node(&s1));
                ensure!(here.p == &zer.p - &(&d * &del.q), "real split at {s}");
                ensure!(here.q == &zer.q + &(&d * &del.p), "imaginary split at {s}");
                let f = &(&(&d2 * &fg(&s0, &s0).f) + &(&d * &fg(&s0, &s1).g).scale(&rat(2)))
                    + &fg(&s1, &s1).f;
                ensure!(fg(s, s).f == f, "squared modulus at {s}");
                ensure!(fg(s, s).g.is_zero(), "G({s},{s}) nonzero");
                for t in labels.iter().take(4) {
                    let (t0, t1) = (t.child(0), t.child(1));
                    let st = fg(s, t);
                    let ts = fg(t, s);
                    ensure!(st.f == ts.f && st.g == -&ts.g, "symmetry at ({s},{t})");
                    let f_rhs = &(&(&d2 * &fg(&s0, &t0).f)
                        + &(&d * &(&fg(&s0, &t1).g - &fg(&s1, &t0).g)))
                        + &fg(&s1, &t1).f;
                    let g_rhs = &(&(&d2 * &fg(&s0, &t0).g)
                        + &(&d * &(&fg(&s1, &t0).f - &fg(&s0, &t1).f)))
                        + &fg(&s1, &t1).g;
                    ensure!(
                        st.f == f_rhs && st.g == g_rhs,
                        "pair recurrence at ({s},{t})"
                    );
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} pair recurrences exact"))
}

fn soundness() -> Outcome {
    let certified = certified_corpus();
    let cfg = FalsifyConfig {
        trials: 10_000,
        ..FalsifyConfig::default()
    };
    for (name, a) in &certified {
        ensure!(
            falsify(a, &cfg).map_err(|e| e.to_string())?.is_none(),
            "{name} falsified"
        );
    }
    let failing = failing_corpus();
    let cfg = FalsifyConfig {
        trials: 1000,
        ..FalsifyConfig::default()
    };
    for a in &failing {
        ensure!(
            falsify(a, &cfg).map_err(|e| e.to_string())?.is_some(),
            "not falsified:\n{a}"
        );
    }
    Ok(format!(
        "{} certified survive, {} failing falsified",
        certified.len(),
        failing.len()
    ))
}

fn johnson() -> Outcome {
    let mut r = rng(8);
    let mut worst = 0.0f64;
    for k in 0..100 {
        let n = 2 + k % 5;
        let a = random_rational_matrix(&mut r, n);
        let d = rational_point(&mut r, n);
        let tree = DetTree::build(&a, 0, DEFAULT_MINOR_CAP).map_err(|e| e.to_string())?;
        let at = Point::from_slice(&d);
        let pv = tree.root().p.evaluate(&at).unwrap();
        let qv = tree.root().q.evaluate(&at).unwrap();
        let exact = johnson_f_exact(&a, &d);
        ensure!(exact == &pv * &pv + &qv * &qv, "exact mismatch on pair {k}");
        let df: Vec<f64> = d.iter().map(to_f64).collect();
        let truth = to_f64(&exact);
        let rel = (johnson_f(&a, &df) - truth).abs() / truth.abs().max(f64::MIN_POSITIVE);
        worst = worst.max(if truth == 0.0 {
            johnson_f(&a, &df).abs()
        } else {
            rel
        });
    }
    ensure!(
        worst <= JOHNSON_FLOAT_REL_TOL,
        "float relative error {worst:e}"
    );
    Ok(format!("100 exact, worst float relative error {worst:.1e}"))
}

fn primitives() -> Outcome {
    let mut r = rng(101);
    for k in 0..1000 {
        let q = random_quadratic(&mut r);
        let s = if r.gen_bool(0.5) {
            random_interval_set(&mut r)
        } else {
            region_s(
                &small(&mut r, 4),
                &small(&mut r, 4),
                &small(&mut r, 4),
                &small(&mut r, 4),
            )
        };
        ensure!(
            quadratic_zero_location(&q, &s) == oracle_no_zero(&q, &s),
            "zero location instance {k}"
        );
    }
    let mut r = rng(303);
    for k in 0..1000 {
        let v = q0_instance(&mut r);
        let got = step2_q0_system(&v[0], &v[1], &v[2], &v[3], &v[4], &v[5], &v[6], &v[7]);
        ensure!(got == q0_oracle(&v), "Q0 system instance {k}");
    }
    let mut r = rng(404);
    for k in 0..500 {
        let v = degenerate_instance(&mut r, k);
        let got = degenerate_step2(&v[0], &v[1], &v[2], &v[3], &v[4], &v[5], &v[6], &v[7]);
        ensure!(got == degenerate_oracle(&v), "degenerate instance {k}");
    }
    Ok("1000 + 1000 + 500 instances exact".into())
}

fn hit_rates() -> Outcome {
    let start = Instant::now();
    let five = run_experiment(&ExperimentConfig::new(5, 20_000, EXPERIMENT_SEED))
        .map_err(|e| e.to_string())?;
    let seven = run_experiment(&ExperimentConfig::new(7, 10_000, EXPERIMENT_SEED))
        .map_err(|e| e.to_string())?;
    let elapsed = within(start, EXPERIMENT_LIMIT)?;
    ensure!(
        (HIT_RATE_BAND.0..=HIT_RATE_BAND.1).contains(&five.hit_rate),
        "n=5 hit rate {:e}",
        five.hit_rate
    );
    ensure!(
        seven.counts.certified == 0,
        "n=7 certified {}",
        seven.counts.certified
    );
    Ok(format!(
        "n=5 {} / 20000 = {:.2e} [{:.2e}, {:.2e}]; n=7 0 / 10000; {elapsed}",
        five.counts.certified, five.hit_rate, five.wilson_low, five.wilson_high
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("worked example expansion", golden_expansion),
        ("worked example coefficient tree", golden_tree),
        ("worked example verdict", golden_verdict),
        ("published matrices", published),
        ("recursion against direct expansion", oracle_equivalence),
        ("determinant identities", identities),
        ("certificates versus falsifier", soundness),
        ("Johnson consistency", johnson),
        ("constant-input primitives", primitives),
        ("hit rates", hit_rates),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
