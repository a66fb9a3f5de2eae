#![allow(dead_code)]

pub mod oracles;

use dstab_core::harness::{check, random_stable_matrix, CheckConfig, GeneratorStyle};
use dstab_core::rational::{ratio, Rational};
use dstab_core::recursion::NodeLabel;
use dstab_core::report::Verdict;
use dstab_core::{Matrix, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn load(name: &str) -> Matrix {
    let path = format!("{}/../../matrices/{name}", env!("CARGO_MANIFEST_DIR"));
    Matrix::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn worked_example() -> Matrix {
    load("worked_5x5.txt")
}

pub fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

/// Random matrix with small fractional entries; about one entry in five is
/// zero so that degenerate pivots occur.
pub fn random_rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(0.2) {
                        ratio(0, 1)
                    } else {
                        ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complex polynomial as a (real, imaginary) pair.
#[derive(Clone)]
pub struct CPoly(pub Poly, pub Poly);

impl CPoly {
    fn mul(&self, o: &CPoly) -> CPoly {
        CPoly(
            &(&self.0 * &o.0) - &(&self.1 * &o.1),
            &(&self.0 * &o.1) + &(&self.1 * &o.0),
        )
    }
    fn add(&self, o: &CPoly) -> CPoly {
        CPoly(&self.0 + &o.0, &self.1 + &o.1)
    }
    fn neg(&self) -> CPoly {
        CPoly(-&self.0, -&self.1)
    }
}

/// Determinant of a matrix of complex polynomials by cofactor expansion
/// along the first row.
pub fn laplace_det(m: &[Vec<CPoly>]) -> CPoly {
    let n = m.len();
    if n == 0 {
        return CPoly(Poly::one(), Poly::zero());
    }
    let mut acc = CPoly(Poly::zero(), Poly::zero());
    for j in 0..n {
        if m[0][j].0.is_zero() && m[0][j].1.is_zero() {
            continue;
        }
        let minor: Vec<Vec<CPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&laplace_det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.add(&term.neg())
        };
    }
    acc
}

/// The matrix of node `s` written out explicitly: indices `n, n-1, …` are
/// processed in turn, bit 0 deletes the index, bit 1 keeps it with its
/// scaling set to zero; the unprocessed indices keep `i·d_j` on the diagonal.
pub fn node_matrix(a: &Matrix, s: &NodeLabel) -> Vec<Vec<CPoly>> {
    let n = a.dim();
    let k = s.len();
    let bits = s.bits();
    // bits[0] belongs to index n-k+1, bits[k-1] to index n
    let mut keep: Vec<usize> = (1..=n - k).collect();
    for (pos, &b) in bits.iter().enumerate() {
        if b == 1 {
            keep.push(n - k + 1 + pos);
        }
    }
    keep.iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| {
                    let re = Poly::constant(a.get(i - 1, j - 1).clone());
                    let im = if i == j && i <= n - k {
                        Poly::var(i)
                    } else {
                        Poly::zero()
                    };
                    CPoly(re, im)
                })
                .collect()
        })
        .collect()
}

pub fn rational_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| ratio(rng.gen_range(1..=40), rng.gen_range(1..=8)))
        .collect()
}

/// 200 seeded random matrices of orders 2 through 6.
pub fn random_corpus() -> Vec<Matrix> {
    let mut r = rng(0x5eed);
    (0..200)
        .map(|k| random_rational_matrix(&mut r, 2 + k % 5))
        .collect()
}

/// Every matrix of the test corpus that the pipeline certifies, by name.
pub fn certified_corpus() -> Vec<(String, Matrix)> {
    let mut out: Vec<(String, Matrix)> = [
        "worked_5x5.txt",
        "test1_5x5.txt",
        "test2_5x5.txt",
        "test1_6x6.txt",
    ]
    .iter()
    .map(|f| (f.to_string(), load(f)))
    .collect();
    out.push(("identity".into(), Matrix::identity(4)));
    let mild: GeneratorStyle = "sigma=12".parse().unwrap();
    for n in 2..=5 {
        for seed in 0..40 {
            out.push((
                format!("generated n={n} seed={seed}"),
                random_stable_matrix(n, seed, &mild).unwrap(),
            ));
        }
    }
    let cfg = CheckConfig {
        refine: true,
        ..CheckConfig::default()
    };
    out.retain(|(_, a)| check(a, &cfg).unwrap().verdict == Verdict::Certified);
    out
}

/// Stable 2×2 and 3×3 integer matrices rejected by the necessary minor
/// condition.
pub fn failing_corpus() -> Vec<Matrix> {
    let mut r = rng(55);
    let mut out = vec![load("trace_flip_2x2.txt")];
    while out.len() < 60 {
        let n = r.gen_range(2..=3);
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| ratio(r.gen_range(-6..=6), 1)).collect())
            .collect();
        let a = Matrix::from_rows(rows).unwrap();
        if check(&a, &CheckConfig::default()).unwrap().verdict == Verdict::FailedNecessary {
            out.push(a);
        }
    }
    out
}
