//! Ternary coefficient trees grown from `F(0,1)` or `G(0,1)`.
//!
//! Level `j` collects every node of level `j − 1` as a quadratic in
//! `d_{n−j}`. Child 1 holds the `d²` coefficient, child 2 the linear one and
//! child 3 the constant term. Paths print newest digit first, so `21` is the
//! second child of node `1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::recursion::{fg_pair, seed_pair, DetTree, NodeLabel};

/// Which depth-one pair polynomial seeds the tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Seed {
    F01,
    G01,
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Seed::F01 => "F01",
            Seed::G01 => "G01",
        })
    }
}

impl FromStr for Seed {
    type Err = Error;
    fn from_str(s: &str) -> Result<Seed> {
        match s.to_ascii_uppercase().as_str() {
            "F01" | "F" => Ok(Seed::F01),
            "G01" | "G" => Ok(Seed::G01),
            _ => Err(Error::InvalidConfig(format!("unknown seed {s:?}"))),
        }
    }
}

/// Position in a coefficient tree. Digits are stored oldest first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryPath(Vec<u8>);

impl TernaryPath {
    pub fn root() -> TernaryPath {
        TernaryPath(Vec::new())
    }

    pub fn child(&self, k: u8) -> TernaryPath {
        debug_assert!((1..=3).contains(&k));
        let mut digits = self.0.clone();
        digits.push(k);
        TernaryPath(digits)
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for TernaryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for k in self.0.iter().rev() {
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for TernaryPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<TernaryPath> {
        if s == "root" || s.is_empty() {
            return Ok(TernaryPath::root());
        }
        let digits = s
            .bytes()
            .rev()
            .map(|b| match b {
                b'1'..=b'3' => Ok(b - b'0'),
                _ => Err(Error::InvalidConfig(format!("bad tree path {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(TernaryPath(digits))
    }
}

/// Coefficient tree of a seed polynomial down to a fixed depth.
#[derive(Clone, Debug)]
pub struct CoeffTree {
    pub seed: Seed,
    n: usize,
    depth: usize,
    nodes: BTreeMap<TernaryPath, Poly>,
}

/// Variable collected when passing from level `level - 1` to `level`.
pub fn level_variable(n: usize, level: usize) -> usize {
    n - level
}

fn check_depth(n: usize, depth: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    if depth > n - 2 {
        return Err(Error::DepthOutOfRange { depth, max: n - 2 });
    }
    Ok(())
}

/// The seed polynomial of a matrix.
pub fn seed_poly(tree: &DetTree, seed: Seed) -> Result<Poly> {
    let pair = seed_pair(tree)?;
    Ok(match seed {
        Seed::F01 => pair.f,
        Seed::G01 => pair.g,
    })
}

impl CoeffTree {
    pub fn build(a: &Matrix, seed: Seed, depth: usize, cap: usize) -> Result<CoeffTree> {
        check_depth(a.dim(), depth)?;
        let tree = DetTree::build(a, 1, cap)?;
        CoeffTree::from_seed_poly(seed_poly(&tree, seed)?, seed, a.dim(), depth)
    }

    pub fn from_seed_poly(root: Poly, seed: Seed, n: usize, depth: usize) -> Result<CoeffTree> {
        check_depth(n, depth)?;
        let mut nodes = BTreeMap::new();
        let mut frontier = vec![(TernaryPath::root(), root)];
        for level in 1..=depth {
            let var = level_variable(n, level);
            let mut next = Vec::with_capacity(frontier.len() * 3);
            for (path, poly) in &frontier {
                let (c0, c1, c2) = poly.collect(var)?;
                next.push((path.child(1), c2));
                next.push((path.child(2), c1));
                next.push((path.child(3), c0));
            }
            nodes.extend(std::mem::replace(&mut frontier, next));
        }
        nodes.extend(frontier);
        Ok(CoeffTree {
            seed,
            n,
            depth,
            nodes,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn get(&self, path: &TernaryPath) -> Option<&Poly> {
        self.nodes.get(path)
    }

    pub fn root(&self) -> &Poly {
        &self.nodes[&TernaryPath::root()]
    }

    /// All nodes, level by level, each level in ascending printed order.
    pub fn nodes(&self) -> Vec<(&TernaryPath, &Poly)> {
        let mut all: Vec<_> = self.nodes.iter().collect();
        all.sort_by_key(|(p, _)| (p.level(), p.to_string()));
        all
    }

    pub fn level(&self, level: usize) -> Vec<(&TernaryPath, &Poly)> {
        self.nodes()
            .into_iter()
            .filter(|(p, _)| p.level() == level)
            .collect()
    }
}

/// Whether a term refers to an `F` or a `G` pair polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FgKind {
    F,
    G,
}

/// Integer combination of pair polynomials `F(s,t)`, `G(s,t)` with labels
/// of equal length, kept in a canonical form (`s ≤ t`, no `G(s,s)`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FgExpr {
    terms: BTreeMap<(FgKind, NodeLabel, NodeLabel), i64>,
}

impl FgExpr {
    pub fn seed(seed: Seed) -> FgExpr {
        let kind = match seed {
            Seed::F01 => FgKind::F,
            Seed::G01 => FgKind::G,
        };
        let mut e = FgExpr::default();
        e.add(
            kind,
            NodeLabel::root().child(0),
            NodeLabel::root().child(1),
            1,
        );
        e
    }

    fn add(&mut self, kind: FgKind, s: NodeLabel, t: NodeLabel, coef: i64) {
        let (s, t, coef) = match (kind, s.cmp(&t)) {
            (FgKind::G, std::cmp::Ordering::Equal) => return,
            (FgKind::G, std::cmp::Ordering::Greater) => (t, s, -coef),
            (FgKind::F, std::cmp::Ordering::Greater) => (t, s, coef),
            _ => (s, t, coef),
        };
        let entry = self.terms.entry((kind, s, t)).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Children `[d², d¹, d⁰]` obtained by expanding every label one level
    /// deeper and collecting the scaling of the newly processed index:
    ///
    /// `F(s,t) = F(0s,0t) d² + (G(0s,1t) − G(1s,0t)) d + F(1s,1t)`
    /// `G(s,t) = G(0s,0t) d² + (F(1s,0t) − F(0s,1t)) d + G(1s,1t)`
    pub fn children(&self) -> [FgExpr; 3] {
        let mut out = [FgExpr::default(), FgExpr::default(), FgExpr::default()];
        for ((kind, s, t), &c) in &self.terms {
            let (s0, s1, t0, t1) = (s.child(0), s.child(1), t.child(0), t.child(1));
            match kind {
                FgKind::F => {
                    out[0].add(FgKind::F, s0.clone(), t0.clone(), c);
                    out[1].add(FgKind::G, s0, t1.clone(), c);
                    out[1].add(FgKind::G, s1.clone(), t0, -c);
                    out[2].add(FgKind::F, s1, t1, c);
                }
                FgKind::G => {
                    out[0].add(FgKind::G, s0.clone(), t0.clone(), c);
                    out[1].add(FgKind::F, s1.clone(), t0, c);
                    out[1].add(FgKind::F, s0, t1.clone(), -c);
                    out[2].add(FgKind::G, s1, t1, c);
                }
            }
        }
        out
    }

    /// Evaluates the combination on a recursion tree deep enough to contain
    /// every label.
    pub fn evaluate(&self, tree: &DetTree) -> Result<Poly> {
        let mut acc = Poly::zero();
        for ((kind, s, t), &c) in &self.terms {
            let missing = || Error::DepthOutOfRange {
                depth: s.len(),
                max: tree.depth(),
            };
            let a = tree.get(s).ok_or_else(missing)?;
            let b = tree.get(t).ok_or_else(missing)?;
            let pair = fg_pair(a, b)?;
            let value = match kind {
                FgKind::F => pair.f,
                FgKind::G => pair.g,
            };
            acc += &value.scale(&crate::rational::rat(c));
        }
        Ok(acc)
    }
}

impl fmt::Display for FgExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((kind, s, t), &c)) in self.terms.iter().enumerate() {
            let name = match kind {
                FgKind::F => "F",
                FgKind::G => "G",
            };
            let sign = if c < 0 { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{name}({s},{t})")?;
        }
        Ok(())
    }
}

/// Symbolic coefficient tree: every node as a combination of pair
/// polynomials on labels of length `level + 1`.
pub fn symbolic_tree(seed: Seed, depth: usize) -> Vec<(TernaryPath, FgExpr)> {
    let mut out = vec![(TernaryPath::root(), FgExpr::seed(seed))];
    let mut start = 0;
    for _ in 0..depth {
        let end = out.len();
        for idx in start..end {
            let (path, expr) = out[idx].clone();
            for (k, child) in expr.children().into_iter().enumerate() {
                out.push((path.child(k as u8 + 1), child));
            }
        }
        start = end;
    }
    out.sort_by_key(|(p, _)| (p.level(), p.to_string()));
    out
}

/// Coefficient tree evaluated through the symbolic route, for cross-checking
/// the direct collection.
pub fn coeff_tree_via_pairs(a: &Matrix, seed: Seed, depth: usize, cap: usize) -> Result<CoeffTree> {
    check_depth(a.dim(), depth)?;
    let tree = DetTree::build(a, depth + 1, cap)?;
    let nodes = symbolic_tree(seed, depth)
        .into_iter()
        .map(|(p, e)| e.evaluate(&tree).map(|poly| (p, poly)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(CoeffTree {
        seed,
        n: a.dim(),
        depth,
        nodes,
    })
}
