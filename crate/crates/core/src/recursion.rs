//! The delete/zero tree of `det(A + iD)`.
//!
//! Indices are processed in the fixed order `n, n-1, …`. A node is labelled
//! by the bits chosen so far: bit `0` deletes the row and column of the
//! index, bit `1` keeps them but sets its diagonal variable to zero. The
//! first bit of a label belongs to the most recently processed index, so a
//! label of length `k` is `s_{n-k+1} … s_n`.
//!
//! The production path reads the depth `n-1` leaves off the principal minor
//! table and climbs towards the root with
//! `P_s = -d_{n-k} Q_{0s} + P_{1s}`, `Q_s = d_{n-k} P_{0s} + Q_{1s}`.
//! [`node_det_direct`] recomputes any node from a subset expansion and is the
//! independent reference the tree is checked against.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{IndexSet, Matrix, MinorTable};
use crate::poly::{Monomial, Poly};

/// Binary label of a delete/zero node.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeLabel(Vec<u8>);

impl NodeLabel {
    pub fn root() -> NodeLabel {
        NodeLabel(Vec::new())
    }

    /// Builds a label from bits written `s_{n-k+1} … s_n`.
    pub fn new(bits: Vec<u8>) -> Result<NodeLabel> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidConfig("label bits must be 0 or 1".into()));
        }
        Ok(NodeLabel(bits))
    }

    /// All labels of length `k`, in lexicographic order.
    pub fn all_of_length(k: usize) -> Vec<NodeLabel> {
        (0..1u32 << k)
            .map(|v| NodeLabel((0..k).rev().map(|j| (v >> j & 1) as u8).collect()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    /// `0s` or `1s`: the label one level deeper.
    pub fn child(&self, bit: u8) -> NodeLabel {
        let mut bits = Vec::with_capacity(self.0.len() + 1);
        bits.push(bit);
        bits.extend_from_slice(&self.0);
        NodeLabel(bits)
    }

    /// Processed indices whose bit is 1 (kept with `d_i = 0`).
    pub fn kept(&self, n: usize) -> Vec<usize> {
        let k = self.0.len();
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(j, _)| n - k + 1 + j)
            .collect()
    }

    fn kept_mask(&self, n: usize) -> u32 {
        self.kept(n).iter().fold(0, |m, i| m | 1 << (i - 1))
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "root");
        }
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for NodeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<NodeLabel> {
        if s == "root" || s.is_empty() {
            return Ok(NodeLabel::root());
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidConfig(format!("bad label {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(NodeLabel(bits))
    }
}

/// Real and imaginary parts of `det(A_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetPair {
    pub label: NodeLabel,
    pub p: Poly,
    pub q: Poly,
}

/// `F(s,t) = Re(conj(det A_s) det A_t)` and `G(s,t) = Im(…)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFG {
    pub s: String,
    pub t: String,
    pub f: Poly,
    pub g: Poly,
}

/// Reference expansion of a node:
/// `det(A_s) = Σ_{β ⊆ free} i^{|β|} Π_{j∈β} d_j · A(K \ β | K \ β)`, where
/// `free = {1..n-k}` and `K` is `free` together with the kept indices.
/// Every minor is computed directly from its submatrix.
pub fn node_det_direct(a: &Matrix, s: &NodeLabel) -> Result<DetPair> {
    let n = a.dim();
    let k = s.len();
    if k > n {
        return Err(Error::DepthOutOfRange { depth: k, max: n });
    }
    let free = n - k;
    let base = IndexSet::from_mask(n, s.kept_mask(n) | ((1u32 << free) - 1));
    let mut p = Poly::zero();
    let mut q = Poly::zero();
    for beta in 0..1u32 << free {
        let remaining: Vec<usize> = base
            .iter()
            .filter(|&i| i > free || beta >> (i - 1) & 1 == 0)
            .collect();
        let minor = a.principal_minor(&IndexSet::new(remaining)?)?;
        if minor.is_zero() {
            continue;
        }
        let exps: Vec<(usize, u32)> = (1..=free)
            .filter(|&j| beta >> (j - 1) & 1 == 1)
            .map(|j| (j, 1))
            .collect();
        let term = Poly::monomial(Monomial::from_exponents(&exps), minor);
        // i^|β| cycles through 1, i, -1, -i
        match beta.count_ones() % 4 {
            0 => p += &term,
            1 => q += &term,
            2 => p = &p - &term,
            _ => q = &q - &term,
        }
    }
    Ok(DetPair {
        label: s.clone(),
        p,
        q,
    })
}

/// Leaf after `n-1` steps: `det(A_s) = A(1∪α(s)) + i d_1 A(α(s))`.
pub fn leaf_pair(minors: &MinorTable, s: &NodeLabel) -> Result<DetPair> {
    let n = minors.dim();
    if s.len() + 1 != n {
        return Err(Error::DepthOutOfRange {
            depth: s.len(),
            max: n - 1,
        });
    }
    let alpha = s.kept_mask(n);
    Ok(DetPair {
        label: s.clone(),
        p: Poly::constant(minors.by_mask(alpha | 1).clone()),
        q: Poly::monomial(Monomial::var(1), minors.by_mask(alpha).clone()),
    })
}

/// A node after all `n` steps: the constant principal minor `A(α(s))`.
pub fn terminal_pair(minors: &MinorTable, s: &NodeLabel) -> Result<DetPair> {
    let n = minors.dim();
    if s.len() != n {
        return Err(Error::DepthOutOfRange {
            depth: s.len(),
            max: n,
        });
    }
    Ok(DetPair {
        label: s.clone(),
        p: Poly::constant(minors.by_mask(s.kept_mask(n)).clone()),
        q: Poly::zero(),
    })
}

/// One step of the upward recurrence at depth `k = s.len()`.
pub fn combine(n: usize, s: &NodeLabel, deleted: &DetPair, zeroed: &DetPair) -> DetPair {
    let d = Poly::var(n - s.len());
    DetPair {
        label: s.clone(),
        p: &(-&(&d * &deleted.q)) + &zeroed.p,
        q: &(&d * &deleted.p) + &zeroed.q,
    }
}

/// All delete/zero nodes up to a given depth.
#[derive(Clone, Debug)]
pub struct DetTree {
    n: usize,
    levels: Vec<BTreeMap<NodeLabel, DetPair>>,
}

impl DetTree {
    pub fn build(a: &Matrix, depth: usize, cap: usize) -> Result<DetTree> {
        let minors = a.all_principal_minors(cap)?;
        DetTree::from_minors(&minors, depth)
    }

    pub fn from_minors(minors: &MinorTable, depth: usize) -> Result<DetTree> {
        let n = minors.dim();
        if depth + 1 > n {
            return Err(Error::DepthOutOfRange { depth, max: n - 1 });
        }
        let mut current: BTreeMap<NodeLabel, DetPair> = NodeLabel::all_of_length(n - 1)
            .into_iter()
            .map(|s| leaf_pair(minors, &s).map(|pair| (s, pair)))
            .collect::<Result<_>>()?;
        let mut levels = vec![BTreeMap::new(); depth + 1];
        for k in (0..n - 1).rev() {
            if k < depth {
                levels[k + 1] = current.clone();
            }
            current = NodeLabel::all_of_length(k)
                .into_iter()
                .map(|s| {
                    let pair = combine(n, &s, &current[&s.child(0)], &current[&s.child(1)]);
                    (s, pair)
                })
                .collect();
        }
        levels[0] = current;
        Ok(DetTree { n, levels })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn root(&self) -> &DetPair {
        &self.levels[0][&NodeLabel::root()]
    }

    pub fn get(&self, s: &NodeLabel) -> Option<&DetPair> {
        self.levels.get(s.len()).and_then(|l| l.get(s))
    }

    pub fn level(&self, k: usize) -> impl Iterator<Item = &DetPair> {
        self.levels[k].values()
    }

    /// One line per node: `<label>: P = <poly>; Q = <poly>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for level in &self.levels {
            for pair in level.values() {
                out.push_str(&format!("{}: P = {}; Q = {}\n", pair.label, pair.p, pair.q));
            }
        }
        out
    }
}

pub fn fg_pair(a: &DetPair, b: &DetPair) -> Result<PairFG> {
    if a.label.len() != b.label.len() {
        return Err(Error::InvalidConfig(format!(
            "labels {} and {} differ in length",
            a.label, b.label
        )));
    }
    Ok(PairFG {
        s: a.label.to_string(),
        t: b.label.to_string(),
        f: &(&a.p * &b.p) + &(&a.q * &b.q),
        g: &(&a.p * &b.q) - &(&a.q * &b.p),
    })
}

/// `F(0,1)` and `G(0,1)` from a tree of depth at least 1.
pub fn seed_pair(tree: &DetTree) -> Result<PairFG> {
    let zero = NodeLabel(vec![0]);
    let one = NodeLabel(vec![1]);
    match (tree.get(&zero), tree.get(&one)) {
        (Some(a), Some(b)) => fg_pair(a, b),
        _ => Err(Error::DepthOutOfRange {
            depth: 1,
            max: tree.depth(),
        }),
    }
}

/// `|det(A + iD)|²` as a polynomial, i.e. `F = P² + Q²` at the root.
pub fn johnson_poly(tree: &DetTree) -> Poly {
    let r = tree.root();
    &(&r.p * &r.p) + &(&r.q * &r.q)
}

impl DetPair {
    pub fn is_constant(&self) -> bool {
        self.p.as_constant().is_some() && self.q.as_constant().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.p.as_constant().is_some_and(|c| c.is_one()) && self.q.is_zero()
    }
}
