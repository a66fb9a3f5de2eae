//! Inspection dumps of principal minors and polynomial expansions.

use serde::{Deserialize, Serialize};

use crate::certifier::{CoeffTree, Seed};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::recursion::{seed_pair, DetTree};
use crate::report::SCHEMA;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinorEntry {
    pub set: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinorsDump {
    pub schema: String,
    pub n: usize,
    pub minors: Vec<MinorEntry>,
}

impl MinorsDump {
    pub fn text(&self) -> String {
        self.minors
            .iter()
            .map(|e| format!("{}: {}\n", e.set, e.value))
            .collect()
    }
}

/// Every principal minor, ordered by size and then lexicographically.
pub fn minors_dump(a: &Matrix, cap: usize) -> Result<MinorsDump> {
    let table = a.all_principal_minors(cap)?;
    let minors = table
        .entries()
        .into_iter()
        .map(|(set, v): (_, &Rational)| MinorEntry {
            set: set.to_string(),
            value: v.to_string(),
        })
        .collect();
    Ok(MinorsDump {
        schema: SCHEMA.to_string(),
        n: a.dim(),
        minors,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeDump {
    pub label: String,
    pub p: Poly,
    pub q: Poly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffDump {
    pub path: String,
    pub poly: Poly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpandDump {
    pub schema: String,
    pub n: usize,
    pub depth: usize,
    pub nodes: Vec<NodeDump>,
    pub f01: Poly,
    pub g01: Poly,
    pub seed: Seed,
    /// Coefficient tree of the seed, to depth `min(depth, n − 2)`.
    pub tree: Vec<CoeffDump>,
}

impl ExpandDump {
    pub fn text(&self) -> String {
        let mut out = format!("# delete/zero nodes to depth {}\n", self.depth);
        for node in &self.nodes {
            out += &format!("{}: P = {}; Q = {}\n", node.label, node.p, node.q);
        }
        out += &format!("# F(0,1), {} terms\n{}\n", self.f01.num_terms(), self.f01);
        out += &format!("# G(0,1), {} terms\n{}\n", self.g01.num_terms(), self.g01);
        out += &format!("# coefficient tree of {}\n", self.seed);
        for c in &self.tree {
            out += &format!("c[{}] = {}\n", c.path, c.poly);
        }
        out
    }
}

/// Expansion of `det(A + iD)` to `depth` levels of the delete/zero
/// recursion, the depth-one pair polynomials and the coefficient tree of
/// the chosen seed.
pub fn expand_dump(a: &Matrix, depth: usize, seed: Seed, cap: usize) -> Result<ExpandDump> {
    let n = a.dim();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    let tree_depth = depth.max(1);
    let minors = a.all_principal_minors(cap)?;
    let dz = DetTree::from_minors(&minors, tree_depth)?;
    let pair = seed_pair(&dz)?;
    let nodes = (1..=tree_depth)
        .flat_map(|k| dz.level(k).cloned().collect::<Vec<_>>())
        .map(|node| NodeDump {
            label: node.label.to_string(),
            p: node.p,
            q: node.q,
        })
        .collect();
    let root = match seed {
        Seed::F01 => pair.f.clone(),
        Seed::G01 => pair.g.clone(),
    };
    let coeffs = CoeffTree::from_seed_poly(root, seed, n, depth.min(n - 2))?;
    let tree = coeffs
        .nodes()
        .into_iter()
        .map(|(p, poly)| CoeffDump {
            path: p.to_string(),
            poly: poly.clone(),
        })
        .collect();
    Ok(ExpandDump {
        schema: SCHEMA.to_string(),
        n,
        depth: tree_depth,
        nodes,
        f01: pair.f,
        g01: pair.g,
        seed,
        tree,
    })
}
