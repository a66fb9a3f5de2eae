//! Exact second-step decision for 2×2 matrices, where every depth-two node
//! of the recursion is a constant.

use serde::{Deserialize, Serialize};

use super::quadratic::{degenerate_step2, step2_nondegenerate, step2_q0_system};
use crate::error::{Error, Result};
use crate::matrix::MinorTable;
use crate::rational::Rational;
use crate::recursion::{terminal_pair, NodeLabel};

/// The three constant-input conditions and their conjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondStep {
    pub nondegenerate: bool,
    pub q0_system: bool,
    pub degenerate: bool,
}

impl SecondStep {
    /// `true` iff `det(A + iD) ≠ 0` for every positive `D`.
    pub fn holds(&self) -> bool {
        self.nondegenerate && self.q0_system && self.degenerate
    }
}

/// Evaluates the constant-input conditions for a 2×2 matrix. Together with
/// positive stability they decide D-stability exactly.
pub fn exact_second_step(minors: &MinorTable) -> Result<SecondStep> {
    if minors.dim() != 2 {
        return Err(Error::InvalidConfig(format!(
            "exact second step needs a 2x2 matrix, got {}x{}",
            minors.dim(),
            minors.dim()
        )));
    }
    let pair = |bits: &str| -> Result<(Rational, Rational)> {
        let label: NodeLabel = bits.parse()?;
        let node = terminal_pair(minors, &label)?;
        let constant = |p: &crate::poly::Poly| p.as_constant().unwrap_or_default();
        Ok((constant(&node.p), constant(&node.q)))
    };
    let (p00, q00) = pair("00")?;
    let (p01, q01) = pair("01")?;
    let (p10, q10) = pair("10")?;
    let (p11, q11) = pair("11")?;
    let f = |(ps, qs): (&Rational, &Rational), (pt, qt): (&Rational, &Rational)| ps * pt + qs * qt;
    let g = |(ps, qs): (&Rational, &Rational), (pt, qt): (&Rational, &Rational)| ps * qt - qs * pt;
    let (n00, n01, n10, n11) = ((&p00, &q00), (&p01, &q01), (&p10, &q10), (&p11, &q11));

    let nondegenerate = step2_nondegenerate(
        &f(n00, n01),
        &(g(n00, n11) - g(n10, n01)),
        &f(n10, n11),
        &p00,
        &q01,
        &p11,
        &q10,
    );
    let q0_system = step2_q0_system(&p00, &q00, &p10, &q10, &p01, &q01, &p11, &q11);
    let degenerate = degenerate_step2(
        &f(n00, n00),
        &f(n01, n01),
        &f(n10, n10),
        &f(n11, n11),
        &f(n00, n10),
        &f(n01, n11),
        &g(n00, n10),
        &g(n01, n11),
    );
    Ok(SecondStep {
        nondegenerate,
        q0_system,
        degenerate,
    })
}
