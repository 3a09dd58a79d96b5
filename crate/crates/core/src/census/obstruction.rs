use core::fmt;

use crate::error::Result;
use crate::group::{relative_commutator, ShortExactSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionVerdict {
    /// `Γ/[Γ,G']` is trivial, so `H₂(G') → H₂(G)` is onto.
    Vanishes,
    /// Nontrivial quotient of the given order; nothing follows.
    Inconclusive(usize),
}

impl fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionVerdict::Vanishes => f.write_str("H2 obstruction vanishes (q_* surjective)"),
            ObstructionVerdict::Inconclusive(k) => write!(f, "inconclusive (quotient order {k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub kernel_order: usize,
    pub rel_commutator_order: usize,
    /// `|Γ/[Γ,G']|`
    pub quotient_order: usize,
    pub verdict: ObstructionVerdict,
}

/// Size of `Γ/[Γ,G']`, the term after `H₂(G)` in the five-term sequence.
pub fn five_term_obstruction(s: &ShortExactSequence) -> Result<ObstructionReport> {
    let comm = relative_commutator(s.total(), &s.kernel_subgroup())?;
    let kernel_order = s.kernel().order();
    let quotient_order = kernel_order / comm.order();
    let verdict =
        if quotient_order == 1 { ObstructionVerdict::Vanishes } else { ObstructionVerdict::Inconclusive(quotient_order) };
    Ok(ObstructionReport { kernel_order, rel_commutator_order: comm.order(), quotient_order, verdict })
}
