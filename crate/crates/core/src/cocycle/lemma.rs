use alloc::vec::Vec;

use super::{eta_cocycle, torus_value, zeta_cocycle};
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::group::{conjugation_action, Automorphism, Elem, ShortExactSequence, Subgroup};
use crate::numeric::Snapped;
use crate::rep::{rep_equivalent, MatrixRep};

/// Torus values of `q^*ζ_ρ` and `ω^*η_ρ` at one commuting pair of the total group.
#[derive(Debug, Clone)]
pub struct Lemma1Pair {
    pub a: Elem,
    pub b: Elem,
    pub zeta: Snapped,
    pub eta: Snapped,
    pub agree: bool,
}

/// Compares `ζ_ρ(q(a), q(b))`-holonomies against `η_ρ(ω(a), ω(b))` on every
/// commuting pair `(a, b)` of the total group. `η_ρ` lives on `ω(G')`.
pub fn lemma1_compare(s: &ShortExactSequence, rho: &MatrixRep, cfg: &EngineConfig) -> Result<Vec<Lemma1Pair>> {
    let quotient = s.quotient();
    let total = s.total();
    for alpha in quotient.elements() {
        if !rep_equivalent(&rho.twisted(&s.conjugation_by(s.lift(alpha))), rho) {
            return Err(Error::StabilizerNotFull);
        }
    }
    let zeta = zeta_cocycle(s, rho, &Subgroup::whole(quotient), cfg)?;

    let omega = conjugation_action(s);
    let mut auts: Vec<Automorphism> = omega.clone();
    auts.sort();
    auts.dedup();
    let eta = eta_cocycle(rho, &auts, cfg)?;
    let eta_index: Vec<Elem> = omega
        .iter()
        .map(|w| {
            let i = auts.binary_search(w).expect("present");
            eta.base_index(i).expect("embedded")
        })
        .collect();

    let mut out = Vec::new();
    for a in total.elements() {
        for b in total.elements() {
            if !total.commutes(a, b) {
                continue;
            }
            let z = torus_value(&zeta, s.project(a), s.project(b), &cfg.tol)?;
            let e = torus_value(&eta, eta_index[a], eta_index[b], &cfg.tol)?;
            let agree = (z.value() - e.value()).norm() <= cfg.tol.snap_eps;
            out.push(Lemma1Pair { a, b, zeta: z, eta: e, agree });
        }
    }
    Ok(out)
}

pub fn lemma1_check(s: &ShortExactSequence, rho: &MatrixRep, cfg: &EngineConfig) -> Result<bool> {
    Ok(lemma1_compare(s, rho, cfg)?.iter().all(|p| p.agree))
}
