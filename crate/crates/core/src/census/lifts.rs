use alloc::vec::Vec;

use crate::cocycle::{torus_value, zeta_cocycle};
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::group::{restrict_ses_mapped, subgroup_generated, Elem, FiniteGroup, GroupRef, ShortExactSequence, Subgroup};
use crate::numeric::{snap_to_integer, Scalar, Snapped};
use crate::rep::{irr_action, irreducible_reps, IrrCatalog};

/// Contribution of one irreducible kernel representation.
#[derive(Debug, Clone)]
pub struct IrrTerm {
    pub irrep: usize,
    pub dim: usize,
    /// Whether the irrep is fixed by the whole (restricted) quotient.
    pub stabilized: bool,
    /// Holonomy of `ζ_ρ` (only for stabilized irreps).
    pub evaluation: Option<Snapped>,
}

#[derive(Debug, Clone)]
pub struct BruteLifts {
    pub count: u64,
    /// Commuting lift pairs `(a, b)` in the total group, when requested.
    pub witnesses: Option<Vec<(Elem, Elem)>>,
}

#[derive(Debug, Clone)]
pub struct FormulaLifts {
    pub count: i64,
    pub terms: Vec<IrrTerm>,
}

/// Both lift counts for one commuting pair of the quotient.
#[derive(Debug, Clone)]
pub struct LiftCensus {
    pub kernel: GroupRef,
    pub alpha: Elem,
    pub beta: Elem,
    pub brute_count: u64,
    pub formula_count: i64,
    pub terms: Vec<IrrTerm>,
    pub witnesses: Option<Vec<(Elem, Elem)>>,
}

impl LiftCensus {
    pub fn consistent(&self) -> bool {
        self.formula_count >= 0 && self.brute_count == self.formula_count as u64
    }
}

/// Every ordered commuting pair of `g`.
pub fn commuting_pairs(g: &FiniteGroup) -> Vec<(Elem, Elem)> {
    g.elements().flat_map(|a| g.elements().map(move |b| (a, b))).filter(|&(a, b)| g.commutes(a, b)).collect()
}

fn check_pair(s: &ShortExactSequence, alpha: Elem, beta: Elem) -> Result<()> {
    let q = s.quotient();
    if alpha >= q.order() || beta >= q.order() {
        return Err(Error::NoSuchElement(alpha.max(beta)));
    }
    if !q.commutes(alpha, beta) {
        return Err(Error::NotCommuting);
    }
    Ok(())
}

/// Counts pairs `(α̃γ₁, β̃γ₂)` that commute, over all `γ₁, γ₂` in the kernel.
pub fn count_lifts_brute(s: &ShortExactSequence, alpha: Elem, beta: Elem, witnesses: bool) -> Result<BruteLifts> {
    check_pair(s, alpha, beta)?;
    let g = s.total();
    let kernel: Vec<Elem> = s.inclusion().map().to_vec();
    let (la, lb) = (s.lift(alpha), s.lift(beta));
    let mut count = 0u64;
    let mut found = witnesses.then(Vec::new);
    for &c1 in &kernel {
        let a = g.mul(la, c1);
        for &c2 in &kernel {
            let b = g.mul(lb, c2);
            if g.commutes(a, b) {
                count += 1;
                if let Some(w) = found.as_mut() {
                    w.push((a, b));
                }
            }
        }
    }
    Ok(BruteLifts { count, witnesses: found })
}

pub(crate) fn snap_count(x: Scalar, cfg: &EngineConfig) -> Result<i64> {
    if x.im.abs() > cfg.tol.snap_eps * x.re.abs().max(1.0) {
        return Err(Error::NonIntegerResult(x.re));
    }
    snap_to_integer(x.re, &cfg.tol)
}

/// Restriction of `s` to `⟨generators⟩` with those generators re-indexed.
pub(crate) fn restrict_to(s: &ShortExactSequence, elems: &[Elem]) -> Result<(ShortExactSequence, Vec<Elem>)> {
    let h = subgroup_generated(s.quotient(), elems);
    if h.order() == s.quotient().order() {
        return Ok((s.clone(), elems.to_vec()));
    }
    let r = restrict_ses_mapped(s, &h)?;
    let mapped = elems.iter().map(|&x| r.quotient_index(x).expect("generated")).collect();
    Ok((r.ses, mapped))
}

/// Formula count with a precomputed catalog of the kernel's irreps.
pub fn count_lifts_formula_with(
    s: &ShortExactSequence,
    cat: &IrrCatalog,
    alpha: Elem,
    beta: Elem,
    cfg: &EngineConfig,
) -> Result<FormulaLifts> {
    check_pair(s, alpha, beta)?;
    let (r, idx) = restrict_to(s, &[alpha, beta])?;
    let (a, b) = (idx[0], idx[1]);
    let action = irr_action(&r, cat)?;
    let whole = Subgroup::whole(r.quotient());
    let mut sum = Scalar::new(0.0, 0.0);
    let mut terms = Vec::with_capacity(cat.len());
    for (row, rho) in cat.reps.iter().enumerate() {
        let stabilized = action.is_fully_stabilized(row, r.quotient().order());
        let evaluation = if stabilized {
            let zeta = zeta_cocycle(&r, rho, &whole, cfg)?;
            let v = torus_value(&zeta, a, b, &cfg.tol)?;
            sum += v.value();
            Some(v)
        } else {
            None
        };
        terms.push(IrrTerm { irrep: row, dim: rho.dim(), stabilized, evaluation });
    }
    let count = snap_count(sum * s.kernel().order() as f64, cfg)?;
    Ok(FormulaLifts { count, terms })
}

pub fn count_lifts_formula(s: &ShortExactSequence, alpha: Elem, beta: Elem, cfg: &EngineConfig) -> Result<FormulaLifts> {
    let cat = irreducible_reps(s.kernel(), cfg)?;
    count_lifts_formula_with(s, &cat, alpha, beta, cfg)
}

/// Brute-force and formula counts side by side.
pub fn count_lifts(s: &ShortExactSequence, alpha: Elem, beta: Elem, cfg: &EngineConfig, witnesses: bool) -> Result<LiftCensus> {
    let brute = count_lifts_brute(s, alpha, beta, witnesses)?;
    let formula = count_lifts_formula(s, alpha, beta, cfg)?;
    Ok(LiftCensus {
        kernel: s.kernel().clone(),
        alpha,
        beta,
        brute_count: brute.count,
        formula_count: formula.count,
        terms: formula.terms,
        witnesses: brute.witnesses,
    })
}
