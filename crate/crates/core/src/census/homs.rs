use alloc::vec::Vec;

use super::lifts::{restrict_to, snap_count, IrrTerm};
use crate::cocycle::{surface_holonomy, zeta_cocycle, SurfaceDatum};
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, ShortExactSequence, Subgroup};
use crate::numeric::Scalar;
use crate::rep::{character_table, irr_action, irreducible_reps, IrrCatalog};

/// Largest number of lift tuples the exhaustive count will consider.
pub const HOM_BRUTE_LIMIT: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomBrute {
    Count(u64),
    /// Tuple count exceeded [`HOM_BRUTE_LIMIT`].
    Skipped(u128),
}

#[derive(Debug, Clone)]
pub struct HomCensus {
    pub datum: SurfaceDatum,
    pub genus: usize,
    pub brute: HomBrute,
    pub formula_count: i64,
    pub terms: Vec<IrrTerm>,
}

impl HomCensus {
    /// False only when both counts exist and differ.
    pub fn consistent(&self) -> bool {
        match self.brute {
            HomBrute::Count(c) => self.formula_count >= 0 && c == self.formula_count as u64,
            HomBrute::Skipped(_) => true,
        }
    }
}

/// Number of lift tuples `(a_i, b_i)` of `sd` with `Π [a_i, b_i] = 1`.
///
/// Each pair contributes a histogram of commutators `[α̃_iγ, β̃_iδ]` over all
/// kernel elements `γ, δ`; the tuple count is the identity coefficient of the
/// convolution of these histograms in the total group.
pub fn count_homs_brute(s: &ShortExactSequence, sd: &SurfaceDatum) -> Result<HomBrute> {
    let sd = SurfaceDatum::new(s.quotient(), sd.pairs().to_vec())?;
    let kernel: Vec<usize> = s.inclusion().map().to_vec();
    let cost = (kernel.len() as u128).checked_pow(2 * sd.genus() as u32).unwrap_or(u128::MAX);
    if cost > HOM_BRUTE_LIMIT {
        return Ok(HomBrute::Skipped(cost));
    }
    let g = s.total();
    let n = g.order();
    let mut dist = alloc::vec![0u64; n];
    dist[0] = 1;
    for &(alpha, beta) in sd.pairs() {
        let mut hist = alloc::vec![0u64; n];
        for &c1 in &kernel {
            let a = g.mul(s.lift(alpha), c1);
            for &c2 in &kernel {
                hist[g.commutator(a, g.mul(s.lift(beta), c2))] += 1;
            }
        }
        let mut next = alloc::vec![0u64; n];
        for (x, &cx) in dist.iter().enumerate().filter(|(_, &c)| c > 0) {
            for (y, &cy) in hist.iter().enumerate().filter(|(_, &c)| c > 0) {
                let slot = &mut next[g.mul(x, y)];
                *slot = slot
                    .checked_add(cx.checked_mul(cy).ok_or(Error::Overflow("homomorphism count"))?)
                    .ok_or(Error::Overflow("homomorphism count"))?;
            }
        }
        dist = next;
    }
    Ok(HomBrute::Count(dist[0]))
}

/// `|Γ| Σ_ρ (|Γ|/dim ρ)^{2d−2} · hol(ζ_ρ, sd)` over irreps fixed by the
/// subgroup generated by the datum.
pub fn count_homs_formula_with(
    s: &ShortExactSequence,
    cat: &IrrCatalog,
    sd: &SurfaceDatum,
    cfg: &EngineConfig,
) -> Result<(i64, Vec<IrrTerm>)> {
    let sd = SurfaceDatum::new(s.quotient(), sd.pairs().to_vec())?;
    let entries: Vec<usize> = sd.elements().collect();
    let (r, mapped) = restrict_to(s, &entries)?;
    let local = SurfaceDatum::new(r.quotient(), mapped.chunks(2).map(|c| (c[0], c[1])).collect())?;
    let action = irr_action(&r, cat)?;
    let whole = Subgroup::whole(r.quotient());
    let order = s.kernel().order() as f64;
    let exp = 2 * sd.genus() as i32 - 2;
    let mut sum = Scalar::new(0.0, 0.0);
    let mut terms = Vec::with_capacity(cat.len());
    for (row, rho) in cat.reps.iter().enumerate() {
        let stabilized = action.is_fully_stabilized(row, r.quotient().order());
        let evaluation = if stabilized {
            let zeta = zeta_cocycle(&r, rho, &whole, cfg)?;
            let h = surface_holonomy(&zeta, &local, &cfg.tol)?;
            sum += h.value() * libm::pow(order / rho.dim() as f64, exp as f64);
            Some(h)
        } else {
            None
        };
        terms.push(IrrTerm { irrep: row, dim: rho.dim(), stabilized, evaluation });
    }
    Ok((snap_count(sum * order, cfg)?, terms))
}

pub fn count_homs_formula(s: &ShortExactSequence, sd: &SurfaceDatum, cfg: &EngineConfig) -> Result<i64> {
    let cat = irreducible_reps(s.kernel(), cfg)?;
    Ok(count_homs_formula_with(s, &cat, sd, cfg)?.0)
}

pub fn count_homs(s: &ShortExactSequence, sd: &SurfaceDatum, cfg: &EngineConfig) -> Result<HomCensus> {
    let brute = count_homs_brute(s, sd)?;
    let cat = irreducible_reps(s.kernel(), cfg)?;
    let (formula_count, terms) = count_homs_formula_with(s, &cat, sd, cfg)?;
    Ok(HomCensus { datum: sd.clone(), genus: sd.genus(), brute, formula_count, terms })
}

/// `|Hom(π₁(W_d), Γ)| = |Γ| Σ_ρ (|Γ|/dim ρ)^{2d−2}` in exact arithmetic.
pub fn frobenius_mednykh(gamma: &FiniteGroup, d: usize, cfg: &EngineConfig) -> Result<u128> {
    if d == 0 {
        return Err(Error::InvalidSurfaceDatum("genus must be at least 1".into()));
    }
    let table = character_table(gamma, cfg)?;
    let n = gamma.order() as u128;
    let exp = u32::try_from(2 * d - 2).map_err(|_| Error::Overflow("genus"))?;
    let mut sum = 0u128;
    for &dim in &table.dims {
        let ratio = n / dim as u128;
        let term = ratio.checked_pow(exp).ok_or(Error::Overflow("frobenius_mednykh"))?;
        sum = sum.checked_add(term).ok_or(Error::Overflow("frobenius_mednykh"))?;
    }
    sum.checked_mul(n).ok_or(Error::Overflow("frobenius_mednykh"))
}

/// Writes `count = 8^{2d−1}(N + sign·2^{2−2d})` with `N ∈ {1, 2, 4}` if possible.
pub fn q8_genus_shape(count: i64, d: usize) -> Option<(u32, i8)> {
    if d == 0 || d > 10 {
        return None;
    }
    let big = 8i128.pow(2 * d as u32 - 1);
    let small = 2i128.pow(4 * d as u32 - 1);
    for n in [1u32, 2, 4] {
        for sign in [1i8, -1] {
            if big * n as i128 + sign as i128 * small == count as i128 {
                return Some((n, sign));
            }
        }
    }
    None
}
