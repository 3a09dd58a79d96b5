use alloc::vec::Vec;

use super::lifts::{count_lifts, restrict_to, LiftCensus};
use super::recognize::{extraspecial_rank, is_q8, small_kernel_kind, SmallKernel};
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::group::{Elem, ShortExactSequence};
use crate::rep::{irr_action, irreducible_reps};

/// Possible lift counts over a quaternion kernel.
pub const Q8_VALUE_SET: [u64; 5] = [0, 8, 16, 24, 40];

pub fn q8_value_set_check(census: &LiftCensus) -> Result<bool> {
    if !is_q8(&census.kernel) {
        return Err(Error::KernelNotQ8);
    }
    Ok(Q8_VALUE_SET.contains(&census.brute_count))
}

#[derive(Debug, Clone)]
pub struct ExtraspecialCensus {
    pub r: u32,
    /// Nontrivial linear kernel characters fixed by `⟨α, β⟩`.
    pub n_stable: usize,
    /// `{0, 2^{2r+1}·N, 2^{2r+1}·(N+2)}`
    pub predicted: [u64; 3],
    pub census: LiftCensus,
    pub in_predicted: bool,
}

/// Lift count for an extraspecial 2-group kernel, compared against
/// `0` or `2^{2r+1}(1 + N ± 1)`.
pub fn extraspecial_census(s: &ShortExactSequence, alpha: Elem, beta: Elem, cfg: &EngineConfig) -> Result<ExtraspecialCensus> {
    let r = extraspecial_rank(s.kernel()).ok_or(Error::NotExtraspecial)?;
    let census = count_lifts(s, alpha, beta, cfg, false)?;
    let (restricted, _) = restrict_to(s, &[alpha, beta])?;
    let cat = irreducible_reps(s.kernel(), cfg)?;
    let action = irr_action(&restricted, &cat)?;
    let q = restricted.quotient().order();
    let n_stable = (1..cat.len()).filter(|&row| cat.table.dims[row] == 1 && action.is_fully_stabilized(row, q)).count();
    let unit = 1u64 << (2 * r + 1);
    let predicted = [0, unit * n_stable as u64, unit * (n_stable as u64 + 2)];
    let in_predicted = predicted.contains(&census.brute_count);
    Ok(ExtraspecialCensus { r, n_stable, predicted, census, in_predicted })
}

#[derive(Debug, Clone)]
pub struct SmallKernelCensus {
    pub kind: SmallKernel,
    pub census: LiftCensus,
    /// Values allowed by the closed-form analysis for this kernel.
    pub expected: Vec<u64>,
    pub in_expected: bool,
}

/// Lift count for `S3`, `D4` or `A4` kernels together with the value set
/// predicted for that kernel. For `D4` the set `{24, 40}` is reported, not
/// enforced.
pub fn s3_d4_a4_census(s: &ShortExactSequence, alpha: Elem, beta: Elem, cfg: &EngineConfig) -> Result<SmallKernelCensus> {
    let kind = small_kernel_kind(s.kernel()).ok_or(Error::KernelUnknown)?;
    let census = count_lifts(s, alpha, beta, cfg, false)?;
    let expected: Vec<u64> = match kind {
        SmallKernel::S3 => alloc::vec![18],
        SmallKernel::D4 => alloc::vec![24, 40],
        SmallKernel::A4 => alloc::vec![0, 24, 48],
    };
    let in_expected = expected.contains(&census.brute_count);
    Ok(SmallKernelCensus { kind, census, expected, in_expected })
}
