//! Lift and homomorphism counts: exhaustive oracles and character-theoretic
//! formula evaluations, plus specializations to quaternion, extraspecial and
//! other small kernels.

mod homs;
mod lifts;
mod obstruction;
mod recognize;
mod special;

pub use homs::{
    count_homs, count_homs_brute, count_homs_formula, count_homs_formula_with, frobenius_mednykh, q8_genus_shape, HomBrute,
    HomCensus, HOM_BRUTE_LIMIT,
};
pub use lifts::{
    commuting_pairs, count_lifts, count_lifts_brute, count_lifts_formula, count_lifts_formula_with, BruteLifts, FormulaLifts,
    IrrTerm, LiftCensus,
};
pub use obstruction::{five_term_obstruction, ObstructionReport, ObstructionVerdict};
pub use recognize::{extraspecial_rank, is_q8, small_kernel_kind, SmallKernel};
pub use special::{
    extraspecial_census, q8_value_set_check, s3_d4_a4_census, ExtraspecialCensus, SmallKernelCensus, Q8_VALUE_SET,
};

#[cfg(test)]
mod tests;
