//! Tabulation of higher-genus counts over the built-in Q8-kernel fixtures.

use liftcount_core::census::{count_homs_formula, is_q8, q8_genus_shape};
use liftcount_core::cocycle::SurfaceDatum;
use liftcount_core::EngineConfig;

use crate::report::{ExploreOutcome, ExploreRow};
use crate::spec::{SpecError, Workspace};

/// Sequences with a Q8 kernel among the built-in fixtures.
pub const Q8_SEQUENCES: [&str; 6] = ["n0", "n8", "n16", "n24", "n40", "remark"];

/// `count_homs_formula` for the datum `(α, β)` repeated `d` times and
/// `(α, β), (1, 1), ...`, for every genus in `genera`.
pub fn explore_genus(cfg: &EngineConfig, genera: std::ops::RangeInclusive<usize>) -> Result<ExploreOutcome, SpecError> {
    let doc = crate::builtin_spec()?;
    let ws = Workspace::build(&doc)?;
    let engine = |source| SpecError::Engine { line: 0, source };
    let mut rows = Vec::new();
    for name in Q8_SEQUENCES {
        let s = ws.sequence_at(name, 0)?;
        if !is_q8(s.kernel()) {
            continue;
        }
        let q = s.quotient();
        let (a, b) = (q.find_label("alpha").unwrap_or(0), q.find_label("beta").unwrap_or(0));
        for d in genera.clone() {
            let variants = [
                ("repeated", vec![(a, b); d]),
                ("padded", std::iter::once((a, b)).chain(std::iter::repeat_n((0, 0), d - 1)).collect()),
            ];
            for (kind, pairs) in variants {
                let sd = SurfaceDatum::new(q, pairs).map_err(engine)?;
                let count = count_homs_formula(s, &sd, cfg).map_err(engine)?;
                rows.push(ExploreRow { sequence: format!("{name} ({kind})"), genus: d, count, shape: q8_genus_shape(count, d) });
            }
        }
    }
    Ok(ExploreOutcome { rows })
}
