//! Command-line front end for `liftcount-core`: a text format for groups and
//! extensions, query dispatch, reports and the built-in golden suite.

pub mod explore;
pub mod golden;
pub mod query;
pub mod report;
pub mod spec;

use liftcount_core::{EngineConfig, Tolerance, DEFAULT_SEED};

pub use spec::{parse_spec, render_spec, SpecDocument, SpecError, Workspace};

/// Spec files shipped with the tool, by name.
pub const BUILTIN_FIXTURES: [(&str, &str); 8] = [
    ("n0", include_str!("../fixtures/n0.spec")),
    ("n8", include_str!("../fixtures/n8.spec")),
    ("n16", include_str!("../fixtures/n16.spec")),
    ("n24", include_str!("../fixtures/n24.spec")),
    ("n40", include_str!("../fixtures/n40.spec")),
    ("remark", include_str!("../fixtures/remark.spec")),
    ("d4_outer", include_str!("../fixtures/d4_outer.spec")),
    ("extraspecial", include_str!("../fixtures/extraspecial.spec")),
];

/// All built-in fixtures merged into one document.
pub fn builtin_spec() -> Result<SpecDocument, SpecError> {
    let mut doc = SpecDocument::default();
    for (_, text) in BUILTIN_FIXTURES {
        doc.merge(spec::parse_syntax(text)?)?;
    }
    Workspace::build(&doc)?;
    Ok(doc)
}

/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "LIFTCOUNT_SEED";

/// Engine configuration from optional command-line values; the seed falls
/// back to `LIFTCOUNT_SEED`, then to the built-in default. `tol` sets the
/// snapping radius and caps the exactness threshold.
pub fn engine_config(seed: Option<u64>, tol: Option<f64>) -> Result<EngineConfig, String> {
    let seed = match seed {
        Some(s) => s,
        None => match std::env::var(SEED_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| format!("{SEED_ENV}: not an unsigned integer: '{v}'"))?,
            Err(_) => DEFAULT_SEED,
        },
    };
    let mut cfg = EngineConfig::with_seed(seed);
    if let Some(t) = tol {
        cfg.tol = Tolerance::new(cfg.tol.eps.min(t), t).map_err(|e| e.to_string())?;
    }
    Ok(cfg)
}
