//! Dispatch of spec queries to the engine.

use std::time::Instant;

use liftcount_core::census::{
    count_homs, count_lifts, five_term_obstruction, is_q8, q8_genus_shape, q8_value_set_check, HomBrute,
};
use liftcount_core::cocycle::SurfaceDatum;
use liftcount_core::rep::{conjugacy_classes, irreducible_reps};
use liftcount_core::EngineConfig;

use crate::report::{
    ClassRecord, ClassesOutcome, HomsOutcome, IrrepsOutcome, LiftsOutcome, ObstructionOutcome, Outcome, QueryRecord, Report,
    TermRecord,
};
use crate::spec::{render_query, resolve::element, Query, SpecDocument, SpecError, Workspace};

/// Per-run options that are not part of the spec file.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Keep commuting lift pairs for every lifts query.
    pub witnesses: bool,
}

/// Runs one query. Engine failures and failed cross-checks become a record
/// with `ok = false`; nothing panics.
pub fn run_query(ws: &Workspace, query: &Query, line: usize, cfg: &EngineConfig, opts: RunOptions) -> QueryRecord {
    let start = Instant::now();
    let result = evaluate(ws, query, line, cfg, opts);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let text = render_query(query);
    match result {
        Ok(outcome) => {
            let ok = outcome_ok(&outcome);
            QueryRecord { query: text, line, elapsed_ms, ok, error: None, outcome: Some(outcome) }
        }
        Err(e) => QueryRecord { query: text, line, elapsed_ms, ok: false, error: Some(e.to_string()), outcome: None },
    }
}

/// Runs every query of a document in order.
pub fn run_document(doc: &SpecDocument, cfg: &EngineConfig, opts: RunOptions) -> Result<Report, SpecError> {
    let ws = Workspace::build(doc)?;
    let records = doc.queries.iter().enumerate().map(|(i, q)| run_query(&ws, q, doc.query_line(i), cfg, opts)).collect();
    Ok(Report::new(cfg, records))
}

fn outcome_ok(o: &Outcome) -> bool {
    match o {
        Outcome::Lifts(l) => l.consistent && l.q8_value_set != Some(false),
        Outcome::Homs(h) => h.consistent,
        Outcome::Golden(g) => g.passed,
        _ => true,
    }
}

fn evaluate(ws: &Workspace, query: &Query, line: usize, cfg: &EngineConfig, opts: RunOptions) -> Result<Outcome, SpecError> {
    let engine = |source| SpecError::Engine { line, source };
    match query {
        Query::Lifts { sequence, alpha, beta, witnesses } => {
            let s = ws.sequence_at(sequence, line)?;
            let q = s.quotient();
            let (a, b) = (element(q, alpha, line)?, element(q, beta, line)?);
            let c = count_lifts(s, a, b, cfg, *witnesses || opts.witnesses).map_err(engine)?;
            let t = s.total();
            let q8_value_set = if is_q8(s.kernel()) { Some(q8_value_set_check(&c).map_err(engine)?) } else { None };
            Ok(Outcome::Lifts(LiftsOutcome {
                sequence: sequence.clone(),
                alpha: alpha.clone(),
                beta: beta.clone(),
                kernel_order: s.kernel().order(),
                brute_count: c.brute_count,
                formula_count: c.formula_count,
                consistent: c.consistent(),
                q8_value_set,
                terms: c.terms.iter().map(TermRecord::from_term).collect(),
                witnesses: c
                    .witnesses
                    .map(|w| w.iter().map(|&(x, y)| (t.label(x).to_string(), t.label(y).to_string())).collect()),
            }))
        }
        Query::Homs { sequence, pairs } => {
            let s = ws.sequence_at(sequence, line)?;
            let q = s.quotient();
            let idx = pairs
                .iter()
                .map(|(a, b)| Ok((element(q, a, line)?, element(q, b, line)?)))
                .collect::<Result<Vec<_>, SpecError>>()?;
            let sd = SurfaceDatum::new(q, idx).map_err(engine)?;
            let h = count_homs(s, &sd, cfg).map_err(engine)?;
            let (brute_count, brute_skipped) = match h.brute {
                HomBrute::Count(c) => (Some(c), None),
                HomBrute::Skipped(cost) => (None, Some(cost.to_string())),
            };
            let q8_shape = if is_q8(s.kernel()) { q8_genus_shape(h.formula_count, h.genus) } else { None };
            Ok(Outcome::Homs(HomsOutcome {
                sequence: sequence.clone(),
                pairs: pairs.clone(),
                genus: h.genus,
                brute_count,
                brute_skipped,
                formula_count: h.formula_count,
                consistent: h.consistent(),
                q8_shape,
                terms: h.terms.iter().map(TermRecord::from_term).collect(),
            }))
        }
        Query::Obstruction { sequence, pair } => {
            let s = ws.sequence_at(sequence, line)?;
            let r = five_term_obstruction(s).map_err(engine)?;
            let lift_count = match pair {
                Some((a, b)) => {
                    let q = s.quotient();
                    let (a, b) = (element(q, a, line)?, element(q, b, line)?);
                    Some(liftcount_core::census::count_lifts_brute(s, a, b, false).map_err(engine)?.count)
                }
                None => None,
            };
            Ok(Outcome::Obstruction(ObstructionOutcome {
                sequence: sequence.clone(),
                kernel_order: r.kernel_order,
                rel_commutator_order: r.rel_commutator_order,
                quotient_order: r.quotient_order,
                verdict: r.verdict.to_string(),
                lift_count,
            }))
        }
        Query::Irreps { group } => {
            let g = ws.group_at(group, line)?;
            let cat = irreducible_reps(g, cfg).map_err(engine)?;
            Ok(Outcome::Irreps(IrrepsOutcome {
                group: group.clone(),
                order: g.order(),
                dims: cat.table.dims.clone(),
                max_hom_defect: cat.reps.iter().map(|r| r.hom_defect()).fold(0.0, f64::max),
                max_unitarity_defect: cat.reps.iter().map(|r| r.unitarity_defect()).fold(0.0, f64::max),
            }))
        }
        Query::Classes { group } => {
            let g = ws.group_at(group, line)?;
            let cc = conjugacy_classes(g);
            let classes = cc
                .representatives
                .iter()
                .zip(&cc.sizes)
                .map(|(&r, &size)| ClassRecord {
                    representative: g.label(r).to_string(),
                    size,
                    element_order: g.element_order(r),
                })
                .collect();
            Ok(Outcome::Classes(ClassesOutcome { group: group.clone(), order: g.order(), classes }))
        }
        Query::VerifyPaper => Ok(Outcome::Golden(crate::golden::verify_paper(cfg))),
    }
}
