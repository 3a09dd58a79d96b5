//! Query results as plain data, rendered either as JSON or as aligned text.
//! Both renderings read the same structs, so their numbers always agree.

use std::fmt::Write;

use liftcount_core::census::IrrTerm;
use liftcount_core::numeric::Snapped;
use liftcount_core::EngineConfig;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ToleranceRecord {
    pub eps: f64,
    pub snap_eps: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub seed: u64,
    pub tolerance: ToleranceRecord,
    pub records: Vec<QueryRecord>,
    pub success: bool,
}

impl Report {
    pub fn new(cfg: &EngineConfig, records: Vec<QueryRecord>) -> Self {
        let success = records.iter().all(|r| r.ok);
        Report { seed: cfg.seed, tolerance: ToleranceRecord { eps: cfg.tol.eps, snap_eps: cfg.tol.snap_eps }, records, success }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QueryRecord {
    /// The query as written in spec syntax.
    pub query: String,
    pub line: usize,
    pub elapsed_ms: f64,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<Outcome>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    Lifts(LiftsOutcome),
    Homs(HomsOutcome),
    Obstruction(ObstructionOutcome),
    Irreps(IrrepsOutcome),
    Classes(ClassesOutcome),
    Golden(GoldenOutcome),
    Explore(ExploreOutcome),
}

#[derive(Debug, Clone, Serialize)]
pub struct TermRecord {
    pub irrep: usize,
    pub dim: usize,
    pub stabilized: bool,
    /// `(k, m)` for `e^{2πik/m}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<(f64, f64)>,
}

impl TermRecord {
    pub fn from_term(t: &IrrTerm) -> Self {
        let (root, value) = match t.evaluation {
            Some(Snapped::Root(r)) => (Some((r.k, r.m)), Some((r.value().re, r.value().im))),
            Some(Snapped::Raw(z)) => (None, Some((z.re, z.im))),
            None => (None, None),
        };
        TermRecord { irrep: t.irrep, dim: t.dim, stabilized: t.stabilized, root, value }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftsOutcome {
    pub sequence: String,
    pub alpha: String,
    pub beta: String,
    pub kernel_order: usize,
    pub brute_count: u64,
    pub formula_count: i64,
    pub consistent: bool,
    /// Whether the count lies in {0, 8, 16, 24, 40}; only for Q8 kernels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q8_value_set: Option<bool>,
    pub terms: Vec<TermRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomsOutcome {
    pub sequence: String,
    pub pairs: Vec<(String, String)>,
    pub genus: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_count: Option<u64>,
    /// Tuple count when the exhaustive search was skipped (decimal string).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_skipped: Option<String>,
    pub formula_count: i64,
    pub consistent: bool,
    /// `(N, sign)` with `count = 8^{2d-1}(N + sign·2^{2-2d})`, Q8 kernels only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q8_shape: Option<(u32, i8)>,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionOutcome {
    pub sequence: String,
    pub kernel_order: usize,
    pub rel_commutator_order: usize,
    pub quotient_order: usize,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift_count: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IrrepsOutcome {
    pub group: String,
    pub order: usize,
    pub dims: Vec<usize>,
    pub max_hom_defect: f64,
    pub max_unitarity_defect: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub representative: String,
    pub size: usize,
    pub element_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassesOutcome {
    pub group: String,
    pub order: usize,
    pub classes: Vec<ClassRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GoldenLine {
    pub id: String,
    pub title: String,
    pub passed: bool,
    /// Reported but never counted as a failure.
    pub informational: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GoldenOutcome {
    pub lines: Vec<GoldenLine>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExploreRow {
    pub sequence: String,
    pub genus: usize,
    pub count: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<(u32, i8)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExploreOutcome {
    pub rows: Vec<ExploreRow>,
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "  {}", line(header.iter().map(|s| s.to_string()).collect()));
    for r in rows {
        let _ = writeln!(out, "  {}", line(r.clone()));
    }
}

fn fmt_root(t: &TermRecord) -> String {
    match (t.root, t.value) {
        (Some((k, m)), _) => format!("e^(2pi i {k}/{m})"),
        (None, Some((re, im))) => format!("{re:.6}{im:+.6}i (unsnapped)"),
        (None, None) => "-".to_string(),
    }
}

fn terms_table(out: &mut String, terms: &[TermRecord]) {
    let rows: Vec<Vec<String>> = terms
        .iter()
        .map(|t| vec![t.irrep.to_string(), t.dim.to_string(), if t.stabilized { "yes" } else { "no" }.to_string(), fmt_root(t)])
        .collect();
    table(out, &["irrep", "dim", "stable", "evaluation"], &rows);
}

fn render_outcome(out: &mut String, o: &Outcome) {
    match o {
        Outcome::Lifts(l) => {
            let _ = writeln!(out, "  sequence {}  pair ({}, {})  |kernel| {}", l.sequence, l.alpha, l.beta, l.kernel_order);
            let _ = writeln!(
                out,
                "  brute {}  formula {}  {}",
                l.brute_count,
                l.formula_count,
                if l.consistent { "agree" } else { "DISAGREE" }
            );
            if let Some(v) = l.q8_value_set {
                let _ = writeln!(out, "  in {{0, 8, 16, 24, 40}}: {v}");
            }
            terms_table(out, &l.terms);
            if let Some(w) = &l.witnesses {
                let _ = writeln!(out, "  witnesses ({}):", w.len());
                for (a, b) in w {
                    let _ = writeln!(out, "    ({a}, {b})");
                }
            }
        }
        Outcome::Homs(h) => {
            let pairs: Vec<String> = h.pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            let _ = writeln!(out, "  sequence {}  genus {}  datum {}", h.sequence, h.genus, pairs.join(" "));
            let brute = match (&h.brute_count, &h.brute_skipped) {
                (Some(c), _) => c.to_string(),
                (None, Some(cost)) => format!("skipped ({cost} tuples)"),
                _ => "-".to_string(),
            };
            let _ = writeln!(
                out,
                "  brute {brute}  formula {}  {}",
                h.formula_count,
                if h.consistent { "agree" } else { "DISAGREE" }
            );
            if let Some((n, s)) = h.q8_shape {
                let _ = writeln!(out, "  shape N = {n}, sign {}", if s > 0 { "+" } else { "-" });
            }
            terms_table(out, &h.terms);
        }
        Outcome::Obstruction(o) => {
            let _ = writeln!(
                out,
                "  sequence {}  |kernel| {}  |[kernel, total]| {}  quotient order {}",
                o.sequence, o.kernel_order, o.rel_commutator_order, o.quotient_order
            );
            let _ = writeln!(out, "  verdict: {}", o.verdict);
            if let Some(c) = o.lift_count {
                let _ = writeln!(out, "  lift count {c}");
            }
        }
        Outcome::Irreps(r) => {
            let dims: Vec<String> = r.dims.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "  group {}  order {}  {} irreps, dims [{}]", r.group, r.order, r.dims.len(), dims.join(", "));
            let _ =
                writeln!(out, "  max hom defect {:.2e}  max unitarity defect {:.2e}", r.max_hom_defect, r.max_unitarity_defect);
        }
        Outcome::Classes(c) => {
            let _ = writeln!(out, "  group {}  order {}  {} classes", c.group, c.order, c.classes.len());
            let rows: Vec<Vec<String>> = c
                .classes
                .iter()
                .map(|k| vec![k.representative.clone(), k.size.to_string(), k.element_order.to_string()])
                .collect();
            table(out, &["representative", "size", "order"], &rows);
        }
        Outcome::Golden(g) => {
            let rows: Vec<Vec<String>> = g
                .lines
                .iter()
                .map(|l| {
                    let status = match (l.informational, l.passed) {
                        (true, _) => "info",
                        (false, true) => "PASS",
                        (false, false) => "FAIL",
                    };
                    vec![l.id.clone(), status.to_string(), l.title.clone(), l.detail.clone()]
                })
                .collect();
            table(out, &["id", "status", "check", "detail"], &rows);
        }
        Outcome::Explore(e) => {
            let rows: Vec<Vec<String>> = e
                .rows
                .iter()
                .map(|r| {
                    let shape = match r.shape {
                        Some((n, s)) => format!("N={n} {}", if s > 0 { "+" } else { "-" }),
                        None => "-".to_string(),
                    };
                    vec![r.sequence.clone(), r.genus.to_string(), r.count.to_string(), shape]
                })
                .collect();
            table(out, &["sequence", "genus", "count", "shape"], &rows);
        }
    }
}

/// Aligned plain-text rendering.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "seed {}  eps {:e}  snap_eps {:e}", report.seed, report.tolerance.eps, report.tolerance.snap_eps);
    for r in &report.records {
        let status = if r.ok { "ok" } else { "FAILED" };
        if r.line > 0 {
            let _ = writeln!(out, "\n[{status}] {}  (line {}, {:.1} ms)", r.query, r.line, r.elapsed_ms);
        } else {
            let _ = writeln!(out, "\n[{status}] {}  ({:.1} ms)", r.query, r.elapsed_ms);
        }
        if let Some(e) = &r.error {
            let _ = writeln!(out, "  error: {e}");
        }
        if let Some(o) = &r.outcome {
            render_outcome(&mut out, o);
        }
    }
    let _ = writeln!(out, "\n{}", if report.success { "all queries succeeded" } else { "some queries FAILED" });
    out
}
