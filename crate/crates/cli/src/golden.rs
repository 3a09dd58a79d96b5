//! Built-in verification suite: one line per checked claim, run against the
//! shipped spec fixtures and seeded random corpora.

use std::time::Instant;

use liftcount_core::census::{
    commuting_pairs, count_homs_brute, count_homs_formula, count_lifts, count_lifts_brute, count_lifts_formula_with,
    extraspecial_census, five_term_obstruction, frobenius_mednykh, is_q8, q8_genus_shape, s3_d4_a4_census, HomBrute, IrrTerm,
    ObstructionVerdict, Q8_VALUE_SET,
};
use liftcount_core::cocycle::{
    eta_cocycle, lemma1_check, torus_value, zeta_cocycle, zeta_from_conjugators, SurfaceDatum, TwoCocycle,
};
use liftcount_core::fixtures::{random_group, random_q8_extension, trivial_extension};
use liftcount_core::group::{automorphism_group, catalog, cyclic, Automorphism, Subgroup, CATALOG_NAMES};
use liftcount_core::numeric::root_of_unity;
use liftcount_core::rep::{aut_action, character_table, irr_action, irreducible_reps, IrrCatalog};
use liftcount_core::{EngineConfig, FiniteGroup, GroupRef, ShortExactSequence};
use rand::Rng;

use crate::report::{GoldenLine, GoldenOutcome};
use crate::spec::Workspace;

/// Random extensions in the value-set check.
pub const RANDOM_EXTENSIONS: usize = 200;
/// Random groups in the representation invariant check.
pub const RANDOM_GROUPS: usize = 50;

// rng stream tags, kept away from the engine's own
const STREAM_EXTENSIONS: u64 = 101;
const STREAM_GROUPS: u64 = 102;
const STREAM_SECTIONS: u64 = 103;

type Check = Result<(bool, String), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

struct Builtin {
    ws: Workspace,
}

impl Builtin {
    fn load() -> Result<Self, String> {
        let doc = crate::builtin_spec().map_err(err)?;
        Ok(Builtin { ws: Workspace::build(&doc).map_err(err)? })
    }

    fn seq(&self, name: &str) -> Result<&ShortExactSequence, String> {
        self.ws.sequence(name).ok_or_else(|| format!("missing built-in sequence {name}"))
    }

    /// The sequence with its `alpha, beta` pair.
    fn pair(&self, name: &str) -> Result<(&ShortExactSequence, usize, usize), String> {
        let s = self.seq(name)?;
        let q = s.quotient();
        let a = q.find_label("alpha").ok_or("no alpha")?;
        let b = q.find_label("beta").ok_or("no beta")?;
        Ok((s, a, b))
    }
}

/// Snapped evaluations of the stabilized terms, rounded to integers.
pub fn bracket(terms: &[IrrTerm]) -> Vec<i64> {
    terms.iter().filter_map(|t| t.evaluation.map(|v| v.value().re.round() as i64)).collect()
}

fn two_dim(cat: &IrrCatalog) -> Result<usize, String> {
    cat.table.dims.iter().position(|&d| d == 2).ok_or_else(|| "no 2-dimensional irrep".to_string())
}

fn frobenius() -> Check {
    let cfg = EngineConfig::default();
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, expect) in [("Q8", 40u128), ("S3", 18), ("D4", 40), ("A4", 48)] {
        let g = catalog(name).map_err(err)?;
        let brute = commuting_pairs(&g).len() as u128;
        let formula = frobenius_mednykh(&g, 1, &cfg).map_err(err)?;
        ok &= brute == expect && formula == expect;
        detail.push(format!("{name} {brute}/{formula}"));
    }
    Ok((ok, detail.join(", ")))
}

const LIFT_TABLE: [(&str, u64, &[i64]); 5] = [
    ("n0", 0, &[1, -1]),
    ("n8", 8, &[1, 1, -1]),
    ("n16", 16, &[1, 1]),
    ("n24", 24, &[1, 1, 1, 1, -1]),
    ("n40", 40, &[1, 1, 1, 1, 1]),
];

fn lift_line(b: &Builtin, name: &str, expect: u64, bracket_expect: &[i64], cfg: &EngineConfig) -> Result<(bool, String), String> {
    let (s, a, bb) = b.pair(name)?;
    let c = count_lifts(s, a, bb, cfg, false).map_err(err)?;
    let br = bracket(&c.terms);
    let ok = c.brute_count == expect && c.formula_count == expect as i64 && br == bracket_expect;
    Ok((ok, format!("{name}: brute {} formula {} bracket {:?}", c.brute_count, c.formula_count, br)))
}

fn lift_table(b: &Builtin, cfg: &EngineConfig) -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, n, br) in LIFT_TABLE {
        let (o, d) = lift_line(b, name, n, br, cfg)?;
        ok &= o;
        detail.push(d);
    }
    Ok((ok, detail.join("; ")))
}

fn remark(b: &Builtin, cfg: &EngineConfig) -> Check {
    lift_line(b, "remark", 24, &[1, 1, 1], cfg)
}

fn obstruction(b: &Builtin) -> Check {
    let (s, a, bb) = b.pair("n0")?;
    let r = five_term_obstruction(s).map_err(err)?;
    let count = count_lifts_brute(s, a, bb, false).map_err(err)?.count;
    Ok((
        r.verdict == ObstructionVerdict::Vanishes && count == 0,
        format!("n0: {}; |[kernel, total]| {}; lifts {count}", r.verdict, r.rel_commutator_order),
    ))
}

fn zeta_eta_agreement(b: &Builtin, cfg: &EngineConfig) -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, _, _) in LIFT_TABLE {
        let s = b.seq(name)?;
        let cat = irreducible_reps(s.kernel(), cfg).map_err(err)?;
        let passed = lemma1_check(s, &cat.reps[two_dim(&cat)?], cfg).map_err(err)?;
        ok &= passed;
        detail.push(format!("{name} rho0 {}", if passed { "ok" } else { "mismatch" }));
    }
    let s = b.seq("n24")?;
    let cat = irreducible_reps(s.kernel(), cfg).map_err(err)?;
    let linear: Vec<usize> = (0..cat.len()).filter(|&r| cat.table.dims[r] == 1).collect();
    let mut agree = 0;
    for &row in &linear {
        if lemma1_check(s, &cat.reps[row], cfg).map_err(err)? {
            agree += 1;
        }
    }
    ok &= linear.len() == 4 && agree == 4;
    detail.push(format!("n24 linear {agree}/{}", linear.len()));
    Ok((ok, detail.join(", ")))
}

fn q8_automorphisms_on_characters(cfg: &EngineConfig) -> Check {
    let q8: GroupRef = catalog("Q8").map_err(err)?.to_ref();
    let cat = irreducible_reps(&q8, cfg).map_err(err)?;
    let auts = automorphism_group(&q8).map_err(err)?;
    let nontrivial_linear: Vec<usize> = (1..cat.len()).filter(|&r| cat.table.dims[r] == 1).collect();
    let (mut four, mut three, mut ok) = (0, 0, auts.len() == 24 && nontrivial_linear.len() == 3);
    for phi in &auts {
        let perm = aut_action(&cat, phi).map_err(err)?;
        let fixed = nontrivial_linear.iter().filter(|&&r| perm[r] == r).count();
        match phi.order() {
            4 => {
                four += 1;
                ok &= fixed == 1;
            }
            3 => {
                three += 1;
                ok &= fixed == 0;
            }
            _ => {}
        }
    }
    Ok((ok, format!("{} automorphisms; {four} of order 4 fix one, {three} of order 3 fix none", auts.len())))
}

fn genus_two(b: &Builtin, cfg: &EngineConfig) -> Check {
    let q8 = catalog("Q8").map_err(err)?;
    let s = trivial_extension(&q8, &cyclic(1).map_err(err)?).map_err(err)?;
    let sd = SurfaceDatum::new(s.quotient(), vec![(0, 0), (0, 0)]).map_err(err)?;
    let brute = count_homs_brute(&s, &sd).map_err(err)?;
    let fm = frobenius_mednykh(&q8, 2, cfg).map_err(err)?;
    let mut ok = brute == HomBrute::Count(2176) && fm == 2176;
    let (s, a, bb) = b.pair("n24")?;
    let sd = SurfaceDatum::new(s.quotient(), vec![(a, bb), (a, bb)]).map_err(err)?;
    let hb = count_homs_brute(s, &sd).map_err(err)?;
    let hf = count_homs_formula(s, &sd, cfg).map_err(err)?;
    let shape = q8_genus_shape(hf, 2);
    ok &= hb == HomBrute::Count(hf as u64) && matches!(shape, Some((1 | 2 | 4, _)));
    let shape_text = match shape {
        Some((n, sign)) => format!("8^3({n} {} 1/4)", if sign > 0 { "+" } else { "-" }),
        None => "no shape".to_string(),
    };
    Ok((ok, format!("Q8 genus 2: brute {brute:?}, formula {fm}; n24 genus 2: brute {hb:?}, formula {hf} = {shape_text}")))
}

fn value_set(cfg: &EngineConfig) -> Check {
    let mut rng = cfg.rng(STREAM_EXTENSIONS);
    let mut pairs = 0usize;
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..RANDOM_EXTENSIONS {
        let s = random_q8_extension(&mut rng).map_err(err)?;
        if !is_q8(s.kernel()) || s.total().order() > 64 {
            return Ok((false, format!("instance {i}: kernel is not Q8 or total order exceeds 64")));
        }
        let cat = irreducible_reps(s.kernel(), cfg).map_err(err)?;
        for (a, bb) in commuting_pairs(s.quotient()) {
            let brute = count_lifts_brute(&s, a, bb, false).map_err(err)?.count;
            let formula = count_lifts_formula_with(&s, &cat, a, bb, cfg).map_err(err)?.count;
            pairs += 1;
            seen.insert(brute);
            if !Q8_VALUE_SET.contains(&brute) || formula != brute as i64 {
                return Ok((false, format!("instance {i}: brute {brute}, formula {formula}")));
            }
        }
    }
    Ok((true, format!("{RANDOM_EXTENSIONS} extensions, {pairs} pairs, values seen {seen:?}")))
}

/// Worst defects `(orthogonality, dimension sum, hom, unitarity)` for one group.
pub fn rep_defects(g: &FiniteGroup, cfg: &EngineConfig) -> Result<[f64; 4], String> {
    let gr: GroupRef = g.clone().to_ref();
    let table = character_table(g, cfg).map_err(err)?;
    let n = g.order() as f64;
    let rows: Vec<_> = (0..table.len()).map(|r| table.on_elements(r)).collect();
    let mut orth: f64 = 0.0;
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            let ip: liftcount_core::Scalar = a.iter().zip(b).map(|(x, y)| x * y.conj()).sum::<liftcount_core::Scalar>() / n;
            let target = if i == j { 1.0 } else { 0.0 };
            orth = orth.max((ip - target).norm());
        }
    }
    let dim_sum: usize = table.dims.iter().map(|d| d * d).sum();
    let cat = irreducible_reps(&gr, cfg).map_err(err)?;
    let hom = cat.reps.iter().map(|r| r.hom_defect()).fold(0.0, f64::max);
    let unit = cat.reps.iter().map(|r| r.unitarity_defect()).fold(0.0, f64::max);
    Ok([orth, (dim_sum as f64 - n).abs(), hom, unit])
}

fn rep_invariants(cfg: &EngineConfig) -> Check {
    let mut groups: Vec<(String, FiniteGroup)> = Vec::new();
    for name in CATALOG_NAMES {
        groups.push((name.to_string(), catalog(name).map_err(err)?));
    }
    let mut rng = cfg.rng(STREAM_GROUPS);
    for i in 0..RANDOM_GROUPS {
        groups.push((format!("random #{i}"), random_group(&mut rng, 64).map_err(err)?));
    }
    let limits = [1e-7, 1e-8, 1e-7, 1e-7];
    let mut worst = [0.0f64; 4];
    for (name, g) in &groups {
        let d = rep_defects(g, cfg).map_err(|e| format!("{name}: {e}"))?;
        for k in 0..4 {
            worst[k] = worst[k].max(d[k]);
        }
        if d.iter().zip(&limits).any(|(x, l)| x > l) {
            return Ok((false, format!("{name} (order {}): defects {d:?}", g.order())));
        }
    }
    Ok((
        true,
        format!(
            "{} groups; worst orthogonality {:.1e}, dims {:.0e}, hom {:.1e}, unitarity {:.1e}",
            groups.len(),
            worst[0],
            worst[1],
            worst[2],
            worst[3]
        ),
    ))
}

fn torus_values(c: &TwoCocycle, s: &ShortExactSequence, cfg: &EngineConfig) -> Result<Vec<liftcount_core::Scalar>, String> {
    let q = s.quotient();
    commuting_pairs(q).into_iter().map(|(x, y)| torus_value(c, x, y, &cfg.tol).map(|v| v.value()).map_err(err)).collect()
}

fn cocycles(b: &Builtin, cfg: &EngineConfig) -> Check {
    let mut rng = cfg.rng(STREAM_SECTIONS);
    let mut worst_identity: f64 = 0.0;
    let mut worst_change: f64 = 0.0;
    let mut checked = 0;
    for name in ["n0", "n8", "n16", "n24", "n40", "remark"] {
        let s = b.seq(name)?;
        let q = s.quotient().clone();
        let cat = irreducible_reps(s.kernel(), cfg).map_err(err)?;
        let act = irr_action(s, &cat).map_err(err)?;
        let whole = Subgroup::whole(&q);
        let kernel = s.kernel_subgroup();
        for row in (0..cat.len()).filter(|&r| act.is_fully_stabilized(r, q.order())) {
            let base = zeta_cocycle(s, &cat.reps[row], &whole, cfg).map_err(err)?;
            let section = q
                .elements()
                .map(|a| if a == 0 { 0 } else { s.total().mul(s.lift(a), kernel.members()[rng.gen_range(0..kernel.order())]) })
                .collect();
            let s2 = s.with_section(section).map_err(err)?;
            let other = zeta_cocycle(&s2, &cat.reps[row], &whole, cfg).map_err(err)?;
            let rescaled =
                base.conjugators
                    .iter()
                    .enumerate()
                    .map(|(x, m)| {
                        if x == 0 {
                            m.clone()
                        } else {
                            m.scale(root_of_unity(rng.gen_range(0..12), 12) * rng.gen_range(0.5..2.0))
                        }
                    })
                    .collect();
            let third = zeta_from_conjugators(s, &cat.reps[row], &whole, rescaled).map_err(err)?;
            for c in [&base, &other, &third] {
                worst_identity = worst_identity.max(c.cocycle_defect());
            }
            let t0 = torus_values(&base, s, cfg)?;
            for c in [&other, &third] {
                let t = torus_values(c, s, cfg)?;
                worst_change = t0.iter().zip(&t).map(|(x, y)| (x - y).norm()).fold(worst_change, f64::max);
            }
            checked += 1;
        }
    }
    // η on the stabilizer of each irrep inside the full automorphism group
    let mut worst_eta: f64 = 0.0;
    let mut eta_count = 0;
    for name in ["Q8", "D4", "S3", "A4"] {
        let g: GroupRef = catalog(name).map_err(err)?.to_ref();
        let cat = irreducible_reps(&g, cfg).map_err(err)?;
        let auts = automorphism_group(&g).map_err(err)?;
        let perms: Vec<Vec<usize>> = auts.iter().map(|a| aut_action(&cat, a)).collect::<Result<_, _>>().map_err(err)?;
        for row in 0..cat.len() {
            let stab: Vec<Automorphism> =
                auts.iter().zip(&perms).filter(|(_, p)| p[row] == row).map(|(a, _)| a.clone()).collect();
            let eta = eta_cocycle(&cat.reps[row], &stab, cfg).map_err(err)?;
            let n = cat.table.dims[row] as i32;
            worst_eta = eta.values.iter().map(|v| (v.powi(n) - 1.0).norm()).fold(worst_eta, f64::max);
            worst_identity = worst_identity.max(eta.cocycle_defect());
            eta_count += 1;
        }
    }
    let ok = worst_identity <= 1e-7 && worst_change <= 1e-7 && worst_eta <= 1e-7;
    Ok((
        ok,
        format!(
            "{checked} zeta cocycles, {eta_count} eta cocycles; identity {worst_identity:.1e}, holonomy drift {worst_change:.1e}, eta^n - 1 {worst_eta:.1e}"
        ),
    ))
}

fn extraspecial(b: &Builtin, cfg: &EngineConfig) -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, expect) in [("es_q8", 40u64), ("es_d4", 40), ("es_d4d4", 544), ("es_q8d4", 544)] {
        let (s, a, bb) = b.pair(name)?;
        let c = extraspecial_census(s, a, bb, cfg).map_err(err)?;
        ok &= c.in_predicted && c.census.consistent() && c.census.brute_count == expect;
        detail.push(format!("{name}: r={} N={} count {} in {:?}", c.r, c.n_stable, c.census.brute_count, c.predicted));
    }
    Ok((ok, detail.join("; ")))
}

fn d4_report(b: &Builtin, cfg: &EngineConfig) -> Check {
    let (s, a, bb) = b.pair("d4_outer")?;
    let c = s3_d4_a4_census(s, a, bb, cfg).map_err(err)?;
    let auts = automorphism_group(s.kernel()).map_err(err)?.len();
    Ok((
        c.census.consistent(),
        format!(
            "d4_outer: brute {} formula {}, in {:?}: {}; |Aut(D4)| = {auts}, so outer automorphisms exist",
            c.census.brute_count, c.census.formula_count, c.expected, c.in_expected
        ),
    ))
}

/// Runs every check. Failures, including engine errors, become failed lines.
pub fn verify_paper(cfg: &EngineConfig) -> GoldenOutcome {
    let builtin = Builtin::load();
    let mut lines = Vec::new();
    let mut push = |id: &str, title: &str, informational: bool, f: &dyn Fn(&Builtin) -> Check| {
        let start = Instant::now();
        let res = match &builtin {
            Ok(b) => f(b),
            Err(e) => Err(format!("built-in spec: {e}")),
        };
        let (passed, detail) = match res {
            Ok((p, d)) => (p, d),
            Err(e) => (false, format!("error: {e}")),
        };
        let detail = format!("{detail} [{:.2} s]", start.elapsed().as_secs_f64());
        lines.push(GoldenLine { id: id.to_string(), title: title.to_string(), passed, informational, detail });
    };
    push("1", "commuting pairs by enumeration and by character degrees", false, &|_| frobenius());
    push("2", "lift counts 0, 8, 16, 24, 40 with per-irrep brackets", false, &|b| lift_table(b, cfg));
    push("3", "Q16 x Z2 gives 8(1+1+1)", false, &|b| remark(b, cfg));
    push("4", "vanishing five-term obstruction with no lifts", false, &|b| obstruction(b));
    push("5", "zeta agrees with eta on commuting pairs", false, &|b| zeta_eta_agreement(b, cfg));
    push("6", "Aut(Q8) action on the linear characters", false, &|_| q8_automorphisms_on_characters(cfg));
    push("7", "genus-two counts by enumeration and by formula", false, &|b| genus_two(b, cfg));
    push("8", "random Q8-kernel extensions stay in {0, 8, 16, 24, 40}", false, &|_| value_set(cfg));
    push("9", "representation invariants on catalog and random groups", false, &|_| rep_invariants(cfg));
    push("10", "cocycle identity and holonomy invariance", false, &|b| cocycles(b, cfg));
    push("11", "extraspecial kernels: 2^(2r+1)(1 + N +- 1)", false, &|b| extraspecial(b, cfg));
    push("D4", "D4 kernel value set {24, 40}", true, &|b| d4_report(b, cfg));
    let passed = lines.iter().all(|l| l.passed || l.informational);
    GoldenOutcome { lines, passed }
}
