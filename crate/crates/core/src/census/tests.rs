use alloc::vec::Vec;

use super::*;
use crate::cocycle::SurfaceDatum;
use crate::config::EngineConfig;
use crate::fixtures::{self, trivial_extension, two_generator_abelian};
use crate::group::{catalog, cyclic};

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

/// Sum of snapped term values, as integers.
fn bracket(terms: &[IrrTerm]) -> Vec<i64> {
    terms.iter().filter_map(|t| t.evaluation.map(|v| libm::round(v.value().re) as i64)).collect()
}

#[test]
fn lift_fixtures_brute_and_formula() {
    let brackets: [&[i64]; 5] = [&[1, -1], &[1, 1, -1], &[1, 1], &[1, 1, 1, 1, -1], &[1, 1, 1, 1, 1]];
    for ((n, f), expect) in fixtures::lift_count_fixtures().unwrap().into_iter().zip(brackets) {
        let c = count_lifts(&f.ses, f.alpha, f.beta, &cfg(), false).unwrap();
        assert_eq!(c.brute_count, n as u64, "{}", f.name);
        assert_eq!(c.formula_count, n, "{}", f.name);
        assert_eq!(bracket(&c.terms), expect, "{}", f.name);
        assert!(q8_value_set_check(&c).unwrap());
    }
}

#[test]
fn q16_direct_splits_as_three_ones() {
    let f = fixtures::q16_direct().unwrap();
    let c = count_lifts(&f.ses, f.alpha, f.beta, &cfg(), false).unwrap();
    assert_eq!((c.brute_count, c.formula_count), (24, 24));
    assert_eq!(bracket(&c.terms), [1, 1, 1]);
}

#[test]
fn witnesses_include_named_lifts() {
    let f = fixtures::q16_twisted().unwrap();
    let b = count_lifts_brute(&f.ses, f.alpha, f.beta, true).unwrap();
    let w = b.witnesses.unwrap();
    assert_eq!(w.len(), 8);
    let g = f.ses.total();
    let pair = (g.parse_element("a*b").unwrap(), g.parse_element("a^2*b*z").unwrap());
    assert!(w.contains(&pair));
    assert!(w.iter().all(|&(a, b)| g.commutes(a, b)));
}

#[test]
fn non_commuting_pair_rejected() {
    let s = trivial_extension(&cyclic(2).unwrap(), &catalog("S3").unwrap()).unwrap();
    let q = s.quotient();
    let (a, b) = (q.find_label("(12)").unwrap(), q.find_label("(123)").unwrap());
    assert_eq!(count_lifts_brute(&s, a, b, false).unwrap_err(), crate::Error::NotCommuting);
}

#[test]
fn frobenius_values() {
    let c = cfg();
    assert_eq!(frobenius_mednykh(&cyclic(1).unwrap(), 3, &c).unwrap(), 1);
    let q8 = catalog("Q8").unwrap();
    assert_eq!(frobenius_mednykh(&q8, 1, &c).unwrap(), 40);
    assert_eq!(frobenius_mednykh(&q8, 2, &c).unwrap(), 2176);
    // direct count of commuting pairs
    for name in ["S3", "D4", "A4", "S4"] {
        let g = catalog(name).unwrap();
        assert_eq!(frobenius_mednykh(&g, 1, &c).unwrap(), commuting_pairs(&g).len() as u128, "{name}");
    }
}

#[test]
fn genus_two_counts() {
    let c = cfg();
    let one = cyclic(1).unwrap();
    let s = trivial_extension(&catalog("Q8").unwrap(), &one).unwrap();
    let sd = SurfaceDatum::new(s.quotient(), alloc::vec![(0, 0), (0, 0)]).unwrap();
    let h = count_homs(&s, &sd, &c).unwrap();
    assert_eq!(h.brute, HomBrute::Count(2176));
    assert_eq!(h.formula_count, 2176);

    let s = trivial_extension(&cyclic(4).unwrap(), &one).unwrap();
    assert_eq!(count_homs_brute(&s, &sd).unwrap(), HomBrute::Count(256));
    assert_eq!(count_homs_formula(&s, &sd, &c).unwrap(), 256);

    let f = fixtures::q8_inner().unwrap();
    let sd = SurfaceDatum::new(f.ses.quotient(), alloc::vec![(f.alpha, f.beta), (f.alpha, f.beta)]).unwrap();
    let h = count_homs(&f.ses, &sd, &c).unwrap();
    assert!(h.consistent());
    let (n, _) = q8_genus_shape(h.formula_count, 2).unwrap();
    assert!([1, 2, 4].contains(&n));
}

#[test]
fn genus_one_matches_lifts() {
    for (_, f) in fixtures::lift_count_fixtures().unwrap() {
        let sd = SurfaceDatum::torus(f.ses.quotient(), f.alpha, f.beta).unwrap();
        let h = count_homs(&f.ses, &sd, &cfg()).unwrap();
        let l = count_lifts_brute(&f.ses, f.alpha, f.beta, false).unwrap();
        assert_eq!(h.brute, HomBrute::Count(l.count));
        assert_eq!(h.formula_count as u64, l.count);
    }
}

#[test]
fn brute_guard_skips_large_genus() {
    let s = trivial_extension(&catalog("Q8").unwrap(), &cyclic(1).unwrap()).unwrap();
    let sd = SurfaceDatum::new(s.quotient(), alloc::vec![(0, 0); 5]).unwrap();
    assert_eq!(count_homs_brute(&s, &sd).unwrap(), HomBrute::Skipped(8u128.pow(10)));
    // formula still works: frobenius_mednykh at genus 5
    let f = count_homs_formula(&s, &sd, &cfg()).unwrap();
    assert_eq!(f as u128, frobenius_mednykh(&catalog("Q8").unwrap(), 5, &cfg()).unwrap());
}

#[test]
fn genus_shape_decomposition() {
    assert_eq!(q8_genus_shape(512 * 4 + 128, 2), Some((4, 1)));
    assert_eq!(q8_genus_shape(512 * 4 - 128, 2), Some((4, -1)));
    assert_eq!(q8_genus_shape(24, 1), Some((2, 1)));
    assert_eq!(q8_genus_shape(7, 2), None);
}

#[test]
fn value_set_guard() {
    let s = trivial_extension(&catalog("S3").unwrap(), &cyclic(2).unwrap()).unwrap();
    let c = count_lifts(&s, 1, 1, &cfg(), false).unwrap();
    assert_eq!(q8_value_set_check(&c).unwrap_err(), crate::Error::KernelNotQ8);
}

#[test]
fn extraspecial_counts() {
    let v = two_generator_abelian(2, 2).unwrap();
    let (a, b) = (v.find_label("alpha").unwrap(), v.find_label("beta").unwrap());
    let f = fixtures::q8_inner().unwrap();
    let e = extraspecial_census(&f.ses, f.alpha, f.beta, &cfg()).unwrap();
    assert_eq!((e.r, e.n_stable, e.census.brute_count), (1, 3, 24));
    assert!(e.in_predicted);

    let s = trivial_extension(&catalog("D4").unwrap(), &v).unwrap();
    let e = extraspecial_census(&s, a, b, &cfg()).unwrap();
    assert_eq!((e.n_stable, e.census.brute_count), (3, 40));

    let s = trivial_extension(&fixtures::d4_central_d4().unwrap(), &v).unwrap();
    let e = extraspecial_census(&s, a, b, &cfg()).unwrap();
    assert_eq!((e.r, e.n_stable, e.census.brute_count, e.census.formula_count), (2, 15, 544, 544));
    assert!(e.in_predicted);

    let s = trivial_extension(&catalog("S3").unwrap(), &v).unwrap();
    assert_eq!(extraspecial_census(&s, a, b, &cfg()).unwrap_err(), crate::Error::NotExtraspecial);
}

#[test]
fn obstruction_reports() {
    let r = five_term_obstruction(&fixtures::q8_no_lifts().unwrap().ses).unwrap();
    assert_eq!(r.verdict, ObstructionVerdict::Vanishes);
    let r = five_term_obstruction(&fixtures::q8_direct().unwrap().ses).unwrap();
    assert_eq!(r.verdict, ObstructionVerdict::Inconclusive(4));
    assert_eq!(r.rel_commutator_order, 2);
    let s = trivial_extension(&cyclic(6).unwrap(), &cyclic(2).unwrap()).unwrap();
    assert_eq!(five_term_obstruction(&s).unwrap().quotient_order, 6);
}

#[test]
fn small_kernels() {
    let v = two_generator_abelian(2, 2).unwrap();
    let (a, b) = (v.find_label("alpha").unwrap(), v.find_label("beta").unwrap());
    for (name, count) in [("S3", 18), ("A4", 48), ("D4", 40)] {
        let s = trivial_extension(&catalog(name).unwrap(), &v).unwrap();
        let c = s3_d4_a4_census(&s, a, b, &cfg()).unwrap();
        assert_eq!(c.census.brute_count, count, "{name}");
        assert!(c.census.consistent());
        assert!(c.in_expected);
    }
    let s = trivial_extension(&catalog("Q8").unwrap(), &v).unwrap();
    assert_eq!(s3_d4_a4_census(&s, a, b, &cfg()).unwrap_err(), crate::Error::KernelUnknown);
}

#[test]
fn d4_outer_action_leaves_the_two_value_set() {
    let f = fixtures::d4_outer().unwrap();
    let c = s3_d4_a4_census(&f.ses, f.alpha, f.beta, &cfg()).unwrap();
    assert_eq!((c.census.brute_count, c.census.formula_count), (8, 8));
    assert!(!c.in_expected);
    assert_eq!(bracket(&c.census.terms), [1, 1, -1]);
}
