use liftcount::spec::{
    parse_spec, parse_syntax, render_spec, Action, ActionMap, GroupExpr, Projection, Query, SequenceDef, SpecDocument, SpecError,
    Workspace,
};
use liftcount::{builtin_spec, BUILTIN_FIXTURES};
use proptest::prelude::*;

#[test]
fn minimal_spec() {
    let doc = parse_spec("group g = cyclic 4").unwrap();
    assert_eq!(doc.groups, vec![("g".to_string(), GroupExpr::Cyclic { n: 4, generator: None })]);
    let ws = Workspace::build(&doc).unwrap();
    assert_eq!(ws.group("g").unwrap().order(), 4);
}

#[test]
fn comments_and_blank_lines() {
    let doc = parse_spec("# header\n\n  group g = catalog Q8   # trailing\n").unwrap();
    assert_eq!(doc.groups.len(), 1);
}

#[test]
fn order_three_fixture_resolves() {
    let (_, text) = BUILTIN_FIXTURES.iter().find(|(n, _)| *n == "n16").unwrap();
    let doc = parse_spec(text).unwrap();
    let ws = Workspace::build(&doc).unwrap();
    assert_eq!(ws.group("G16").unwrap().order(), 72);
    let s = ws.sequence("n16").unwrap();
    assert_eq!(s.kernel().order(), 8);
    assert_eq!(s.quotient().order(), 9);
}

#[test]
fn builtin_spec_merges_shared_definitions() {
    let doc = builtin_spec().unwrap();
    assert_eq!(doc.groups.iter().filter(|(n, _)| n == "Q8").count(), 1);
    let ws = Workspace::build(&doc).unwrap();
    for name in ["n0", "n8", "n16", "n24", "n40", "remark", "d4_outer", "es_d4d4"] {
        assert!(ws.sequence(name).is_some(), "{name}");
    }
    assert_eq!(ws.sequence("n0").unwrap().total().order(), 96);
}

#[test]
fn non_automorphism_action() {
    let text = "group Q8 = catalog Q8\ngroup Z = cyclic 2 z\ngroup G = semidirect Q8 Z\n  act z : i -> j, j -> j\n";
    assert!(matches!(parse_spec(text), Err(SpecError::InvalidAction { line: 3, .. })));
}

#[test]
fn action_violating_relation() {
    // an automorphism of order 3 cannot be the action of an involution
    let text = "group Q8 = catalog Q8\ngroup Z = cyclic 2 z\ngroup G = semidirect Q8 Z\n  act z : i -> j, j -> -k\n";
    assert!(matches!(parse_spec(text), Err(SpecError::InvalidAction { .. })));
}

#[test]
fn unknown_references() {
    assert!(matches!(parse_spec("group P = product A B"), Err(SpecError::UnknownReference { line: 1, kind: "group", .. })));
    assert!(matches!(parse_spec("group X = catalog Q99"), Err(SpecError::UnknownReference { kind: "catalog group", .. })));
    let text = "group A = cyclic 2 alpha\ngroup B = cyclic 2 beta\ngroup V = product A B\nquery classes V\nquery irreps W\n";
    assert!(matches!(parse_spec(text), Err(SpecError::UnknownReference { line: 5, .. })));
    let text = "group A = cyclic 2 alpha\ngroup T = product A A\nsequence s : T -> A project\nquery lifts s alpha gamma\n";
    assert!(matches!(parse_spec(text), Err(SpecError::UnknownReference { line: 4, kind: "element", .. })));
}

#[test]
fn syntax_errors_carry_line_numbers() {
    for (text, line) in [
        ("group g = cyclic 0", 1),
        ("group g = cyclic four", 1),
        ("\n\ngroup = catalog Q8", 3),
        ("group g = catalog Q8\nact x : identity", 2),
        ("frobnicate", 1),
        ("group g = cyclic 2\nquery lifts", 2),
        ("group g = cyclic 2\ngroup g = cyclic 3", 2),
        ("group g = cyclic 2\nsequence s : g -> g by a", 2),
    ] {
        match parse_spec(text) {
            Err(SpecError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn project_needs_a_product() {
    let text = "group A = cyclic 2\ngroup B = cyclic 4\nsequence s : B -> A project\n";
    assert!(matches!(parse_spec(text), Err(SpecError::Parse { line: 3, .. })));
}

#[test]
fn projection_must_be_a_homomorphism() {
    let text = "group A = cyclic 4 a\ngroup B = cyclic 2 b\nsequence s : B -> A by b -> a\n";
    assert!(matches!(parse_spec(text), Err(SpecError::Engine { line: 3, .. })));
}

#[test]
fn quotient_and_central_groups() {
    let text = "group D4 = catalog D4\ngroup Q = quotient D4 by r^2\ngroup Q8 = catalog Q8\ngroup C = central Q8 -1 D4 r^2\n";
    let ws = Workspace::build(&parse_spec(text).unwrap()).unwrap();
    assert_eq!(ws.group("Q").unwrap().order(), 4);
    assert_eq!(ws.group("C").unwrap().order(), 32);
    let bad = "group D4 = catalog D4\ngroup Q = quotient D4 by s\n";
    assert!(matches!(parse_spec(bad), Err(SpecError::Engine { line: 2, .. })));
}

#[test]
fn merge_rejects_conflicting_definitions() {
    let mut a = parse_syntax("group g = cyclic 2").unwrap();
    a.merge(parse_syntax("group g = cyclic 2").unwrap()).unwrap();
    assert_eq!(a.groups.len(), 1);
    assert!(a.merge(parse_syntax("group g = cyclic 3").unwrap()).is_err());
}

#[test]
fn fixtures_round_trip() {
    for (name, text) in BUILTIN_FIXTURES {
        let doc = parse_spec(text).unwrap();
        let again = parse_spec(&render_spec(&doc)).unwrap();
        assert_eq!(doc, again, "{name}");
    }
}

fn name() -> impl Strategy<Value = String> {
    "[A-Za-z][A-Za-z0-9_]{0,5}"
}

fn label() -> impl Strategy<Value = String> {
    prop_oneof!["[a-z1][a-z0-9^*]{0,4}", "-[a-z]{1,2}", "\\([a-z],[a-z]\\)"]
}

fn mappings() -> impl Strategy<Value = Vec<(String, String)>> {
    prop::collection::vec((label(), label()), 1..4)
}

fn group_expr() -> impl Strategy<Value = GroupExpr> {
    let action = (
        label(),
        prop_oneof![Just(ActionMap::Identity), label().prop_map(ActionMap::Inner), mappings().prop_map(ActionMap::Images)],
    )
        .prop_map(|(generator, map)| Action { generator, map });
    prop_oneof![
        (1usize..300, prop::option::of(name())).prop_map(|(n, generator)| GroupExpr::Cyclic { n, generator }),
        name().prop_map(GroupExpr::Catalog),
        (name(), name()).prop_map(|(a, b)| GroupExpr::Product(a, b)),
        (name(), label(), name(), label()).prop_map(|(a, za, b, zb)| GroupExpr::Central { a, za, b, zb }),
        (name(), prop::collection::vec(label(), 1..4)).prop_map(|(group, by)| GroupExpr::Quotient { group, by }),
        (name(), name(), prop::collection::vec(action, 0..3)).prop_map(|(normal, acting, mut actions)| {
            let mut seen = std::collections::BTreeSet::new();
            actions.retain(|a| seen.insert(a.generator.clone()));
            GroupExpr::Semidirect { normal, acting, actions }
        }),
    ]
}

fn query() -> impl Strategy<Value = Query> {
    prop_oneof![
        (name(), label(), label(), any::<bool>()).prop_map(|(sequence, alpha, beta, witnesses)| Query::Lifts {
            sequence,
            alpha,
            beta,
            witnesses
        }),
        (name(), prop::collection::vec((label(), label()), 1..4)).prop_map(|(sequence, pairs)| Query::Homs { sequence, pairs }),
        (name(), prop::option::of((label(), label()))).prop_map(|(sequence, pair)| Query::Obstruction { sequence, pair }),
        name().prop_map(|group| Query::Irreps { group }),
        name().prop_map(|group| Query::Classes { group }),
        Just(Query::VerifyPaper),
    ]
}

fn document() -> impl Strategy<Value = SpecDocument> {
    let seq = (name(), name(), name(), prop_oneof![Just(Projection::Factor), mappings().prop_map(Projection::Images)])
        .prop_map(|(name, total, quotient, projection)| SequenceDef { name, total, quotient, projection });
    (prop::collection::vec((name(), group_expr()), 0..6), prop::collection::vec(seq, 0..3), prop::collection::vec(query(), 0..5))
        .prop_map(|(mut groups, mut sequences, queries)| {
            let mut seen = std::collections::BTreeSet::new();
            groups.retain(|(n, _)| seen.insert(n.clone()));
            let mut seen = std::collections::BTreeSet::new();
            sequences.retain(|s| seen.insert(s.name.clone()));
            SpecDocument::new(groups, sequences, queries)
        })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(doc in document()) {
        let text = render_spec(&doc);
        let back = parse_syntax(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(back, doc);
    }
}
