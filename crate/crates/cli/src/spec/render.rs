use std::fmt::Write;

use super::{ActionMap, GroupExpr, Projection, Query, SpecDocument};

fn mappings(m: &[(String, String)]) -> String {
    m.iter().map(|(x, y)| format!("{x} -> {y}")).collect::<Vec<_>>().join(", ")
}

pub fn render_query(q: &Query) -> String {
    match q {
        Query::Lifts { sequence, alpha, beta, witnesses } => {
            format!("lifts {sequence} {alpha} {beta}{}", if *witnesses { " witnesses" } else { "" })
        }
        Query::Homs { sequence, pairs } => {
            let args: Vec<String> = pairs.iter().map(|(a, b)| format!("{a} {b}")).collect();
            format!("homs {sequence} {}", args.join(" "))
        }
        Query::Obstruction { sequence, pair: None } => format!("obstruction {sequence}"),
        Query::Obstruction { sequence, pair: Some((a, b)) } => format!("obstruction {sequence} {a} {b}"),
        Query::Irreps { group } => format!("irreps {group}"),
        Query::Classes { group } => format!("classes {group}"),
        Query::VerifyPaper => "verify-paper".to_string(),
    }
}

/// Canonical text for a document; `parse_syntax(render_spec(d)) == d`.
pub fn render_spec(doc: &SpecDocument) -> String {
    let mut out = String::new();
    for (name, expr) in &doc.groups {
        let _ = match expr {
            GroupExpr::Cyclic { n, generator: None } => writeln!(out, "group {name} = cyclic {n}"),
            GroupExpr::Cyclic { n, generator: Some(g) } => writeln!(out, "group {name} = cyclic {n} {g}"),
            GroupExpr::Catalog(c) => writeln!(out, "group {name} = catalog {c}"),
            GroupExpr::Product(a, b) => writeln!(out, "group {name} = product {a} {b}"),
            GroupExpr::Central { a, za, b, zb } => writeln!(out, "group {name} = central {a} {za} {b} {zb}"),
            GroupExpr::Quotient { group, by } => writeln!(out, "group {name} = quotient {group} by {}", by.join(", ")),
            GroupExpr::Semidirect { normal, acting, actions } => {
                let _ = writeln!(out, "group {name} = semidirect {normal} {acting}");
                for a in actions {
                    let map = match &a.map {
                        ActionMap::Identity => "identity".to_string(),
                        ActionMap::Inner(x) => format!("inner {x}"),
                        ActionMap::Images(m) => mappings(m),
                    };
                    let _ = writeln!(out, "  act {} : {map}", a.generator);
                }
                Ok(())
            }
        };
    }
    for s in &doc.sequences {
        let proj = match &s.projection {
            Projection::Factor => "project".to_string(),
            Projection::Images(m) => format!("by {}", mappings(m)),
        };
        let _ = writeln!(out, "sequence {} : {} -> {} {proj}", s.name, s.total, s.quotient);
    }
    for q in &doc.queries {
        let _ = writeln!(out, "query {}", render_query(q));
    }
    out
}
