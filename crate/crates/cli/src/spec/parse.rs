use super::{Action, ActionMap, GroupExpr, Projection, Query, SequenceDef, SpecDocument, SpecError};

fn err(line: usize, message: impl Into<String>) -> SpecError {
    SpecError::Parse { line, message: message.into() }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn name(line: usize, s: &str) -> Result<String, SpecError> {
    if is_name(s) {
        Ok(s.to_string())
    } else {
        Err(err(line, format!("invalid name '{s}'")))
    }
}

/// Splits on commas outside parentheses.
fn split_list(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn mapping_list(line: usize, s: &str) -> Result<Vec<(String, String)>, SpecError> {
    split_list(s)
        .into_iter()
        .map(|item| {
            let (x, y) = item.split_once("->").ok_or_else(|| err(line, format!("expected 'x -> y', got '{item}'")))?;
            let (x, y) = (x.trim(), y.trim());
            if x.is_empty() || y.is_empty() || x.contains(char::is_whitespace) || y.contains(char::is_whitespace) {
                return Err(err(line, format!("malformed mapping '{item}'")));
            }
            Ok((x.to_string(), y.to_string()))
        })
        .collect()
}

fn label(line: usize, s: &str) -> Result<String, SpecError> {
    if s.is_empty() || s.contains(char::is_whitespace) || s.contains(',') && !s.starts_with('(') {
        return Err(err(line, format!("invalid element label '{s}'")));
    }
    Ok(s.to_string())
}

fn group_expr(line: usize, words: &[&str]) -> Result<GroupExpr, SpecError> {
    match words {
        ["cyclic", n] | ["cyclic", n, _] => {
            let n: usize = n.parse().map_err(|_| err(line, format!("invalid order '{n}'")))?;
            if n == 0 {
                return Err(err(line, "cyclic order must be positive"));
            }
            let generator = words.get(2).map(|g| name(line, g)).transpose()?;
            Ok(GroupExpr::Cyclic { n, generator })
        }
        ["catalog", c] => Ok(GroupExpr::Catalog(c.to_string())),
        ["product", a, b] => Ok(GroupExpr::Product(name(line, a)?, name(line, b)?)),
        ["semidirect", n, h] => Ok(GroupExpr::Semidirect { normal: name(line, n)?, acting: name(line, h)?, actions: Vec::new() }),
        ["central", a, za, b, zb] => {
            Ok(GroupExpr::Central { a: name(line, a)?, za: label(line, za)?, b: name(line, b)?, zb: label(line, zb)? })
        }
        ["quotient", g, "by", rest @ ..] if !rest.is_empty() => {
            let by = split_list(&rest.join(" ")).into_iter().map(|l| label(line, l)).collect::<Result<_, _>>()?;
            Ok(GroupExpr::Quotient { group: name(line, g)?, by })
        }
        _ => Err(err(line, format!("unrecognized group expression '{}'", words.join(" ")))),
    }
}

fn action(line: usize, rest: &str) -> Result<Action, SpecError> {
    let (generator, map) = rest.split_once(':').ok_or_else(|| err(line, "expected 'act GEN : ...'"))?;
    let generator = label(line, generator.trim())?;
    let map = map.trim();
    let map = if map == "identity" {
        ActionMap::Identity
    } else if let Some(x) = map.strip_prefix("inner ") {
        ActionMap::Inner(label(line, x.trim())?)
    } else {
        ActionMap::Images(mapping_list(line, map)?)
    };
    Ok(Action { generator, map })
}

fn sequence(line: usize, rest: &str) -> Result<SequenceDef, SpecError> {
    let (seq_name, rest) = rest.split_once(':').ok_or_else(|| err(line, "expected 'sequence NAME : TOTAL -> QUOT ...'"))?;
    let (total, rest) = rest.split_once("->").ok_or_else(|| err(line, "expected 'TOTAL -> QUOT'"))?;
    let rest = rest.trim();
    let (quotient, projection) = match rest.split_once(char::is_whitespace) {
        Some((q, tail)) => {
            let tail = tail.trim();
            let projection = if tail == "project" {
                Projection::Factor
            } else if let Some(list) = tail.strip_prefix("by ") {
                Projection::Images(mapping_list(line, list)?)
            } else {
                return Err(err(line, "expected 'by x -> y, ...' or 'project'"));
            };
            (q, projection)
        }
        None => return Err(err(line, "missing projection")),
    };
    Ok(SequenceDef {
        name: name(line, seq_name.trim())?,
        total: name(line, total.trim())?,
        quotient: name(line, quotient)?,
        projection,
    })
}

fn query(line: usize, words: &[&str]) -> Result<Query, SpecError> {
    match words {
        ["lifts", s, a, b] => {
            Ok(Query::Lifts { sequence: name(line, s)?, alpha: label(line, a)?, beta: label(line, b)?, witnesses: false })
        }
        ["lifts", s, a, b, "witnesses"] => {
            Ok(Query::Lifts { sequence: name(line, s)?, alpha: label(line, a)?, beta: label(line, b)?, witnesses: true })
        }
        ["homs", s, rest @ ..] if !rest.is_empty() && rest.len() % 2 == 0 => {
            let pairs = rest.chunks(2).map(|c| Ok((label(line, c[0])?, label(line, c[1])?))).collect::<Result<_, SpecError>>()?;
            Ok(Query::Homs { sequence: name(line, s)?, pairs })
        }
        ["obstruction", s] => Ok(Query::Obstruction { sequence: name(line, s)?, pair: None }),
        ["obstruction", s, a, b] => {
            Ok(Query::Obstruction { sequence: name(line, s)?, pair: Some((label(line, a)?, label(line, b)?)) })
        }
        ["irreps", g] => Ok(Query::Irreps { group: name(line, g)? }),
        ["classes", g] => Ok(Query::Classes { group: name(line, g)? }),
        ["verify-paper"] => Ok(Query::VerifyPaper),
        _ => Err(err(line, format!("unrecognized query '{}'", words.join(" ")))),
    }
}

/// Syntax only: no name resolution and no group construction.
pub fn parse_syntax(text: &str) -> Result<SpecDocument, SpecError> {
    let mut doc = SpecDocument::default();
    // index of the semidirect group that `act` lines attach to
    let mut open_semidirect: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match keyword {
            "group" => {
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err(line, "expected 'group NAME = EXPR'"))?;
                let group_name = name(line, lhs.trim())?;
                let words: Vec<&str> = rhs.split_whitespace().collect();
                let expr = group_expr(line, &words)?;
                if doc.groups.iter().any(|(n, _)| *n == group_name) {
                    return Err(err(line, format!("group '{group_name}' defined twice")));
                }
                open_semidirect = matches!(expr, GroupExpr::Semidirect { .. }).then_some(doc.groups.len());
                doc.groups.push((group_name, expr));
                doc.group_lines.push(line);
            }
            "act" => {
                let idx = open_semidirect.ok_or_else(|| err(line, "'act' must follow a semidirect group"))?;
                let a = action(line, rest)?;
                if let GroupExpr::Semidirect { actions, .. } = &mut doc.groups[idx].1 {
                    if actions.iter().any(|b| b.generator == a.generator) {
                        return Err(err(line, format!("action of '{}' given twice", a.generator)));
                    }
                    actions.push(a);
                }
            }
            "sequence" => {
                open_semidirect = None;
                let seq = sequence(line, rest)?;
                if doc.sequences.iter().any(|s| s.name == seq.name) {
                    return Err(err(line, format!("sequence '{}' defined twice", seq.name)));
                }
                doc.sequences.push(seq);
                doc.sequence_lines.push(line);
            }
            "query" => {
                open_semidirect = None;
                let words: Vec<&str> = rest.split_whitespace().collect();
                doc.queries.push(query(line, &words)?);
                doc.query_lines.push(line);
            }
            other => return Err(err(line, format!("unknown keyword '{other}'"))),
        }
    }
    Ok(doc)
}

/// Parses and validates: every name resolves, every label exists, every
/// action is an automorphism and every projection a surjective homomorphism.
pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    let doc = parse_syntax(text)?;
    super::Workspace::build(&doc)?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_respects_parentheses() {
        assert_eq!(split_list("(i,y), k , j"), vec!["(i,y)", "k", "j"]);
        assert_eq!(split_list("a"), vec!["a"]);
    }

    #[test]
    fn mapping_lists() {
        let m = mapping_list(1, "a -> a^3, (i,y) -> -k").unwrap();
        assert_eq!(m, vec![("a".into(), "a^3".into()), ("(i,y)".into(), "-k".into())]);
        assert!(mapping_list(1, "a a^3").is_err());
        assert!(mapping_list(1, "a -> ").is_err());
    }

    #[test]
    fn names() {
        assert!(is_name("Q8xV_2"));
        assert!(!is_name("8Q"));
        assert!(!is_name("a*b"));
    }
}
