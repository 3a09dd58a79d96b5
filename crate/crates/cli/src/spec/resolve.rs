use std::collections::BTreeMap;
use std::sync::Arc;

use liftcount_core::group::{
    catalog, central_product, cyclic_named, direct_product, make_ses, quotient_group, semidirect_from_generators,
    subgroup_generated, Automorphism,
};
use liftcount_core::{Elem, FiniteGroup, GroupHom, GroupRef, ShortExactSequence};

use super::{ActionMap, GroupExpr, Projection, SequenceDef, SpecDocument, SpecError};

/// Every group and sequence of a document, built.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    groups: BTreeMap<String, GroupRef>,
    sequences: BTreeMap<String, ShortExactSequence>,
}

fn engine(line: usize) -> impl Fn(liftcount_core::Error) -> SpecError {
    move |source| SpecError::Engine { line, source }
}

pub(crate) fn element(g: &FiniteGroup, label: &str, line: usize) -> Result<Elem, SpecError> {
    g.parse_element(label).ok_or_else(|| SpecError::UnknownReference { line, kind: "element", name: label.to_string() })
}

impl Workspace {
    /// Builds groups and sequences in definition order; later definitions may
    /// refer to earlier ones only.
    pub fn build(doc: &SpecDocument) -> Result<Self, SpecError> {
        let mut ws = Workspace::default();
        for (i, (name, expr)) in doc.groups.iter().enumerate() {
            let line = doc.group_lines.get(i).copied().unwrap_or(0);
            let g = ws.build_group(expr, line)?;
            ws.groups.insert(name.clone(), Arc::new(g));
        }
        for (i, seq) in doc.sequences.iter().enumerate() {
            let line = doc.sequence_lines.get(i).copied().unwrap_or(0);
            let s = ws.build_sequence(doc, seq, line)?;
            ws.sequences.insert(seq.name.clone(), s);
        }
        for (i, q) in doc.queries.iter().enumerate() {
            ws.check_query(q, doc.query_line(i))?;
        }
        Ok(ws)
    }

    pub fn group(&self, name: &str) -> Option<&GroupRef> {
        self.groups.get(name)
    }

    pub fn sequence(&self, name: &str) -> Option<&ShortExactSequence> {
        self.sequences.get(name)
    }

    pub(crate) fn group_at(&self, name: &str, line: usize) -> Result<&GroupRef, SpecError> {
        self.groups.get(name).ok_or_else(|| SpecError::UnknownReference { line, kind: "group", name: name.to_string() })
    }

    pub(crate) fn sequence_at(&self, name: &str, line: usize) -> Result<&ShortExactSequence, SpecError> {
        self.sequences.get(name).ok_or_else(|| SpecError::UnknownReference { line, kind: "sequence", name: name.to_string() })
    }

    fn build_group(&self, expr: &GroupExpr, line: usize) -> Result<FiniteGroup, SpecError> {
        let e = engine(line);
        match expr {
            GroupExpr::Cyclic { n, generator } => cyclic_named(*n, generator.as_deref().unwrap_or("a")).map_err(e),
            GroupExpr::Catalog(c) => catalog(c).map_err(|err| match err {
                liftcount_core::Error::UnknownName(n) => SpecError::UnknownReference { line, kind: "catalog group", name: n },
                other => e(other),
            }),
            GroupExpr::Product(a, b) => Ok(direct_product(self.group_at(a, line)?, self.group_at(b, line)?)),
            GroupExpr::Central { a, za, b, zb } => {
                let (ga, gb) = (self.group_at(a, line)?, self.group_at(b, line)?);
                central_product(ga, gb, element(ga, za, line)?, element(gb, zb, line)?).map_err(&e)
            }
            GroupExpr::Quotient { group, by } => {
                let g = self.group_at(group, line)?;
                let seeds = by.iter().map(|l| element(g, l, line)).collect::<Result<Vec<_>, _>>()?;
                let n = subgroup_generated(g, &seeds);
                let (q, _) = quotient_group(g, &n).map_err(&e)?;
                Ok((*q).clone())
            }
            GroupExpr::Semidirect { normal, acting, actions } => {
                let (n, h) = (self.group_at(normal, line)?, self.group_at(acting, line)?);
                let invalid = |message: String| SpecError::InvalidAction { line, message };
                let mut gen_actions = Vec::new();
                for a in actions {
                    let g = element(h, &a.generator, line)?;
                    let phi = match &a.map {
                        ActionMap::Identity => Automorphism::identity(n),
                        ActionMap::Inner(x) => Automorphism::inner(n, element(n, x, line)?),
                        ActionMap::Images(m) => {
                            let pairs = m
                                .iter()
                                .map(|(x, y)| Ok((element(n, x, line)?, element(n, y, line)?)))
                                .collect::<Result<Vec<_>, SpecError>>()?;
                            Automorphism::from_generator_images(n, &pairs)
                                .map_err(|err| invalid(format!("action of {}: {err}", a.generator)))?
                        }
                    };
                    gen_actions.push((g, phi));
                }
                semidirect_from_generators(n, h, &gen_actions).map_err(|err| invalid(err.to_string()))
            }
        }
    }

    fn build_sequence(&self, doc: &SpecDocument, seq: &SequenceDef, line: usize) -> Result<ShortExactSequence, SpecError> {
        let e = engine(line);
        let total = self.group_at(&seq.total, line)?.clone();
        let quotient = self.group_at(&seq.quotient, line)?.clone();
        let hom = match &seq.projection {
            Projection::Images(m) => {
                let pairs = m
                    .iter()
                    .map(|(x, y)| Ok((element(&total, x, line)?, element(&quotient, y, line)?)))
                    .collect::<Result<Vec<_>, SpecError>>()?;
                GroupHom::from_generator_images(total, quotient, &pairs).map_err(&e)?
            }
            Projection::Factor => {
                let is_product = doc
                    .groups
                    .iter()
                    .any(|(n, ex)| *n == seq.total && matches!(ex, GroupExpr::Product(_, b) if *b == seq.quotient));
                if !is_product {
                    return Err(SpecError::Parse {
                        line,
                        message: format!("'project' needs {} = product _ {}", seq.total, seq.quotient),
                    });
                }
                let m = quotient.order();
                let map = total.elements().map(|x| x % m).collect();
                GroupHom::new(total, quotient, map).map_err(&e)?
            }
        };
        make_ses(hom).map_err(&e)
    }

    fn check_query(&self, q: &super::Query, line: usize) -> Result<(), SpecError> {
        use super::Query;
        match q {
            Query::Lifts { sequence, alpha, beta, .. } => {
                let s = self.sequence_at(sequence, line)?;
                element(s.quotient(), alpha, line)?;
                element(s.quotient(), beta, line)?;
            }
            Query::Homs { sequence, pairs } => {
                let s = self.sequence_at(sequence, line)?;
                for (a, b) in pairs {
                    element(s.quotient(), a, line)?;
                    element(s.quotient(), b, line)?;
                }
            }
            Query::Obstruction { sequence, pair } => {
                let s = self.sequence_at(sequence, line)?;
                if let Some((a, b)) = pair {
                    element(s.quotient(), a, line)?;
                    element(s.quotient(), b, line)?;
                }
            }
            Query::Irreps { group } | Query::Classes { group } => {
                self.group_at(group, line)?;
            }
            Query::VerifyPaper => {}
        }
        Ok(())
    }
}
