//! Finite groups stored as full multiplication tables, with homomorphisms,
//! standard constructions and short exact sequences.
//!
//! Element `0` is the identity of every group built here.

mod build;
mod catalog;
mod hom;
mod ses;
mod subgroup;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

pub use build::{
    central_product, cyclic, cyclic_named, direct_product, from_closure, quotient_group, semidirect_from_generators,
    semidirect_product,
};
pub use catalog::{catalog, dicyclic, dihedral, CATALOG_NAMES};
pub use hom::{automorphism_group, automorphisms_as_group, Automorphism, GroupHom};
pub use ses::{conjugation_action, make_ses, restrict_ses, restrict_ses_mapped, Restriction, ShortExactSequence};
pub use subgroup::{relative_commutator, subgroup_generated, Subgroup};

use crate::error::{Error, Result};

/// Index of an element within its group.
pub type Elem = usize;

/// Shared handle to an immutable group.
pub type GroupRef = Arc<FiniteGroup>;

/// Largest supported group order.
pub const MAX_ORDER: usize = 256;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    labels: Vec<String>,
    generators: Vec<Elem>,
}

impl FiniteGroup {
    /// Validates and wraps a multiplication table (`mul[a * order + b] = ab`).
    /// The identity must be element 0. When `generators` is `None` a small
    /// generating set is chosen greedily.
    pub fn from_table(mul: Vec<Elem>, labels: Vec<String>, generators: Option<Vec<Elem>>) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::EmptyGroup);
        }
        if order > MAX_ORDER {
            return Err(Error::TooLarge { order, limit: MAX_ORDER });
        }
        if mul.len() != order * order {
            return Err(Error::InvalidTable(alloc::format!("table has {} entries, expected {}", mul.len(), order * order)));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidTable(alloc::format!("entry {bad} out of range")));
        }
        for a in 0..order {
            if mul[a] != a || mul[a * order] != a {
                return Err(Error::InvalidTable("element 0 is not the identity".to_string()));
            }
        }
        let mut inv = alloc::vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| mul[a * order + b] == 0) {
                Some(b) if mul[b * order + a] == 0 => inv[a] = b,
                _ => return Err(Error::InvalidTable(alloc::format!("element {a} has no two-sided inverse"))),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mul[a * order + b];
                for c in 0..order {
                    if mul[ab * order + c] != mul[a * order + mul[b * order + c]] {
                        return Err(Error::InvalidTable(alloc::format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        {
            let mut seen = BTreeMap::new();
            for (i, l) in labels.iter().enumerate() {
                if let Some(j) = seen.insert(l.as_str(), i) {
                    return Err(Error::InvalidTable(alloc::format!("label '{l}' used by elements {j} and {i}")));
                }
            }
        }
        let mut g = FiniteGroup { order, mul, inv, labels, generators: Vec::new() };
        match generators {
            Some(gens) => {
                if let Some(&bad) = gens.iter().find(|&&x| x >= order) {
                    return Err(Error::NoSuchElement(bad));
                }
                let gens: Vec<Elem> = gens.into_iter().filter(|&x| x != 0).collect();
                if subgroup_generated(&g, &gens).order() != order {
                    return Err(Error::InvalidTable("generators do not generate the group".to_string()));
                }
                g.generators = dedup_keep_order(gens);
            }
            None => g.generators = g.greedy_generators(),
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// `a x a⁻¹`
    pub fn conjugate(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(a, x), self.inv(a))
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: Elem, n: i64) -> Elem {
        let base = if n < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    pub fn exponent(&self) -> usize {
        self.element_orders().into_iter().fold(1, |acc, o| acc / crate::numeric::gcd(acc as u64, o as u64) as usize * o)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (a..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.order
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn center(&self) -> Subgroup {
        Subgroup::from_members(self, self.elements().filter(|&z| self.elements().all(|x| self.commutes(z, x))).collect())
    }

    pub fn involution_count(&self) -> usize {
        self.elements().filter(|&a| self.element_order(a) == 2).count()
    }

    /// Looks up an element by label, or by a `*`-separated product of labels
    /// each optionally raised to an integer power (`a^2*b`, `y^-1`).
    pub fn parse_element(&self, text: &str) -> Option<Elem> {
        let text = text.trim();
        if let Some(i) = self.find_label(text) {
            return Some(i);
        }
        let mut acc = 0;
        for token in text.split('*') {
            let token = token.trim();
            let x = match self.find_label(token) {
                Some(x) => x,
                None => {
                    let (base, exp) = token.rsplit_once('^')?;
                    let b = self.find_label(base.trim())?;
                    self.pow(b, exp.trim().parse::<i64>().ok()?)
                }
            };
            acc = self.mul(acc, x);
        }
        Some(acc)
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    /// Greedy small generating set: repeatedly add the element that enlarges
    /// the generated subgroup the most.
    fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens: Vec<Elem> = Vec::new();
        let mut current = subgroup_generated(self, &gens);
        while current.order() < self.order {
            let mut best = (0, current.order());
            for x in self.elements().filter(|&x| !current.contains(x)) {
                let mut trial = gens.clone();
                trial.push(x);
                let size = subgroup_generated(self, &trial).order();
                if size > best.1 {
                    best = (x, size);
                }
            }
            gens.push(best.0);
            current = subgroup_generated(self, &gens);
        }
        gens
    }

    /// Replaces element labels; they must stay unique.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidTable("label count does not match order".to_string()));
        }
        let mut seen = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.clone(), i) {
                return Err(Error::InvalidTable(alloc::format!("label '{l}' used by elements {j} and {i}")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// Subgroup as a standalone group (elements in ascending ambient order)
    /// together with the embedding into `self`.
    pub fn subgroup_as_group(&self, sub: &Subgroup) -> (FiniteGroup, Vec<Elem>) {
        let embed: Vec<Elem> = sub.members().to_vec();
        let mut back = alloc::vec![usize::MAX; self.order];
        for (i, &x) in embed.iter().enumerate() {
            back[x] = i;
        }
        let n = embed.len();
        let mut mul = Vec::with_capacity(n * n);
        for &a in &embed {
            for &b in &embed {
                mul.push(back[self.mul(a, b)]);
            }
        }
        let labels = embed.iter().map(|&x| self.labels[x].clone()).collect();
        let generators: Vec<Elem> = self.generators.iter().filter(|&&g| sub.contains(g)).map(|&g| back[g]).collect();
        let inv = embed.iter().map(|&x| back[self.inv(x)]).collect();
        let mut g = FiniteGroup { order: n, mul, inv, labels, generators: Vec::new() };
        let from_ambient = subgroup_generated(&g, &generators).order() == n;
        g.generators = if from_ambient { generators } else { g.greedy_generators() };
        (g, embed)
    }

    /// Exhaustive check that `map` from `self` into `target` is a homomorphism.
    pub fn is_hom_into(&self, target: &FiniteGroup, map: &[Elem]) -> bool {
        map.len() == self.order
            && map.iter().all(|&x| x < target.order())
            && self.elements().all(|a| self.elements().all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }

    /// Multiset of element orders, sorted.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v = self.element_orders();
        v.sort_unstable();
        v
    }

    pub fn to_ref(self) -> GroupRef {
        Arc::new(self)
    }
}

fn dedup_keep_order(v: Vec<Elem>) -> Vec<Elem> {
    let mut out: Vec<Elem> = Vec::with_capacity(v.len());
    for x in v {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}
