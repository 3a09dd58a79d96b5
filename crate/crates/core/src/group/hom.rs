use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{subgroup_generated, Elem, FiniteGroup, GroupRef, Subgroup};
use crate::error::{Error, Result};

/// Homomorphism between two finite groups.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupHom {
    source: GroupRef,
    target: GroupRef,
    map: Vec<Elem>,
}

impl GroupHom {
    /// Validates the homomorphism property exhaustively.
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<Elem>) -> Result<Self> {
        if !source.is_hom_into(&target, &map) {
            return Err(Error::NotHom("map does not preserve products".to_string()));
        }
        Ok(GroupHom { source, target, map })
    }

    /// Extends `images` (pairs `(generator, image)`) to a homomorphism. The
    /// listed generators must generate the source.
    pub fn from_generator_images(source: GroupRef, target: GroupRef, images: &[(Elem, Elem)]) -> Result<Self> {
        let map = extend_on_generators(&source, &target, images)?;
        Ok(GroupHom { source, target, map })
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_members(&self.source, self.source.elements().filter(|&x| self.map[x] == 0).collect())
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = alloc::vec![false; self.target.order()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }
}

/// Extends generator images along the Cayley graph and validates the result.
pub(crate) fn extend_on_generators(source: &FiniteGroup, target: &FiniteGroup, images: &[(Elem, Elem)]) -> Result<Vec<Elem>> {
    for &(x, y) in images {
        if x >= source.order() {
            return Err(Error::NoSuchElement(x));
        }
        if y >= target.order() {
            return Err(Error::NoSuchElement(y));
        }
    }
    let mut map = alloc::vec![usize::MAX; source.order()];
    map[0] = 0;
    let mut queue = alloc::vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &(g, img) in images {
            let y = source.mul(x, g);
            let want = target.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = want;
                queue.push(y);
            } else if map[y] != want {
                return Err(Error::NotHom(alloc::format!(
                    "inconsistent image for {} (relations not respected)",
                    source.label(y)
                )));
            }
        }
    }
    if queue.len() != source.order() {
        return Err(Error::NotHom("listed generators do not generate the source".to_string()));
    }
    if !source.is_hom_into(target, &map) {
        return Err(Error::NotHom("extension does not preserve products".to_string()));
    }
    Ok(map)
}

/// Bijective endomorphism of a group, stored as an element permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    perm: Vec<Elem>,
}

impl Automorphism {
    pub fn identity(g: &FiniteGroup) -> Self {
        Automorphism { perm: g.elements().collect() }
    }

    /// Validates bijectivity and the homomorphism property.
    pub fn new(g: &FiniteGroup, perm: Vec<Elem>) -> Result<Self> {
        if !g.is_hom_into(g, &perm) {
            return Err(Error::NotHom("permutation does not preserve products".to_string()));
        }
        let mut seen = alloc::vec![false; g.order()];
        for &p in &perm {
            if core::mem::replace(&mut seen[p], true) {
                return Err(Error::NotHom("map is not bijective".to_string()));
            }
        }
        Ok(Automorphism { perm })
    }

    pub fn from_generator_images(g: &FiniteGroup, images: &[(Elem, Elem)]) -> Result<Self> {
        let perm = extend_on_generators(g, g, images)?;
        Automorphism::new(g, perm)
    }

    /// `x ↦ a x a⁻¹`
    pub fn inner(g: &FiniteGroup, a: Elem) -> Self {
        Automorphism { perm: g.elements().map(|x| g.conjugate(a, x)).collect() }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.perm[x]
    }

    pub fn perm(&self) -> &[Elem] {
        &self.perm
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { perm: other.perm.iter().map(|&x| self.perm[x]).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut perm = alloc::vec![0; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            perm[y] = x;
        }
        Automorphism { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = self.compose(&cur);
            k += 1;
        }
        k
    }
}

/// Every automorphism of `g`, identity first, then lexicographic by permutation.
///
/// Generators are sent to same-order elements and each candidate is validated,
/// so the search is bounded to `|g| <= 64` with at most 3 generators.
pub fn automorphism_group(g: &FiniteGroup) -> Result<Vec<Automorphism>> {
    const LIMIT: usize = 64;
    if g.order() > LIMIT {
        return Err(Error::TooLarge { order: g.order(), limit: LIMIT });
    }
    let gens = g.generators().to_vec();
    if gens.len() > 3 {
        return Err(Error::TooLarge { order: g.order(), limit: LIMIT });
    }
    let orders = g.element_orders();
    let candidates: Vec<Vec<Elem>> = gens.iter().map(|&x| g.elements().filter(|&y| orders[y] == orders[x]).collect()).collect();
    let mut out = Vec::new();
    let mut choice = alloc::vec![0usize; gens.len()];
    'outer: loop {
        let images: Vec<(Elem, Elem)> = gens.iter().zip(&choice).enumerate().map(|(k, (&x, &c))| (x, candidates[k][c])).collect();
        let image_set: Vec<Elem> = images.iter().map(|p| p.1).collect();
        if subgroup_generated(g, &image_set).order() == g.order() {
            if let Ok(map) = extend_on_generators(g, g, &images) {
                out.push(Automorphism { perm: map });
            }
        }
        for k in 0..choice.len() {
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// The group formed by a composition-closed list of automorphisms, with
/// product `φψ = φ ∘ ψ`. Returns the group and, per group element, the index
/// into `auts`. The identity automorphism must be present.
pub fn automorphisms_as_group(auts: &[Automorphism]) -> Result<(FiniteGroup, Vec<usize>)> {
    let index: BTreeMap<&Automorphism, usize> = auts.iter().enumerate().map(|(i, a)| (a, i)).collect();
    if index.len() != auts.len() {
        return Err(Error::InvalidTable("duplicate automorphisms".to_string()));
    }
    let id_pos = auts
        .iter()
        .position(|a| a.is_identity())
        .ok_or_else(|| Error::InvalidTable("automorphism list lacks the identity".to_string()))?;
    // put the identity first
    let mut order: Vec<usize> = alloc::vec![id_pos];
    order.extend((0..auts.len()).filter(|&i| i != id_pos));
    let mut pos = alloc::vec![0; auts.len()];
    for (p, &i) in order.iter().enumerate() {
        pos[i] = p;
    }
    let n = auts.len();
    let mut mul = Vec::with_capacity(n * n);
    for &a in &order {
        for &b in &order {
            let c = auts[a].compose(&auts[b]);
            let ci = *index.get(&c).ok_or_else(|| Error::InvalidTable("automorphism list is not closed".to_string()))?;
            mul.push(pos[ci]);
        }
    }
    let labels = order.iter().map(|&i| if i == id_pos { "id".into() } else { alloc::format!("aut{i}") }).collect();
    let g = FiniteGroup::from_table(mul, labels, None)?;
    Ok((g, order))
}
