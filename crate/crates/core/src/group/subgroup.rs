use alloc::vec::Vec;

use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};

/// A subgroup recorded by membership; always used alongside its ambient group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<Elem>,
    mask: Vec<bool>,
}

impl Subgroup {
    /// Trusts that `members` is closed; callers inside the crate guarantee it.
    pub(crate) fn from_members(g: &FiniteGroup, mut members: Vec<Elem>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        let mut mask = alloc::vec![false; g.order()];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { members, mask }
    }

    /// Checked constructor: the set must contain the identity and be closed.
    pub fn new(g: &FiniteGroup, members: Vec<Elem>) -> Result<Subgroup> {
        if let Some(&bad) = members.iter().find(|&&x| x >= g.order()) {
            return Err(Error::NoSuchElement(bad));
        }
        let s = Subgroup::from_members(g, members);
        let closed = s.contains(0)
            && s.members.iter().all(|&a| s.contains(g.inv(a)) && s.members.iter().all(|&b| s.contains(g.mul(a, b))));
        if !closed {
            return Err(Error::InvalidTable("member set is not a subgroup".into()));
        }
        Ok(s)
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup::from_members(g, g.elements().collect())
    }

    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        Subgroup::from_members(g, alloc::vec![0])
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        g.generators().iter().all(|&x| self.members.iter().all(|&n| self.contains(g.conjugate(x, n))))
    }
}

/// Smallest subgroup containing `seeds`.
pub fn subgroup_generated(g: &FiniteGroup, seeds: &[Elem]) -> Subgroup {
    let mut mask = alloc::vec![false; g.order()];
    mask[0] = true;
    let mut members = alloc::vec![0];
    let mut frontier = 0;
    // right-multiplying by seeds reaches every word; finiteness gives inverses
    while frontier < members.len() {
        let x = members[frontier];
        frontier += 1;
        for &s in seeds {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                members.push(y);
            }
        }
    }
    Subgroup::from_members(g, members)
}

/// `[Γ, G']`, generated by all `γ x γ⁻¹ x⁻¹` with `γ ∈ Γ`, `x ∈ G'`.
pub fn relative_commutator(gprime: &FiniteGroup, gamma: &Subgroup) -> Result<Subgroup> {
    if !gamma.is_normal_in(gprime) {
        return Err(Error::NotNormal);
    }
    let mut seeds: Vec<Elem> = Vec::new();
    for &c in gamma.members() {
        for x in gprime.elements() {
            let k = gprime.commutator(c, x);
            if !seeds.contains(&k) {
                seeds.push(k);
            }
        }
    }
    Ok(subgroup_generated(gprime, &seeds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, cyclic, direct_product};

    #[test]
    fn identity_seed_gives_trivial() {
        let q8 = catalog("Q8").unwrap();
        assert_eq!(subgroup_generated(&q8, &[0]).order(), 1);
    }

    #[test]
    fn quaternion_subgroups() {
        let q8 = catalog("Q8").unwrap();
        let i = q8.find_label("i").unwrap();
        let j = q8.find_label("j").unwrap();
        assert_eq!(subgroup_generated(&q8, &[i]).order(), 4);
        assert_eq!(subgroup_generated(&q8, &[i, j]).order(), 8);
    }

    #[test]
    fn commutator_of_abelian_is_trivial() {
        let g = direct_product(&cyclic(4).unwrap(), &cyclic(6).unwrap());
        let gamma = subgroup_generated(&g, &[1]);
        assert_eq!(relative_commutator(&g, &gamma).unwrap().order(), 1);
    }

    #[test]
    fn q8_in_q8_times_z2() {
        let q8 = catalog("Q8").unwrap();
        let g = direct_product(&q8, &cyclic(2).unwrap());
        // Q8 × {1} sits at indices i·2
        let gamma = Subgroup::new(&g, (0..8).map(|i| i * 2).collect()).unwrap();
        let c = relative_commutator(&g, &gamma).unwrap();
        let labels: Vec<&str> = c.members().iter().map(|&x| g.label(x)).collect();
        assert_eq!(labels, ["1", "-1"]);
    }

    #[test]
    fn non_normal_rejected() {
        let s3 = catalog("S3").unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = subgroup_generated(&s3, &[t]);
        assert!(!h.is_normal_in(&s3));
        assert_eq!(relative_commutator(&s3, &h), Err(Error::NotNormal));
    }
}
