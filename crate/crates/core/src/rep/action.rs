use alloc::vec::Vec;

use super::irreps::IrrCatalog;
use crate::error::{Error, Result};
use crate::group::{Automorphism, Elem, ShortExactSequence, Subgroup};

/// Action of the quotient on `Irr(Γ)` by `ρ ↦ ρ^α = ρ(α̃ · α̃⁻¹)`.
#[derive(Debug, Clone)]
pub struct IrrAction {
    /// `perms[α][ρ]` is the index of `ρ^α`.
    pub perms: Vec<Vec<usize>>,
    /// Stabilizer of each irrep in the quotient.
    pub stabilizers: Vec<Subgroup>,
}

impl IrrAction {
    pub fn is_fully_stabilized(&self, rho: usize, quotient_order: usize) -> bool {
        self.stabilizers[rho].order() == quotient_order
    }

    /// Orbits of the action, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.stabilizers.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for r in 0..n {
            if seen[r] {
                continue;
            }
            let mut orbit: Vec<usize> = self.perms.iter().map(|p| p[r]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &x in &orbit {
                seen[x] = true;
            }
            out.push(orbit);
        }
        out
    }
}

/// Index of the irrep `ρ ∘ φ`, where `ρ` is row `rho`.
pub fn twisted_character_index(cat: &IrrCatalog, rho: usize, phi: &Automorphism) -> Option<usize> {
    let values: Vec<_> = cat.group.elements().map(|x| cat.table.value(rho, phi.apply(x))).collect();
    cat.find(&values)
}

/// Permutation `ρ ↦ ρ ∘ φ` of the irreps.
pub fn aut_action(cat: &IrrCatalog, phi: &Automorphism) -> Result<Vec<usize>> {
    (0..cat.len())
        .map(|r| twisted_character_index(cat, r, phi).ok_or(Error::NotHom("twisted character not irreducible".into())))
        .collect()
}

pub fn irr_action(s: &ShortExactSequence, cat: &IrrCatalog) -> Result<IrrAction> {
    if s.kernel().order() != cat.group.order() {
        return Err(Error::OrderMismatch("catalog does not belong to the kernel".into()));
    }
    let quotient = s.quotient();
    let perms: Vec<Vec<usize>> =
        quotient.elements().map(|alpha| aut_action(cat, &s.conjugation_by(s.lift(alpha)))).collect::<Result<_>>()?;
    let stabilizers = (0..cat.len())
        .map(|r| {
            let members: Vec<Elem> = quotient.elements().filter(|&a| perms[a][r] == r).collect();
            Subgroup::from_members(quotient, members)
        })
        .collect();
    Ok(IrrAction { perms, stabilizers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::EngineConfig;
    use crate::group::{automorphism_group, catalog, cyclic_named, direct_product, make_ses, GroupHom};
    use crate::rep::irreducible_reps;
    use alloc::sync::Arc;

    #[test]
    fn q8_automorphisms_fix_the_two_dim_irrep() {
        let q8 = catalog("Q8").unwrap().to_ref();
        let cat = irreducible_reps(&q8, &EngineConfig::default()).unwrap();
        let two = cat.table.dims.iter().position(|&d| d == 2).unwrap();
        let auts = automorphism_group(&q8).unwrap();
        let mut moved_linear = 0;
        for phi in &auts {
            let p = aut_action(&cat, phi).unwrap();
            assert_eq!(p[two], two);
            assert_eq!(p[0], 0);
            if (1..4).any(|r| p[r] != r) {
                moved_linear += 1;
            }
        }
        // inner automorphisms (4 of them) act trivially on characters
        assert_eq!(moved_linear, auts.len() - 4);
    }

    #[test]
    fn direct_product_action_is_trivial() {
        let q8 = catalog("Q8").unwrap();
        let z2 = cyclic_named(2, "alpha").unwrap();
        let g = Arc::new(direct_product(&q8, &z2));
        let z2 = Arc::new(z2);
        let s = make_ses(GroupHom::new(g.clone(), z2, g.elements().map(|x| x % 2).collect()).unwrap()).unwrap();
        let cat = irreducible_reps(s.kernel(), &EngineConfig::default()).unwrap();
        let act = irr_action(&s, &cat).unwrap();
        assert!((0..cat.len()).all(|r| act.is_fully_stabilized(r, 2)));
        assert_eq!(act.orbits().len(), 5);
    }
}
