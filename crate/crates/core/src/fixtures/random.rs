use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::census::is_q8;
use crate::error::Result;
use crate::group::{
    automorphism_group, catalog, cyclic, cyclic_named, dicyclic, dihedral, direct_product, make_ses, quotient_group,
    restrict_ses, semidirect_from_generators, subgroup_generated, Automorphism, Elem, FiniteGroup, GroupRef, ShortExactSequence,
    Subgroup, CATALOG_NAMES,
};

const ATTEMPTS: usize = 64;

/// `Z_n ⋊ Z_m` with the generator acting by `x ↦ u·x` for a random unit of
/// order dividing `m`.
fn metacyclic<R: Rng>(rng: &mut R, n: usize, m: usize) -> Result<FiniteGroup> {
    let zn = cyclic(n)?;
    let zm = cyclic_named(m, "t")?;
    let units: Vec<usize> = (1..n.max(2))
        .filter(|&u| crate::numeric::gcd(u as u64, n as u64) == 1)
        .filter(|&u| (0..m).fold(1usize, |acc, _| acc * u % n) == 1 % n)
        .collect();
    let u = *units.choose(rng).unwrap_or(&1);
    let perm = (0..n).map(|x| x * u % n).collect();
    let act = Automorphism::new(&zn, perm)?;
    if m == 1 {
        return Ok(zn);
    }
    semidirect_from_generators(&zn, &zm, &[(1, act)])
}

/// Random group of order at most `max_order`, assembled from the catalog,
/// cyclic, dihedral, dicyclic, metacyclic, product and central-quotient
/// constructions.
pub fn random_group<R: Rng>(rng: &mut R, max_order: usize) -> Result<FiniteGroup> {
    random_group_depth(rng, max_order.max(1), 2)
}

fn random_group_depth<R: Rng>(rng: &mut R, max: usize, depth: u32) -> Result<FiniteGroup> {
    loop {
        let kind = rng.gen_range(0..if depth > 0 { 7 } else { 5 });
        match kind {
            0 => return cyclic(rng.gen_range(1..=max.min(32))),
            1 => {
                let names: Vec<&str> =
                    CATALOG_NAMES.iter().copied().filter(|n| catalog(n).map(|g| g.order() <= max).unwrap_or(false)).collect();
                if let Some(n) = names.choose(rng) {
                    return catalog(n);
                }
            }
            2 if max >= 4 => return dihedral(rng.gen_range(2..=(max / 2).min(16))),
            3 if max >= 8 => return dicyclic(rng.gen_range(2..=(max / 4).min(8))),
            4 if max >= 6 => {
                let n = rng.gen_range(3..=(max / 2).min(16));
                let m = rng.gen_range(2..=(max / n).max(2));
                if n * m <= max {
                    return metacyclic(rng, n, m);
                }
            }
            5 if max >= 4 => {
                let a = random_group_depth(rng, max / 2, depth - 1)?;
                let b = random_group_depth(rng, max / a.order(), depth - 1)?;
                return Ok(direct_product(&a, &b));
            }
            6 => {
                let g = random_group_depth(rng, max.saturating_mul(2).min(64), depth - 1)?.to_ref();
                let z = g.center();
                if z.order() > 1 && g.order() / z.order() <= max {
                    let (q, _) = quotient_group(&g, &z)?;
                    return Ok((*q).clone());
                }
            }
            _ => {}
        }
    }
}

/// Normal subgroups of `g` isomorphic to `Q8`, found as `⟨x, y⟩` for pairs of
/// elements of order 4.
pub fn normal_q8_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let fours: Vec<Elem> = g.elements().filter(|&x| g.element_order(x) == 4).collect();
    let mut found: Vec<Subgroup> = Vec::new();
    for (i, &x) in fours.iter().enumerate() {
        for &y in &fours[i + 1..] {
            if found.iter().any(|s| s.contains(x) && s.contains(y)) {
                continue;
            }
            let h = subgroup_generated(g, &[x, y]);
            if h.order() != 8 || !h.is_normal_in(g) {
                continue;
            }
            let (hg, _) = g.subgroup_as_group(&h);
            if is_q8(&hg) && !found.contains(&h) {
                found.push(h);
            }
        }
    }
    found
}

/// Random homomorphism `h → Aut(n)` given on generators, retried until the
/// generator images satisfy the relations of `h`.
fn random_action<R: Rng>(rng: &mut R, n: &FiniteGroup, h: &FiniteGroup, auts: &[Automorphism]) -> Result<FiniteGroup> {
    for _ in 0..ATTEMPTS {
        let images: Vec<(Elem, Automorphism)> =
            h.generators().iter().map(|&g| (g, auts.choose(rng).expect("nonempty").clone())).collect();
        if let Ok(g) = semidirect_from_generators(n, h, &images) {
            return Ok(g);
        }
    }
    Ok(direct_product(n, h))
}

fn random_q8_total<R: Rng>(rng: &mut R) -> Result<GroupRef> {
    Ok(match rng.gen_range(0..6) {
        0 => {
            let q16 = dicyclic(4)?;
            let auts = automorphism_group(&q16)?;
            let involutive: Vec<Automorphism> = auts.into_iter().filter(|a| a.compose(a).is_identity()).collect();
            let z2 = cyclic_named(2, "z")?;
            random_action(rng, &q16, &z2, &involutive)?.to_ref()
        }
        1 => direct_product(&dicyclic(4)?, &cyclic_named(rng.gen_range(1..=4), "z")?).to_ref(),
        _ => {
            let q8 = catalog("Q8")?;
            let h = random_group(rng, 8)?;
            let auts = automorphism_group(&q8)?;
            random_action(rng, &q8, &h, &auts)?.to_ref()
        }
    })
}

/// Random extension `1 → Q8 → G' → G → 1` with `|G'| ≤ 64`.
///
/// The total group is `Q8 ⋊ H` for a random `H` of order at most 8 and a
/// random action, or `Q16 ⋊ Z2`, or `Q16 × Z_m`. A random normal `Q8` is
/// chosen as kernel, and with probability one half the sequence is
/// restricted to a random subgroup of the quotient.
pub fn random_q8_extension<R: Rng>(rng: &mut R) -> Result<ShortExactSequence> {
    // an outer action on Q16 may swap its two Q8 subgroups; redraw then
    let (total, kernel) = loop {
        let total = random_q8_total(rng)?;
        if let Some(k) = normal_q8_subgroups(&total).choose(rng).cloned() {
            break (total, k);
        }
    };
    let (_, proj) = quotient_group(&total, &kernel)?;
    let s = make_ses(proj)?;
    if rng.gen_bool(0.5) && s.quotient().order() > 1 {
        let q = s.quotient();
        let picks: Vec<Elem> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..q.order())).collect();
        let sub = subgroup_generated(q, &picks);
        return restrict_ses(&s, &sub);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::EngineConfig;

    #[test]
    fn random_groups_respect_bound() {
        let mut rng = EngineConfig::default().rng(4000);
        for _ in 0..40 {
            let g = random_group(&mut rng, 64).unwrap();
            assert!(g.order() <= 64 && g.order() >= 1);
        }
    }

    #[test]
    fn random_extensions_have_q8_kernel() {
        let mut rng = EngineConfig::default().rng(4001);
        for _ in 0..60 {
            let s = random_q8_extension(&mut rng).unwrap();
            assert!(is_q8(s.kernel()));
            assert!(s.total().order() <= 64);
        }
    }
}
