//! Ready-made extensions with a quaternion (or other small) kernel, used by
//! the test suites and the command-line tool.

mod random;

pub use random::{normal_q8_subgroups, random_group, random_q8_extension};

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{
    catalog, central_product, cyclic_named, dicyclic, direct_product, make_ses, semidirect_from_generators, Automorphism, Elem,
    FiniteGroup, GroupHom, ShortExactSequence,
};

/// An extension together with a commuting pair of quotient elements.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub ses: ShortExactSequence,
    pub alpha: Elem,
    pub beta: Elem,
}

fn elem(g: &FiniteGroup, label: &str) -> Result<Elem> {
    g.parse_element(label).ok_or_else(|| Error::InvalidTable(alloc::format!("no element '{label}'")))
}

/// `Z_k(alpha) × Z_m(beta)`.
pub fn two_generator_abelian(k: usize, m: usize) -> Result<FiniteGroup> {
    Ok(direct_product(&cyclic_named(k, "alpha")?, &cyclic_named(m, "beta")?))
}

/// Sequence from generator images of the projection (listed by label).
fn sequence(total: FiniteGroup, quotient: FiniteGroup, images: &[(&str, &str)]) -> Result<ShortExactSequence> {
    let pairs = images.iter().map(|&(x, y)| Ok((elem(&total, x)?, elem(&quotient, y)?))).collect::<Result<Vec<_>>>()?;
    let hom = GroupHom::from_generator_images(Arc::new(total), Arc::new(quotient), &pairs)?;
    make_ses(hom)
}

fn fixture(name: &'static str, ses: ShortExactSequence) -> Result<Fixture> {
    let q = ses.quotient().clone();
    Ok(Fixture { name, alpha: elem(&q, "alpha")?, beta: elem(&q, "beta")?, ses })
}

fn aut(g: &FiniteGroup, images: &[(&str, &str)]) -> Result<Automorphism> {
    let pairs = images.iter().map(|&(x, y)| Ok((elem(g, x)?, elem(g, y)?))).collect::<Result<Vec<_>>>()?;
    Automorphism::from_generator_images(g, &pairs)
}

/// `Γ × G → G` for any kernel `Γ`.
pub fn trivial_extension(kernel: &FiniteGroup, quotient: &FiniteGroup) -> Result<ShortExactSequence> {
    let total = Arc::new(direct_product(kernel, quotient));
    let m = quotient.order();
    let map = total.elements().map(|x| x % m).collect();
    make_ses(GroupHom::new(total, Arc::new(quotient.clone()), map)?)
}

/// `Q8 × (Z2 × Z2)` projecting onto the second factor.
pub fn q8_direct() -> Result<Fixture> {
    let v = two_generator_abelian(2, 2)?;
    fixture("product", trivial_extension(&catalog("Q8")?, &v)?)
}

/// `Q8 ⋊ (Z3(y) × Z3(z))`, `y: i ↦ j, j ↦ −k`, `z` trivial.
pub fn q8_order_three() -> Result<Fixture> {
    let q8 = catalog("Q8")?;
    let h = direct_product(&cyclic_named(3, "y")?, &cyclic_named(3, "z")?);
    let act_y = aut(&q8, &[("i", "j"), ("j", "-k")])?;
    let total = semidirect_from_generators(&q8, &h, &[(elem(&h, "y")?, act_y), (elem(&h, "z")?, Automorphism::identity(&q8))])?;
    let ses = sequence(total, two_generator_abelian(3, 3)?, &[("i", "1"), ("j", "1"), ("y", "alpha"), ("z", "beta")])?;
    fixture("order-three", ses)
}

/// `Q8 ⋊ (Z2(y) × Z2(z))`, `y` conjugation by `j`, `z` conjugation by `i`.
pub fn q8_inner() -> Result<Fixture> {
    let q8 = catalog("Q8")?;
    let h = direct_product(&cyclic_named(2, "y")?, &cyclic_named(2, "z")?);
    let act_y = Automorphism::inner(&q8, elem(&q8, "j")?);
    let act_z = Automorphism::inner(&q8, elem(&q8, "i")?);
    let total = semidirect_from_generators(&q8, &h, &[(elem(&h, "y")?, act_y), (elem(&h, "z")?, act_z)])?;
    let ses = sequence(total, two_generator_abelian(2, 2)?, &[("i", "1"), ("j", "1"), ("y", "alpha"), ("z", "beta")])?;
    fixture("inner", ses)
}

/// `Q16 ⋊ Z2(z)`, `z: a ↦ a³, b ↦ b`; kernel `⟨a², b⟩`.
pub fn q16_twisted() -> Result<Fixture> {
    let q16 = dicyclic(4)?;
    let z2 = cyclic_named(2, "z")?;
    let act = aut(&q16, &[("a", "a^3"), ("b", "b")])?;
    let total = semidirect_from_generators(&q16, &z2, &[(elem(&z2, "z")?, act)])?;
    let ses = sequence(total, two_generator_abelian(2, 2)?, &[("a", "alpha"), ("b", "1"), ("z", "beta")])?;
    fixture("q16-twisted", ses)
}

/// `Q16 × Z2(z)` with the same projection as [`q16_twisted`].
pub fn q16_direct() -> Result<Fixture> {
    let total = direct_product(&dicyclic(4)?, &cyclic_named(2, "z")?);
    let ses = sequence(total, two_generator_abelian(2, 2)?, &[("a", "alpha"), ("b", "1"), ("z", "beta")])?;
    fixture("q16-direct", ses)
}

/// `(Q8 ⋊ Z6(y)) ⋊ Z2(z)` with `y: i ↦ j, j ↦ −k` and
/// `z: i ↦ i, j ↦ −j, y ↦ k·y`, over `Z6(alpha) × Z2(beta)`.
pub fn q8_no_lifts() -> Result<Fixture> {
    let q8 = catalog("Q8")?;
    let z6 = cyclic_named(6, "y")?;
    let act_y = aut(&q8, &[("i", "j"), ("j", "-k")])?;
    let inner = semidirect_from_generators(&q8, &z6, &[(elem(&z6, "y")?, act_y)])?;
    let act_z = aut(&inner, &[("i", "i"), ("j", "-j"), ("y", "k*y")])?;
    let z2 = cyclic_named(2, "z")?;
    let total = semidirect_from_generators(&inner, &z2, &[(elem(&z2, "z")?, act_z)])?;
    let ses = sequence(total, two_generator_abelian(6, 2)?, &[("i", "1"), ("j", "1"), ("y", "alpha"), ("z", "beta")])?;
    fixture("no-lifts", ses)
}

/// The five quaternion-kernel extensions with lift counts 0, 8, 16, 24, 40,
/// in that order.
pub fn lift_count_fixtures() -> Result<Vec<(i64, Fixture)>> {
    Ok(alloc::vec![(0, q8_no_lifts()?), (8, q16_twisted()?), (16, q8_order_three()?), (24, q8_inner()?), (40, q8_direct()?),])
}

/// `D4 ⋊ (Z2(y) × Z2(z))` with two commuting outer involutions
/// `y: r ↦ r³, s ↦ rs` and `z: r ↦ r³, s ↦ r³s`, over `Z2(alpha) × Z2(beta)`.
pub fn d4_outer() -> Result<Fixture> {
    let d4 = catalog("D4")?;
    let h = direct_product(&cyclic_named(2, "y")?, &cyclic_named(2, "z")?);
    let act_y = aut(&d4, &[("r", "r^3"), ("s", "r*s")])?;
    let act_z = aut(&d4, &[("r", "r^3"), ("s", "r^3*s")])?;
    let total = semidirect_from_generators(&d4, &h, &[(elem(&h, "y")?, act_y), (elem(&h, "z")?, act_z)])?;
    let ses = sequence(total, two_generator_abelian(2, 2)?, &[("r", "1"), ("s", "1"), ("y", "alpha"), ("z", "beta")])?;
    fixture("d4-outer", ses)
}

/// `D4 ∘ D4` of order 32.
pub fn d4_central_d4() -> Result<FiniteGroup> {
    let d4 = catalog("D4")?;
    let z = elem(&d4, "r^2")?;
    central_product(&d4, &d4, z, z)
}

/// `Q8 ∘ D4` of order 32.
pub fn q8_central_d4() -> Result<FiniteGroup> {
    let q8 = catalog("Q8")?;
    let d4 = catalog("D4")?;
    central_product(&q8, &d4, elem(&q8, "-1")?, elem(&d4, "r^2")?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        let expect = [(0, 96, 12), (8, 32, 4), (16, 72, 9), (24, 32, 4), (40, 32, 4)];
        for ((n, f), (m, total, quot)) in lift_count_fixtures().unwrap().into_iter().zip(expect) {
            assert_eq!(n, m);
            assert_eq!(f.ses.total().order(), total, "{}", f.name);
            assert_eq!(f.ses.quotient().order(), quot, "{}", f.name);
            let k = f.ses.kernel();
            assert_eq!((k.order(), k.involution_count(), k.is_abelian()), (8, 1, false), "{}", f.name);
            assert!(f.ses.quotient().commutes(f.alpha, f.beta));
        }
    }

    #[test]
    fn twisted_fixture_named_lifts_commute() {
        let f = q16_twisted().unwrap();
        let g = f.ses.total();
        let a = g.parse_element("a*b").unwrap();
        let b = g.parse_element("a^2*b*z").unwrap();
        assert!(g.commutes(a, b));
        assert_eq!(f.ses.project(a), f.alpha);
        assert_eq!(f.ses.project(b), f.beta);
    }

    #[test]
    fn central_products_are_extraspecial_sized() {
        for g in [d4_central_d4().unwrap(), q8_central_d4().unwrap()] {
            assert_eq!(g.order(), 32);
            assert_eq!(g.center().order(), 2);
        }
    }
}
