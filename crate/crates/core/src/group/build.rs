use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{subgroup_generated, Automorphism, Elem, FiniteGroup, GroupHom, GroupRef, Subgroup, MAX_ORDER};
use crate::error::{Error, Result};

/// Cyclic group of order `n` with generator labelled `a`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    cyclic_named(n, "a")
}

/// Cyclic group `Z_n(name)`: labels `1, name, name^2, ..., name^(n-1)`.
pub fn cyclic_named(n: usize, name: &str) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::EmptyGroup);
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, limit: MAX_ORDER });
    }
    let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => name.to_string(),
            _ => alloc::format!("{name}^{k}"),
        })
        .collect();
    let gens = if n == 1 { Vec::new() } else { alloc::vec![1] };
    FiniteGroup::from_table(mul, labels, Some(gens))
}

/// Labels for pairs: `x*y`, dropping identity components; falls back to
/// `(x,y)` when the short form would collide.
fn pair_labels(a: &FiniteGroup, b: &FiniteGroup) -> Vec<String> {
    let short: Vec<String> = a
        .elements()
        .flat_map(|x| b.elements().map(move |y| (x, y)))
        .map(|(x, y)| match (x, y) {
            (0, 0) => "1".to_string(),
            (x, 0) => a.label(x).to_string(),
            (0, y) => b.label(y).to_string(),
            (x, y) => alloc::format!("{}*{}", a.label(x), b.label(y)),
        })
        .collect();
    let distinct: BTreeSet<&String> = short.iter().collect();
    if distinct.len() == short.len() {
        return short;
    }
    a.elements()
        .flat_map(|x| b.elements().map(move |y| (x, y)))
        .map(|(x, y)| alloc::format!("({},{})", a.label(x), b.label(y)))
        .collect()
}

fn pair_generators(a: &FiniteGroup, b: &FiniteGroup) -> Vec<Elem> {
    let nb = b.order();
    a.generators().iter().map(|&x| x * nb).chain(b.generators().iter().copied()).collect()
}

/// `a × b`, element `(x, y)` at index `x·|b| + y`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    semidirect_unchecked(a, b, |_, y| y)
}

fn semidirect_unchecked(n: &FiniteGroup, h: &FiniteGroup, act: impl Fn(Elem, Elem) -> Elem) -> FiniteGroup {
    let (nn, nh) = (n.order(), h.order());
    let order = nn * nh;
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        let (n1, h1) = (x / nh, x % nh);
        for y in 0..order {
            let (n2, h2) = (y / nh, y % nh);
            mul.push(n.mul(n1, act(h1, n2)) * nh + h.mul(h1, h2));
        }
    }
    FiniteGroup::from_table(mul, pair_labels(n, h), Some(pair_generators(n, h))).expect("products of valid groups are valid")
}

/// `n ⋊ h` with `(n₁,h₁)(n₂,h₂) = (n₁·action[h₁](n₂), h₁h₂)`; `action` lists
/// one automorphism of `n` per element of `h`.
pub fn semidirect_product(n: &FiniteGroup, h: &FiniteGroup, action: &[Automorphism]) -> Result<FiniteGroup> {
    if n.order() * h.order() > MAX_ORDER {
        return Err(Error::TooLarge { order: n.order() * h.order(), limit: MAX_ORDER });
    }
    if action.len() != h.order() || action.iter().any(|a| a.perm().len() != n.order()) {
        return Err(Error::ActionNotHom("need one automorphism of n per element of h".to_string()));
    }
    if !action[0].is_identity() {
        return Err(Error::ActionNotHom("identity of h must act trivially".to_string()));
    }
    for x in h.elements() {
        for y in h.elements() {
            if action[h.mul(x, y)] != action[x].compose(&action[y]) {
                return Err(Error::ActionNotHom(alloc::format!(
                    "action({}·{}) differs from action({})∘action({})",
                    h.label(x),
                    h.label(y),
                    h.label(x),
                    h.label(y)
                )));
            }
        }
    }
    Ok(semidirect_unchecked(n, h, |hh, nn| action[hh].apply(nn)))
}

/// Semidirect product with the action given on generators of `h` only.
pub fn semidirect_from_generators(
    n: &FiniteGroup,
    h: &FiniteGroup,
    generator_action: &[(Elem, Automorphism)],
) -> Result<FiniteGroup> {
    let mut act: Vec<Option<Automorphism>> = alloc::vec![None; h.order()];
    act[0] = Some(Automorphism::identity(n));
    let mut queue = alloc::vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (g, phi) in generator_action {
            let y = h.mul(x, *g);
            let want = act[x].as_ref().expect("visited").compose(phi);
            match &act[y] {
                None => {
                    act[y] = Some(want);
                    queue.push(y);
                }
                Some(have) if *have != want => {
                    return Err(Error::ActionNotHom(alloc::format!(
                        "generator actions violate a relation of h at {}",
                        h.label(y)
                    )))
                }
                Some(_) => {}
            }
        }
    }
    if queue.len() != h.order() {
        return Err(Error::ActionNotHom("listed generators do not generate h".to_string()));
    }
    let action: Vec<Automorphism> = act.into_iter().map(|a| a.expect("all visited")).collect();
    semidirect_product(n, h, &action)
}

/// `g / n` on canonical coset representatives (minimal index per coset),
/// with the projection.
pub fn quotient_group(g: &GroupRef, n: &Subgroup) -> Result<(GroupRef, GroupHom)> {
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    let rep_of: Vec<Elem> = g.elements().map(|x| n.members().iter().map(|&k| g.mul(x, k)).min().expect("nonempty")).collect();
    let reps: Vec<Elem> = rep_of.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let index: BTreeMap<Elem, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let m = reps.len();
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            mul.push(index[&rep_of[g.mul(a, b)]]);
        }
    }
    let labels = reps.iter().map(|&r| g.label(r).to_string()).collect();
    let mut gens: Vec<Elem> = g.generators().iter().map(|&x| index[&rep_of[x]]).filter(|&x| x != 0).collect();
    gens.dedup();
    let q = Arc::new(FiniteGroup::from_table(mul, labels, Some(gens))?);
    let proj = g.elements().map(|x| index[&rep_of[x]]).collect();
    let hom = GroupHom::new(g.clone(), q.clone(), proj)?;
    Ok((q, hom))
}

/// `(a × b) / ⟨(za, zb)⟩` for central elements of equal order.
pub fn central_product(a: &FiniteGroup, b: &FiniteGroup, za: Elem, zb: Elem) -> Result<FiniteGroup> {
    for (g, z) in [(a, za), (b, zb)] {
        if z >= g.order() {
            return Err(Error::NoSuchElement(z));
        }
        if !g.elements().all(|x| g.commutes(x, z)) {
            return Err(Error::NotCentral(g.label(z).to_string()));
        }
    }
    if a.element_order(za) != b.element_order(zb) {
        return Err(Error::OrderMismatch(alloc::format!(
            "{} has order {}, {} has order {}",
            a.label(za),
            a.element_order(za),
            b.label(zb),
            b.element_order(zb)
        )));
    }
    let p = Arc::new(direct_product(a, b));
    let diag = subgroup_generated(&p, &[za * b.order() + zb]);
    let (q, _) = quotient_group(&p, &diag)?;
    Ok(Arc::try_unwrap(q).unwrap_or_else(|q| (*q).clone()))
}

/// Closure of `gens` under `mul`, identity first, then breadth-first order.
pub fn from_closure<T: Ord + Clone>(
    gens: &[T],
    identity: T,
    mul: impl Fn(&T, &T) -> T,
    label: impl Fn(&T) -> String,
) -> Result<FiniteGroup> {
    let mut elems = alloc::vec![identity.clone()];
    let mut index: BTreeMap<T, Elem> = BTreeMap::new();
    index.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        head += 1;
        for g in gens {
            let y = mul(&x, g);
            if !index.contains_key(&y) {
                if elems.len() == MAX_ORDER {
                    return Err(Error::TooLarge { order: MAX_ORDER + 1, limit: MAX_ORDER });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
    }
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for x in &elems {
        for y in &elems {
            let z = mul(x, y);
            table.push(*index.get(&z).ok_or_else(|| Error::InvalidTable("multiplication is not closed".to_string()))?);
        }
    }
    let labels = elems.iter().map(label).collect();
    let generators = gens.iter().map(|g| index[g]).filter(|&g| g != 0).collect();
    FiniteGroup::from_table(table, labels, Some(generators))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    fn sorted_orders(g: &FiniteGroup) -> Vec<usize> {
        g.order_profile()
    }

    #[test]
    fn cyclic_orders() {
        let z1 = cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        assert!(z1.generators().is_empty());
        let z4 = cyclic(4).unwrap();
        assert_eq!(z4.element_orders(), [1, 4, 2, 4]);
        let z6 = cyclic(6).unwrap();
        assert!(z6.is_abelian());
        assert_eq!(z6.exponent(), 6);
        assert_eq!(cyclic(0), Err(Error::EmptyGroup));
    }

    #[test]
    fn klein_four() {
        let v = direct_product(&cyclic_named(2, "x").unwrap(), &cyclic_named(2, "y").unwrap());
        assert_eq!(v.order(), 4);
        assert_eq!(v.exponent(), 2);
        assert_eq!(v.labels(), ["1", "y", "x", "x*y"]);
    }

    #[test]
    fn q8_times_klein() {
        let v = direct_product(&cyclic_named(2, "alpha").unwrap(), &cyclic_named(2, "beta").unwrap());
        let g = direct_product(&catalog("Q8").unwrap(), &v);
        assert_eq!(g.order(), 32);
    }

    #[test]
    fn trivial_factor() {
        let s3 = catalog("S3").unwrap();
        let p = direct_product(&cyclic(1).unwrap(), &s3);
        assert_eq!(p.order(), 6);
        for x in s3.elements() {
            for y in s3.elements() {
                assert_eq!(p.mul(x, y), s3.mul(x, y));
            }
        }
    }

    #[test]
    fn trivial_action_is_direct_product() {
        let q8 = catalog("Q8").unwrap();
        let h = cyclic(3).unwrap();
        let action: Vec<_> = h.elements().map(|_| Automorphism::identity(&q8)).collect();
        assert_eq!(semidirect_product(&q8, &h, &action).unwrap(), direct_product(&q8, &h));
    }

    #[test]
    fn bad_action_rejected() {
        let q8 = catalog("Q8").unwrap();
        let i = q8.find_label("i").unwrap();
        let j = q8.find_label("j").unwrap();
        let mk = q8.find_label("-k").unwrap();
        let y = Automorphism::from_generator_images(&q8, &[(i, j), (j, mk)]).unwrap();
        // an order-3 automorphism cannot be the action of a Z2 generator
        let z2 = cyclic(2).unwrap();
        assert!(matches!(semidirect_from_generators(&q8, &z2, &[(1, y)]), Err(Error::ActionNotHom(_))));
    }

    #[test]
    fn q8_by_z3_times_z3() {
        let q8 = catalog("Q8").unwrap();
        let h = direct_product(&cyclic_named(3, "y").unwrap(), &cyclic_named(3, "z").unwrap());
        let i = q8.find_label("i").unwrap();
        let j = q8.find_label("j").unwrap();
        let mk = q8.find_label("-k").unwrap();
        let y_act = Automorphism::from_generator_images(&q8, &[(i, j), (j, mk)]).unwrap();
        let yy = h.find_label("y").unwrap();
        let zz = h.find_label("z").unwrap();
        let g = semidirect_from_generators(&q8, &h, &[(yy, y_act), (zz, Automorphism::identity(&q8))]).unwrap();
        assert_eq!(g.order(), 72);
    }

    #[test]
    fn q16_by_z2() {
        let q16 = catalog("Q16").unwrap();
        let a = q16.find_label("a").unwrap();
        let b = q16.find_label("b").unwrap();
        let a3 = q16.find_label("a^3").unwrap();
        let z_act = Automorphism::from_generator_images(&q16, &[(a, a3), (b, b)]).unwrap();
        let g = semidirect_from_generators(&q16, &cyclic_named(2, "z").unwrap(), &[(1, z_act)]).unwrap();
        assert_eq!(g.order(), 32);
        assert!(g.find_label("a^2*b*z").is_some());
    }

    #[test]
    fn quotients() {
        let q8 = Arc::new(catalog("Q8").unwrap());
        let (q, proj) = quotient_group(&q8, &q8.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
        assert!(proj.is_surjective());
        let (t, _) = quotient_group(&q8, &Subgroup::trivial(&q8)).unwrap();
        assert_eq!(*t, *q8);
        let (one, _) = quotient_group(&q8, &Subgroup::whole(&q8)).unwrap();
        assert_eq!(one.order(), 1);
    }

    fn is_extraspecial_32(g: &FiniteGroup) -> bool {
        let g = Arc::new(g.clone());
        let z = g.center();
        let (q, _) = quotient_group(&g, &z).unwrap();
        g.order() == 32 && z.order() == 2 && q.exponent() <= 2
    }

    #[test]
    fn central_products() {
        let d4 = catalog("D4").unwrap();
        let q8 = catalog("Q8").unwrap();
        let zd = d4.center().members()[1];
        let zq = q8.center().members()[1];
        let dd = central_product(&d4, &d4, zd, zd).unwrap();
        assert!(is_extraspecial_32(&dd));
        let qd = central_product(&q8, &d4, zq, zd).unwrap();
        assert!(is_extraspecial_32(&qd));
        let qq = central_product(&q8, &q8, zq, zq).unwrap();
        assert_eq!(qq.order(), 32);
        // Q8∘D4 and D4∘D4 differ: 2^{2r+1} extraspecial groups of both types
        assert_ne!(sorted_orders(&dd), sorted_orders(&qd));
    }

    #[test]
    fn central_product_guards() {
        let s3 = catalog("S3").unwrap();
        let d4 = catalog("D4").unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert!(matches!(central_product(&s3, &d4, t, 0), Err(Error::NotCentral(_))));
        let zd = d4.center().members()[1];
        let z4 = cyclic(4).unwrap();
        assert!(matches!(central_product(&z4, &d4, 1, zd), Err(Error::OrderMismatch(_))));
    }
}
