use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{from_closure, Elem, FiniteGroup};
use crate::error::{Error, Result};

pub const CATALOG_NAMES: [&str; 6] = ["Q8", "Q16", "D4", "S3", "A4", "S4"];

/// Named small groups.
///
/// `Q8` is labelled `1, -1, i, -i, j, -j, k, -k` in that index order and
/// generated by `i, j`. `Q16` uses normal forms `a^k*b^e` with
/// `a^8 = 1, a^4 = b^2, bab⁻¹ = a⁻¹`; `D4` uses `r^k*s`. The permutation groups
/// use cycle notation on points 1..4.
pub fn catalog(name: &str) -> Result<FiniteGroup> {
    match name {
        "Q8" => Ok(quaternion()),
        "Q16" => dicyclic(4),
        "D4" => dihedral(4),
        "S3" => permutation_group(3, &[&[1, 0, 2], &[1, 2, 0]]),
        "A4" => permutation_group(4, &[&[1, 2, 0, 3], &[1, 0, 3, 2]]),
        "S4" => permutation_group(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn quaternion() -> FiniteGroup {
    // unit 0..4 = 1, i, j, k; element index = 2·unit + negative
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mut mul = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (u, neg) = UNIT[x / 2][y / 2];
            let sign = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
            mul.push(2 * u + sign as usize);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
    FiniteGroup::from_table(mul, labels, Some(alloc::vec![2, 4])).expect("Q8 table is valid")
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => alloc::format!("{base}^{k}"),
    }
}

fn word_label(a: &str, k: usize, b: &str, e: usize) -> String {
    match (power_label(a, k), e) {
        (ak, 0) if ak.is_empty() => "1".to_string(),
        (ak, 0) => ak,
        (ak, _) if ak.is_empty() => b.to_string(),
        (ak, _) => alloc::format!("{ak}*{b}"),
    }
}

/// Dicyclic group of order `4m`: `a^{2m} = 1, a^m = b^2, bab⁻¹ = a⁻¹`.
/// Element `a^k b^e` sits at index `e·2m + k`.
pub fn dicyclic(m: usize) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::EmptyGroup);
    }
    let n = 2 * m;
    let order = 2 * n;
    let split = |x: Elem| (x % n, x / n);
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        let (k1, e1) = split(x);
        for y in 0..order {
            let (k2, e2) = split(y);
            let (k, e) = match (e1, e2) {
                (0, _) => (k1 + k2, e2),
                (_, 0) => (k1 + n - k2, 1),
                _ => (k1 + n - k2 + m, 0),
            };
            mul.push(e * n + k % n);
        }
    }
    let labels = (0..order).map(|x| word_label("a", x % n, "b", x / n)).collect();
    FiniteGroup::from_table(mul, labels, Some(alloc::vec![1, n]))
}

/// Dihedral group of order `2n`: `r^n = s^2 = 1, srs⁻¹ = r⁻¹`.
/// Element `r^k s^e` sits at index `e·n + k`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::EmptyGroup);
    }
    let order = 2 * n;
    let split = |x: Elem| (x % n, x / n);
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        let (k1, e1) = split(x);
        for y in 0..order {
            let (k2, e2) = split(y);
            let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 };
            mul.push(((e1 + e2) % 2) * n + k % n);
        }
    }
    let labels = (0..order).map(|x| word_label("r", x % n, "s", x / n)).collect();
    let gens = if n == 1 { alloc::vec![1] } else { alloc::vec![1, n] };
    FiniteGroup::from_table(mul, labels, Some(gens))
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = alloc::vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push(char::from_digit((x + 1) as u32, 10).unwrap_or('?'));
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "1".to_string()
    } else {
        out
    }
}

/// Permutation group generated by `gens` (images of `0..n`), composing as
/// functions: `(στ)(x) = σ(τ(x))`.
fn permutation_group(n: usize, gens: &[&[usize]]) -> Result<FiniteGroup> {
    let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
    let id: Vec<usize> = (0..n).collect();
    from_closure(&gens, id, |s, t| t.iter().map(|&x| s[x]).collect(), |p| cycle_label(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{subgroup_generated, Subgroup};

    #[test]
    fn q8_structure() {
        let q8 = catalog("Q8").unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 4).count(), 6);
        let i = q8.find_label("i").unwrap();
        let j = q8.find_label("j").unwrap();
        let k = q8.find_label("k").unwrap();
        let m1 = q8.find_label("-1").unwrap();
        assert_eq!(q8.mul(i, j), k);
        assert_eq!(q8.mul(j, i), q8.find_label("-k").unwrap());
        assert_eq!(q8.mul(i, i), m1);
        assert_eq!(q8.mul(q8.mul(i, j), k), m1);
        // presentation a^4 = 1, a^2 = b^2, bab⁻¹ = a⁻¹ with a = i, b = j
        assert_eq!(q8.pow(i, 4), 0);
        assert_eq!(q8.pow(i, 2), q8.pow(j, 2));
        assert_eq!(q8.conjugate(j, i), q8.inv(i));
        assert_eq!(q8.involution_count(), 1);
    }

    #[test]
    fn d4_center_by_brute_force() {
        let d4 = catalog("D4").unwrap();
        assert_eq!(d4.order(), 8);
        let center: Vec<Elem> = d4.elements().filter(|&z| d4.elements().all(|x| d4.mul(z, x) == d4.mul(x, z))).collect();
        assert_eq!(center.len(), 2);
        assert_eq!(d4.center().order(), 2);
        assert_eq!(d4.involution_count(), 5);
    }

    #[test]
    fn a4_has_no_subgroup_of_order_6() {
        let a4 = catalog("A4").unwrap();
        assert_eq!(a4.order(), 12);
        // every subgroup is generated by at most two elements here
        let mut found = false;
        for x in a4.elements() {
            for y in a4.elements() {
                if subgroup_generated(&a4, &[x, y]).order() == 6 {
                    found = true;
                }
            }
        }
        assert!(!found);
    }

    #[test]
    fn q16_relations() {
        let q16 = catalog("Q16").unwrap();
        let a = q16.find_label("a").unwrap();
        let b = q16.find_label("b").unwrap();
        assert_eq!(q16.order(), 16);
        assert_eq!(q16.pow(a, 8), 0);
        assert_eq!(q16.pow(a, 4), q16.pow(b, 2));
        assert_eq!(q16.conjugate(b, a), q16.inv(a));
        assert_eq!(q16.involution_count(), 1);
        assert_eq!(q16.parse_element("a^2*b"), q16.find_label("a^2*b"));
    }

    #[test]
    fn symmetric_groups() {
        let s3 = catalog("S3").unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let s4 = catalog("S4").unwrap();
        assert_eq!(s4.order(), 24);
        let a4 = Subgroup::new(
            &s4,
            s4.elements().filter(|&x| s4.element_order(x) != 2 && s4.element_order(x) != 4 || s4.label(x).len() == 8).collect(),
        );
        assert_eq!(a4.unwrap().order(), 12);
    }

    #[test]
    fn unknown_name() {
        assert_eq!(catalog("Q32"), Err(Error::UnknownName("Q32".into())));
    }
}
