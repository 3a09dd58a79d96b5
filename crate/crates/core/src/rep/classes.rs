use alloc::vec::Vec;

use crate::group::{Elem, FiniteGroup};

/// Partition of a group into conjugacy classes. Classes are numbered by their
/// representative (the minimal element index), so class 0 is `{1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClasses {
    pub class_of: Vec<usize>,
    pub representatives: Vec<Elem>,
    pub sizes: Vec<usize>,
}

impl ConjClasses {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = Elem> + '_ {
        self.class_of.iter().enumerate().filter(move |(_, &c)| c == class).map(|(x, _)| x)
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjClasses {
    let n = g.order();
    let mut class_of = alloc::vec![usize::MAX; n];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for x in g.elements() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(x);
        let mut size = 0;
        for a in g.elements() {
            let y = g.conjugate(a, x);
            if class_of[y] == usize::MAX {
                class_of[y] = c;
                size += 1;
            }
        }
        sizes.push(size);
    }
    ConjClasses { class_of, representatives, sizes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, cyclic};

    #[test]
    fn abelian_singletons() {
        let z6 = cyclic(6).unwrap();
        let c = conjugacy_classes(&z6);
        assert_eq!(c.count(), 6);
        assert!(c.sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn q8_classes() {
        let c = conjugacy_classes(&catalog("Q8").unwrap());
        let mut sizes = c.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, [1, 1, 2, 2, 2]);
    }

    #[test]
    fn s3_classes_by_exhaustive_conjugation() {
        let s3 = catalog("S3").unwrap();
        let c = conjugacy_classes(&s3);
        // independent check: two elements are conjugate iff some a maps one to the other
        for x in s3.elements() {
            for y in s3.elements() {
                let conj = s3.elements().any(|a| s3.conjugate(a, x) == y);
                assert_eq!(conj, c.class_of[x] == c.class_of[y]);
            }
        }
        let mut sizes = c.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, [1, 2, 3]);
        assert_eq!(c.members(0).collect::<Vec<_>>(), [0]);
    }
}
