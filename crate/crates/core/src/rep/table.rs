use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::Rng;

use super::classes::{conjugacy_classes, ConjClasses};
use crate::config::{stream, EngineConfig};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numeric::{hermitian_eigensystem, sqrt, Matrix, Scalar, ZERO};

const MAX_ATTEMPTS: usize = 8;

/// Irreducible characters as rows indexed by conjugacy class. Rows are sorted
/// by degree, the trivial character first.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub classes: ConjClasses,
    pub rows: Vec<Vec<Scalar>>,
    pub dims: Vec<usize>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `χ_row(x)` for a group element `x`.
    pub fn value(&self, row: usize, x: usize) -> Scalar {
        self.rows[row][self.classes.class_of[x]]
    }

    /// Row `row` expanded to one value per group element.
    pub fn on_elements(&self, row: usize) -> Vec<Scalar> {
        self.classes.class_of.iter().map(|&c| self.rows[row][c]).collect()
    }

    /// Index of the row matching `values` (one per element), if any.
    pub fn find_row(&self, values: &[Scalar], eps: f64) -> Option<usize> {
        (0..self.len()).find(|&r| self.classes.class_of.iter().zip(values).all(|(&c, v)| (self.rows[r][c] - v).norm() <= eps))
    }
}

/// Structure constants: `a[l][k][m]` is the coefficient of the class sum
/// `C_m` in `C_l * C_k`.
fn class_structure(g: &FiniteGroup, cls: &ConjClasses) -> Vec<Vec<Vec<f64>>> {
    let r = cls.count();
    let mut members: Vec<Vec<usize>> = alloc::vec![Vec::new(); r];
    for x in g.elements() {
        members[cls.class_of[x]].push(x);
    }
    let mut a = alloc::vec![alloc::vec![alloc::vec![0.0; r]; r]; r];
    for l in 0..r {
        for k in 0..r {
            let mut counts = alloc::vec![0usize; r];
            for &x in &members[l] {
                for &y in &members[k] {
                    counts[cls.class_of[g.mul(x, y)]] += 1;
                }
            }
            for m in 0..r {
                a[l][k][m] = counts[m] as f64 / cls.sizes[m] as f64;
            }
        }
    }
    a
}

fn sort_key_cmp(a: &[Scalar], b: &[Scalar]) -> Ordering {
    let q = |x: f64| libm::round(x * 1e6) as i64;
    for (x, y) in a.iter().zip(b) {
        let o = q(y.re).cmp(&q(x.re)).then(q(y.im).cmp(&q(x.im)));
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

/// Character table via the class algebra: a random Hermitian combination of
/// the (normal) class multiplication matrices in the orthonormal basis
/// `C_K / sqrt|K|` has the primitive central idempotents as eigenvectors.
pub fn character_table(g: &FiniteGroup, cfg: &EngineConfig) -> Result<CharacterTable> {
    cfg.tol.validate()?;
    let cls = conjugacy_classes(g);
    let r = cls.count();
    let n = g.order() as f64;
    let a = class_structure(g, &cls);
    let sizes: Vec<f64> = cls.sizes.iter().map(|&s| s as f64).collect();
    let normal: Vec<Matrix> =
        (0..r).map(|l| Matrix::from_fn(r, r, |m, k| Scalar::new(a[l][k][m] * sqrt(sizes[m] / sizes[k]), 0.0))).collect();

    let mut rng = cfg.rng(stream::CHARACTER_TABLE);
    for _ in 0..MAX_ATTEMPTS {
        let mut h = Matrix::zeros(r, r);
        for nl in &normal {
            let (x, y): (f64, f64) = (rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
            let adj = nl.adjoint();
            h.add_assign_scaled(&nl.add(&adj), Scalar::new(x, 0.0));
            h.add_assign_scaled(&nl.sub(&adj), Scalar::new(0.0, y));
        }
        let h = h.hermitian_part();
        let es = hermitian_eigensystem(&h, &cfg.tol)?;
        let scale = es.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        if es.values.windows(2).any(|w| w[1] - w[0] <= 1e-6 * scale) {
            continue;
        }
        let mut rows = Vec::with_capacity(r);
        let mut dims = Vec::with_capacity(r);
        let mut ok = true;
        for j in 0..r {
            let v = es.vectors.column(j);
            let d_est = v[0].norm() * sqrt(n);
            let d = libm::round(d_est);
            if d < 1.0 || (d - d_est).abs() > 1e-6 {
                ok = false;
                break;
            }
            let v0 = v[0].conj();
            let row: Vec<Scalar> = (0..r).map(|k| v[k].conj() / sqrt(sizes[k]) / v0 * d).collect();
            rows.push(row);
            dims.push(d as usize);
        }
        if !ok || !orthonormal(&rows, &sizes, n) {
            continue;
        }
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by(|&x, &y| dims[x].cmp(&dims[y]).then_with(|| sort_key_cmp(&rows[x], &rows[y])));
        let rows = order.iter().map(|&i| rows[i].clone()).collect();
        let dims = order.iter().map(|&i| dims[i]).collect();
        return Ok(CharacterTable { classes: cls, rows, dims });
    }
    Err(Error::DegenerateSplit(MAX_ATTEMPTS))
}

fn orthonormal(rows: &[Vec<Scalar>], sizes: &[f64], n: f64) -> bool {
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            let mut s = ZERO;
            for k in 0..sizes.len() {
                s += a[k] * b[k].conj() * sizes[k];
            }
            let want = if i == j { 1.0 } else { 0.0 };
            if (s / n - want).norm() > 1e-6 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, cyclic, direct_product};

    fn check_orthogonality(g: &FiniteGroup, t: &CharacterTable) {
        // column orthogonality as an independent check
        let r = t.len();
        assert_eq!(r, t.classes.count());
        for k in 0..r {
            for l in 0..r {
                let s: Scalar = (0..r).map(|i| t.rows[i][k] * t.rows[i][l].conj()).sum();
                let want = if k == l { g.order() as f64 / t.classes.sizes[k] as f64 } else { 0.0 };
                assert!((s - want).norm() < 1e-8, "columns {k},{l}: {s}");
            }
        }
        assert_eq!(t.dims.iter().map(|d| d * d).sum::<usize>(), g.order());
        assert!(t.rows[0].iter().all(|v| (v - 1.0).norm() < 1e-9));
    }

    #[test]
    fn cyclic_table_is_roots_of_unity() {
        let z5 = cyclic(5).unwrap();
        let t = character_table(&z5, &EngineConfig::default()).unwrap();
        check_orthogonality(&z5, &t);
        for row in &t.rows {
            let gen = row[1];
            for (x, v) in row.iter().enumerate() {
                assert!((gen.powu(x as u32) - v).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn catalog_dimensions() {
        let cfg = EngineConfig::default();
        for (name, dims) in [
            ("Q8", &[1, 1, 1, 1, 2][..]),
            ("D4", &[1, 1, 1, 1, 2]),
            ("S3", &[1, 1, 2]),
            ("A4", &[1, 1, 1, 3]),
            ("S4", &[1, 1, 2, 3, 3]),
            ("Q16", &[1, 1, 1, 1, 2, 2, 2]),
        ] {
            let g = catalog(name).unwrap();
            let t = character_table(&g, &cfg).unwrap();
            assert_eq!(t.dims, dims, "{name}");
            check_orthogonality(&g, &t);
        }
    }

    #[test]
    fn product_table_and_seed_independence() {
        let g = direct_product(&catalog("S3").unwrap(), &cyclic(4).unwrap());
        let a = character_table(&g, &EngineConfig::with_seed(1)).unwrap();
        let b = character_table(&g, &EngineConfig::with_seed(99)).unwrap();
        check_orthogonality(&g, &a);
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            for (x, y) in ra.iter().zip(rb) {
                assert!((x - y).norm() < 1e-8);
            }
        }
    }
}
