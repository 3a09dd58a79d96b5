use alloc::vec::Vec;

use super::{sqrt, Matrix, Scalar};
use crate::config::Tolerance;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order; column `j` of `vectors` belongs to `values[j]`.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl Eigensystem {
    /// Groups consecutive eigenvalues whose gaps are at most `gap`; returns
    /// index ranges into `values`.
    pub fn clusters(&self, gap: f64) -> Vec<core::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.values.len() {
            if i == self.values.len() || self.values[i] - self.values[i - 1] > gap {
                out.push(start..i);
                start = i;
            }
        }
        out
    }
}

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot `a_pq` with a diagonal
/// unitary, then applies the real symmetric Jacobi rotation.
pub fn hermitian_eigensystem(m: &Matrix, tol: &Tolerance) -> Result<Eigensystem> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(alloc::format!("eigensystem needs a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    let defect = m.hermitian_defect();
    if defect > tol.eps * m.max_abs().max(1.0) {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = Matrix::identity(n);
    let scale = sqrt(a.frobenius_norm_sqr());
    // rounding keeps off-diagonal mass around n·ulp·scale, so aim just above it
    let target = 1e-14 * scale * (n.max(1) as f64);

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q, 1e-18 * scale);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = v.select_columns(&order);
    Ok(Eigensystem { values, vectors })
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    sqrt(s)
}

fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize, skip_below: f64) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b <= skip_below || b == 0.0 {
        return;
    }
    let phase = apq / b; // e^{iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * b);
    let t = if theta >= 0.0 { 1.0 / (theta + sqrt(theta * theta + 1.0)) } else { -1.0 / (-theta + sqrt(theta * theta + 1.0)) };
    let c = 1.0 / sqrt(t * t + 1.0);
    let s = t * c;
    // R = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
    let ph = phase.conj();
    let r_pp = Scalar::new(c, 0.0);
    let r_pq = Scalar::new(s, 0.0);
    let r_qp = ph * (-s);
    let r_qq = ph * c;

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * r_pp + akq * r_qp;
        a[(k, q)] = akp * r_pq + akq * r_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = r_pp.conj() * apk + r_qp.conj() * aqk;
        a[(q, k)] = r_pq.conj() * apk + r_qq.conj() * aqk;
    }
    a[(p, q)] = Scalar::new(0.0, 0.0);
    a[(q, p)] = Scalar::new(0.0, 0.0);
    a[(p, p)] = Scalar::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Scalar::new(a[(q, q)].re, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * r_pp + vkq * r_qp;
        v[(k, q)] = vkp * r_pq + vkq * r_qq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::random_scalar;
    use rand::SeedableRng;

    fn re(x: f64) -> Scalar {
        Scalar::new(x, 0.0)
    }

    fn reconstruct(es: &Eigensystem) -> Matrix {
        let d: Vec<Scalar> = es.values.iter().map(|&x| re(x)).collect();
        &(&es.vectors * &Matrix::diagonal(&d)) * &es.vectors.adjoint()
    }

    #[test]
    fn identity_has_unit_eigenvalues() {
        let es = hermitian_eigensystem(&Matrix::identity(3), &Tolerance::default()).unwrap();
        assert_eq!(es.values, [1.0, 1.0, 1.0]);
    }

    #[test]
    fn diagonal_is_sorted() {
        let m = Matrix::diagonal(&[re(2.0), re(-1.0)]);
        let es = hermitian_eigensystem(&m, &Tolerance::default()).unwrap();
        assert_eq!(es.values, [-1.0, 2.0]);
    }

    #[test]
    fn swap_matrix() {
        // characteristic polynomial λ² − 1
        let m = Matrix::from_rows(&[[re(0.0), re(1.0)], [re(1.0), re(0.0)]]);
        let es = hermitian_eigensystem(&m, &Tolerance::default()).unwrap();
        assert!((es.values[0] + 1.0).abs() < 1e-14);
        assert!((es.values[1] - 1.0).abs() < 1e-14);
        assert!(reconstruct(&es).max_diff(&m) < 1e-14);
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let m = Matrix::from_rows(&[[re(1.0), Scalar::new(0.0, 1.0)], [Scalar::new(0.0, -1.0), re(1.0)]]);
        let es = hermitian_eigensystem(&m, &Tolerance::default()).unwrap();
        assert!(es.values[0].abs() < 1e-14);
        assert!((es.values[1] - 2.0).abs() < 1e-14);
        assert!(reconstruct(&es).max_diff(&m) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::from_rows(&[[re(0.0), re(1.0)], [re(0.0), re(0.0)]]);
        assert!(matches!(hermitian_eigensystem(&m, &Tolerance::default()), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn random_hermitian_reconstruction() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in [1usize, 2, 5, 17, 40] {
            let x = Matrix::from_fn(n, n, |_, _| random_scalar(&mut rng));
            let m = x.add(&x.adjoint());
            let es = hermitian_eigensystem(&m, &Tolerance::default()).unwrap();
            let scale = m.max_abs();
            assert!(reconstruct(&es).max_diff(&m) <= 1e-8 * scale, "n={n}");
            assert!(es.vectors.unitarity_defect() <= 1e-8, "n={n}");
            assert!(es.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn clusters_group_repeated_values() {
        let m = Matrix::diagonal(&[re(1.0), re(3.0), re(1.0), re(3.0 + 1e-12)]);
        let es = hermitian_eigensystem(&m, &Tolerance::default()).unwrap();
        assert_eq!(es.clusters(1e-9), [0..2, 2..4]);
    }
}
