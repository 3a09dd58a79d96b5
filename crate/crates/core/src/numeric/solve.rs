use alloc::vec::Vec;

use super::{Matrix, Scalar, ONE, ZERO};
use crate::config::Tolerance;
use crate::error::{Error, Result};

/// Solves `a · x = b` by Gaussian elimination with partial pivoting.
pub fn solve_linear(a: &Matrix, b: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    if !a.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "solve needs square a and matching b, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let n = a.rows();
    let m = b.cols();
    let mut lu = a.clone();
    let mut x = b.clone();
    let threshold = tol.eps * a.max_abs().max(1.0);

    for col in 0..n {
        let pivot_row =
            (col..n).max_by(|&i, &j| lu[(i, col)].norm().total_cmp(&lu[(j, col)].norm())).expect("non-empty pivot range");
        let pivot = lu[(pivot_row, col)];
        if pivot.norm() < threshold {
            return Err(Error::Singular(pivot.norm()));
        }
        if pivot_row != col {
            swap_rows(&mut lu, pivot_row, col);
            swap_rows(&mut x, pivot_row, col);
        }
        let inv = ONE / pivot;
        for r in col + 1..n {
            let factor = lu[(r, col)] * inv;
            if factor == ZERO {
                continue;
            }
            for c in col..n {
                let v = lu[(col, c)];
                lu[(r, c)] -= factor * v;
            }
            for c in 0..m {
                let v = x[(col, c)];
                x[(r, c)] -= factor * v;
            }
        }
    }
    for col in (0..n).rev() {
        let inv = ONE / lu[(col, col)];
        for c in 0..m {
            let mut acc = x[(col, c)];
            for k in col + 1..n {
                acc -= lu[(col, k)] * x[(k, c)];
            }
            x[(col, c)] = acc * inv;
        }
    }
    Ok(x)
}

pub fn inverse(a: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    solve_linear(a, &Matrix::identity(a.rows()), tol)
}

/// Determinant via LU with partial pivoting. Returns 0 for exactly singular input.
pub fn determinant(a: &Matrix) -> Scalar {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    let mut lu = a.clone();
    let mut det = ONE;
    for col in 0..n {
        let pivot_row =
            (col..n).max_by(|&i, &j| lu[(i, col)].norm().total_cmp(&lu[(j, col)].norm())).expect("non-empty pivot range");
        let pivot = lu[(pivot_row, col)];
        if pivot == ZERO {
            return ZERO;
        }
        if pivot_row != col {
            swap_rows(&mut lu, pivot_row, col);
            det = -det;
        }
        det *= pivot;
        for r in col + 1..n {
            let factor = lu[(r, col)] / pivot;
            for c in col..n {
                let v = lu[(col, c)];
                lu[(r, c)] -= factor * v;
            }
        }
    }
    det
}

fn swap_rows(m: &mut Matrix, i: usize, j: usize) {
    let cols = m.cols();
    let tmp: Vec<Scalar> = (0..cols).map(|c| m[(i, c)]).collect();
    for c in 0..cols {
        m[(i, c)] = m[(j, c)];
        m[(j, c)] = tmp[c];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::random_scalar;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::new(re, im)
    }

    #[test]
    fn identity_system_returns_rhs() {
        let b = Matrix::from_rows(&[[c(1.0, 2.0), c(3.0, 0.0)], [c(0.0, -1.0), c(5.0, 5.0)]]);
        let x = solve_linear(&Matrix::identity(2), &b, &Tolerance::default()).unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn halving() {
        let a = Matrix::diagonal(&[c(2.0, 0.0), c(2.0, 0.0)]);
        let x = solve_linear(&a, &Matrix::identity(2), &Tolerance::default()).unwrap();
        assert_eq!(x, Matrix::diagonal(&[c(0.5, 0.0), c(0.5, 0.0)]));
    }

    #[test]
    fn inverse_of_quaternion_i() {
        // i ↦ diag(i, −i) inverts to diag(−i, i)
        let a = Matrix::diagonal(&[c(0.0, 1.0), c(0.0, -1.0)]);
        let x = inverse(&a, &Tolerance::default()).unwrap();
        assert!(x.max_diff(&Matrix::diagonal(&[c(0.0, -1.0), c(0.0, 1.0)])) < 1e-15);
    }

    #[test]
    fn singular_is_reported() {
        let a = Matrix::from_rows(&[[c(1.0, 0.0), c(2.0, 0.0)], [c(2.0, 0.0), c(4.0, 0.0)]]);
        assert!(matches!(solve_linear(&a, &Matrix::identity(2), &Tolerance::default()), Err(Error::Singular(_))));
        assert_eq!(determinant(&a).norm(), 0.0);
    }

    #[test]
    fn determinant_of_rotation_like() {
        let a = Matrix::from_rows(&[[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 1.0), c(0.0, 0.0)]]);
        assert!((determinant(&a) - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn seeded_random_systems_recover_rhs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let tol = Tolerance::default();
        for trial in 0..100 {
            let n = rng.gen_range(1..=64);
            // diagonal dominance keeps the systems well conditioned
            let a = Matrix::from_fn(n, n, |r, col| {
                let z = random_scalar(&mut rng);
                if r == col {
                    z + c(2.0 * n as f64, 0.0)
                } else {
                    z
                }
            });
            let b = Matrix::from_fn(n, 3, |_, _| random_scalar(&mut rng));
            let x = solve_linear(&a, &b, &tol).unwrap();
            let resid = (&a * &x).max_diff(&b);
            let bound = 1e-8 * (a.max_abs() * x.max_abs() + b.max_abs());
            assert!(resid <= bound, "trial {trial}: {resid:e} > {bound:e}");
        }
    }
}
