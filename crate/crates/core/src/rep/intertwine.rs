use rand::Rng;

use super::irreps::MatrixRep;
use super::CHARACTER_EPS;
use crate::config::Tolerance;
use crate::error::{Error, Result};
use crate::numeric::{determinant, random_scalar, sqrt, Matrix, Scalar};

const MAX_ATTEMPTS: usize = 8;

/// Same group, same dimension, and characters agreeing elementwise.
pub fn rep_equivalent(r1: &MatrixRep, r2: &MatrixRep) -> bool {
    r1.dim() == r2.dim()
        && r1.group().order() == r2.group().order()
        && r1.character().iter().zip(r2.character()).all(|(a, b)| (a - b).norm() <= CHARACTER_EPS)
}

/// Rescales `m` to determinant 1, dividing by the principal `n`-th root of
/// `det m` (argument taken in `[0, 2π)`).
pub fn det_normalize(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    let det = determinant(m);
    if det.norm() == 0.0 || !det.norm().is_finite() {
        return Err(Error::Singular(det.norm()));
    }
    let mut arg = det.arg();
    if arg < 0.0 {
        arg += 2.0 * core::f64::consts::PI;
    }
    let root = Scalar::from_polar(libm::pow(det.norm(), 1.0 / n as f64), arg / n as f64);
    Ok(m.scale(root.inv()))
}

/// Invertible `M` with `r1(γ) M = M r2(γ)` for all `γ`, normalized to
/// `det M = 1`. `None` when the representations are inequivalent.
pub fn intertwiner<R: Rng>(r1: &MatrixRep, r2: &MatrixRep, rng: &mut R, tol: &Tolerance) -> Result<Option<Matrix>> {
    if !rep_equivalent(r1, r2) {
        return Ok(None);
    }
    let g = r1.group().clone();
    let d = r1.dim();
    for _ in 0..MAX_ATTEMPTS {
        let x = Matrix::from_fn(d, d, |_, _| random_scalar(rng));
        let mut m = Matrix::zeros(d, d);
        for gamma in g.elements() {
            let term = &(r1.image(gamma) * &x) * r2.image(g.inv(gamma));
            m.add_assign_scaled(&term, Scalar::new(1.0, 0.0));
        }
        let norm = sqrt(m.frobenius_norm_sqr() / d as f64);
        if norm <= tol.eps {
            continue;
        }
        let m = m.scale(Scalar::new(1.0 / norm, 0.0));
        if determinant(&m).norm() < 1e-6 {
            continue;
        }
        let m = det_normalize(&m)?;
        let defect = g.elements().map(|gamma| (r1.image(gamma) * &m).max_diff(&(&m * r2.image(gamma)))).fold(0.0, f64::max);
        if defect <= 1e-7 * (1.0 + m.max_abs()) {
            return Ok(Some(m));
        }
    }
    Err(Error::IntertwinerFailed)
}
