//! Complex dense linear algebra sized for representation theory of small
//! groups: Hermitian eigensystems, linear solves, and snapping values to
//! roots of unity.

mod eigen;
mod matrix;
mod roots;
mod solve;

pub use eigen::{hermitian_eigensystem, Eigensystem};
pub use matrix::Matrix;
pub use roots::{gcd, root_of_unity, snap_root_of_unity, snap_to_integer, RootOfUnity, Snapped};
pub use solve::{determinant, inverse, solve_linear};

/// Complex scalar used throughout.
pub type Scalar = num_complex::Complex64;

pub(crate) const ZERO: Scalar = Scalar::new(0.0, 0.0);
pub(crate) const ONE: Scalar = Scalar::new(1.0, 0.0);

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// Uniform sample from the unit square in the complex plane, centred at 0.
pub(crate) fn random_scalar<R: rand::Rng>(rng: &mut R) -> Scalar {
    Scalar::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0)
}
