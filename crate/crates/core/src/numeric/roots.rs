use core::f64::consts::PI;

use super::Scalar;
use crate::config::Tolerance;
use crate::error::{Error, Result};

/// `e^{2πik/m}` with `0 <= k < m`, `gcd(k, m) = 1` (or `k = 0, m = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    pub k: u32,
    pub m: u32,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { k: 0, m: 1 };

    pub fn value(&self) -> Scalar {
        root_of_unity(self.k as i64, self.m as u64)
    }
}

/// Result of snapping a scalar to a root of unity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Snapped {
    Root(RootOfUnity),
    Raw(Scalar),
}

impl Snapped {
    /// The snapped value if it snapped, the raw input otherwise.
    pub fn value(&self) -> Scalar {
        match self {
            Snapped::Root(r) => r.value(),
            Snapped::Raw(z) => *z,
        }
    }

    pub fn root(&self) -> Option<RootOfUnity> {
        match self {
            Snapped::Root(r) => Some(*r),
            Snapped::Raw(_) => None,
        }
    }
}

pub fn root_of_unity(k: i64, m: u64) -> Scalar {
    let m = m as i64;
    let k = k.rem_euclid(m);
    // exact values on the axes keep snapped results exact
    if 4 * k % m == 0 {
        return match 4 * k / m {
            0 => Scalar::new(1.0, 0.0),
            1 => Scalar::new(0.0, 1.0),
            2 => Scalar::new(-1.0, 0.0),
            _ => Scalar::new(0.0, -1.0),
        };
    }
    let theta = 2.0 * PI * (k as f64) / (m as f64);
    Scalar::new(libm::cos(theta), libm::sin(theta))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Smallest-order root of unity within `tol.snap_eps` of `z`, searching
/// orders up to `max_order`.
pub fn snap_root_of_unity(z: Scalar, max_order: u32, tol: &Tolerance) -> Snapped {
    if !(z.re.is_finite() && z.im.is_finite()) || (z.norm() - 1.0).abs() > tol.snap_eps {
        return Snapped::Raw(z);
    }
    let mut turn = libm::atan2(z.im, z.re) / (2.0 * PI);
    if turn < 0.0 {
        turn += 1.0;
    }
    for m in 1..=max_order.max(1) {
        let k = libm::round(turn * m as f64) as u64 % m as u64;
        let candidate = root_of_unity(k as i64, m as u64);
        if (z - candidate).norm() <= tol.snap_eps {
            // minimality of m forces gcd(k, m) = 1
            debug_assert!(m == 1 || gcd(k, m as u64) == 1);
            return Snapped::Root(RootOfUnity { k: k as u32, m });
        }
    }
    Snapped::Raw(z)
}

/// Rounds `x` to the nearest integer if within `tol.snap_eps · max(1, |x|)`.
pub fn snap_to_integer(x: f64, tol: &Tolerance) -> Result<i64> {
    let r = libm::round(x);
    if !x.is_finite() || (x - r).abs() > tol.snap_eps * x.abs().max(1.0) {
        return Err(Error::NonIntegerResult(x));
    }
    Ok(r as i64)
}
