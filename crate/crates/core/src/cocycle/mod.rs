//! Two-cocycles attached to an irreducible kernel representation: `ζ_ρ` on
//! its stabilizer in the quotient and `η_ρ` on a group of automorphisms, plus
//! their evaluation on tori and closed surfaces.

mod eta;
mod lemma;
mod surface;
mod zeta;

use alloc::vec::Vec;

pub use eta::eta_cocycle;
pub use lemma::{lemma1_check, lemma1_compare, Lemma1Pair};
pub use surface::{surface_holonomy, surface_holonomy_with_lifts, torus_value, SurfaceDatum};
pub use zeta::{zeta_cocycle, zeta_from_conjugators};

use crate::config::Tolerance;
use crate::group::{Elem, GroupRef};
use crate::numeric::{snap_root_of_unity, Matrix, Scalar, Snapped};
use crate::rep::MatrixRep;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CocycleKind {
    /// On the stabilizer `G_ρ` of the quotient.
    Zeta,
    /// On a group of automorphisms of the kernel.
    Eta,
}

/// A normalized 2-cocycle `c: H × H → C^×` together with the conjugators it
/// was extracted from.
#[derive(Debug, Clone)]
pub struct TwoCocycle {
    pub base: GroupRef,
    /// Base index → ambient index (quotient element for `ζ`, position in the
    /// supplied automorphism list for `η`).
    pub embedding: Vec<Elem>,
    pub values: Vec<Scalar>,
    pub kind: CocycleKind,
    pub rep: MatrixRep,
    /// `M_x` per base element.
    pub conjugators: Vec<Matrix>,
}

impl TwoCocycle {
    #[inline]
    pub fn value(&self, x: Elem, y: Elem) -> Scalar {
        self.values[x * self.base.order() + y]
    }

    /// Base index of an ambient element.
    pub fn base_index(&self, ambient: Elem) -> Option<Elem> {
        self.embedding.iter().position(|&e| e == ambient)
    }

    /// `max |c(x,y)c(xy,z) − c(y,z)c(x,yz)|` over all triples.
    pub fn cocycle_defect(&self) -> f64 {
        let g = &self.base;
        let mut worst = 0.0f64;
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                for z in g.elements() {
                    let lhs = self.value(x, y) * self.value(xy, z);
                    let rhs = self.value(y, z) * self.value(x, g.mul(y, z));
                    worst = worst.max((lhs - rhs).norm());
                }
            }
        }
        worst
    }

    /// `max |c(1,x) − 1|, |c(x,1) − 1|`.
    pub fn normalization_defect(&self) -> f64 {
        self.base.elements().map(|x| (self.value(0, x) - 1.0).norm().max((self.value(x, 0) - 1.0).norm())).fold(0.0, f64::max)
    }

    /// Largest root-of-unity order considered when snapping values.
    pub fn max_root_order(&self) -> u32 {
        let n = self.base.order() as u32;
        (2 * n * n).max(2 * self.rep.dim() as u32)
    }

    pub fn snap(&self, z: Scalar, tol: &Tolerance) -> Snapped {
        snap_root_of_unity(z, self.max_root_order(), tol)
    }

    /// Pairs `(x, y)` whose value does not snap to a root of unity.
    pub fn non_root_values(&self, tol: &Tolerance) -> Vec<(Elem, Elem)> {
        let n = self.base.order();
        (0..n * n).filter(|&i| self.snap(self.values[i], tol).root().is_none()).map(|i| (i / n, i % n)).collect()
    }
}

/// Least-squares scalar `λ` with `lhs ≈ λ · rhs`, rejecting a relative
/// residual above `1e-7`.
pub(crate) fn extract_scalar(lhs: &Matrix, rhs: &Matrix) -> crate::Result<Scalar> {
    let denom = rhs.frobenius_norm_sqr();
    if denom == 0.0 {
        return Err(crate::Error::Singular(0.0));
    }
    let lambda = rhs.frobenius_dot(lhs) / denom;
    let residual = lhs.max_diff(&rhs.scale(lambda)) / lhs.max_abs().max(1.0);
    if residual > 1e-7 {
        return Err(crate::Error::NonScalarResidual(residual));
    }
    Ok(lambda)
}
