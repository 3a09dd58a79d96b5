use alloc::vec::Vec;

use super::{extract_scalar, CocycleKind, TwoCocycle};
use crate::config::{stream, EngineConfig};
use crate::error::{Error, Result};
use crate::group::{automorphisms_as_group, Automorphism};
use crate::numeric::Matrix;
use crate::rep::{intertwiner, MatrixRep};

/// `η_ρ` on the group formed by `auts` (closed under composition, identity
/// included), from `ρ ∘ φ = M_φ ρ M_φ⁻¹` with `det M_φ = 1` and
/// `M_{φψ} = η(φ,ψ) M_φ M_ψ`.
pub fn eta_cocycle(rho: &MatrixRep, auts: &[Automorphism], cfg: &EngineConfig) -> Result<TwoCocycle> {
    let (base, order) = automorphisms_as_group(auts)?;
    let mut rng = cfg.rng(stream::INTERTWINER);
    let mut conjugators = Vec::with_capacity(order.len());
    for &i in &order {
        if auts[i].is_identity() {
            conjugators.push(Matrix::identity(rho.dim()));
            continue;
        }
        let twisted = rho.twisted(&auts[i]);
        conjugators.push(intertwiner(&twisted, rho, &mut rng, &cfg.tol)?.ok_or(Error::NotStabilized)?);
    }
    let n = base.order();
    let mut values = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let rhs = &conjugators[x] * &conjugators[y];
            values.push(extract_scalar(&conjugators[base.mul(x, y)], &rhs)?);
        }
    }
    Ok(TwoCocycle { base: base.to_ref(), embedding: order, values, kind: CocycleKind::Eta, rep: rho.clone(), conjugators })
}
