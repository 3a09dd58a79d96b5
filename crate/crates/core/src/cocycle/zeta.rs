use alloc::format;
use alloc::vec::Vec;

use super::{extract_scalar, CocycleKind, TwoCocycle};
use crate::config::{stream, EngineConfig};
use crate::error::{Error, Result};
use crate::group::{ShortExactSequence, Subgroup};
use crate::numeric::Matrix;
use crate::rep::{intertwiner, MatrixRep};

/// `ζ_ρ` on the stabilizer `stab`, with conjugators `M_α` from
/// `ρ(α̃ γ α̃⁻¹) = M_α ρ(γ) M_α⁻¹`, normalized to `det M_α = 1` and `M_1 = I`.
pub fn zeta_cocycle(s: &ShortExactSequence, rho: &MatrixRep, stab: &Subgroup, cfg: &EngineConfig) -> Result<TwoCocycle> {
    let mut rng = cfg.rng(stream::INTERTWINER);
    let mut conjugators = Vec::with_capacity(stab.order());
    for &alpha in stab.members() {
        if alpha == 0 {
            conjugators.push(Matrix::identity(rho.dim()));
            continue;
        }
        let twisted = rho.twisted(&s.conjugation_by(s.lift(alpha)));
        let m = intertwiner(&twisted, rho, &mut rng, &cfg.tol)?.ok_or(Error::NotStabilized)?;
        conjugators.push(m);
    }
    zeta_from_conjugators(s, rho, stab, conjugators)
}

/// `ζ_ρ` from caller-supplied conjugators, one per member of `stab` in
/// ascending order. Solves `M_{αβ} ρ((αβ)̃⁻¹ α̃ β̃) = ζ(α,β) M_α M_β`.
pub fn zeta_from_conjugators(
    s: &ShortExactSequence,
    rho: &MatrixRep,
    stab: &Subgroup,
    conjugators: Vec<Matrix>,
) -> Result<TwoCocycle> {
    if rho.group().order() != s.kernel().order() {
        return Err(Error::OrderMismatch("representation is not of the kernel".into()));
    }
    if !stab.members().iter().all(|&x| x < s.quotient().order()) || !stab.contains(0) {
        return Err(Error::InvalidTable("stabilizer is not a subgroup of the quotient".into()));
    }
    if conjugators.len() != stab.order() {
        return Err(Error::DimensionMismatch(format!(
            "{} conjugators for a stabilizer of order {}",
            conjugators.len(),
            stab.order()
        )));
    }
    let quotient = s.quotient();
    let total = s.total();
    let (base, embedding) = quotient.subgroup_as_group(stab);
    let n = base.order();
    let mut values = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (alpha, beta) = (embedding[x], embedding[y]);
            let ab = quotient.mul(alpha, beta);
            let c = total.mul(total.inv(s.lift(ab)), total.mul(s.lift(alpha), s.lift(beta)));
            let gamma = s.kernel_elem(c).ok_or(Error::InvalidSection("lift product left the kernel".into()))?;
            let lhs = &conjugators[base.mul(x, y)] * rho.image(gamma);
            let rhs = &conjugators[x] * &conjugators[y];
            values.push(extract_scalar(&lhs, &rhs)?);
        }
    }
    Ok(TwoCocycle { base: base.to_ref(), embedding, values, kind: CocycleKind::Zeta, rep: rho.clone(), conjugators })
}
