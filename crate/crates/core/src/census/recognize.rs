use crate::group::FiniteGroup;

/// Order 8, nonabelian, a single involution.
pub fn is_q8(g: &FiniteGroup) -> bool {
    g.order() == 8 && !g.is_abelian() && g.involution_count() == 1
}

/// `r` when `g` is an extraspecial 2-group of order `2^{2r+1}`: center of
/// order 2 containing every square and every commutator.
pub fn extraspecial_rank(g: &FiniteGroup) -> Option<u32> {
    let n = g.order();
    if n < 8 || !n.is_power_of_two() || n.trailing_zeros().is_multiple_of(2) {
        return None;
    }
    let z = g.center();
    if z.order() != 2 {
        return None;
    }
    let squares = g.elements().all(|x| z.contains(g.mul(x, x)));
    let commutators = g.elements().all(|x| g.elements().all(|y| z.contains(g.commutator(x, y))));
    (squares && commutators).then(|| (n.trailing_zeros() - 1) / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallKernel {
    S3,
    D4,
    A4,
}

/// Recognizes `S3`, `D4` and `A4` among groups of their orders.
pub fn small_kernel_kind(g: &FiniteGroup) -> Option<SmallKernel> {
    if g.is_abelian() {
        return None;
    }
    match (g.order(), g.involution_count()) {
        (6, _) => Some(SmallKernel::S3),
        (8, 5) => Some(SmallKernel::D4),
        (12, 3) => Some(SmallKernel::A4),
        _ => None,
    }
}
