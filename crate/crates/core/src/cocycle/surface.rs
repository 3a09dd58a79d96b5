use alloc::format;
use alloc::vec::Vec;

use super::TwoCocycle;
use crate::config::Tolerance;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::numeric::{Scalar, Snapped};

/// Images `(α_i, β_i)` of the standard generators of a genus-`d` surface
/// group, with `Π [α_i, β_i] = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceDatum {
    pairs: Vec<(Elem, Elem)>,
}

impl SurfaceDatum {
    pub fn new(g: &FiniteGroup, pairs: Vec<(Elem, Elem)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidSurfaceDatum("genus must be at least 1".into()));
        }
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= g.order() || b >= g.order()) {
            return Err(Error::InvalidSurfaceDatum(format!("element ({a}, {b}) out of range")));
        }
        let prod = pairs.iter().fold(g.identity(), |acc, &(a, b)| g.mul(acc, g.commutator(a, b)));
        if prod != g.identity() {
            return Err(Error::InvalidSurfaceDatum(format!("product of commutators is {}", g.label(prod))));
        }
        Ok(SurfaceDatum { pairs })
    }

    /// Genus-1 datum for a commuting pair.
    pub fn torus(g: &FiniteGroup, a: Elem, b: Elem) -> Result<Self> {
        SurfaceDatum::new(g, alloc::vec![(a, b)])
    }

    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(Elem, Elem)] {
        &self.pairs
    }

    /// Every entry, in order `α_1, β_1, α_2, …`.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.pairs.iter().flat_map(|&(a, b)| [a, b])
    }

    /// Datum with every entry sent through `f`, unvalidated.
    pub fn map(&self, mut f: impl FnMut(Elem) -> Option<Elem>) -> Option<SurfaceDatum> {
        let pairs = self.pairs.iter().map(|&(a, b)| Some((f(a)?, f(b)?))).collect::<Option<Vec<_>>>()?;
        Some(SurfaceDatum { pairs })
    }
}

/// `c(x,y) / c(y,x)` for commuting `x, y` of the base, snapped.
pub fn torus_value(c: &TwoCocycle, x: Elem, y: Elem, tol: &Tolerance) -> Result<Snapped> {
    let g = &c.base;
    if x >= g.order() || y >= g.order() {
        return Err(Error::NoSuchElement(x.max(y)));
    }
    if !g.commutes(x, y) {
        return Err(Error::NotCommuting);
    }
    Ok(c.snap(c.value(x, y) / c.value(y, x), tol))
}

/// Element of the central extension `base × C^×` defined by `c`.
#[derive(Clone, Copy)]
struct Lifted {
    x: Elem,
    s: Scalar,
}

struct Extension<'a> {
    c: &'a TwoCocycle,
}

impl Extension<'_> {
    fn mul(&self, a: Lifted, b: Lifted) -> Lifted {
        Lifted { x: self.c.base.mul(a.x, b.x), s: a.s * b.s * self.c.value(a.x, b.x) }
    }

    fn inv(&self, a: Lifted) -> Lifted {
        let xi = self.c.base.inv(a.x);
        Lifted { x: xi, s: (a.s * self.c.value(a.x, xi) * self.c.value(0, 0)).inv() }
    }

    fn commutator(&self, a: Lifted, b: Lifted) -> Lifted {
        let ab = self.mul(a, b);
        self.mul(self.mul(ab, self.inv(a)), self.inv(b))
    }
}

/// Scalar of `Π [lift(α_i), lift(β_i)]` in the central extension defined by
/// `c`, where `sd` has entries in `c.base`. Independent of the chosen lifts.
pub fn surface_holonomy(c: &TwoCocycle, sd: &SurfaceDatum, tol: &Tolerance) -> Result<Snapped> {
    surface_holonomy_with_lifts(c, sd, |_| Scalar::new(1.0, 0.0), tol)
}

/// As [`surface_holonomy`], lifting each entry with scalar part `lift(position)`.
pub fn surface_holonomy_with_lifts(
    c: &TwoCocycle,
    sd: &SurfaceDatum,
    mut lift: impl FnMut(usize) -> Scalar,
    tol: &Tolerance,
) -> Result<Snapped> {
    let sd = SurfaceDatum::new(&c.base, sd.pairs.clone())?;
    let e = Extension { c };
    let c11 = c.value(0, 0);
    let mut acc = Lifted { x: 0, s: c11.inv() };
    for (i, &(a, b)) in sd.pairs.iter().enumerate() {
        let la = Lifted { x: a, s: lift(2 * i) };
        let lb = Lifted { x: b, s: lift(2 * i + 1) };
        acc = e.mul(acc, e.commutator(la, lb));
    }
    debug_assert_eq!(acc.x, 0);
    Ok(c.snap(acc.s * c11, tol))
}
