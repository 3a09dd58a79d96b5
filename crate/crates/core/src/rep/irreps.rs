use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use super::table::{character_table, CharacterTable};
use super::CHARACTER_EPS;
use crate::config::{stream, EngineConfig, Tolerance};
use crate::error::{Error, Result};
use crate::group::{Automorphism, Elem, GroupRef};
use crate::numeric::{hermitian_eigensystem, random_scalar, sqrt, Matrix, Scalar};

const MAX_ATTEMPTS: usize = 8;
const HOM_EPS: f64 = 1e-7;
/// Largest group for which explicit matrices are built.
pub const MAX_IRREP_GROUP: usize = 128;

/// A matrix representation `γ ↦ images[γ]` of a finite group.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    group: GroupRef,
    images: Vec<Matrix>,
    character: Vec<Scalar>,
}

impl MatrixRep {
    /// Checks dimensions and the homomorphism property.
    pub fn new(group: GroupRef, images: Vec<Matrix>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::DimensionMismatch(format!("{} images for a group of order {}", images.len(), group.order())));
        }
        let d = images[0].rows();
        if images.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::DimensionMismatch("images must be square of equal size".into()));
        }
        let rep = MatrixRep::new_unchecked(group, images);
        let defect = rep.hom_defect();
        if defect > HOM_EPS {
            return Err(Error::NotHom(format!("matrix images violate products by {defect:e}")));
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(group: GroupRef, images: Vec<Matrix>) -> Self {
        let character = images.iter().map(|m| m.trace()).collect();
        MatrixRep { group, images, character }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.images[0].rows()
    }

    pub fn image(&self, x: Elem) -> &Matrix {
        &self.images[x]
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    /// Trace of every image, indexed by element.
    pub fn character(&self) -> &[Scalar] {
        &self.character
    }

    /// `max ‖ρ(x)ρ(y) − ρ(xy)‖` over all pairs.
    pub fn hom_defect(&self) -> f64 {
        let g = &self.group;
        let mut worst = 0.0f64;
        for x in g.elements() {
            for y in g.elements() {
                let p = &self.images[x] * &self.images[y];
                worst = worst.max(p.max_diff(&self.images[g.mul(x, y)]));
            }
        }
        worst
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.images.iter().map(|m| m.unitarity_defect()).fold(0.0, f64::max)
    }

    /// `γ ↦ ρ(φ(γ))`
    pub fn twisted(&self, phi: &Automorphism) -> MatrixRep {
        let images = self.group.elements().map(|x| self.images[phi.apply(x)].clone()).collect();
        MatrixRep::new_unchecked(self.group.clone(), images)
    }

    /// `γ ↦ M ρ(γ) M⁻¹`
    pub fn conjugated(&self, m: &Matrix, m_inv: &Matrix) -> MatrixRep {
        let images = self.images.iter().map(|r| &(m * r) * m_inv).collect();
        MatrixRep::new_unchecked(self.group.clone(), images)
    }
}

/// Character table of a group together with one unitary matrix
/// representation per row.
#[derive(Debug, Clone)]
pub struct IrrCatalog {
    pub group: GroupRef,
    pub table: CharacterTable,
    pub reps: Vec<MatrixRep>,
}

impl IrrCatalog {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Row of the irrep whose character is `values` (indexed by element).
    pub fn find(&self, values: &[Scalar]) -> Option<usize> {
        self.table.find_row(values, CHARACTER_EPS)
    }
}

/// `ρ ↦ S ρ S⁻¹` with `S = P^{1/2}`, `P` the group average of `ρ(γ)* ρ(γ)`.
pub fn unitarize(rep: &MatrixRep, tol: &Tolerance) -> Result<MatrixRep> {
    let d = rep.dim();
    let n = rep.group.order() as f64;
    let mut p = Matrix::zeros(d, d);
    for m in &rep.images {
        p.add_assign_scaled(&(&m.adjoint() * m), Scalar::new(1.0 / n, 0.0));
    }
    let es = hermitian_eigensystem(&p.hermitian_part(), tol)?;
    if es.values[0] <= tol.eps {
        return Err(Error::Singular(es.values[0]));
    }
    let v = &es.vectors;
    let root: Vec<Scalar> = es.values.iter().map(|&l| Scalar::new(sqrt(l), 0.0)).collect();
    let inv_root: Vec<Scalar> = es.values.iter().map(|&l| Scalar::new(1.0 / sqrt(l), 0.0)).collect();
    let s = &(v * &Matrix::diagonal(&root)) * &v.adjoint();
    let s_inv = &(v * &Matrix::diagonal(&inv_root)) * &v.adjoint();
    Ok(rep.conjugated(&s, &s_inv))
}

/// Orthonormal basis of the column space of `p` (an `n × n` projector of
/// rank `rank`), by modified Gram-Schmidt over its columns.
fn column_basis(p: &Matrix, rank: usize) -> Option<Matrix> {
    let n = p.rows();
    let scale = (0..n).map(|c| p.column(c).iter().map(|z| z.norm_sqr()).sum::<f64>()).fold(0.0, f64::max);
    let mut basis: Vec<Vec<Scalar>> = Vec::with_capacity(rank);
    for c in 0..n {
        if basis.len() == rank {
            break;
        }
        let mut v = p.column(c);
        for _ in 0..2 {
            for b in &basis {
                let dot: Scalar = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= dot * bi;
                }
            }
        }
        let norm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if norm2 > 1e-8 * scale {
            let inv = 1.0 / sqrt(norm2);
            basis.push(v.into_iter().map(|z| z * inv).collect());
        }
    }
    (basis.len() == rank).then(|| Matrix::from_columns(n, &basis))
}

/// One irreducible constituent of the isotypic component of the regular
/// representation belonging to character `row`.
fn split_isotypic<R: Rng>(g: &GroupRef, table: &CharacterTable, row: usize, rng: &mut R, tol: &Tolerance) -> Result<MatrixRep> {
    let n = g.order();
    let d = table.dims[row];
    let chi = table.on_elements(row);
    if d == 1 {
        let images = chi.iter().map(|&z| Matrix::scalar(z)).collect();
        return Ok(MatrixRep::new_unchecked(g.clone(), images));
    }
    let k = d * d;
    let scale = d as f64 / n as f64;
    let p = Matrix::from_fn(n, n, |x, y| chi[g.mul(x, g.inv(y))].conj() * scale);
    let q = column_basis(&p, k).ok_or(Error::SplitFailed(row))?;
    let q_adj = q.adjoint();
    // Regular rep restricted to the isotypic block: (R(γ)Q)[x] = Q[γ⁻¹x].
    let blocks: Vec<Matrix> = g
        .elements()
        .map(|gamma| {
            let gi = g.inv(gamma);
            let shifted = Matrix::from_fn(n, k, |x, c| q[(g.mul(gi, x), c)]);
            &q_adj * &shifted
        })
        .collect();

    for _ in 0..MAX_ATTEMPTS {
        let mut x = Matrix::from_fn(k, k, |_, _| random_scalar(rng));
        x = x.hermitian_part();
        let mut t = Matrix::zeros(k, k);
        for b in &blocks {
            t.add_assign_scaled(&(&(b * &x) * &b.adjoint()), Scalar::new(1.0 / n as f64, 0.0));
        }
        let es = hermitian_eigensystem(&t.hermitian_part(), tol)?;
        let spread = es.values.iter().fold(1e-300f64, |m, v| m.max(v.abs()));
        let clusters = es.clusters(1e-7 * spread);
        if clusters.len() != d || clusters.iter().any(|c| c.len() != d) {
            continue;
        }
        let means: Vec<f64> = clusters.iter().map(|c| es.values[c.clone()].iter().sum::<f64>() / d as f64).collect();
        if means.windows(2).any(|w| w[1] - w[0] < 1e-4 * spread) {
            continue;
        }
        let cols: Vec<usize> = clusters[0].clone().collect();
        let w = es.vectors.select_columns(&cols);
        let w_adj = w.adjoint();
        let images = blocks.iter().map(|b| &(&w_adj * b) * &w).collect();
        let rep = unitarize(&MatrixRep::new_unchecked(g.clone(), images), tol)?;
        let char_ok = rep.character.iter().zip(&chi).all(|(a, b)| (a - b).norm() <= CHARACTER_EPS);
        if char_ok && rep.hom_defect() <= HOM_EPS {
            return Ok(rep);
        }
    }
    Err(Error::SplitFailed(row))
}

/// Unitary matrices for every irreducible character of `g`, in character
/// table order.
pub fn irreducible_reps(g: &GroupRef, cfg: &EngineConfig) -> Result<IrrCatalog> {
    if g.order() > MAX_IRREP_GROUP {
        return Err(Error::TooLarge { order: g.order(), limit: MAX_IRREP_GROUP });
    }
    let table = character_table(g, cfg)?;
    let mut rng = cfg.rng(stream::IRREPS);
    let reps = (0..table.len()).map(|row| split_isotypic(g, &table, row, &mut rng, &cfg.tol)).collect::<Result<Vec<_>>>()?;
    Ok(IrrCatalog { group: g.clone(), table, reps })
}
