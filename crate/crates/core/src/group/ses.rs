use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Automorphism, Elem, GroupHom, GroupRef, Subgroup};
use crate::error::{Error, Result};

/// `1 → Γ → G' → G → 1` with a set-theoretic section `α ↦ α̃`.
#[derive(Debug, Clone)]
pub struct ShortExactSequence {
    inclusion: GroupHom,
    projection: GroupHom,
    section: Vec<Elem>,
    kernel_index: Vec<Option<Elem>>,
}

impl ShortExactSequence {
    /// Validates exactness and the section.
    pub fn new(inclusion: GroupHom, projection: GroupHom, section: Vec<Elem>) -> Result<Self> {
        if !Arc::ptr_eq(inclusion.target(), projection.source()) && **inclusion.target() != **projection.source() {
            return Err(Error::InvalidTable("inclusion target and projection source differ".to_string()));
        }
        if !inclusion.is_injective() {
            return Err(Error::NotHom("inclusion is not injective".to_string()));
        }
        if !projection.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let total = projection.source();
        let mut kernel_index = alloc::vec![None; total.order()];
        for (k, &x) in inclusion.map().iter().enumerate() {
            kernel_index[x] = Some(k);
        }
        for x in total.elements() {
            if (projection.apply(x) == 0) != kernel_index[x].is_some() {
                return Err(Error::InvalidTable("image of inclusion is not the kernel of the projection".to_string()));
            }
        }
        let s = ShortExactSequence { inclusion, projection, section, kernel_index };
        s.check_section(&s.section)?;
        Ok(s)
    }

    fn check_section(&self, section: &[Elem]) -> Result<()> {
        if section.len() != self.quotient().order() {
            return Err(Error::InvalidSection("one lift per quotient element required".to_string()));
        }
        if section[0] != 0 {
            return Err(Error::InvalidSection("identity must lift to the identity".to_string()));
        }
        for (alpha, &a) in section.iter().enumerate() {
            if a >= self.total().order() || self.projection.apply(a) != alpha {
                return Err(Error::InvalidSection(alloc::format!(
                    "lift of {} does not project to it",
                    self.quotient().label(alpha)
                )));
            }
        }
        Ok(())
    }

    /// Same sequence with a different section.
    pub fn with_section(&self, section: Vec<Elem>) -> Result<Self> {
        self.check_section(&section)?;
        Ok(ShortExactSequence { section, ..self.clone() })
    }

    pub fn kernel(&self) -> &GroupRef {
        self.inclusion.source()
    }

    pub fn total(&self) -> &GroupRef {
        self.projection.source()
    }

    pub fn quotient(&self) -> &GroupRef {
        self.projection.target()
    }

    pub fn inclusion(&self) -> &GroupHom {
        &self.inclusion
    }

    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }

    pub fn section(&self) -> &[Elem] {
        &self.section
    }

    /// `α̃`
    #[inline]
    pub fn lift(&self, alpha: Elem) -> Elem {
        self.section[alpha]
    }

    /// Kernel element as an element of the total group.
    #[inline]
    pub fn embed(&self, gamma: Elem) -> Elem {
        self.inclusion.apply(gamma)
    }

    #[inline]
    pub fn project(&self, a: Elem) -> Elem {
        self.projection.apply(a)
    }

    /// Kernel index of a total-group element lying in the kernel.
    #[inline]
    pub fn kernel_elem(&self, a: Elem) -> Option<Elem> {
        self.kernel_index[a]
    }

    /// `γ ↦ a γ a⁻¹` on the kernel.
    pub fn conjugation_by(&self, a: Elem) -> Automorphism {
        let total = self.total();
        let perm: Vec<Elem> = self
            .kernel()
            .elements()
            .map(|g| self.kernel_index[total.conjugate(a, self.embed(g))].expect("kernel is normal"))
            .collect();
        Automorphism::new(self.kernel(), perm).expect("conjugation is an automorphism")
    }

    /// Kernel as a subgroup of the total group.
    pub fn kernel_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self.total(), self.inclusion.map().to_vec())
    }
}

/// Builds the sequence `ker q → G' → G` from a surjection, choosing for each
/// `α` the lift of minimal index.
pub fn make_ses(projection: GroupHom) -> Result<ShortExactSequence> {
    if !projection.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let total = projection.source().clone();
    let (kernel, embed) = total.subgroup_as_group(&projection.kernel());
    let kernel = Arc::new(kernel);
    let inclusion = GroupHom::new(kernel, total.clone(), embed)?;
    let mut section = alloc::vec![usize::MAX; projection.target().order()];
    for a in total.elements().rev() {
        section[projection.apply(a)] = a;
    }
    ShortExactSequence::new(inclusion, projection, section)
}

/// A restricted sequence together with embeddings back into the original.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub ses: ShortExactSequence,
    /// restricted total index → original total index
    pub total_embedding: Vec<Elem>,
    /// restricted quotient index → original quotient index
    pub quotient_embedding: Vec<Elem>,
}

impl Restriction {
    /// Restricted quotient index of an original quotient element.
    pub fn quotient_index(&self, alpha: Elem) -> Option<Elem> {
        self.quotient_embedding.iter().position(|&x| x == alpha)
    }

    pub fn total_index(&self, a: Elem) -> Option<Elem> {
        self.total_embedding.iter().position(|&x| x == a)
    }
}

/// Sequence over a subgroup `h` of the quotient: total group `q⁻¹(h)`, same
/// kernel, inherited section.
pub fn restrict_ses(s: &ShortExactSequence, h: &Subgroup) -> Result<ShortExactSequence> {
    restrict_ses_mapped(s, h).map(|r| r.ses)
}

pub fn restrict_ses_mapped(s: &ShortExactSequence, h: &Subgroup) -> Result<Restriction> {
    let total = s.total();
    let quotient = s.quotient();
    if h.members().iter().any(|&x| x >= quotient.order()) || !h.contains(0) {
        return Err(Error::InvalidTable("subgroup does not belong to the quotient".to_string()));
    }
    let pre = Subgroup::from_members(total, total.elements().filter(|&a| h.contains(s.project(a))).collect());
    let (t, t_embed) = total.subgroup_as_group(&pre);
    let (q, q_embed) = quotient.subgroup_as_group(h);
    let t = Arc::new(t);
    let q = Arc::new(q);
    let mut t_back = alloc::vec![usize::MAX; total.order()];
    for (i, &x) in t_embed.iter().enumerate() {
        t_back[x] = i;
    }
    let mut q_back = alloc::vec![usize::MAX; quotient.order()];
    for (i, &x) in q_embed.iter().enumerate() {
        q_back[x] = i;
    }
    let proj: Vec<Elem> = t_embed.iter().map(|&a| q_back[s.project(a)]).collect();
    let incl: Vec<Elem> = s.inclusion().map().iter().map(|&a| t_back[a]).collect();
    let section: Vec<Elem> = q_embed.iter().map(|&alpha| t_back[s.lift(alpha)]).collect();
    let projection = GroupHom::new(t.clone(), q, proj)?;
    let inclusion = GroupHom::new(s.kernel().clone(), t, incl)?;
    Ok(Restriction {
        ses: ShortExactSequence::new(inclusion, projection, section)?,
        total_embedding: t_embed,
        quotient_embedding: q_embed,
    })
}

/// `ω(a) = (γ ↦ a γ a⁻¹)` for every element `a` of the total group.
pub fn conjugation_action(s: &ShortExactSequence) -> Vec<Automorphism> {
    s.total().elements().map(|a| s.conjugation_by(a)).collect()
}
