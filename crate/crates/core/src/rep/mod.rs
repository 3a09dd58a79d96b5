//! Conjugacy classes, character tables, explicit unitary irreducible
//! representations, intertwiners and the action of a quotient (or of
//! automorphisms) on `Irr(Γ)`.

mod action;
mod classes;
mod intertwine;
mod irreps;
mod table;

pub use action::{aut_action, irr_action, twisted_character_index, IrrAction};
pub use classes::{conjugacy_classes, ConjClasses};
pub use intertwine::{det_normalize, intertwiner, rep_equivalent};
pub use irreps::{irreducible_reps, unitarize, IrrCatalog, MatrixRep};
pub use table::{character_table, CharacterTable};

/// Tolerance for deciding that two characters agree.
pub const CHARACTER_EPS: f64 = 1e-6;
