//! The extended affine Weyl group `⟨s0, s1, s2; π⟩` acting on the parameter
//! lattice and on symmetric multiplets, its relations, and the AKNS
//! J-variable maps linked by the Miura transformation.
//!
//! Words are applied left to right: `"gk gi"` means `g_k` first, then `g_i`.

mod action;
mod akns;
mod params;
mod relations;
mod word;

pub use action::{act_multiplet, act_params, apply_word, apply_word_params, orbit, OrbitStep};
pub use akns::{db_on_j, db_on_y, g_on_littlej, miura, JPair, LittleJPair};
pub use params::{VTriple, I, J, K};
pub use relations::{check_relations, check_relations_with, relation_list, Realization, Relation, Standard};
pub use word::{Letter, Word};
