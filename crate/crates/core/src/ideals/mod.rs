//! Congruences, multideals, the correspondence between them,
//! ultramultideals and the Stone embedding.

mod congruence;
mod multideal;
mod stone;
mod ultra;

pub use congruence::{all_congruences, congruence_generated, Congruence, DEFAULT_CONGRUENCE_BOUND};
pub use multideal::{all_multideals, ideal_closure, multideal_of, theta_of, validate_multideal, Clause, Multideal, Validation};
pub use stone::{boolean_ideal_filter_view, stone_embed, IdealFilter, StoneEmbedding};
pub use ultra::{
    admissible_atoms, all_ultramultideals, all_ultramultideals_with, extend_to_ultra, is_homomorphism_onto, is_prime,
    Ultramultideal,
};

#[cfg(test)]
mod tests;
