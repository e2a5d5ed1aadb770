//! Generic awfs engine and law checkers.

mod criterion;
mod laws;
mod morphism;
mod structure;

pub use criterion::{composition_criterion_check, Direct, HomSide};
pub use laws::{delta_sq, epsilon_sq, eta_sq, l_sq, mu_sq, r_sq, validate_awfs, Awfs};
pub use morphism::awfs_morphism_validate;
pub use structure::{
    alg_compose, alg_pull, alg_to_liftfun, alg_validate, chosen_lift, coalg_compose, coalg_push, coalg_validate, free_alg,
    free_coalg, Algebra, CoalgGenerators, Coalgebra,
};
