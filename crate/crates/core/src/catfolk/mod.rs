//! The canonical awfs pair on Cat: mapping cylinders and free iso-extensions.

mod checks;
mod cof;
mod corpus;
mod generators;
mod homside;
mod pp;
mod trivcof;
mod xi;

pub use checks::{
    algebra_liftfun_correspondence, algebra_pairs, hom_side_criterion, hom_side_mutation, j_generators, lift_preserves_composition,
    unique_coalg_census, CorrRow, ALG_LIMIT,
};
pub use cof::{cof_sections, unique_coalg, CofAwfs};
pub use corpus::{categories, functor_corpus, isofibrations, square_corpus, MAX_MOR, MAX_OBJ};
pub use generators::{bang, fold, gen_c, gen_d, gen_e, gen_j, generator_set_i, generator_set_j};
pub use homside::{CatHomSide, HomHat, Transposer};
pub use pp::{
    coalg_pushout, coalg_transport, coherence_check, generator_table, generator_table_bounded, lifted_pp, pp, pp_bounded, TableRow, PP,
};
pub use trivcof::{
    cleavage_functor, j_coalg, j_lifting_functions, pointed_algebra_count, trivcof_algebras, Ext, TrivCofAwfs,
};
pub use xi::{comparison_xi, iso_comma_xi_obstruction, xi_candidates_at, xi_chosen, xi_direct, xi_validate};
