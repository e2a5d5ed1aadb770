//! Mates across finite adjunctions, their pasting, and parameterized mates
//! on a finite fragment of Cat.

mod gen;
mod monad;
mod param;
mod paste;
mod square;

pub use gen::{adjunction_pool, adjunctions, find_adjunction, lax_corpus, mate_corpus, mate_pool, random_square, MateCorpus};
pub use monad::{colax_report, lax_morphisms, lax_report, lax_to_colax_check, monads, LaxInstance, Monad};
pub use param::{induced_mate, param_corpus, MAX_COST, parameterized_mate_check, ParamData, ParamInstance};
pub use paste::{compose_adjunctions, paste_grid, paste_grid_columns, paste_h, paste_v, pasting_check};
pub use square::{mate_of, roundtrip_check, same_adjunction, validate_square, Filling, MateSquare};
