//! Finite categories, functors and the constructions built on them.

pub mod basic;
mod cat;
mod construct;
mod cylinder;
mod enumerate;
mod exponential;
mod functor;
mod iso;
mod json;
mod pushout;

pub use cat::{same_cat, validate_category, FinCat, Mor, Ob};
pub use construct::{coproduct, opposite, product, product_map, pullback, Coproduct, Product, Pullback};
pub use cylinder::{iso_comma, iso_extension, mapping_cylinder, Factorization};
pub use enumerate::{all_functors, isomorphic, isomorphisms, FunctorSearch};
pub use exponential::{adjunction_check, exponential, nat_transformations, Exponential};
pub use functor::{validate_adjunction, validate_functor, validate_nat, AdjunctionData, Functor, NatTrans};
pub use iso::{arrow_iso, extensions};
pub use json::{cat_to_json, functor_to_json};
pub use pushout::{pushout_bounded, Bound, Pushout, DEFAULT_CAP, DEFAULT_WORD_LEN};
