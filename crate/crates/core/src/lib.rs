//! Algebraic weak factorization systems on small categories and finite
//! simplicial sets, with executable law checkers.

pub mod arrowcat;
pub mod awfs;
pub mod catfolk;
pub mod error;
pub mod fincat;
pub mod goldens;
pub mod label;
pub mod mates;
pub mod report;
pub mod sset;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use error::{Error, Result};
pub use fincat::{FinCat, Functor, Mor, Ob};
pub use label::Label;
pub use report::{Report, Violation};
