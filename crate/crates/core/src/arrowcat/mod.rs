//! Arrows as objects, squares as morphisms, and lifting functions.

mod ambient;
mod liftfun;
mod square;

pub use ambient::{Ambient, CatAmbient};
pub use liftfun::{generators_validate, liftfun_compose, liftfun_validate, problems, Entry, GeneratorCategory, LiftingFunction};
pub use square::{compose_h, compose_v, id_square, square_check, squares, Square};
