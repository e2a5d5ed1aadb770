//! Finite simplicial sets, pushout-products and cellular certificates.

mod anodyne;
mod cert;
mod kan;
mod simplicial;
mod trough;

pub use anodyne::{anodyne_certificate, anodyne_certificate_at, anodyne_pp, horn_search, supported_table, SEARCH_BUDGET};
pub use cert::{certificate_verify, mono_icellular, CellularCertificate, GenKind, Generator, Step};
pub use kan::{bz2, codiscrete, extend_along, first_filler, from_vertices, kan_spot_check};
pub use simplicial::{
    boundary, delta, empty, horn, horn_inclusion, image, nerve, product_map, sphere_inclusion, sset_pp, sset_product, sset_pushout,
    subcomplex, validate_map, validate_sset, FinSSet, SPushout, SProduct, SimplicialMap, DEFAULT_DIM, SPP,
};
pub use trough::{trough_demo, TroughReport};
