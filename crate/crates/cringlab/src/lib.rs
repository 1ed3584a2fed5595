//! Exact-arithmetic workbench for coalgebras, comodules, monoids in
//! bicomodule categories, and weak entwining structures, all represented by
//! structure constants over the rationals or a prime field.
//!
//! Every object is verified rather than trusted: axioms become exact matrix
//! identities, existence statements become feasibility runs of a linear
//! solver, and failing checks report the basis vector where an identity
//! breaks. All values are immutable after construction and safe to share
//! across threads.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `cringlab` binary; the JSON input format is documented in
//! `docs/format.md`.

pub mod error;
pub mod field;
pub mod matrix;
pub mod space;
pub mod map;
pub mod subspace;
pub mod affine;
pub mod poly;
pub mod report;
pub mod coalgebra;
pub mod algebra;
pub mod comodule;
pub mod context;
pub mod cring;
pub mod galois;
pub mod connection;
pub mod entwining;
pub mod document;
pub mod fixtures;
pub mod cli;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use map::LinMap;
pub use matrix::Matrix;
pub use report::{Check, Report, Status};
pub use space::Space;
