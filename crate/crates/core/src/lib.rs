//! Construction and verification engine for incomplete pairwise balanced
//! designs (IPBDs) and their relatives: PBDs, group divisible designs,
//! incomplete GDDs, holey GDDs, transversal designs, (incomplete) mutually
//! orthogonal latin squares, and packings/coverings.
//!
//! The crate is organized around four layers:
//!
//! * [`model`] — immutable design objects and normalization;
//! * [`arith`] — admissibility arithmetic and congruence planning;
//! * [`verify`] — independent pair-coverage certification (every
//!   constructed object is certified before it is returned);
//! * [`gen`] / [`compose`] / [`derived`] — base-design generators, an
//!   exact-cover searcher, the recursive constructions, and end-to-end
//!   applications (incomplete MOLS, packings, coverings).

// point indices are the domain objects here; indexed loops read clearest
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod compose;
pub mod derived;
pub mod error;
pub mod gen;
pub mod io;
pub mod model;
pub mod verify;

pub use error::{Error, Result};
