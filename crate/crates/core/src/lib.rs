//! Finite approximations of the Rado simplicial complex.
//!
//! * [`complex`] and [`view`]: the data model and the membership-oracle trait.
//! * [`arith`]: the explicit construction on the positive integers via prime
//!   indices and binary digits.
//! * [`grow`]: the inductive construction by cone attachment.
//! * [`ample`]: witness search, window ampleness checks, the d-ample variant,
//!   embeddings and back-and-forth extension of partial isomorphisms.
//! * [`randomness`]: probability systems, cylinder measures, the exact
//!   sampler and vertex subsampling.
//! * [`format`]: the `rado-complex/v1` JSON format.

pub mod ample;
pub mod arith;
pub mod cli;
pub mod complex;
pub mod error;
pub mod format;
pub mod grow;
pub mod randomness;
pub mod simplex;
pub mod vertex;
pub mod view;

pub use complex::{external_d, external_simplexes, is_isomorphic_small, Complex};
pub use error::{Error, Result};
pub use simplex::Simplex;
pub use vertex::Vertex;
pub use view::ComplexView;
