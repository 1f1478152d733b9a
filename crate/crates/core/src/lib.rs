//! Exact tools for partition regularity experiments over the positive integers.
//!
//! The crate is organised by topic:
//!
//! * [`arith`], [`poly`], [`matrix`], [`coloring`], [`sets`]: shared value types.
//! * [`rado`]: Rado's columns condition, single linear and affine equations, `smod(p)`.
//! * [`search`]: exhaustive coloring search, forcing numbers, witnesses, the 325 extractor.
//! * [`folkman`]: finite sums and the Folkman matrix.
//! * [`polyreg`]: sufficient and necessary criteria for nonlinear polynomials.
//! * [`omega`]: canonical forms for iterated-star terms and the heart/diamond operations.
//! * [`embed`]: finite embeddability, function-family mappability, Banach density.

pub mod arith;
pub mod coloring;
pub mod embed;
pub mod error;
pub mod folkman;
pub mod matrix;
pub mod omega;
pub mod poly;
pub mod polyreg;
pub mod rado;
pub mod search;
pub mod sets;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use omega::{CanonicalForm, OmegaTerm};
pub use poly::{Monomial, Poly};
pub use sets::{FiniteSet, PeriodicSet};
