//! Finite Young lattices `L(m, n)` and their multiplicity form `L'(m, n)`.
//!
//! The crate builds both lattices as graded posets, computes their rank
//! numbers as Gaussian binomial coefficients, colors every Hasse edge by a
//! type-A simple root, and constructs and checks symmetric chain
//! decompositions.
//!
//! ```
//! use young_lattice::poset::{build_lattice, gaussian_binomial, rank_profile, Coordinates};
//! use young_lattice::partition::Shape;
//! use young_lattice::scd::{lindstrom, verify_scd};
//!
//! let l = build_lattice(Shape::new(3, 3), Coordinates::Composition);
//! assert_eq!(l.len(), 20);
//! assert_eq!(rank_profile(&l), gaussian_binomial(3, 3));
//! assert!(verify_scd(&lindstrom(3), &l).passed());
//! ```

pub mod cli;
pub mod error;
pub mod partition;
pub mod poset;
pub mod render;
pub mod rootsys;
pub mod scd;

pub use error::{Error, Result};
pub use partition::{Partition, Shape, WeakComposition};
pub use poset::GradedPoset;
