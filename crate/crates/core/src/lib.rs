//! Betti numbers of type-A Springer fibers, computed combinatorially.
//!
//! The fiber of a nilpotent of Jordan type `lambda` has a cell decomposition indexed by
//! the row-standard tableaux of shape `lambda`, the cell of `tau` having codimension
//! `n_inv(tau)`. This crate provides the tableau machinery ([`tableau`]), the
//! elementary moves relating a tableau to its standardization ([`moves`]), the codes
//! parameterizing each standardization class ([`kappa`]), three independent ways of
//! computing the Poincaré polynomial ([`poincare`]), and the jeu de taquin relabeling
//! of components attached to interval chains ([`rho`]).
//!
//! ```
//! use springer_core::poincare::{betti_numbers, Method};
//! use springer_core::tableau::DEFAULT_CAP;
//!
//! let shape = "2,2,1".parse().unwrap();
//! let table = betti_numbers(&shape, Method::All, DEFAULT_CAP).unwrap();
//! assert_eq!(table.dim, 4);
//! assert_eq!(table.poincare_by_codim.to_string(), "5 + 11x + 9x^2 + 4x^3 + x^4");
//! ```

pub mod error;
pub mod kappa;
pub mod moves;
pub mod poincare;
pub mod rho;
pub mod tableau;

pub use error::{Error, Result};
