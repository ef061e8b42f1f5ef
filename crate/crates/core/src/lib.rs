//! Lattice path operads and their chain-level shadows.
//!
//! The combinatorial layer ([`paths`], [`cyclic`], [`cgo`], [`trees`]) is
//! exact and scalar-free. The linear layer ([`chains`], [`hochschild`],
//! [`simplicial`]) is generic over a [`Scalar`]; the aliases below fix the
//! rings used in practice.

pub mod cgo;
pub mod chains;
pub mod checks;
pub mod cyclic;
pub mod error;
pub mod hochschild;
pub mod linalg;
pub mod paths;
pub mod scalar;
pub mod simplicial;
pub mod trees;

pub use error::{Error, Result};
pub use paths::{LatticePath, Permutation, SimplicialOperator};
pub use scalar::{Field, Fp, Scalar};

/// Rationals.
pub type Q = num_rational::BigRational;
/// Machine integers; homology over them goes through Smith normal form.
pub type Z = i64;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;


pub type AlgebraQ = hochschild::FinAlgebra<Q>;
pub type CochainQ = hochschild::Cochain<Q>;
pub type ChainZ = chains::ChainElement<Z>;
