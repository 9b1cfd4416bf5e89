//! Lie-theoretic machinery for level-one conformal embeddings: root
//! systems, Weyl-group operations, affine characters, branching rules,
//! Verlinde dimensions and finite Heisenberg invariants.

pub mod error;
pub mod affine;
pub mod cache;
pub mod config;
pub mod cyclo;
pub mod embed;
pub mod heisenberg;
pub mod rootsys;
pub mod suite;
pub mod verlinde;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{LieType, RootSystem, Series, SimpleType, Weight};
