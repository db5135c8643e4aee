//! Exact root systems, formal characters and the reduced Spin character,
//! together with machine checks of the tensor-factorization identities for
//! folded, principal and affine embeddings.

pub mod affine;
pub mod charalg;
pub mod embed;
pub mod error;
pub mod qpoly;
pub mod report;
pub mod rootsys;
pub mod spin;
pub mod suite;
pub mod weight;

pub use charalg::FormalCharacter;
pub use error::{Error, Result};
pub use rootsys::{GeneralizedCartanMatrix, RootSystem};
pub use weight::Weight;
