//! Exact computations with GL(V)-modules inside symmetric powers of symmetric powers.
//!
//! The crate covers plethysm decompositions of `S^k(S^d V)` and its exterior
//! cousins, highest weight vectors found as exact nullspaces of raising
//! operators, the Foulkes-Howe map with its kernels (ideals of Chow varieties),
//! and prolongations of ideal components, which give equations of secant
//! varieties of Chow varieties.

pub mod checks;
pub mod combinatorics;
pub mod config;
pub mod error;
pub mod foulkes_howe;
pub mod glaction;
pub mod linalg;
pub mod plethysm;
pub mod prolongation;
pub mod symalg;

pub use combinatorics::{Decomposition, Partition};
pub use config::Config;
pub use error::{Error, Result};
pub use symalg::{ExpVec, SymMonomial, SymPoly};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
