//! Exact computations with twisted Rota-Baxter operators on finite-dimensional
//! Lie algebras over the rationals.

pub mod cli;
pub mod deform;
pub mod error;
pub mod exactlin;
pub mod gen;
pub mod instance;
pub mod liealg;
pub mod linfty;
pub mod multilin;
pub mod nslie;
pub mod tgcs;
pub mod twistrb;
pub mod verdict;

pub use error::{Error, Result};
