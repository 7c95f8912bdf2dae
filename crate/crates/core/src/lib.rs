pub mod cli;
pub mod constructions;
pub mod error;
pub mod mindim;
pub mod mps;
pub mod polynomials;
pub mod scalars;
pub mod states;

pub use error::{Error, Result};
