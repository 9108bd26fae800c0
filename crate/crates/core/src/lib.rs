//! Symbolic powers, Newton and symbolic polyhedra, and symbolic defects of
//! monomial ideals.

pub mod cli;
pub mod decomposition;
pub mod error;
pub mod family;
pub mod ideal;
pub mod polyhedra;
pub mod quasipoly;
pub mod symbolic;

pub use error::{Error, Result};
pub use ideal::{ExponentVector, MonomialIdeal};
