pub mod algebra;
pub mod analysis;
pub mod catalog;
pub mod error;
pub mod graphs;
pub mod groups;
pub mod spectral;
pub mod structure;
pub mod symmetry;

pub use error::{Error, Result};
