pub mod cli;
pub mod constants;
pub mod error;
pub mod extremals;
pub mod fields;
pub mod inequalities;
pub mod specialfn;

pub use error::{Error, Result};
