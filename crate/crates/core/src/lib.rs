pub mod algebra;
pub mod classical;
pub mod cli;
pub mod error;
pub mod grassmann;
pub mod matrix;
pub mod scalar;
pub mod minkowski;
pub mod realforms;
pub mod supergroup;

pub use error::{Error, Result};
