//! D-decomposition of two-parameter polynomial and matrix families.

pub mod arith;
pub mod border;
pub mod bounds;
pub mod cad2d;
pub mod cli;
pub mod error;
pub mod family;
pub mod modp;
pub mod mpoly;
pub mod stability;
pub mod upoly;

pub use error::{Error, Result};
