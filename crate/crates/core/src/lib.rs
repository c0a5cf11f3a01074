//! Recurrences satisfied by the coefficients of series expansions in
//! classical orthogonal polynomial bases.

pub mod diffop;
pub mod engine;
pub mod error;
pub mod families;
pub mod fraction;
pub mod oracle;
pub mod parse;
pub mod render;
pub mod scalar;
pub mod rec;
pub mod shift;

pub use error::{Error, Result};
