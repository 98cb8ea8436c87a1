pub mod braid;
pub mod chars;
pub mod conjugacy;
pub mod coxeter;
pub mod dcat;
pub mod error;
pub mod hecke;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use hecke::{HeckeElt, HeckePoly};
