pub mod algebras;
pub mod arith;
pub mod classify;
pub mod duality;
pub mod error;
pub mod hopf;
pub mod partial;
pub mod qcomb;
pub mod tables;

pub use error::{Error, Result};
