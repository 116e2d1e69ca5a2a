//! Exact anomaly polynomials `Td · ch(V)` of holomorphically twisted
//! four-dimensional supersymmetric theories.

pub mod anomaly;
pub mod charclasses;
pub mod cli;
pub mod duality;
pub mod error;
pub mod exactring;
pub mod theory;

pub use error::{Error, Result};
