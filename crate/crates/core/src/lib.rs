//! Khovanov-type homology over Z[H], slice-torus invariants and the
//! surrounding diagram machinery.

pub mod catalog;
pub mod complex;
pub mod diagram;
pub mod error;
pub mod exactalg;
pub mod exec;
pub mod homology;
pub mod invariants;
pub mod lspace;
pub mod slnss;
mod util;

pub use error::{Error, Result};
