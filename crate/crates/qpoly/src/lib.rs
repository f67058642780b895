//! File formats and command-line front end for [`qpoly_core`].

pub mod cli;
pub mod format;

pub use format::{BasisRecord, FormatError, Poly};
