//! Toric complete intersection codes over finite fields.
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod cli;
pub mod codes;
pub mod field;
pub mod laurent;
pub mod lattice;
pub mod linalg;
pub mod problem;
pub mod residue;
pub mod system;
