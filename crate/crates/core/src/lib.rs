//! Exact finite-rank Hopf algebra computations over Z, Q and Z/n.

#![allow(clippy::needless_range_loop)]

pub mod actions;
pub mod algebra;
pub mod catalog;
pub mod coalgebra;
pub mod crossed;
pub mod duality;
pub mod error;
pub mod hopf;
pub mod instance;
pub mod linalg;
pub mod report;
pub mod ring;
pub mod smash;
pub mod standard;
pub mod suite;

pub use error::{Error, Result};
pub use ring::{RingSpec, Scalar, Vector};
