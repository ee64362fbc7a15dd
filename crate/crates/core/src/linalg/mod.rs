//! Dense exact linear algebra over the supported coefficient rings.

mod matrix;
mod module;
pub mod snf;
mod solve;

pub use matrix::Matrix;
pub use module::{twist, FreeModule, LinearMap};
pub use solve::{
    determinant, invert_map, is_direct_summand, kernel, solve_linear, solve_many, solve_unique,
    span_generators, submodule_membership, SolveResult, SolveStatus,
};
