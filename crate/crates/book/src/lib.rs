//! The guide's chapters as doc tests, so `cargo test` runs every snippet.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/rings.md")]
pub mod rings {}
#[doc = include_str!("../../../book/src/hopf.md")]
pub mod hopf {}
#[doc = include_str!("../../../book/src/crossed.md")]
pub mod crossed {}
#[doc = include_str!("../../../book/src/smash.md")]
pub mod smash {}
#[doc = include_str!("../../../book/src/duality.md")]
pub mod duality {}
#[doc = include_str!("../../../book/src/cleft.md")]
pub mod cleft {}
#[doc = include_str!("../../../book/src/opposite.md")]
pub mod opposite {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
