//! The duality square for crossed products and the isomorphisms it yields.

pub mod coaction;
pub mod diagram;
pub mod maps;
pub mod routes;

pub use coaction::{coaction_table, CoactionKind, CoactionTable};
pub use diagram::{build_diagram, build_diagram_with_order, duality_iso, DualityDiagram, PiOrder};
pub use maps::*;
pub use routes::*;
