//! Exact computations with diagonal braidings of finite Cartan type and their
//! Nichols algebras: cyclotomic scalars, the free braided algebra, a pairing
//! based zero test, structure checks and PBW root counts.

pub mod algebra;
pub mod braiding;
pub mod catalog;
pub mod errata;
pub mod error;
pub mod graphs;
pub mod linalg;
pub mod oracle;
pub mod roots;
pub mod scalars;
pub mod structure;
pub mod sweeps;
pub mod text;

pub use algebra::NCPolynomial;
pub use braiding::{cartan_braiding, BraidingMatrix, CartanSpec, CartanType, DegreeVector};
pub use error::{Error, Result};
pub use graphs::{VertexGraph, Word};
pub use oracle::{LieVariant, NicholsOracle, PairingCoordinates};
pub use scalars::{CycNumber, Order, RootFraction};
