//! Longest minimal winning paths on n x n Hex boards.
//!
//! The crate verifies winning paths, accounts for the unit triangles a path
//! leaves empty, computes closed-form length bounds, searches exhaustively for
//! optimal paths on small boards, and builds optimal paths for large boards
//! by repeatedly wrapping a smaller path in a frame eight cells wider.

pub mod board;
pub mod bounds;
pub mod connection;
pub mod construct;
pub mod error;
pub mod pathfile;
pub mod render;
pub mod search;
pub mod unitgrid;

pub use board::{BoardSize, Coord, Corner};
pub use bounds::{BoundResultOf, BoundRule, CensusRow};
pub use connection::StoneSet;
pub use construct::{GenerationTrace, TemplateType};
pub use error::{Error, Result};
pub use search::{SearchConfig, SearchMode, SearchOutcome};
pub use unitgrid::{Orientation, Region, RegionKind, UnitTriangle};

/// Exact rational type used by the bound functions.
pub type Rational = num_rational::Ratio<i64>;

/// Bound result at the default integer width.
pub type BoundResult = BoundResultOf<i64>;
