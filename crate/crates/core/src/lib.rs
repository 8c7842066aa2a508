//! Ribbon tangle database engine: planar diagram codes, tangles and their
//! closures, knot invariants, Reidemeister simplification and verification
//! of tabulated ribbon tangle presentations.

pub mod database;
pub mod error;
pub mod invariants;
pub mod pd;
pub mod poly;
pub mod simplify;
pub mod tangle;
pub mod verify;

pub use error::{DatabaseError, InvariantError, PdError, TangleError};
pub use pd::{parse_pd, Crossing, CrossingSign, EdgeLabel, PlanarDiagram};
pub use poly::{Grid, LaurentPolynomial};
