//! Hamiltonian and longest paths in rectangular, L-shaped and C-shaped
//! supergrid graphs.

pub mod classify;
pub mod cond;
pub mod cshape;
mod engine;
pub mod error;
pub mod geom;
mod links;
pub mod lshape;
pub mod oracle;
pub mod path;
mod plan;
pub mod rect;
mod small;
pub mod solve;
pub mod stitch;

pub use cond::{BoundCase, CBoundCase, Condition, LBoundCase, RectCase};
pub use error::{Error, Result};
pub use geom::{adjacent, Axis, Block, Coord, Frame, Orient, Placed, Region, Shape, Side};
pub use path::{Cycle, Path};
pub use solve::{hamiltonian_cycle, hamiltonian_path, longest, upper_bound, Longest, SolveReport};
