use thiserror::Error;

use crate::cond::Condition;
use crate::geom::Coord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape parameters: {0}")]
    InvalidShape(&'static str),

    #[error("vertex {0} is not in the shape")]
    OutOfShape(Coord),

    #[error("unsupported separation: {0}")]
    UnsupportedCut(String),

    #[error("forbidden condition(s): {}", fmt_conditions(.0))]
    Forbidden(Vec<Condition>),

    #[error("no Hamiltonian cycle: {0}")]
    NoCycle(&'static str),

    #[error("stitching failed: {0}")]
    Stitch(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle budget exceeded: {0}")]
    Budget(String),

    #[error("construction failed: {0}")]
    Construction(String),
}

fn fmt_conditions(conds: &[Condition]) -> String {
    conds
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
