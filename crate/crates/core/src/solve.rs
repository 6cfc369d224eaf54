//! Shape-generic entry points: Hamiltonian paths and cycles, longest paths,
//! and the [`SolveReport`] that summarises a query.

use serde::{Deserialize, Serialize};

use crate::classify;
use crate::cond::{BoundCase, Condition};
use crate::engine;
use crate::error::{Error, Result};
use crate::geom::{c, Coord, Region, Shape, Side};
use crate::path::{Cycle, Path};
use crate::plan;
use crate::rect;
use crate::small::Edge;

/// Regions at least this large are built on a dedicated thread: the
/// constructions recurse once per peeled strip.
const BIG_REGION: usize = 1 << 14;
const BIG_STACK: usize = 1 << 30;

pub(crate) fn on_big_stack<T: Send>(size: usize, f: impl FnOnce() -> T + Send) -> T {
    if size < BIG_REGION {
        return f();
    }
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .stack_size(BIG_STACK)
            .spawn_scoped(scope, f)
            .expect("failed to spawn the construction thread")
            .join()
            .unwrap_or_else(|e| std::panic::resume_unwind(e))
    })
}

/// A validated Hamiltonian `(s, t)`-path of `r` through `forced`.
pub(crate) fn region_path(r: &Region, s: Coord, t: Coord, forced: &[Edge]) -> Result<Path> {
    let verts = on_big_stack(r.len(), || engine::hamiltonian_path(r, s, t, forced))?;
    let p = Path::new(verts)?;
    if p.len() != r.len() || p.start() != s || p.end() != t {
        return Err(Error::Construction(format!(
            "built a {}-vertex path, wanted {}",
            p.len(),
            r.len()
        )));
    }
    for e in forced {
        if !p.contains_edge(e.0, e.1) {
            return Err(Error::Construction(format!(
                "path misses forced edge {}-{}",
                e.0, e.1
            )));
        }
    }
    Ok(p)
}

/// A validated Hamiltonian cycle of `r` through `close` and `forced`.
pub(crate) fn region_cycle(r: &Region, forced: &[Edge], close: Edge) -> Result<Cycle> {
    let verts = on_big_stack(r.len(), || engine::hamiltonian_cycle(r, forced, close))?;
    let cyc = Cycle::new(verts)?;
    if cyc.len() != r.len() {
        return Err(Error::Construction(format!(
            "built a {}-vertex cycle, wanted {}",
            cyc.len(),
            r.len()
        )));
    }
    for e in forced.iter().chain([&close]) {
        if !cyc.contains_edge(e.0, e.1) {
            return Err(Error::Construction(format!(
                "cycle misses forced edge {}-{}",
                e.0, e.1
            )));
        }
    }
    Ok(cyc)
}

/// A Hamiltonian `(s, t)`-path, or the conditions that rule one out.
pub fn hamiltonian_path(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    shape.check_pair(s, t)?;
    let conds = classify::hp_conditions(shape, s, t);
    if !conds.is_empty() {
        return Err(Error::Forbidden(conds));
    }
    let p = match shape {
        Shape::Rect { .. } => rect::hp_rect(shape, s, t)?,
        _ => region_path(&shape.region(), s, t, &[])?,
    };
    p.validate_hamiltonian(shape, s, t)?;
    Ok(p)
}

/// The vertices of `shape` on one side of its bounding box, in order.
fn exposed_side(shape: &Shape, side: Side) -> Vec<Coord> {
    let (m, n) = (shape.width(), shape.height());
    let pts: Vec<Coord> = match side {
        Side::Top => (1..=m).map(|x| c(x, 1)).collect(),
        Side::Bottom => (1..=m).map(|x| c(x, n)).collect(),
        Side::Left => (1..=n).map(|y| c(1, y)).collect(),
        Side::Right => (1..=n).map(|y| c(m, y)).collect(),
    };
    pts.into_iter().filter(|&v| shape.contains(v)).collect()
}

/// Edges joining consecutive vertices along one side of the bounding box.
pub(crate) fn side_walk_edges(shape: &Shape, side: Side) -> Vec<Edge> {
    exposed_side(shape, side)
        .windows(2)
        .filter(|w| crate::geom::adjacent(w[0], w[1]))
        .map(|w| (w[0], w[1]))
        .collect()
}

/// A Hamiltonian cycle of an L- or C-shape through `forced`.
pub(crate) fn lc_cycle(shape: &Shape, forced: &[Edge]) -> Result<Cycle> {
    if let Some(cond) = classify::hc_condition(shape) {
        return Err(Error::Forbidden(vec![cond]));
    }
    if !classify::hc_exists(shape) {
        return Err(Error::NoCycle(
            "the shape has fewer than four vertices on any cycle",
        ));
    }
    let n = shape.height();
    let r = shape.region();
    let mut closes: Vec<Edge> = forced.first().copied().into_iter().collect();
    closes.extend([
        (c(1, 1), c(1, 2)),
        (c(1, n - 1), c(1, n)),
        (c(1, 1), c(2, 1)),
        (c(1, n), c(2, n)),
    ]);
    let mut last = Error::Construction("no closing edge".into());
    for close in closes {
        match region_cycle(&r, forced, close) {
            Ok(cyc) => return Ok(cyc),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// A Hamiltonian cycle, or the condition that rules one out.
pub fn hamiltonian_cycle(shape: &Shape) -> Result<Cycle> {
    let cyc = match *shape {
        Shape::Rect { m, n } => {
            let side = if m >= n { Side::Top } else { Side::Left };
            rect::hc_rect(shape, side)?
        }
        _ => lc_cycle(shape, &[])?,
    };
    cyc.validate_hamiltonian(shape)?;
    Ok(cyc)
}

/// A longest path together with the case of the bound table that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Longest {
    pub case: BoundCase,
    pub upper_bound: usize,
    pub path: Path,
}

/// The bound-table case and value for `(shape, s, t)`, without building the
/// path.
pub fn upper_bound(shape: &Shape, s: Coord, t: Coord) -> Result<(BoundCase, usize)> {
    shape.check_pair(s, t)?;
    let p = plan::plan(&shape.region(), s, t)?;
    Ok((p.case, p.value))
}

/// A longest `(s, t)`-path.
pub fn longest(shape: &Shape, s: Coord, t: Coord) -> Result<Longest> {
    shape.check_pair(s, t)?;
    let r = shape.region();
    let (planned, verts) = on_big_stack(r.len(), || plan::longest_path(&r, s, t))?;
    let path = Path::new(verts)?;
    path.validate_in(shape)?;
    Ok(Longest {
        case: planned.case,
        upper_bound: planned.value,
        path,
    })
}

/// The outcome of one query, in the form the CLI prints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub shape: Shape,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Coord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Coord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<BoundCase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<usize>,
    pub length: usize,
    /// The path or cycle found, if any.
    pub path: Option<Vec<Coord>>,
    /// Set when `path` is a cycle.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub closed: bool,
    pub forbidden: Vec<Condition>,
}

impl SolveReport {
    fn empty(shape: &Shape, s: Option<Coord>, t: Option<Coord>) -> SolveReport {
        SolveReport {
            shape: *shape,
            s,
            t,
            case: None,
            upper_bound: None,
            length: 0,
            path: None,
            closed: false,
            forbidden: Vec::new(),
        }
    }

    /// Hamiltonian cycle query. A forbidding condition is part of the report,
    /// not an error.
    pub fn hc(shape: &Shape) -> Result<SolveReport> {
        let mut rep = SolveReport::empty(shape, None, None);
        rep.closed = true;
        match hamiltonian_cycle(shape) {
            Ok(cyc) => {
                rep.length = cyc.len();
                rep.path = Some(cyc.into_vec());
            }
            Err(Error::Forbidden(conds)) => rep.forbidden = conds,
            Err(Error::NoCycle(_)) => {}
            Err(e) => return Err(e),
        }
        Ok(rep)
    }

    /// Hamiltonian path query.
    pub fn hp(shape: &Shape, s: Coord, t: Coord) -> Result<SolveReport> {
        let mut rep = SolveReport::empty(shape, Some(s), Some(t));
        match hamiltonian_path(shape, s, t) {
            Ok(p) => {
                rep.length = p.len();
                rep.path = Some(p.into_vec());
            }
            Err(Error::Forbidden(conds)) => rep.forbidden = conds,
            Err(e) => return Err(e),
        }
        Ok(rep)
    }

    /// Longest path query; `forbidden` lists the conditions that keep the
    /// path from being Hamiltonian.
    pub fn longest(shape: &Shape, s: Coord, t: Coord) -> Result<SolveReport> {
        let mut rep = SolveReport::empty(shape, Some(s), Some(t));
        let found = longest(shape, s, t)?;
        rep.case = Some(found.case);
        rep.upper_bound = Some(found.upper_bound);
        rep.length = found.path.len();
        rep.path = Some(found.path.into_vec());
        rep.forbidden = classify::hp_conditions(shape, s, t);
        Ok(rep)
    }
}
