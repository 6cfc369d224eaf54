//! L-shaped supergrid graphs `L(m, n; k, l)`.

use crate::classify;
use crate::cond::{BoundCase, Condition, LBoundCase};
use crate::error::{Error, Result};
use crate::geom::{Coord, Shape, Side};
use crate::path::{Cycle, Path};
use crate::small::Edge;
use crate::solve;

fn check(shape: &Shape) -> Result<()> {
    match shape {
        Shape::L { .. } => Ok(()),
        _ => Err(Error::Precondition(format!("{shape} is not an L-shape"))),
    }
}

/// The longest-path case of a triple together with the conditions that rule
/// out a Hamiltonian path (empty exactly when the case is `C0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LClassification {
    pub case: LBoundCase,
    pub forbidden: Vec<Condition>,
}

/// Cross-checks the closed-form (F1) against traversal on small shapes.
pub(crate) fn debug_check_f1(shape: &Shape, s: Coord, t: Coord) {
    if cfg!(debug_assertions) && shape.size() <= 256 {
        assert_eq!(
            classify::f1(shape, s, t),
            shape.region().f1_by_traversal(s, t),
            "closed-form F1 disagrees with traversal on {shape}, {s}, {t}"
        );
    }
}

pub fn classify_l(shape: &Shape, s: Coord, t: Coord) -> Result<LClassification> {
    check(shape)?;
    shape.check_pair(s, t)?;
    debug_check_f1(shape, s, t);
    let forbidden = classify::hp_conditions(shape, s, t);
    let case = match solve::upper_bound(shape, s, t)?.0 {
        BoundCase::L(case) => case,
        other => {
            return Err(Error::Construction(format!(
                "L-shape classified as {other}"
            )))
        }
    };
    Ok(LClassification { case, forbidden })
}

/// A Hamiltonian cycle; fails with (F5) when some vertex has degree one.
pub fn hc_l(shape: &Shape) -> Result<Cycle> {
    check(shape)?;
    solve::hamiltonian_cycle(shape)
}

/// A Hamiltonian cycle whose face on `side` of the bounding box is flat: it
/// contains every edge joining consecutive vertices of the shape along that
/// side.
pub fn hc_l_flat(shape: &Shape, side: Side) -> Result<Cycle> {
    check(shape)?;
    let forced = solve::side_walk_edges(shape, side);
    let cyc = solve::lc_cycle(shape, &forced)?;
    cyc.validate_hamiltonian(shape)?;
    Ok(cyc)
}

/// A Hamiltonian `(s, t)`-path; fails with the matching subset of (F1),
/// (F3), (F4) when none exists.
pub fn hp_l(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    check(shape)?;
    solve::hamiltonian_path(shape, s, t)
}

/// A Hamiltonian `(s, t)`-path using at least one edge along `side` of the
/// bounding box. Edges away from `s` and `t` are tried first.
pub fn hp_l_with_edge_on(shape: &Shape, s: Coord, t: Coord, side: Side) -> Result<Path> {
    check(shape)?;
    hp_with_edge_on(shape, s, t, side)
}

pub(crate) fn hp_with_edge_on(shape: &Shape, s: Coord, t: Coord, side: Side) -> Result<Path> {
    shape.check_pair(s, t)?;
    let conds = classify::hp_conditions(shape, s, t);
    if !conds.is_empty() {
        return Err(Error::Forbidden(conds));
    }
    let edges = solve::side_walk_edges(shape, side);
    let (free, busy): (Vec<Edge>, Vec<Edge>) = edges
        .into_iter()
        .partition(|e| ![e.0, e.1].iter().any(|v| *v == s || *v == t));
    // Middle first, then outwards.
    let mid = free.len() / 2;
    let mut order: Vec<Edge> = Vec::new();
    for d in 0..free.len() {
        for i in [mid + d, mid.wrapping_sub(d)] {
            if let Some(e) = free.get(i) {
                if !order.contains(e) {
                    order.push(*e);
                }
            }
        }
        if order.len() >= 4 {
            break;
        }
    }
    order.extend(busy);
    let r = shape.region();
    let mut last = Error::Construction(format!("no edge on the {side:?} side"));
    for e in order {
        match solve::region_path(&r, s, t, &[e]) {
            Ok(p) => return Ok(p),
            Err(err) => last = err,
        }
    }
    Err(last)
}

/// A longest `(s, t)`-path.
pub fn longest_l(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    check(shape)?;
    Ok(solve::longest(shape, s, t)?.path)
}

/// The bound-table value for `(shape, s, t)`.
pub fn upper_bound_l(shape: &Shape, s: Coord, t: Coord) -> Result<usize> {
    check(shape)?;
    Ok(solve::upper_bound(shape, s, t)?.1)
}
