//! Merging vertex-disjoint cycles, paths and single vertices through
//! parallel edges.
//!
//! Two edges `(u1, v1)` and `(u2, v2)` are parallel when `u1 ~ u2` and
//! `v1 ~ v2`. Removing both and adding `(u1, u2)` and `(v1, v2)` joins the
//! two structures. Every operation here re-validates its output.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{adjacent, Coord};
use crate::path::{Cycle, Path};

pub type Edge = (Coord, Coord);

/// Two parallel edges: `e1.0 ~ e2.0` and `e1.1 ~ e2.1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParallelEdgePair {
    pub e1: Edge,
    pub e2: Edge,
}

impl ParallelEdgePair {
    pub fn new(e1: Edge, e2: Edge) -> Result<ParallelEdgePair> {
        let pair = ParallelEdgePair { e1, e2 };
        pair.validate()?;
        Ok(pair)
    }

    pub fn validate(&self) -> Result<()> {
        let (u1, v1) = self.e1;
        let (u2, v2) = self.e2;
        if !adjacent(u1, v1) || !adjacent(u2, v2) {
            return Err(Error::Stitch(
                "both members of a parallel pair must be edges".into(),
            ));
        }
        if !adjacent(u1, u2) || !adjacent(v1, v2) {
            return Err(Error::Stitch(format!(
                "{u1}-{v1} and {u2}-{v2} are not parallel"
            )));
        }
        Ok(())
    }
}

fn same_edge(a: Edge, u: Coord, v: Coord) -> bool {
    (a.0 == u && a.1 == v) || (a.0 == v && a.1 == u)
}

fn disjoint(a: &[Coord], b: &[Coord]) -> Result<()> {
    let seen: HashSet<Coord> = a.iter().copied().collect();
    match b.iter().find(|v| seen.contains(v)) {
        Some(v) => Err(Error::Stitch(format!("inputs share vertex {v}"))),
        None => Ok(()),
    }
}

/// Index `i` with `{c[i], c[i+1]}` equal to the edge (indices mod `len`).
fn cycle_edge_index(c: &[Coord], e: Edge) -> Result<usize> {
    let n = c.len();
    (0..n)
        .find(|&i| same_edge(e, c[i], c[(i + 1) % n]))
        .ok_or_else(|| Error::Stitch(format!("edge {}-{} is not on the cycle", e.0, e.1)))
}

/// The cycle with edge `{from, to}` removed, walked from `from` to `to`.
fn open_cycle(c: &[Coord], from: Coord, to: Coord) -> Result<Vec<Coord>> {
    let n = c.len();
    let i = cycle_edge_index(c, (from, to))?;
    let j = (i + 1) % n;
    // The cycle edge is c[i] - c[j]; walking backwards from c[i] visits
    // every vertex and ends at c[j].
    let mut out = Vec::with_capacity(n);
    if c[i] == from {
        for step in 0..n {
            out.push(c[(i + n - step) % n]);
        }
    } else {
        for step in 0..n {
            out.push(c[(j + step) % n]);
        }
    }
    debug_assert_eq!(out.last(), Some(&to));
    Ok(out)
}

/// Joins two disjoint cycles through a parallel pair with `e1` on `c1` and
/// `e2` on `c2`. The result keeps `c1`'s orientation.
pub fn merge_cycles(c1: &Cycle, c2: &Cycle, pair: ParallelEdgePair) -> Result<Cycle> {
    pair.validate()?;
    disjoint(c1.vertices(), c2.vertices())?;
    let a = c1.vertices();
    let i = cycle_edge_index(a, pair.e1)?;
    cycle_edge_index(c2.vertices(), pair.e2)?;
    let partner = |v: Coord| if v == pair.e1.0 { pair.e2.0 } else { pair.e2.1 };
    // Walk c1 forwards from c1[i + 1] around to c1[i], then cross.
    let n = a.len();
    let (x, y) = (a[(i + 1) % n], a[i]);
    let mut out: Vec<Coord> = (0..n).map(|step| a[(i + 1 + step) % n]).collect();
    out.extend(open_cycle(c2.vertices(), partner(y), partner(x))?);
    let merged = Cycle::new(out)?;
    if merged.len() != c1.len() + c2.len() {
        return Err(Error::Stitch("merged cycle lost vertices".into()));
    }
    Ok(merged)
}

/// Index `i` with `{p[i], p[i+1]}` equal to the edge.
fn path_edge_index(p: &[Coord], e: Edge) -> Result<usize> {
    p.windows(2)
        .position(|w| same_edge(e, w[0], w[1]))
        .ok_or_else(|| Error::Stitch(format!("edge {}-{} is not on the path", e.0, e.1)))
}

/// Splices a disjoint cycle into a path through a parallel pair with `e1`
/// on the cycle and `e2` on the path. The endpoints of the path are kept.
pub fn merge_cycle_into_path(p: &Path, c: &Cycle, pair: ParallelEdgePair) -> Result<Path> {
    pair.validate()?;
    disjoint(p.vertices(), c.vertices())?;
    let verts = p.vertices();
    let i = path_edge_index(verts, pair.e2)?;
    let partner = |v: Coord| if v == pair.e2.0 { pair.e1.0 } else { pair.e1.1 };
    let (a, b) = (verts[i], verts[i + 1]);
    let mut out = Vec::with_capacity(p.len() + c.len());
    out.extend_from_slice(&verts[..=i]);
    out.extend(open_cycle(c.vertices(), partner(a), partner(b))?);
    out.extend_from_slice(&verts[i + 1..]);
    let merged = Path::new(out)?;
    if merged.start() != p.start() || merged.end() != p.end() || merged.len() != p.len() + c.len() {
        return Err(Error::Stitch("merge changed the path's endpoints".into()));
    }
    Ok(merged)
}

/// Paths and cycles both accept a vertex spliced into one of their edges.
pub trait Splice: Sized {
    fn insert_vertex(&self, x: Coord, edge: Edge) -> Result<Self>;
}

fn check_adjoins(verts: &[Coord], x: Coord, edge: Edge) -> Result<()> {
    if verts.contains(&x) {
        return Err(Error::Stitch(format!("{x} is already present")));
    }
    if !adjacent(x, edge.0) || !adjacent(x, edge.1) {
        return Err(Error::Stitch(format!(
            "{x} does not adjoin {}-{}",
            edge.0, edge.1
        )));
    }
    Ok(())
}

impl Splice for Path {
    fn insert_vertex(&self, x: Coord, edge: Edge) -> Result<Path> {
        let verts = self.vertices();
        check_adjoins(verts, x, edge)?;
        let i = path_edge_index(verts, edge)?;
        let mut out = verts.to_vec();
        out.insert(i + 1, x);
        Path::new(out)
    }
}

impl Splice for Cycle {
    fn insert_vertex(&self, x: Coord, edge: Edge) -> Result<Cycle> {
        let verts = self.vertices();
        check_adjoins(verts, x, edge)?;
        let i = cycle_edge_index(verts, edge)?;
        let mut out = verts.to_vec();
        out.insert(i + 1, x);
        Cycle::new(out)
    }
}

/// Splices `x` between the endpoints of `edge` in a path or cycle.
pub fn insert_vertex<T: Splice>(target: &T, x: Coord, edge: Edge) -> Result<T> {
    target.insert_vertex(x, edge)
}

/// Replaces the cycle edge `(u1, v1)` by `u1 -> p -> v1`, where
/// `u1 ~ start(p)` and `v1 ~ end(p)`.
pub fn absorb_path_into_cycle(c: &Cycle, p: &Path, edge: Edge) -> Result<Cycle> {
    disjoint(c.vertices(), p.vertices())?;
    let (u1, v1) = edge;
    if !adjacent(u1, p.start()) || !adjacent(v1, p.end()) {
        return Err(Error::Stitch(format!(
            "{u1} must adjoin {} and {v1} must adjoin {}",
            p.start(),
            p.end()
        )));
    }
    let mut out = open_cycle(c.vertices(), v1, u1)?;
    out.extend_from_slice(p.vertices());
    let merged = Cycle::new(out)?;
    if merged.len() != c.len() + p.len() {
        return Err(Error::Stitch("absorbed cycle lost vertices".into()));
    }
    Ok(merged)
}

/// `p1 => p2`: the concatenation through the edge `end(p1) - start(p2)`.
pub fn concat_paths(p1: &Path, p2: &Path) -> Result<Path> {
    disjoint(p1.vertices(), p2.vertices())?;
    if !adjacent(p1.end(), p2.start()) {
        return Err(Error::Stitch(format!(
            "{} and {} are not adjacent",
            p1.end(),
            p2.start()
        )));
    }
    let mut out = p1.vertices().to_vec();
    out.extend_from_slice(p2.vertices());
    Path::new(out)
}

/// The edges of a walk, closing it when `closed`.
fn walk_edges(verts: &[Coord], closed: bool) -> Vec<Edge> {
    let mut out: Vec<Edge> = verts.windows(2).map(|w| (w[0], w[1])).collect();
    if closed && verts.len() > 2 {
        out.push((verts[verts.len() - 1], verts[0]));
    }
    out
}

/// Finds an edge of `first` parallel to an edge of `second`. Walks are
/// given as vertex lists; `*_closed` marks cycles. Returns the pair with
/// `e1` on `first` and `e2` on `second`.
pub fn find_parallel_pair(
    first: &[Coord],
    first_closed: bool,
    second: &[Coord],
    second_closed: bool,
) -> Option<ParallelEdgePair> {
    let mut nbrs: HashMap<Coord, Vec<Coord>> = HashMap::new();
    for (u, v) in walk_edges(second, second_closed) {
        nbrs.entry(u).or_default().push(v);
        nbrs.entry(v).or_default().push(u);
    }
    for (u1, v1) in walk_edges(first, first_closed) {
        for dx in -1..=1 {
            for dy in -1..=1 {
                let u2 = Coord::new(u1.x + dx, u1.y + dy);
                let Some(list) = nbrs.get(&u2) else { continue };
                for &v2 in list {
                    if adjacent(v1, v2) && u2 != v1 && v2 != u1 {
                        return Some(ParallelEdgePair {
                            e1: (u1, v1),
                            e2: (u2, v2),
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::c;

    fn square(x: i32, y: i32) -> Cycle {
        Cycle::new(vec![c(x, y), c(x + 1, y), c(x + 1, y + 1), c(x, y + 1)]).unwrap()
    }

    #[test]
    fn merges_two_squares() {
        let (a, b) = (square(1, 1), square(3, 1));
        let pair = ParallelEdgePair::new((c(2, 1), c(2, 2)), (c(3, 1), c(3, 2))).unwrap();
        let m = merge_cycles(&a, &b, pair).unwrap();
        assert_eq!(m.len(), 8);
        assert!(!m.contains_edge(c(2, 1), c(2, 2)));
        assert!(!m.contains_edge(c(3, 1), c(3, 2)));
        assert!(m.contains_edge(c(2, 1), c(3, 1)));
        assert!(m.contains_edge(c(2, 2), c(3, 2)));
        // Orientation of the first cycle survives.
        let pos = |v| m.vertices().iter().position(|&w| w == v).unwrap();
        assert_eq!((pos(c(1, 1)) + 1) % 8, pos(c(2, 1)));
    }

    #[test]
    fn cycle_into_path_keeps_ends() {
        let p = Path::new(vec![c(1, 1), c(1, 2)]).unwrap();
        let q = square(2, 1);
        let pair = find_parallel_pair(q.vertices(), true, p.vertices(), false).unwrap();
        let m = merge_cycle_into_path(&p, &q, pair).unwrap();
        assert_eq!(m.len(), 6);
        assert_eq!((m.start(), m.end()), (c(1, 1), c(1, 2)));
    }

    #[test]
    fn insert_and_absorb() {
        let sq = square(1, 1);
        let five = insert_vertex(&sq, c(3, 1), (c(2, 1), c(2, 2))).unwrap();
        assert_eq!(five.len(), 5);
        let six = insert_vertex(&five, c(1, 3), (c(2, 2), c(1, 2))).unwrap();
        assert_eq!(six.len(), 6);
        assert!(insert_vertex(&sq, c(4, 1), (c(2, 1), c(2, 2))).is_err());
        let p = Path::single(c(3, 2));
        let absorbed = absorb_path_into_cycle(&sq, &p, (c(2, 1), c(2, 2))).unwrap();
        assert_eq!(absorbed.len(), 5);
        let col = Path::new(vec![c(3, 1), c(3, 2)]).unwrap();
        assert_eq!(
            absorb_path_into_cycle(&sq, &col, (c(2, 1), c(2, 2)))
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn concat_checks_junction() {
        let a = Path::single(c(1, 1));
        let b = Path::single(c(2, 2));
        assert_eq!(concat_paths(&a, &b).unwrap().len(), 2);
        assert!(concat_paths(&a, &Path::single(c(3, 3))).is_err());
        assert!(concat_paths(&a, &a).is_err());
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(ParallelEdgePair::new((c(1, 1), c(1, 2)), (c(3, 1), c(3, 2))).is_err());
        let a = square(1, 1);
        let pair = ParallelEdgePair::new((c(1, 1), c(2, 1)), (c(1, 2), c(2, 2))).unwrap();
        assert!(merge_cycles(&a, &a, pair).is_err());
    }
}
