//! Validated vertex sequences: simple paths and cycles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{adjacent, Coord, Shape};

/// A simple path: pairwise distinct vertices, consecutive ones adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    verts: Vec<Coord>,
}

/// A cycle of at least four distinct vertices; the last vertex is adjacent to
/// the first and is not repeated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    verts: Vec<Coord>,
}

/// Dense membership bitmap over the bounding box of a vertex list.
struct Seen {
    x0: i32,
    y0: i32,
    w: usize,
    bits: Vec<bool>,
}

impl Seen {
    fn for_vertices(vs: &[Coord]) -> Seen {
        let (mut x0, mut y0, mut x1, mut y1) = (i32::MAX, i32::MAX, i32::MIN, i32::MIN);
        for v in vs {
            x0 = x0.min(v.x);
            y0 = y0.min(v.y);
            x1 = x1.max(v.x);
            y1 = y1.max(v.y);
        }
        if vs.is_empty() {
            return Seen {
                x0: 0,
                y0: 0,
                w: 0,
                bits: Vec::new(),
            };
        }
        let w = (x1 - x0 + 1) as usize;
        let h = (y1 - y0 + 1) as usize;
        Seen {
            x0,
            y0,
            w,
            bits: vec![false; w * h],
        }
    }

    /// Marks `v`; returns false if it was already marked.
    fn insert(&mut self, v: Coord) -> bool {
        let i = (v.y - self.y0) as usize * self.w + (v.x - self.x0) as usize;
        !std::mem::replace(&mut self.bits[i], true)
    }
}

fn check_simple(verts: &[Coord]) -> Result<()> {
    let mut seen = Seen::for_vertices(verts);
    for (i, &v) in verts.iter().enumerate() {
        if !seen.insert(v) {
            return Err(Error::InvalidPath(format!("vertex {v} repeated")));
        }
        if i > 0 && !adjacent(verts[i - 1], v) {
            return Err(Error::InvalidPath(format!(
                "{} and {v} are not adjacent",
                verts[i - 1]
            )));
        }
    }
    Ok(())
}

fn check_inside(verts: &[Coord], shape: &Shape) -> Result<()> {
    match verts.iter().find(|v| !shape.contains(**v)) {
        Some(v) => Err(Error::OutOfShape(*v)),
        None => Ok(()),
    }
}

fn edge_eq(a: (Coord, Coord), u: Coord, v: Coord) -> bool {
    (a.0 == u && a.1 == v) || (a.0 == v && a.1 == u)
}

impl Path {
    pub fn new(verts: Vec<Coord>) -> Result<Path> {
        if verts.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        check_simple(&verts)?;
        Ok(Path { verts })
    }

    /// Builds a path without validation. Constructions use this internally
    /// and validate once at the public boundary.
    pub(crate) fn from_vec_unchecked(verts: Vec<Coord>) -> Path {
        debug_assert!(!verts.is_empty());
        Path { verts }
    }

    pub fn single(v: Coord) -> Path {
        Path { verts: vec![v] }
    }

    pub fn vertices(&self) -> &[Coord] {
        &self.verts
    }

    pub fn into_vec(self) -> Vec<Coord> {
        self.verts
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn start(&self) -> Coord {
        self.verts[0]
    }

    pub fn end(&self) -> Coord {
        *self.verts.last().expect("paths are non-empty")
    }

    pub fn reversed(mut self) -> Path {
        self.verts.reverse();
        self
    }

    pub fn edges(&self) -> impl Iterator<Item = (Coord, Coord)> + '_ {
        self.verts.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn contains_edge(&self, u: Coord, v: Coord) -> bool {
        self.edges().any(|e| edge_eq(e, u, v))
    }

    pub fn validate(&self) -> Result<()> {
        check_simple(&self.verts)
    }

    /// Validates the path and checks that it lies in `shape`.
    pub fn validate_in(&self, shape: &Shape) -> Result<()> {
        self.validate()?;
        check_inside(&self.verts, shape)
    }

    /// Validates a Hamiltonian `(s, t)`-path of `shape`.
    pub fn validate_hamiltonian(&self, shape: &Shape, s: Coord, t: Coord) -> Result<()> {
        self.validate_in(shape)?;
        if self.start() != s || self.end() != t {
            return Err(Error::InvalidPath(format!(
                "path runs {} -> {}, expected {s} -> {t}",
                self.start(),
                self.end()
            )));
        }
        if self.len() != shape.size() {
            return Err(Error::InvalidPath(format!(
                "path covers {} of {} vertices",
                self.len(),
                shape.size()
            )));
        }
        Ok(())
    }
}

impl Cycle {
    pub fn new(verts: Vec<Coord>) -> Result<Cycle> {
        if verts.len() < 4 {
            return Err(Error::InvalidPath(format!(
                "a cycle needs at least 4 vertices, got {}",
                verts.len()
            )));
        }
        check_simple(&verts)?;
        let (first, last) = (verts[0], verts[verts.len() - 1]);
        if !adjacent(first, last) {
            return Err(Error::InvalidPath(format!(
                "cycle does not close: {last} and {first} are not adjacent"
            )));
        }
        Ok(Cycle { verts })
    }

    pub(crate) fn from_vec_unchecked(verts: Vec<Coord>) -> Cycle {
        debug_assert!(verts.len() >= 4);
        Cycle { verts }
    }

    pub fn vertices(&self) -> &[Coord] {
        &self.verts
    }

    pub fn into_vec(self) -> Vec<Coord> {
        self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Edges in traversal order, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (Coord, Coord)> + '_ {
        let n = self.verts.len();
        (0..n).map(move |i| (self.verts[i], self.verts[(i + 1) % n]))
    }

    pub fn contains_edge(&self, u: Coord, v: Coord) -> bool {
        self.edges().any(|e| edge_eq(e, u, v))
    }

    pub fn validate(&self) -> Result<()> {
        Cycle::new(self.verts.clone()).map(|_| ())
    }

    pub fn validate_in(&self, shape: &Shape) -> Result<()> {
        self.validate()?;
        check_inside(&self.verts, shape)
    }

    pub fn validate_hamiltonian(&self, shape: &Shape) -> Result<()> {
        self.validate_in(shape)?;
        if self.len() != shape.size() {
            return Err(Error::InvalidPath(format!(
                "cycle covers {} of {} vertices",
                self.len(),
                shape.size()
            )));
        }
        Ok(())
    }

    /// Rotates the cycle so that it starts at its least vertex and proceeds
    /// towards the lesser of that vertex's two cycle neighbours.
    pub fn canonical(mut self) -> Cycle {
        let n = self.verts.len();
        let i = (0..n).min_by_key(|&i| self.verts[i]).unwrap_or(0);
        self.verts.rotate_left(i);
        if self.verts[n - 1] < self.verts[1] {
            self.verts[1..].reverse();
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::c;

    #[test]
    fn rejects_repeats_and_gaps() {
        assert!(Path::new(vec![c(1, 1), c(2, 2), c(1, 1)]).is_err());
        assert!(Path::new(vec![c(1, 1), c(3, 1)]).is_err());
        assert!(Path::new(vec![c(1, 1), c(2, 2), c(3, 1)]).is_ok());
    }

    #[test]
    fn cycles_need_four_vertices_and_closure() {
        assert!(Cycle::new(vec![c(1, 1), c(2, 1), c(2, 2)]).is_err());
        assert!(Cycle::new(vec![c(1, 1), c(2, 1), c(3, 1), c(4, 1)]).is_err());
        let q = Cycle::new(vec![c(1, 1), c(2, 1), c(2, 2), c(1, 2)]).unwrap();
        assert!(q.contains_edge(c(1, 2), c(1, 1)));
        assert!(!q.contains_edge(c(1, 1), c(2, 2)));
    }

    #[test]
    fn canonical_rotation() {
        let q = Cycle::new(vec![c(2, 2), c(1, 2), c(1, 1), c(2, 1)]).unwrap();
        assert_eq!(
            q.canonical().vertices(),
            &[c(1, 1), c(1, 2), c(2, 2), c(2, 1)]
        );
    }
}
