//! Lattice points, shapes and the supergrid graphs they induce.
//!
//! Coordinates are 1-based with `(1, 1)` the upper-left corner; `x` grows to
//! the right and `y` grows downwards. Two points are adjacent when both
//! coordinate differences are at most one (king-move adjacency).
//!
//! Every shape is described in a canonical frame:
//!
//! * `Rect(m, n)`: columns `1..=m`, rows `1..=n`.
//! * `L(m, n; k, l)`: `Rect(m, n)` minus the `k x l` block in the upper-right
//!   corner (columns `m-k+1..=m`, rows `1..=l`).
//! * `C(m, n; k, l; c, d)`: `Rect(m, n)` minus the `k x l` block cut into the
//!   right side (columns `a+1..=m`, rows `c+1..=c+l`), with `a = m - k` and
//!   `d = n - l - c`.
//!
//! Pieces produced by separations live in the parent's frame; a [`Frame`]
//! maps the piece's canonical coordinates into that parent frame.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Serialises as the pair `[x, y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Coord {
    pub x: i32,
    pub y: i32,
}

impl Coord {
    pub const fn new(x: i32, y: i32) -> Self {
        Coord { x, y }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i32, i32)> for Coord {
    fn from((x, y): (i32, i32)) -> Self {
        Coord { x, y }
    }
}

impl From<Coord> for (i32, i32) {
    fn from(v: Coord) -> Self {
        (v.x, v.y)
    }
}

/// Shorthand for [`Coord::new`].
#[inline]
pub const fn c(x: i32, y: i32) -> Coord {
    Coord { x, y }
}

/// Supergrid adjacency: distinct points whose coordinates differ by at most one.
#[inline]
pub fn adjacent(u: Coord, v: Coord) -> bool {
    u != v && (u.x - v.x).abs() <= 1 && (u.y - v.y).abs() <= 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    /// A vertical cut line; it separates columns.
    Vertical,
    /// A horizontal cut line; it separates rows.
    Horizontal,
}

/// One of the four boundaries of a rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Bottom, Side::Left, Side::Right];

    pub fn opposite(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Inclusive axis-aligned block `[x0, x1] x [y0, y1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub x0: i32,
    pub y0: i32,
    pub x1: i32,
    pub y1: i32,
}

impl Block {
    pub const fn new(x0: i32, y0: i32, x1: i32, y1: i32) -> Self {
        Block { x0, y0, x1, y1 }
    }

    pub fn is_empty(&self) -> bool {
        self.x0 > self.x1 || self.y0 > self.y1
    }

    pub fn width(&self) -> i32 {
        (self.x1 - self.x0 + 1).max(0)
    }

    pub fn height(&self) -> i32 {
        (self.y1 - self.y0 + 1).max(0)
    }

    pub fn area(&self) -> usize {
        self.width() as usize * self.height() as usize
    }

    #[inline]
    pub fn contains(&self, v: Coord) -> bool {
        v.x >= self.x0 && v.x <= self.x1 && v.y >= self.y0 && v.y <= self.y1
    }

    pub fn intersect(&self, o: &Block) -> Block {
        Block::new(
            self.x0.max(o.x0),
            self.y0.max(o.y0),
            self.x1.min(o.x1),
            self.y1.min(o.y1),
        )
    }

    /// Does this block lie on the given boundary of `outer`?
    pub fn touches(&self, outer: &Block, side: Side) -> bool {
        match side {
            Side::Top => self.y0 == outer.y0,
            Side::Bottom => self.y1 == outer.y1,
            Side::Left => self.x0 == outer.x0,
            Side::Right => self.x1 == outer.x1,
        }
    }

    /// The points of this block along one of its boundaries, in increasing
    /// coordinate order.
    pub fn side_points(&self, side: Side) -> Vec<Coord> {
        match side {
            Side::Top => (self.x0..=self.x1).map(|x| c(x, self.y0)).collect(),
            Side::Bottom => (self.x0..=self.x1).map(|x| c(x, self.y1)).collect(),
            Side::Left => (self.y0..=self.y1).map(|y| c(self.x0, y)).collect(),
            Side::Right => (self.y0..=self.y1).map(|y| c(self.x1, y)).collect(),
        }
    }
}

/// A shape in its canonical frame. `a = m - k` and `d = n - l - c` are
/// derived on demand.
///
/// Serialises as `{"kind": "R" | "L" | "C", "m": .., ...}`; C-shapes also
/// carry `d`. Deserialising checks the same invariants as the constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShapeRepr", into = "ShapeRepr")]
pub enum Shape {
    Rect {
        m: i32,
        n: i32,
    },
    L {
        m: i32,
        n: i32,
        k: i32,
        l: i32,
    },
    C {
        m: i32,
        n: i32,
        k: i32,
        l: i32,
        c: i32,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum ShapeRepr {
    R {
        m: i32,
        n: i32,
    },
    L {
        m: i32,
        n: i32,
        k: i32,
        l: i32,
    },
    C {
        m: i32,
        n: i32,
        k: i32,
        l: i32,
        c: i32,
        #[serde(default)]
        d: Option<i32>,
    },
}

impl TryFrom<ShapeRepr> for Shape {
    type Error = Error;

    fn try_from(r: ShapeRepr) -> Result<Shape> {
        match r {
            ShapeRepr::R { m, n } => Shape::rect(m, n),
            ShapeRepr::L { m, n, k, l } => Shape::l_shape(m, n, k, l),
            ShapeRepr::C { m, n, k, l, c, d } => {
                Shape::c_shape(m, n, k, l, c, d.unwrap_or(n - l - c))
            }
        }
    }
}

impl From<Shape> for ShapeRepr {
    fn from(s: Shape) -> ShapeRepr {
        match s {
            Shape::Rect { m, n } => ShapeRepr::R { m, n },
            Shape::L { m, n, k, l } => ShapeRepr::L { m, n, k, l },
            Shape::C { m, n, k, l, c } => ShapeRepr::C {
                m,
                n,
                k,
                l,
                c,
                d: Some(n - l - c),
            },
        }
    }
}

impl Shape {
    pub fn rect(m: i32, n: i32) -> Result<Shape> {
        if m < 1 {
            return Err(Error::InvalidShape("m >= 1"));
        }
        if n < 1 {
            return Err(Error::InvalidShape("n >= 1"));
        }
        Ok(Shape::Rect { m, n })
    }

    pub fn l_shape(m: i32, n: i32, k: i32, l: i32) -> Result<Shape> {
        if m < 2 {
            return Err(Error::InvalidShape("m > 1"));
        }
        if n < 2 {
            return Err(Error::InvalidShape("n > 1"));
        }
        if k < 1 {
            return Err(Error::InvalidShape("k >= 1"));
        }
        if l < 1 {
            return Err(Error::InvalidShape("l >= 1"));
        }
        if m - k < 1 {
            return Err(Error::InvalidShape("m - k >= 1"));
        }
        if n - l < 1 {
            return Err(Error::InvalidShape("n - l >= 1"));
        }
        Ok(Shape::L { m, n, k, l })
    }

    /// `d` is part of the signature for readability; it must equal `n - l - c`.
    pub fn c_shape(m: i32, n: i32, k: i32, l: i32, c: i32, d: i32) -> Result<Shape> {
        if d != n - l - c {
            return Err(Error::InvalidShape("d = n - l - c"));
        }
        Self::c_shape_nlc(m, n, k, l, c)
    }

    pub fn c_shape_nlc(m: i32, n: i32, k: i32, l: i32, c: i32) -> Result<Shape> {
        if m < 2 {
            return Err(Error::InvalidShape("m >= 2"));
        }
        if n < 3 {
            return Err(Error::InvalidShape("n >= 3"));
        }
        if k < 1 {
            return Err(Error::InvalidShape("k >= 1"));
        }
        if l < 1 {
            return Err(Error::InvalidShape("l >= 1"));
        }
        if c < 1 {
            return Err(Error::InvalidShape("c >= 1"));
        }
        if n - l - c < 1 {
            return Err(Error::InvalidShape("d = n - l - c >= 1"));
        }
        if m - k < 1 {
            return Err(Error::InvalidShape("a = m - k >= 1"));
        }
        Ok(Shape::C { m, n, k, l, c })
    }

    pub fn width(&self) -> i32 {
        match *self {
            Shape::Rect { m, .. } | Shape::L { m, .. } | Shape::C { m, .. } => m,
        }
    }

    pub fn height(&self) -> i32 {
        match *self {
            Shape::Rect { n, .. } | Shape::L { n, .. } | Shape::C { n, .. } => n,
        }
    }

    /// The removed block, in canonical coordinates.
    pub fn hole(&self) -> Option<Block> {
        match *self {
            Shape::Rect { .. } => None,
            Shape::L { m, k, l, .. } => Some(Block::new(m - k + 1, 1, m, l)),
            Shape::C { m, k, l, c, .. } => Some(Block::new(m - k + 1, c + 1, m, c + l)),
        }
    }

    pub fn region(&self) -> Region {
        Region {
            outer: Block::new(1, 1, self.width(), self.height()),
            hole: self.hole(),
        }
    }

    /// Number of vertices: `mn` or `mn - kl`.
    pub fn size(&self) -> usize {
        match *self {
            Shape::Rect { m, n } => (m * n) as usize,
            Shape::L { m, n, k, l } | Shape::C { m, n, k, l, .. } => (m * n - k * l) as usize,
        }
    }

    #[inline]
    pub fn contains(&self, v: Coord) -> bool {
        self.region().contains(v)
    }

    /// The vertex set, in ascending coordinate order.
    pub fn vertices(&self) -> Vec<Coord> {
        self.region().vertices()
    }

    pub fn degree(&self, v: Coord) -> Result<usize> {
        self.region().degree(v)
    }

    /// Unit edges on the outline: horizontal and vertical edges not shared
    /// by two unit squares of the shape. Each edge is listed once, lower
    /// endpoint first.
    pub fn boundary_edges(&self) -> Vec<(Coord, Coord)> {
        let square = |x: i32, y: i32| {
            [c(x, y), c(x + 1, y), c(x, y + 1), c(x + 1, y + 1)]
                .iter()
                .all(|&v| self.contains(v))
        };
        let mut out = Vec::new();
        for v in self.vertices() {
            let right = c(v.x + 1, v.y);
            if self.contains(right) && !(square(v.x, v.y - 1) && square(v.x, v.y)) {
                out.push((v, right));
            }
            let down = c(v.x, v.y + 1);
            if self.contains(down) && !(square(v.x - 1, v.y) && square(v.x, v.y)) {
                out.push((v, down));
            }
        }
        out
    }

    pub fn is_cut_vertex(&self, v: Coord) -> Result<bool> {
        self.region().is_cut_vertex(v)
    }

    pub fn is_vertex_cut_pair(&self, s: Coord, t: Coord) -> Result<bool> {
        self.region().is_vertex_cut_pair(s, t)
    }

    pub fn check_vertex(&self, v: Coord) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::OutOfShape(v))
        }
    }

    pub fn check_pair(&self, s: Coord, t: Coord) -> Result<()> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        if s == t {
            return Err(Error::Precondition("s and t must be distinct".into()));
        }
        Ok(())
    }

    /// Splits the shape with a straight cut. A vertical cut at `line` keeps
    /// columns `<= line` on the first side; a horizontal cut keeps rows
    /// `<= line` on the first side. Both pieces are reported with frames into
    /// this shape's coordinates.
    pub fn separate(&self, axis: Axis, line: i32) -> Result<(Placed, Placed)> {
        self.region().separate(axis, line)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Shape::Rect { m, n } => write!(f, "R({m},{n})"),
            Shape::L { m, n, k, l } => write!(f, "L({m},{n};{k},{l})"),
            Shape::C { m, n, k, l, c } => write!(f, "C({m},{n};{k},{l};{c},{})", n - l - c),
        }
    }
}

/// A bounding block minus at most one block. This is the common currency for
/// sub-shapes cut out during constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    pub outer: Block,
    pub hole: Option<Block>,
}

impl Region {
    pub fn block(b: Block) -> Region {
        Region {
            outer: b,
            hole: None,
        }
    }

    pub fn with_hole(outer: Block, hole: Block) -> Region {
        let h = hole.intersect(&outer);
        Region {
            outer,
            hole: if h.is_empty() { None } else { Some(h) },
        }
    }

    #[inline]
    pub fn contains(&self, v: Coord) -> bool {
        self.outer.contains(v) && !self.hole.is_some_and(|h| h.contains(v))
    }

    pub fn len(&self) -> usize {
        self.outer.area() - self.hole.map_or(0, |h| h.area())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> Vec<Coord> {
        let mut out = Vec::with_capacity(self.len());
        for x in self.outer.x0..=self.outer.x1 {
            for y in self.outer.y0..=self.outer.y1 {
                let v = c(x, y);
                if self.contains(v) {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: Coord) -> impl Iterator<Item = Coord> + '_ {
        const D: [(i32, i32); 8] = [
            (-1, -1),
            (-1, 0),
            (-1, 1),
            (0, -1),
            (0, 1),
            (1, -1),
            (1, 0),
            (1, 1),
        ];
        D.iter()
            .map(move |&(dx, dy)| c(v.x + dx, v.y + dy))
            .filter(move |&u| self.contains(u))
    }

    pub fn degree(&self, v: Coord) -> Result<usize> {
        if !self.contains(v) {
            return Err(Error::OutOfShape(v));
        }
        Ok(self.neighbors(v).count())
    }

    /// Number of connected components after deleting `removed`.
    pub fn components_without(&self, removed: &[Coord]) -> usize {
        let w = self.outer.width() as usize;
        let idx = |v: Coord| (v.y - self.outer.y0) as usize * w + (v.x - self.outer.x0) as usize;
        let mut seen = vec![false; self.outer.area()];
        for &r in removed {
            if self.contains(r) {
                seen[idx(r)] = true;
            }
        }
        let mut comps = 0;
        let mut queue = VecDeque::new();
        for v in self.vertices() {
            if seen[idx(v)] {
                continue;
            }
            comps += 1;
            seen[idx(v)] = true;
            queue.push_back(v);
            while let Some(u) = queue.pop_front() {
                for z in self.neighbors(u) {
                    if !seen[idx(z)] {
                        seen[idx(z)] = true;
                        queue.push_back(z);
                    }
                }
            }
        }
        comps
    }

    pub fn is_cut_vertex(&self, v: Coord) -> Result<bool> {
        if !self.contains(v) {
            return Err(Error::OutOfShape(v));
        }
        Ok(self.components_without(&[v]) > 1)
    }

    pub fn is_vertex_cut_pair(&self, s: Coord, t: Coord) -> Result<bool> {
        for v in [s, t] {
            if !self.contains(v) {
                return Err(Error::OutOfShape(v));
            }
        }
        if s == t {
            return Err(Error::Precondition("s and t must be distinct".into()));
        }
        Ok(self.components_without(&[s, t]) > 1)
    }

    /// Ground-truth (F1): `s` or `t` is a cut vertex or `{s, t}` is a vertex cut.
    pub fn f1_by_traversal(&self, s: Coord, t: Coord) -> bool {
        self.components_without(&[s]) > 1
            || self.components_without(&[t]) > 1
            || self.components_without(&[s, t]) > 1
    }

    pub fn separate(&self, axis: Axis, line: i32) -> Result<(Placed, Placed)> {
        let o = self.outer;
        let (lo, hi) = match axis {
            Axis::Vertical => {
                if line < o.x0 || line >= o.x1 {
                    return Err(Error::UnsupportedCut(format!(
                        "vertical line {line} is not strictly inside columns {}..{}",
                        o.x0, o.x1
                    )));
                }
                (
                    Block::new(o.x0, o.y0, line, o.y1),
                    Block::new(line + 1, o.y0, o.x1, o.y1),
                )
            }
            Axis::Horizontal => {
                if line < o.y0 || line >= o.y1 {
                    return Err(Error::UnsupportedCut(format!(
                        "horizontal line {line} is not strictly inside rows {}..{}",
                        o.y0, o.y1
                    )));
                }
                (
                    Block::new(o.x0, o.y0, o.x1, line),
                    Block::new(o.x0, line + 1, o.x1, o.y1),
                )
            }
        };
        let piece = |b: Block| -> Result<Placed> {
            let r = match self.hole {
                Some(h) => Region::with_hole(b, h),
                None => Region::block(b),
            };
            r.recognize()
        };
        Ok((piece(lo)?, piece(hi)?))
    }

    /// Identifies the region as a canonical shape seen through a frame.
    pub fn recognize(&self) -> Result<Placed> {
        let mut outer = self.outer;
        let mut hole = self
            .hole
            .map(|h| h.intersect(&outer))
            .filter(|h| !h.is_empty());
        if let Some(h) = hole {
            // A hole spanning a full row or column band shrinks the outer block.
            let full_w = h.x0 == outer.x0 && h.x1 == outer.x1;
            let full_h = h.y0 == outer.y0 && h.y1 == outer.y1;
            if full_w && full_h {
                return Err(Error::UnsupportedCut("empty region".into()));
            }
            if full_w && h.y0 == outer.y0 {
                outer.y0 = h.y1 + 1;
                hole = None;
            } else if full_w && h.y1 == outer.y1 {
                outer.y1 = h.y0 - 1;
                hole = None;
            } else if full_h && h.x0 == outer.x0 {
                outer.x0 = h.x1 + 1;
                hole = None;
            } else if full_h && h.x1 == outer.x1 {
                outer.x1 = h.x0 - 1;
                hole = None;
            } else if full_w || full_h {
                return Err(Error::UnsupportedCut("hole disconnects the region".into()));
            }
        }
        if outer.is_empty() {
            return Err(Error::UnsupportedCut("empty region".into()));
        }
        let Some(h) = hole else {
            let shape = Shape::Rect {
                m: outer.width(),
                n: outer.height(),
            };
            return Ok(Placed {
                shape,
                frame: Frame::identity_at(outer.x0, outer.y0, outer.width(), outer.height()),
            });
        };
        for orient in Orient::ALL {
            let (w, hgt) = if orient.swap {
                (outer.height(), outer.width())
            } else {
                (outer.width(), outer.height())
            };
            let frame = Frame {
                ox: outer.x0,
                oy: outer.y0,
                w,
                h: hgt,
                orient,
            };
            let p = frame.to_local(c(h.x0, h.y0));
            let q = frame.to_local(c(h.x1, h.y1));
            let lh = Block::new(p.x.min(q.x), p.y.min(q.y), p.x.max(q.x), p.y.max(q.y));
            let touches_right = lh.x1 == w;
            let touches_left = lh.x0 == 1;
            let touches_top = lh.y0 == 1;
            let touches_bottom = lh.y1 == hgt;
            let k = lh.width();
            let l = lh.height();
            if touches_right && touches_top && !touches_left && !touches_bottom {
                let shape = Shape::l_shape(w, hgt, k, l)?;
                return Ok(Placed { shape, frame });
            }
            if touches_right && !touches_left && !touches_top && !touches_bottom {
                let shape = Shape::c_shape_nlc(w, hgt, k, l, lh.y0 - 1)?;
                return Ok(Placed { shape, frame });
            }
        }
        Err(Error::UnsupportedCut(
            "hole does not touch the outer boundary".into(),
        ))
    }
}

/// An element of the dihedral group of the square, acting on a `w x h`
/// canonical frame: first the optional reflections, then the optional
/// transposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Orient {
    pub swap: bool,
    pub fx: bool,
    pub fy: bool,
}

impl Orient {
    pub const IDENTITY: Orient = Orient {
        swap: false,
        fx: false,
        fy: false,
    };

    pub const ALL: [Orient; 8] = {
        let mut all = [Orient::IDENTITY; 8];
        let mut i = 0;
        while i < 8 {
            all[i] = Orient {
                swap: i & 4 != 0,
                fx: i & 1 != 0,
                fy: i & 2 != 0,
            };
            i += 1;
        }
        all
    };
}

/// Maps a piece's canonical coordinates into its parent frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    pub ox: i32,
    pub oy: i32,
    /// Canonical width of the piece.
    pub w: i32,
    /// Canonical height of the piece.
    pub h: i32,
    pub orient: Orient,
}

impl Frame {
    pub fn identity(w: i32, h: i32) -> Frame {
        Frame::identity_at(1, 1, w, h)
    }

    pub fn identity_at(ox: i32, oy: i32, w: i32, h: i32) -> Frame {
        Frame {
            ox,
            oy,
            w,
            h,
            orient: Orient::IDENTITY,
        }
    }

    /// A symmetry of a `w x h` frame onto itself (or its transpose).
    pub fn symmetry(w: i32, h: i32, orient: Orient) -> Frame {
        Frame {
            ox: 1,
            oy: 1,
            w,
            h,
            orient,
        }
    }

    #[inline]
    pub fn to_global(&self, v: Coord) -> Coord {
        let x = if self.orient.fx {
            self.w + 1 - v.x
        } else {
            v.x
        };
        let y = if self.orient.fy {
            self.h + 1 - v.y
        } else {
            v.y
        };
        let (gx, gy) = if self.orient.swap { (y, x) } else { (x, y) };
        c(gx + self.ox - 1, gy + self.oy - 1)
    }

    #[inline]
    pub fn to_local(&self, g: Coord) -> Coord {
        let gx = g.x - self.ox + 1;
        let gy = g.y - self.oy + 1;
        let (x, y) = if self.orient.swap { (gy, gx) } else { (gx, gy) };
        let x = if self.orient.fx { self.w + 1 - x } else { x };
        let y = if self.orient.fy { self.h + 1 - y } else { y };
        c(x, y)
    }

    pub fn is_identity(&self) -> bool {
        self.ox == 1 && self.oy == 1 && self.orient == Orient::IDENTITY
    }

    /// Which parent-frame side a canonical side lands on.
    pub fn side_to_global(&self, side: Side) -> Side {
        let flipped = match side {
            Side::Left if self.orient.fx => Side::Right,
            Side::Right if self.orient.fx => Side::Left,
            Side::Top if self.orient.fy => Side::Bottom,
            Side::Bottom if self.orient.fy => Side::Top,
            s => s,
        };
        if self.orient.swap {
            match flipped {
                Side::Left => Side::Top,
                Side::Right => Side::Bottom,
                Side::Top => Side::Left,
                Side::Bottom => Side::Right,
            }
        } else {
            flipped
        }
    }

    pub fn side_to_local(&self, side: Side) -> Side {
        Side::ALL
            .into_iter()
            .find(|&s| self.side_to_global(s) == side)
            .expect("frame sides form a bijection")
    }
}

/// A canonical shape positioned inside a parent frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placed {
    pub shape: Shape,
    pub frame: Frame,
}

impl Placed {
    pub fn contains(&self, g: Coord) -> bool {
        self.shape.contains(self.frame.to_local(g))
    }

    /// Vertices in parent coordinates.
    pub fn vertices(&self) -> Vec<Coord> {
        let mut vs: Vec<Coord> = self
            .shape
            .vertices()
            .into_iter()
            .map(|v| self.frame.to_global(v))
            .collect();
        vs.sort_unstable();
        vs
    }

    pub fn to_local(&self, g: Coord) -> Coord {
        self.frame.to_local(g)
    }

    pub fn to_global(&self, v: Coord) -> Coord {
        self.frame.to_global(v)
    }
}
