//! Longest `(s, t)`-paths on R/L/C regions.
//!
//! [`plan`] evaluates the bound table for a region and returns a [`Plan`]: a
//! small tree describing a path that attains the bound. Evaluating the plan
//! costs time proportional to its depth, not to the region size, so the
//! bound alone is cheap. [`build`] then realises the plan with the engine.
//!
//! When the endpoints admit a Hamiltonian path the bound is the region size.
//! Otherwise the table cases each name a smaller region (or a few candidate
//! regions) whose own longest path, possibly extended by a straight segment,
//! a spliced vertex or a merged cycle, is optimal. Those smaller regions are
//! planned recursively in their own canonical frames.

use crate::classify::{self, anti};
use crate::cond::{BoundCase, CBoundCase, LBoundCase, RectCase};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::geom::{adjacent, c, Block, Coord, Frame, Region, Shape};
use crate::small::Edge;

/// How to build a path.
#[derive(Clone, Debug)]
pub(crate) enum Plan {
    /// A Hamiltonian path of the region.
    Hp { region: Region, s: Coord, t: Coord },
    /// The straight segment between two vertices of a row or column.
    Line(Coord, Coord),
    /// An explicit short walk.
    Walk(Vec<Coord>),
    /// Two vertex-disjoint paths joined by the edge `joint`.
    Concat {
        first: Box<Plan>,
        second: Box<Plan>,
        joint: Edge,
    },
    /// `v` spliced into the edge `edge` of the inner path.
    Insert {
        inner: Box<Plan>,
        v: Coord,
        edge: Edge,
    },
    /// A Hamiltonian cycle of `piece` merged into the inner path through one
    /// of the listed sites `[alpha, beta, u, v]`: the cycle edge
    /// `(alpha, beta)` and the path edge `(u, v)` are replaced by
    /// `(u, alpha)` and `(v, beta)`.
    Merge {
        inner: Box<Plan>,
        piece: Region,
        sites: Vec<[Coord; 4]>,
    },
}

#[derive(Clone, Debug)]
pub(crate) struct Planned {
    pub case: BoundCase,
    pub value: usize,
    pub plan: Plan,
}

/// Vertices of a straight segment, in order from `a` to `b`.
fn segment(a: Coord, b: Coord) -> Vec<Coord> {
    debug_assert!(a.x == b.x || a.y == b.y, "{a} and {b} are not aligned");
    let len = (b.x - a.x).abs().max((b.y - a.y).abs());
    let (dx, dy) = ((b.x - a.x).signum(), (b.y - a.y).signum());
    (0..=len).map(|i| c(a.x + dx * i, a.y + dy * i)).collect()
}

fn on_segment(a: Coord, b: Coord, v: Coord) -> bool {
    let (x0, x1) = (a.x.min(b.x), a.x.max(b.x));
    let (y0, y1) = (a.y.min(b.y), a.y.max(b.y));
    (x0..=x1).contains(&v.x) && (y0..=y1).contains(&v.y)
}

fn same_edge(e: &Edge, u: Coord, v: Coord) -> bool {
    (e.0 == u && e.1 == v) || (e.0 == v && e.1 == u)
}

impl Plan {
    fn covers(&self, v: Coord) -> bool {
        match self {
            Plan::Hp { region, .. } => region.contains(v),
            Plan::Line(a, b) => on_segment(*a, *b, v),
            Plan::Walk(vs) => vs.contains(&v),
            Plan::Concat { first, second, .. } => first.covers(v) || second.covers(v),
            Plan::Insert { inner, v: x, .. } => *x == v || inner.covers(v),
            Plan::Merge { inner, piece, .. } => piece.contains(v) || inner.covers(v),
        }
    }
}

/// Maps the coordinates of one variant of a canonical shape to the parent
/// frame: an optional anti-diagonal reflection (L-shapes) or vertical flip
/// (C-shapes), then the recognised frame.
#[derive(Clone, Copy)]
enum Twist {
    Plain,
    /// Variant coordinates live in `L(n, m; l, k)` for a canonical `L(m, n; k, l)`.
    Anti {
        m: i32,
        n: i32,
    },
    Flip {
        n: i32,
    },
}

#[derive(Clone, Copy)]
struct View {
    frame: Frame,
    twist: Twist,
}

impl View {
    fn pt(&self, v: Coord) -> Coord {
        let w = match self.twist {
            Twist::Plain => v,
            Twist::Anti { m, n } => anti(n, m, v),
            Twist::Flip { n } => c(v.x, n + 1 - v.y),
        };
        self.frame.to_global(w)
    }

    fn block(&self, b: Block) -> Block {
        let p = self.pt(c(b.x0, b.y0));
        let q = self.pt(c(b.x1, b.y1));
        Block::new(p.x.min(q.x), p.y.min(q.y), p.x.max(q.x), p.y.max(q.y))
    }

    fn region(&self, outer: Block, hole: Option<Block>) -> Region {
        match hole {
            Some(h) => Region::with_hole(self.block(outer), self.block(h)),
            None => Region::block(self.block(outer)),
        }
    }

    fn line(&self, a: Coord, b: Coord) -> Plan {
        Plan::Line(self.pt(a), self.pt(b))
    }

    fn sub(&self, r: Region, s: Coord, t: Coord) -> Result<Planned> {
        plan(&r, self.pt(s), self.pt(t))
    }
}

fn blk(x0: i32, y0: i32, x1: i32, y1: i32) -> Block {
    Block::new(x0, y0, x1, y1)
}

fn is_pair(s: Coord, t: Coord, p: Coord, q: Coord) -> bool {
    (s == p && t == q) || (s == q && t == p)
}

fn done(case: BoundCase, p: Planned) -> Option<Planned> {
    Some(Planned { case, ..p })
}

fn simple(case: BoundCase, value: usize, plan: Plan) -> Option<Planned> {
    Some(Planned { case, value, plan })
}

/// The best of several candidates; the first wins ties.
fn best(case: BoundCase, options: Vec<Planned>) -> Option<Planned> {
    let mut it = options.into_iter();
    let mut top = it.next()?;
    for p in it {
        if p.value > top.value {
            top = p;
        }
    }
    done(case, top)
}

fn concat(first: Planned, second: Planned, joint: Edge) -> Planned {
    debug_assert!(adjacent(joint.0, joint.1));
    Planned {
        case: first.case,
        value: first.value + second.value,
        plan: Plan::Concat {
            first: Box::new(first.plan),
            second: Box::new(second.plan),
            joint,
        },
    }
}

fn single(v: Coord) -> Planned {
    Planned {
        case: BoundCase::Rect(RectCase::Line),
        value: 1,
        plan: Plan::Line(v, v),
    }
}

/// Plans a longest `(s, t)`-path of `r`, which must be an R/L/C region.
pub(crate) fn plan(r: &Region, s: Coord, t: Coord) -> Result<Planned> {
    if !r.contains(s) {
        return Err(Error::OutOfShape(s));
    }
    if !r.contains(t) {
        return Err(Error::OutOfShape(t));
    }
    if s == t {
        return Ok(single(s));
    }
    let placed = r.recognize()?;
    let (ls, lt) = (placed.to_local(s), placed.to_local(t));
    let shape = placed.shape;
    if classify::hp_exists(&shape, ls, lt) {
        let case = match shape {
            Shape::Rect { .. } => BoundCase::Rect(RectCase::Full),
            Shape::L { .. } => BoundCase::L(LBoundCase::C0),
            Shape::C { .. } => BoundCase::C(CBoundCase::C1),
        };
        return Ok(Planned {
            case,
            value: r.len(),
            plan: Plan::Hp { region: *r, s, t },
        });
    }
    let frame = placed.frame;
    let found = match shape {
        Shape::Rect { m, n } => rect_case(
            View {
                frame,
                twist: Twist::Plain,
            },
            m,
            n,
            ls,
            lt,
        )?,
        Shape::L { m, n, k, l } => {
            let plain = View {
                frame,
                twist: Twist::Plain,
            };
            let twisted = View {
                frame,
                twist: Twist::Anti { m, n },
            };
            let (as_, at) = (anti(m, n, ls), anti(m, n, lt));
            let variants = [
                (plain, m, n, k, l, ls, lt),
                (plain, m, n, k, l, lt, ls),
                (twisted, n, m, l, k, as_, at),
                (twisted, n, m, l, k, at, as_),
            ];
            let mut found = None;
            for (v, m, n, k, l, s, t) in variants {
                found = l_case(v, m, n, k, l, s, t)?;
                if found.is_some() {
                    break;
                }
            }
            found
        }
        Shape::C { m, n, k, l, c: cc } => {
            let plain = View {
                frame,
                twist: Twist::Plain,
            };
            let flipped = View {
                frame,
                twist: Twist::Flip { n },
            };
            let d = n - l - cc;
            let fl = |v: Coord| c(v.x, n + 1 - v.y);
            let variants = [
                (plain, cc, ls, lt),
                (plain, cc, lt, ls),
                (flipped, d, fl(ls), fl(lt)),
                (flipped, d, fl(lt), fl(ls)),
            ];
            let mut found = None;
            for (v, cc, s, t) in variants {
                found = c_case(v, m, n, k, l, cc, s, t)?;
                if found.is_some() {
                    break;
                }
            }
            found
        }
    };
    found.ok_or_else(|| {
        Error::Construction(format!("no bound case matches {shape} with {ls}, {lt}"))
    })
}

/// Rectangles without a Hamiltonian `(s, t)`-path are thin.
fn rect_case(v: View, m: i32, n: i32, s: Coord, t: Coord) -> Result<Option<Planned>> {
    let line = BoundCase::Rect(RectCase::Line);
    let cut = BoundCase::Rect(RectCase::Cut);
    if n == 1 {
        return Ok(simple(line, ((t.x - s.x).abs() + 1) as usize, v.line(s, t)));
    }
    if m == 1 {
        return Ok(simple(line, ((t.y - s.y).abs() + 1) as usize, v.line(s, t)));
    }
    if n == 2 && s.x == t.x {
        let x = s.x;
        let left = v.sub(v.region(blk(1, 1, x, 2), None), s, t)?;
        let right = v.sub(v.region(blk(x, 1, m, 2), None), s, t)?;
        return Ok(best(cut, vec![left, right]));
    }
    if m == 2 && s.y == t.y {
        let y = s.y;
        let upper = v.sub(v.region(blk(1, 1, 2, y), None), s, t)?;
        let lower = v.sub(v.region(blk(1, y, 2, n), None), s, t)?;
        return Ok(best(cut, vec![upper, lower]));
    }
    Ok(None)
}

/// One variant of the L-shape table: endpoints in the given order, arm of
/// width `a = m - k` on the left.
fn l_case(v: View, m: i32, n: i32, k: i32, l: i32, s: Coord, t: Coord) -> Result<Option<Planned>> {
    use LBoundCase::*;
    let (a, b) = (m - k, n - l);
    let hole = Some(blk(a + 1, 1, m, l));
    let case = BoundCase::L;
    if a == 1 && l > 1 && s.y <= l && t.y <= l {
        return Ok(simple(
            case(FC1),
            ((t.y - s.y).abs() + 1) as usize,
            v.line(s, t),
        ));
    }
    if a == 1 && b == 1 && l > 1 && s.y <= l && t.x > 1 {
        let plan = Plan::Concat {
            first: Box::new(v.line(s, c(1, n))),
            second: Box::new(v.line(c(2, n), t)),
            joint: (v.pt(c(1, n)), v.pt(c(2, n))),
        };
        return Ok(simple(case(FC2), (n - s.y + t.x) as usize, plan));
    }
    if a == 1 && b == 1 && l > 1 && s.x == 1 && t.x == 1 && s.y.max(t.y) == n {
        let y0 = s.y.min(t.y);
        if k > 1 || y0 > 1 {
            // Down the arm to row l, across to (2, n), back to (1, n).
            let plan = Plan::Concat {
                first: Box::new(v.line(c(1, y0), c(1, l))),
                second: Box::new(Plan::Walk(vec![v.pt(c(2, n)), v.pt(c(1, n))])),
                joint: (v.pt(c(1, l)), v.pt(c(2, n))),
            };
            return Ok(simple(case(FC3), (n - y0 + 2) as usize, plan));
        }
    }
    if a == 1 && b == 1 && l > 1 && k == 1 && is_pair(s, t, c(1, n), c(2, n)) {
        let walk = Plan::Walk(vec![v.pt(c(1, n)), v.pt(c(1, n - 1)), v.pt(c(2, n))]);
        return Ok(simple(case(FC3), 3, walk));
    }
    if b > 1 && a == 1 && l > 1 {
        let below = s.y > l && t.y > l;
        let shape = Shape::L { m, n, k, l };
        let straddle = (s.y <= l) != (t.y <= l);
        if (below && !classify::is_cut_pair_of_non_cut(&shape, s, t)) || straddle {
            let np = if s.y >= l && t.y >= l {
                l - 1
            } else {
                s.y.min(t.y) - 1
            };
            let r = v.region(blk(1, np + 1, m, n), hole);
            return Ok(done(case(FC4), v.sub(r, s, t)?));
        }
    }
    if b > 1 && a == 1 && m > 2 && s == c(1, l + 1) && t == c(2, l + 1) {
        let r = v.region(blk(1, l + 1, m, n), None);
        return Ok(done(case(FC5), v.sub(r, s, t)?));
    }
    if l > 1 && b > 1 && a == 2 && s.y == t.y && (2..=l).contains(&s.y) {
        let y = s.y;
        let arm = v.sub(v.region(blk(1, 1, 2, y), None), s, t)?;
        let rest = v.sub(v.region(blk(1, y, m, n), hole), s, t)?;
        return Ok(best(case(FC6a), vec![arm, rest]));
    }
    if m == 2 && k == 1 && l == 1 && b > 1 && s.y == t.y && (l + 1..n).contains(&s.y) {
        let y = s.y;
        let upper = v.sub(v.region(blk(1, 1, 2, y), hole), s, t)?;
        let lower = v.sub(v.region(blk(1, y, 2, n), None), s, t)?;
        return Ok(best(case(FC6b), vec![upper, lower]));
    }
    if k > 1 && l == 1 && a == 1 && b == 2 && s.x == t.x && (2..m).contains(&s.x) {
        let x = s.x;
        let right = v.sub(v.region(blk(x, 2, m, 3), None), s, t)?;
        let left = v.sub(v.region(blk(1, 1, x, n), hole), s, t)?;
        return Ok(best(case(FC6c), vec![right, left]));
    }
    let tall_thin = m == 2 && k == 1 && l > 1 && b > 1 && s.y == t.y && (l + 1..n).contains(&s.y);
    let wide_thin = k > 1 && l > 1 && a == 1 && b == 2 && s.x == t.x && (2..m).contains(&s.x);
    if tall_thin || wide_thin {
        let r = v.region(blk(1, l, m, n), hole);
        return Ok(done(case(FC6d), v.sub(r, s, t)?));
    }
    if classify::f4(m, n, k, l, s, t) && a == 1 && b == 2 && l == 1 {
        // The arm tip (1, 1) is dropped; the two full rows remain.
        let r = v.region(blk(1, 2, m, 3), None);
        return Ok(done(case(F4Case), v.sub(r, s, t)?));
    }
    Ok(None)
}

/// One variant of the C-shape table: endpoints in the given order, top
/// margin `cc`.
#[allow(clippy::too_many_arguments)]
fn c_case(
    v: View,
    m: i32,
    n: i32,
    k: i32,
    l: i32,
    cc: i32,
    s: Coord,
    t: Coord,
) -> Result<Option<Planned>> {
    use CBoundCase::*;
    let (a, d) = (m - k, n - l - cc);
    let hole = Some(blk(a + 1, cc + 1, m, cc + l));
    let case = BoundCase::C;
    if a == 1 {
        if s.y <= cc && t.y <= cc {
            let r = v.region(blk(1, 1, m, cc + 1), hole);
            return Ok(done(case(FC7), v.sub(r, s, t)?));
        }
        if s.y > cc && t.y > cc {
            let r = v.region(blk(1, cc + 1, m, n), hole);
            return Ok(done(case(FC7), v.sub(r, s, t)?));
        }
        if s.y <= cc {
            // Through the top rows to a connector z on row c, then down
            // through w = (1, c + 1) into the rest.
            let w = c(1, cc + 1);
            let tail = if t == w {
                single(v.pt(w))
            } else {
                v.sub(v.region(blk(1, cc + 1, m, n), hole), w, t)?
            };
            let top = v.region(blk(1, 1, m, cc), None);
            let mut options = Vec::new();
            for z in [c(1, cc), c(2, cc)] {
                if z != s {
                    let head = v.sub(top, s, z)?;
                    options.push(concat(head, tail.clone(), (v.pt(z), v.pt(w))));
                }
            }
            if s == c(1, cc) || s == c(2, cc) {
                options.push(concat(single(v.pt(s)), tail.clone(), (v.pt(s), v.pt(w))));
            }
            return Ok(best(case(FC8), options));
        }
        return Ok(None);
    }
    if cc >= 2 && d >= 2 {
        if a == 2
            && s.y == t.y
            && (cc + 1..=cc + l).contains(&s.y)
            && is_pair(s, t, c(1, s.y), c(2, s.y))
        {
            let y = s.y;
            let lower = v.sub(v.region(blk(1, y, m, n), hole), s, t)?;
            let upper = v.sub(v.region(blk(1, 1, m, y), hole), s, t)?;
            return Ok(best(case(FC9), vec![lower, upper]));
        }
        if d == 2 && k >= 2 && s.x == t.x && a < s.x && s.x < m && s.y > cc + l && t.y > cc + l {
            let x = s.x;
            let right = v.sub(v.region(blk(x, n - 1, m, n), None), s, t)?;
            // Everything left of column x + 1 except the cut-off top margin,
            // which is merged back as a cycle across column a.
            let inner = v.sub(
                v.region(blk(1, 1, x, n), Some(blk(a + 1, 1, x, cc + l))),
                s,
                t,
            )?;
            let piece = v.region(blk(a + 1, 1, m, cc), None);
            let sites = (1..cc)
                .map(|y| {
                    [
                        v.pt(c(a + 1, y)),
                        v.pt(c(a + 1, y + 1)),
                        v.pt(c(a, y)),
                        v.pt(c(a, y + 1)),
                    ]
                })
                .collect();
            let left = Planned {
                case: inner.case,
                value: inner.value + (k * cc) as usize,
                plan: Plan::Merge {
                    inner: Box::new(inner.plan),
                    piece,
                    sites,
                },
            };
            return Ok(best(case(FC10), vec![left, right]));
        }
        return Ok(None);
    }
    if cc == 1 && a >= 2 {
        let w = c(a + 1, 1);
        let in_tr = |p: Coord| p.y == 1 && p.x > a;
        let g1 = v.region(blk(1, 1, m, n), Some(blk(a + 1, 1, m, 1 + l)));
        if k > 1 && in_tr(s) && in_tr(t) {
            return Ok(simple(
                case(FC11),
                ((t.x - s.x).abs() + 1) as usize,
                v.line(s, t),
            ));
        }
        if in_tr(t) && !in_tr(s) {
            let strip = Planned {
                case: case(FC12),
                value: (t.x - a) as usize,
                plan: v.line(w, t),
            };
            let mut options = Vec::new();
            for z in [c(a, 1), c(a, 2)] {
                if z != s {
                    let head = v.sub(g1, s, z)?;
                    options.push(concat(head, strip.clone(), (v.pt(z), v.pt(w))));
                }
            }
            if s == c(a, 1) || s == c(a, 2) {
                options.push(concat(single(v.pt(s)), strip.clone(), (v.pt(s), v.pt(w))));
            }
            return Ok(best(case(FC12), options));
        }
        if in_tr(s) {
            return Ok(None);
        }
        if is_pair(s, t, c(a, 1), c(a, 2)) {
            let around = v.sub(g1, s, t)?;
            let hop = Planned {
                case: case(FC13),
                value: 3,
                plan: Plan::Walk(vec![v.pt(s), v.pt(w), v.pt(t)]),
            };
            return Ok(best(case(FC13), vec![around, hop]));
        }
        if a == 2 && s.y == t.y && (2..=1 + l).contains(&s.y) && is_pair(s, t, c(1, s.y), c(2, s.y))
        {
            let y = s.y;
            let lower = v.sub(v.region(blk(1, y, m, n), hole), s, t)?;
            let upper = v.sub(v.region(blk(1, 1, m, y), hole), s, t)?;
            return Ok(best(case(FC14), vec![lower, upper]));
        }
        if d == 2 && k > 1 && s.x == t.x && a < s.x && s.x < m && s.y >= n - 1 && t.y >= n - 1 {
            let x = s.x;
            let left = v.sub(v.region(blk(1, 1, x, n), hole), s, t)?;
            let right = v.sub(v.region(blk(x, n - 1, m, n), None), s, t)?;
            return Ok(best(case(FC15), vec![left, right]));
        }
        if a == 2 && (is_pair(s, t, c(1, 1), c(2, 2)) || is_pair(s, t, c(1, 2), c(2, 1))) {
            return Ok(done(case(FC16), v.sub(g1, s, t)?));
        }
        if n == 3 && d == 1 && classify::f8_patterns(a, a, s, t).is_some() {
            return Ok(done(case(FC17), v.sub(g1, s, t)?));
        }
        let shape = Shape::C { m, n, k, l, c: cc };
        if k > 1 && !classify::f1(&shape, s, t) {
            // The best path avoiding the top margin, with w spliced in
            // between (a, 1) and (a, 2).
            let inner = v.sub(g1, s, t)?;
            let plan = Plan::Insert {
                inner: Box::new(inner.plan),
                v: v.pt(w),
                edge: (v.pt(c(a, 1)), v.pt(c(a, 2))),
            };
            return Ok(simple(case(FC18), inner.value + 1, plan));
        }
        return Ok(None);
    }
    Ok(None)
}

/// Writes the plan's edges into the engine, honouring `forced`.
fn exec(e: &mut Engine, plan: &Plan, forced: &[Edge]) -> Result<()> {
    let refuse = || {
        Err(Error::Construction(
            "plan cannot honour a forced edge".into(),
        ))
    };
    match plan {
        Plan::Hp { region, s, t } => e.hp(region, *s, *t, forced),
        Plan::Line(a, b) => {
            let verts = segment(*a, *b);
            if forced.iter().any(|f| {
                !(on_segment(*a, *b, f.0) && on_segment(*a, *b, f.1) && adjacent(f.0, f.1))
            }) {
                return refuse();
            }
            e.links.add_walk(&verts, false)
        }
        Plan::Walk(verts) => {
            if forced
                .iter()
                .any(|f| !verts.windows(2).any(|w| same_edge(f, w[0], w[1])))
            {
                return refuse();
            }
            e.links.add_walk(verts, false)
        }
        Plan::Concat {
            first,
            second,
            joint,
        } => {
            let (mut fa, mut fb) = (Vec::new(), Vec::new());
            for f in forced {
                if same_edge(f, joint.0, joint.1) {
                    continue;
                }
                if first.covers(f.0) && first.covers(f.1) {
                    fa.push(*f);
                } else if second.covers(f.0) && second.covers(f.1) {
                    fb.push(*f);
                } else {
                    return refuse();
                }
            }
            let cp = e.links.checkpoint();
            let out = (|| {
                exec(e, first, &fa)?;
                exec(e, second, &fb)?;
                e.links.add(joint.0, joint.1)
            })();
            if out.is_err() {
                e.links.rollback(cp);
            }
            out
        }
        Plan::Insert { inner, v, edge } => {
            let mut fi = vec![*edge];
            for f in forced {
                if f.0 == *v || f.1 == *v {
                    if !(same_edge(f, *v, edge.0) || same_edge(f, *v, edge.1)) {
                        return refuse();
                    }
                } else {
                    fi.push(*f);
                }
            }
            let cp = e.links.checkpoint();
            let out = (|| {
                exec(e, inner, &fi)?;
                e.links.remove(edge.0, edge.1)?;
                e.links.add(edge.0, *v)?;
                e.links.add(*v, edge.1)
            })();
            if out.is_err() {
                e.links.rollback(cp);
            }
            out
        }
        Plan::Merge {
            inner,
            piece,
            sites,
        } => {
            let mut last = Error::Construction("no merge site".into());
            for &[alpha, beta, u, w] in sites {
                let (mut fi, mut fp) = (vec![(u, w)], Vec::new());
                let mut ok = true;
                for f in forced {
                    if piece.contains(f.0) && piece.contains(f.1) {
                        if same_edge(f, alpha, beta) {
                            ok = false;
                        }
                        fp.push(*f);
                    } else if inner.covers(f.0) && inner.covers(f.1) {
                        if same_edge(f, u, w) {
                            ok = false;
                        }
                        fi.push(*f);
                    } else if !(same_edge(f, u, alpha) || same_edge(f, w, beta)) {
                        ok = false;
                    }
                }
                if !ok {
                    continue;
                }
                let cp = e.links.checkpoint();
                let out = (|| {
                    exec(e, inner, &fi)?;
                    e.hc(piece, &fp, (alpha, beta))?;
                    e.links.remove(u, w)?;
                    e.links.remove(alpha, beta)?;
                    e.links.add(u, alpha)?;
                    e.links.add(w, beta)
                })();
                match out {
                    Ok(()) => return Ok(()),
                    Err(err) => {
                        e.links.rollback(cp);
                        last = err;
                    }
                }
            }
            Err(last)
        }
    }
}

/// Realises a plan for an `(s, t)`-path inside `frame`.
pub(crate) fn build(frame: Block, plan: &Plan, s: Coord, forced: &[Edge]) -> Result<Vec<Coord>> {
    let mut e = Engine::new(frame);
    exec(&mut e, plan, forced)?;
    Ok(e.links.walk_path(s))
}

/// Plans and builds a longest `(s, t)`-path of `r`.
pub(crate) fn longest_path(r: &Region, s: Coord, t: Coord) -> Result<(Planned, Vec<Coord>)> {
    let p = plan(r, s, t)?;
    let verts = build(r.outer, &p.plan, s, &[])?;
    if verts.len() != p.value || verts.last() != Some(&t) {
        return Err(Error::Construction(format!(
            "built {} vertices ending at {:?}, planned {} ending at {t}",
            verts.len(),
            verts.last(),
            p.value
        )));
    }
    Ok((p, verts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, Budget};
    use crate::path::Path;

    fn shapes(max_size: usize) -> Vec<Shape> {
        let mut out = Vec::new();
        for m in 1..=max_size as i32 {
            for n in 1..=max_size as i32 {
                if let Ok(s) = Shape::rect(m, n) {
                    if s.size() <= max_size {
                        out.push(s);
                    }
                }
                for k in 1..m {
                    for l in 1..n {
                        if let Ok(s) = Shape::l_shape(m, n, k, l) {
                            if s.size() <= max_size {
                                out.push(s);
                            }
                        }
                        for cc in 1..n {
                            if let Ok(s) = Shape::c_shape_nlc(m, n, k, l, cc) {
                                if s.size() <= max_size {
                                    out.push(s);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn check(shape: &Shape) {
        let budget = Budget::default();
        let r = shape.region();
        for s in shape.vertices() {
            for t in shape.vertices() {
                if s == t {
                    continue;
                }
                let (want, _) = oracle::longest(shape, s, t, &budget).unwrap();
                let (p, verts) =
                    longest_path(&r, s, t).unwrap_or_else(|e| panic!("{shape} {s} {t}: {e}"));
                assert_eq!(p.value, want, "{shape} {s} {t} case {}", p.case);
                let path = Path::new(verts).unwrap();
                path.validate_in(shape).unwrap();
                assert_eq!(path.start(), s);
                assert_eq!(path.end(), t);
            }
        }
    }

    #[test]
    fn matches_oracle_small() {
        for shape in shapes(12) {
            check(&shape);
        }
    }

    #[test]
    #[ignore]
    fn matches_oracle_18() {
        for shape in shapes(18) {
            check(&shape);
        }
    }
}
