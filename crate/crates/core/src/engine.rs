//! Recursive Hamiltonian path and cycle construction on regions of the
//! R/L/C family (an outer block minus at most one block).
//!
//! A region is reduced by two moves, both straight cuts:
//!
//! * peel: the part beyond the cut holds neither endpoint. Each of its pieces
//!   gets a Hamiltonian cycle, the remainder gets a path through one edge
//!   parallel to a cycle edge across the cut, and the two are spliced.
//! * split: the cut separates `s` from `t`. A connector edge `(p, q)` across
//!   the cut joins an `(s, p)`-path of one side to a `(q, t)`-path of the other.
//!
//! Candidates are screened with the O(1) classifiers before any recursion, so
//! the work per level is bounded. Regions too small to be worth cutting, or
//! where every cut fails, go to the exhaustive search in [`crate::small`].

use crate::classify;
use crate::error::{Error, Result};
use crate::geom::{adjacent, c, Block, Coord, Region, Side};
use crate::links::Links;
use crate::small::{self, Edge};

/// Regions at most this large are solved by search outright.
const SEARCH_BELOW: usize = 12;
/// Regions at most this large fall back to search when every cut fails.
const SEARCH_FALLBACK: usize = 36;
const SEARCH_NODES: usize = 200_000;

pub(crate) struct Engine {
    pub links: Links,
}

/// Is a Hamiltonian `(s, t)`-path of `r` possible, ignoring forced edges?
/// `None` when `r` is not an R/L/C region.
pub(crate) fn feasible(r: &Region, s: Coord, t: Coord) -> Option<bool> {
    let p = r.recognize().ok()?;
    if !p.contains(s) || !p.contains(t) {
        return Some(false);
    }
    Some(classify::hp_exists(&p.shape, p.to_local(s), p.to_local(t)))
}

/// Is a Hamiltonian cycle of `r` possible?
pub(crate) fn cycle_feasible(r: &Region) -> bool {
    r.len() >= 4
        && r.recognize()
            .map(|p| classify::hc_exists(&p.shape))
            .unwrap_or(false)
}

fn inside(r: &Region, e: &Edge) -> bool {
    r.contains(e.0) && r.contains(e.1)
}

fn same_edge(a: &Edge, u: Coord, v: Coord) -> bool {
    (a.0 == u && a.1 == v) || (a.0 == v && a.1 == u)
}

/// Forced edges of `r` that touch `v`.
fn forced_degree(forced: &[Edge], v: Coord) -> usize {
    forced.iter().filter(|e| e.0 == v || e.1 == v).count()
}

fn bbox(points: &[Coord]) -> Block {
    let mut b = Block::new(i32::MAX, i32::MAX, i32::MIN, i32::MIN);
    for p in points {
        b.x0 = b.x0.min(p.x);
        b.y0 = b.y0.min(p.y);
        b.x1 = b.x1.max(p.x);
        b.y1 = b.y1.max(p.y);
    }
    b
}

/// The two blocks on either side of a cut. `side` names where the first
/// block lies; `line` is its last row or column.
fn cut_blocks(o: Block, side: Side, line: i32) -> (Block, Block) {
    match side {
        Side::Top => (
            Block::new(o.x0, o.y0, o.x1, line),
            Block::new(o.x0, line + 1, o.x1, o.y1),
        ),
        Side::Bottom => (
            Block::new(o.x0, line, o.x1, o.y1),
            Block::new(o.x0, o.y0, o.x1, line - 1),
        ),
        Side::Left => (
            Block::new(o.x0, o.y0, line, o.y1),
            Block::new(line + 1, o.y0, o.x1, o.y1),
        ),
        Side::Right => (
            Block::new(line, o.y0, o.x1, o.y1),
            Block::new(o.x0, o.y0, line - 1, o.y1),
        ),
    }
}

fn sub_region(b: Block, hole: Option<Block>) -> Region {
    match hole {
        Some(h) => Region::with_hole(b, h),
        None => Region::block(b),
    }
}

/// Connected pieces of `b` minus `hole`, as plain regions. A hole that spans
/// the block across one axis leaves two pieces.
fn pieces(b: Block, hole: Option<Block>) -> Vec<Region> {
    let r = sub_region(b, hole);
    let Some(h) = r.hole else {
        return vec![r];
    };
    if h.x0 == b.x0 && h.x1 == b.x1 && h.y0 > b.y0 && h.y1 < b.y1 {
        return vec![
            Region::block(Block::new(b.x0, b.y0, b.x1, h.y0 - 1)),
            Region::block(Block::new(b.x0, h.y1 + 1, b.x1, b.y1)),
        ];
    }
    if h.y0 == b.y0 && h.y1 == b.y1 && h.x0 > b.x0 && h.x1 < b.x1 {
        return vec![
            Region::block(Block::new(b.x0, b.y0, h.x0 - 1, b.y1)),
            Region::block(Block::new(h.x1 + 1, b.y0, b.x1, b.y1)),
        ];
    }
    vec![r]
}

/// Unit step pointing from the peeled part into the remainder.
fn inward(side: Side) -> (i32, i32) {
    match side {
        Side::Top => (0, 1),
        Side::Bottom => (0, -1),
        Side::Left => (1, 0),
        Side::Right => (-1, 0),
    }
}

/// A splice site: cycle edge `(alpha, beta)` in the peeled piece, parallel
/// path edge `(u, v)` in the remainder.
#[derive(Clone, Copy, Debug)]
struct Site {
    alpha: Coord,
    beta: Coord,
    u: Coord,
    v: Coord,
}

/// Up to three splice sites along the cut facing `piece`, preferring ones
/// that avoid `avoid`.
fn sites(piece: &Region, rest: &Region, side: Side, line: i32, avoid: &[Coord]) -> Vec<Site> {
    let (dx, dy) = inward(side);
    let along = |i: i32| match side {
        Side::Top | Side::Bottom => c(i, line),
        Side::Left | Side::Right => c(line, i),
    };
    let b = piece.outer;
    let range = match side {
        Side::Top | Side::Bottom => b.x0..b.x1,
        Side::Left | Side::Right => b.y0..b.y1,
    };
    let mut all = Vec::new();
    for i in range {
        let (alpha, beta) = (along(i), along(i + 1));
        let (u, v) = (c(alpha.x + dx, alpha.y + dy), c(beta.x + dx, beta.y + dy));
        if piece.contains(alpha) && piece.contains(beta) && rest.contains(u) && rest.contains(v) {
            all.push(Site { alpha, beta, u, v });
        }
    }
    let clean: Vec<Site> = all
        .iter()
        .copied()
        .filter(|s| !avoid.contains(&s.u) && !avoid.contains(&s.v))
        .collect();
    let pool = if clean.is_empty() { all } else { clean };
    let mut out = Vec::new();
    if let Some(&f) = pool.first() {
        out.push(f);
    }
    if pool.len() > 2 {
        out.push(pool[pool.len() / 2]);
    }
    if pool.len() > 1 {
        out.push(pool[pool.len() - 1]);
    }
    out
}

/// Perimeter cycle of a block two wide or two tall.
fn perimeter(b: Block) -> Vec<Coord> {
    let mut out = Vec::with_capacity(2 * (b.width() + b.height()) as usize);
    for x in b.x0..=b.x1 {
        out.push(c(x, b.y0));
    }
    for y in b.y0 + 1..=b.y1 {
        out.push(c(b.x1, y));
    }
    for x in (b.x0..b.x1).rev() {
        out.push(c(x, b.y1));
    }
    for y in (b.y0 + 1..b.y1).rev() {
        out.push(c(b.x0, y));
    }
    out
}

fn on_perimeter(b: Block, e: &Edge) -> bool {
    let (u, v) = *e;
    let straight = (u.x == v.x && (u.y - v.y).abs() == 1) || (u.y == v.y && (u.x - v.x).abs() == 1);
    straight
        && ((u.x == v.x && (u.x == b.x0 || u.x == b.x1))
            || (u.y == v.y && (u.y == b.y0 || u.y == b.y1)))
}

impl Engine {
    pub fn new(frame: Block) -> Engine {
        Engine {
            links: Links::new(frame),
        }
    }

    fn write_walk(&mut self, verts: &[Coord], closed: bool) -> Result<()> {
        self.links.add_walk(verts, closed)
    }

    /// Writes a Hamiltonian `(s, t)`-path of `r` containing every edge of
    /// `forced` into the link store. On error the store is unchanged.
    pub fn hp(&mut self, r: &Region, s: Coord, t: Coord, forced: &[Edge]) -> Result<()> {
        let cp = self.links.checkpoint();
        let out = self.hp_inner(r, s, t, forced);
        if out.is_err() {
            self.links.rollback(cp);
        }
        out
    }

    fn hp_inner(&mut self, r: &Region, s: Coord, t: Coord, forced: &[Edge]) -> Result<()> {
        if !r.contains(s) || !r.contains(t) {
            return Err(Error::Construction(format!(
                "{s} or {t} outside the region"
            )));
        }
        let n = r.len();
        if s == t {
            return if n == 1 {
                Ok(())
            } else {
                Err(Error::Construction(
                    "s = t in a region with several vertices".into(),
                ))
            };
        }
        if forced.iter().any(|e| !inside(r, e) || !adjacent(e.0, e.1))
            || forced_degree(forced, s) > 1
            || forced_degree(forced, t) > 1
        {
            return Err(Error::Construction(
                "forced edges cannot be honoured".into(),
            ));
        }
        match feasible(r, s, t) {
            Some(true) => {}
            Some(false) => {
                return Err(Error::Construction(format!("no Hamiltonian {s}-{t} path")));
            }
            None => return Err(Error::UnsupportedCut("region is not R, L or C".into())),
        }
        if n <= SEARCH_BELOW {
            return self.search(r, s, t, forced);
        }
        if r.hole.is_none() && (r.outer.width() == 1 || r.outer.height() == 1) {
            // A single row or column: the endpoints are its two ends.
            let verts = if r.outer.width() == 1 {
                let dir = if t.y > s.y { 1 } else { -1 };
                (0..n as i32)
                    .map(|i| c(s.x, s.y + dir * i))
                    .collect::<Vec<_>>()
            } else {
                let dir = if t.x > s.x { 1 } else { -1 };
                (0..n as i32)
                    .map(|i| c(s.x + dir * i, s.y))
                    .collect::<Vec<_>>()
            };
            return self.write_walk(&verts, false);
        }
        if self.try_peels(r, s, t, forced)? {
            return Ok(());
        }
        if self.try_splits(r, s, t, forced)? {
            return Ok(());
        }
        if n <= SEARCH_FALLBACK {
            return self.search(r, s, t, forced);
        }
        Err(Error::Construction(format!(
            "no decomposition found for {s}-{t} in {:?}",
            r
        )))
    }

    fn search(&mut self, r: &Region, s: Coord, t: Coord, forced: &[Edge]) -> Result<()> {
        match small::hp(r, s, t, forced, SEARCH_NODES) {
            Some(p) => self.write_walk(&p, false),
            None => Err(Error::Construction(format!("search found no {s}-{t} path"))),
        }
    }

    /// Writes a Hamiltonian cycle of `r` through `close` and every edge of
    /// `forced`.
    pub fn hc(&mut self, r: &Region, forced: &[Edge], close: Edge) -> Result<()> {
        let b = r.outer;
        if r.hole.is_none()
            && ((b.width() == 2 && b.height() >= 2) || (b.height() == 2 && b.width() >= 2))
            && on_perimeter(b, &close)
            && forced.iter().all(|e| on_perimeter(b, e))
        {
            return self.write_walk(&perimeter(b), true);
        }
        let rest: Vec<Edge> = forced
            .iter()
            .copied()
            .filter(|e| !same_edge(e, close.0, close.1))
            .collect();
        let cp = self.links.checkpoint();
        self.hp(r, close.0, close.1, &rest)?;
        if let Err(e) = self.links.add(close.0, close.1) {
            self.links.rollback(cp);
            return Err(e);
        }
        Ok(())
    }

    fn splice(&mut self, site: &Site) -> Result<()> {
        self.links.remove(site.u, site.v)?;
        self.links.remove(site.alpha, site.beta)?;
        self.links.add(site.u, site.alpha)?;
        self.links.add(site.v, site.beta)
    }

    fn peel_lines(r: &Region, side: Side, pb: Block) -> Vec<i32> {
        let o = r.outer;
        let mut lines = Vec::new();
        let h = r.hole;
        match side {
            Side::Top => {
                lines.push(o.y0 + 1);
                lines.push(pb.y0 - 1);
                if let Some(h) = h {
                    lines.extend([h.y0 - 1, h.y1]);
                }
                lines.retain(|&y| y > o.y0 && y < pb.y0);
            }
            Side::Bottom => {
                lines.push(o.y1 - 1);
                lines.push(pb.y1 + 1);
                if let Some(h) = h {
                    lines.extend([h.y1 + 1, h.y0]);
                }
                lines.retain(|&y| y < o.y1 && y > pb.y1);
            }
            Side::Left => {
                lines.push(o.x0 + 1);
                lines.push(pb.x0 - 1);
                if let Some(h) = h {
                    lines.extend([h.x0 - 1, h.x1]);
                }
                lines.retain(|&x| x > o.x0 && x < pb.x0);
            }
            Side::Right => {
                lines.push(o.x1 - 1);
                lines.push(pb.x1 + 1);
                if let Some(h) = h {
                    lines.extend([h.x1 + 1, h.x0]);
                }
                lines.retain(|&x| x < o.x1 && x > pb.x1);
            }
        }
        let mut seen = Vec::new();
        lines.retain(|l| {
            let fresh = !seen.contains(l);
            seen.push(*l);
            fresh
        });
        lines
    }

    fn try_peels(&mut self, r: &Region, s: Coord, t: Coord, forced: &[Edge]) -> Result<bool> {
        let pb = bbox(&[s, t]);
        for side in Side::ALL {
            for line in Self::peel_lines(r, side, pb) {
                if self.try_peel(r, s, t, forced, side, line)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn try_peel(
        &mut self,
        r: &Region,
        s: Coord,
        t: Coord,
        forced: &[Edge],
        side: Side,
        line: i32,
    ) -> Result<bool> {
        let (kb, rb) = cut_blocks(r.outer, side, line);
        let rest = sub_region(rb, r.hole);
        if rest.is_empty() || !rest.contains(s) || !rest.contains(t) {
            return Ok(false);
        }
        let parts = pieces(kb, r.hole);
        if parts.iter().any(|p| p.is_empty() || !cycle_feasible(p)) {
            return Ok(false);
        }
        if feasible(&rest, s, t) != Some(true) {
            return Ok(false);
        }
        let mut rest_forced = Vec::new();
        let mut part_forced = vec![Vec::new(); parts.len()];
        for e in forced {
            if inside(&rest, e) {
                rest_forced.push(*e);
            } else if let Some(i) = parts.iter().position(|p| inside(p, e)) {
                part_forced[i].push(*e);
            } else {
                return Ok(false);
            }
        }
        let avoid = [s, t];
        let all_sites: Vec<Vec<Site>> = parts
            .iter()
            .map(|p| sites(p, &rest, side, line, &avoid))
            .collect();
        if all_sites.iter().any(|v| v.is_empty()) {
            return Ok(false);
        }
        let tries = all_sites.iter().map(|v| v.len()).max().unwrap_or(0);
        for i in 0..tries {
            let chosen: Vec<Site> = all_sites.iter().map(|v| v[i.min(v.len() - 1)]).collect();
            // The path edge must survive as a real path edge: it may not be
            // forced to stay, and two sites may not share it.
            if chosen
                .iter()
                .any(|st| rest_forced.iter().any(|e| same_edge(e, st.u, st.v)))
            {
                continue;
            }
            let mut rf = rest_forced.clone();
            rf.extend(chosen.iter().map(|st| (st.u, st.v)));
            if rf
                .iter()
                .any(|e| forced_degree(&rf, e.0) > 2 || forced_degree(&rf, e.1) > 2)
            {
                continue;
            }
            let cp = self.links.checkpoint();
            let attempt = (|| -> Result<()> {
                self.hp(&rest, s, t, &rf)?;
                for (j, p) in parts.iter().enumerate() {
                    self.hc(p, &part_forced[j], (chosen[j].alpha, chosen[j].beta))?;
                    self.splice(&chosen[j])?;
                }
                Ok(())
            })();
            match attempt {
                Ok(()) => return Ok(true),
                Err(_) => self.links.rollback(cp),
            }
        }
        Ok(false)
    }

    fn try_splits(&mut self, r: &Region, s: Coord, t: Coord, forced: &[Edge]) -> Result<bool> {
        let dx = (s.x - t.x).abs();
        let dy = (s.y - t.y).abs();
        let order = if dy >= dx {
            [true, false]
        } else {
            [false, true]
        };
        for horizontal in order {
            if self.try_split_axis(r, s, t, forced, horizontal)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn try_split_axis(
        &mut self,
        r: &Region,
        s: Coord,
        t: Coord,
        forced: &[Edge],
        horizontal: bool,
    ) -> Result<bool> {
        // Work in (major, minor) = (cut axis coordinate, coordinate along the cut).
        let major = |v: Coord| if horizontal { v.y } else { v.x };
        let minor = |v: Coord| if horizontal { v.x } else { v.y };
        let mk = |maj: i32, min: i32| if horizontal { c(min, maj) } else { c(maj, min) };
        let (ms, mt) = (major(s), major(t));
        if ms == mt {
            return Ok(false);
        }
        let (lo, hi) = (ms.min(mt), ms.max(mt));
        let o = r.outer;
        let (o_lo, o_hi) = if horizontal {
            (o.x0, o.x1)
        } else {
            (o.y0, o.y1)
        };
        let mut lines = vec![lo + 1, lo, hi - 2, hi - 1, (lo + hi) / 2];
        if let Some(h) = r.hole {
            let (h0, h1) = if horizontal {
                (h.y0, h.y1)
            } else {
                (h.x0, h.x1)
            };
            lines.extend([h0 - 1, h0, h1, h1 - 1, h0 + 1]);
        }
        let mut seen_lines = Vec::new();
        lines.retain(|&y| {
            let ok = y >= lo && y < hi && !seen_lines.contains(&y);
            seen_lines.push(y);
            ok
        });
        let s_first = ms < mt;
        for y in lines {
            let (first, second) = if horizontal {
                cut_blocks(o, Side::Top, y)
            } else {
                cut_blocks(o, Side::Left, y)
            };
            let (ab, bb) = if s_first {
                (first, second)
            } else {
                (second, first)
            };
            let a = sub_region(ab, r.hole);
            let b = sub_region(bb, r.hole);
            if a.recognize().is_err() || b.recognize().is_err() {
                continue;
            }
            let (ya, yb) = if s_first { (y, y + 1) } else { (y + 1, y) };
            let crossing: Vec<Edge> = forced
                .iter()
                .copied()
                .filter(|e| !inside(&a, e) && !inside(&b, e))
                .collect();
            if crossing.len() > 1 {
                continue;
            }
            let fa: Vec<Edge> = forced.iter().copied().filter(|e| inside(&a, e)).collect();
            let fb: Vec<Edge> = forced.iter().copied().filter(|e| inside(&b, e)).collect();
            let mut conns: Vec<(Coord, Coord)> = Vec::new();
            if let Some(&(e0, e1)) = crossing.first() {
                if a.contains(e0) {
                    conns.push((e0, e1));
                } else {
                    conns.push((e1, e0));
                }
            } else {
                let mut xs = vec![o_lo, o_lo + 1, o_hi - 1, o_hi];
                for v in [s, t] {
                    xs.extend([minor(v) - 1, minor(v), minor(v) + 1]);
                }
                if let Some(h) = r.hole {
                    let (h0, h1) = if horizontal {
                        (h.x0, h.x1)
                    } else {
                        (h.y0, h.y1)
                    };
                    xs.extend([h0 - 2, h0 - 1, h0, h1, h1 + 1, h1 + 2]);
                }
                let mut seen_x = Vec::new();
                for x in xs {
                    if x < o_lo || x > o_hi || seen_x.contains(&x) {
                        continue;
                    }
                    seen_x.push(x);
                    for d in [0, -1, 1] {
                        conns.push((mk(ya, x), mk(yb, x + d)));
                    }
                }
            }
            for (p, q) in conns {
                if !a.contains(p) || !b.contains(q) {
                    continue;
                }
                if (p == s) != (a.len() == 1) || (q == t) != (b.len() == 1) {
                    continue;
                }
                if forced_degree(&fa, p) > 1 || forced_degree(&fb, q) > 1 {
                    continue;
                }
                if feasible(&a, s, p) != Some(true) || feasible(&b, q, t) != Some(true) {
                    continue;
                }
                let cp = self.links.checkpoint();
                let attempt = (|| -> Result<()> {
                    self.hp(&a, s, p, &fa)?;
                    self.hp(&b, q, t, &fb)?;
                    self.links.add(p, q)
                })();
                match attempt {
                    Ok(()) => return Ok(true),
                    Err(_) => self.links.rollback(cp),
                }
            }
        }
        Ok(false)
    }
}

/// Builds a Hamiltonian `(s, t)`-path of `r` through `forced`.
pub(crate) fn hamiltonian_path(
    r: &Region,
    s: Coord,
    t: Coord,
    forced: &[Edge],
) -> Result<Vec<Coord>> {
    let mut e = Engine::new(r.outer);
    e.hp(r, s, t, forced)?;
    Ok(e.links.walk_path(s))
}

/// Builds a Hamiltonian cycle of `r` through `close` and `forced`.
pub(crate) fn hamiltonian_cycle(r: &Region, forced: &[Edge], close: Edge) -> Result<Vec<Coord>> {
    let mut e = Engine::new(r.outer);
    e.hc(r, forced, close)?;
    Ok(e.links.walk_cycle(close.0))
}
