//! Rectangular supergrid graphs `R(m, n)`.

use crate::classify;
use crate::cond::Condition;
use crate::error::{Error, Result};
use crate::geom::{c, Block, Coord, Shape, Side};
use crate::path::{Cycle, Path};
use crate::small::Edge;
use crate::solve;

fn dims(shape: &Shape) -> Result<(i32, i32)> {
    match *shape {
        Shape::Rect { m, n } => Ok((m, n)),
        _ => Err(Error::Precondition(format!("{shape} is not a rectangle"))),
    }
}

/// Number of boundary edges of `R(m, n)`: `2(m - 1) + 2(n - 1)` for
/// `m, n >= 2`.
pub fn boundary_edge_count(m: i32, n: i32) -> usize {
    match (m, n) {
        (1, 1) => 0,
        (1, n) => (n - 1) as usize,
        (m, 1) => (m - 1) as usize,
        (m, n) => (2 * (m - 1) + 2 * (n - 1)) as usize,
    }
}

/// The boundary edges of one side of `R(m, n)`, in order along the side.
pub fn side_edges(m: i32, n: i32, side: Side) -> Vec<Edge> {
    let pts = Block::new(1, 1, m, n).side_points(side);
    pts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Does the walk use at least one edge of every side?
fn touches_all_sides(m: i32, n: i32, edges: &[Edge]) -> bool {
    let on = |side: Side, e: &Edge| match side {
        Side::Top => e.0.y == 1 && e.1.y == 1,
        Side::Bottom => e.0.y == n && e.1.y == n,
        Side::Left => e.0.x == 1 && e.1.x == 1,
        Side::Right => e.0.x == m && e.1.x == m,
    };
    Side::ALL
        .iter()
        .all(|&side| edges.iter().any(|e| on(side, e)))
}

/// A Hamiltonian cycle of a `w x h` rectangle whose left, bottom and right
/// sides are flat, in the frame where the concave side is the top.
fn concave_top_cycle(w: i32, h: i32) -> Result<Vec<Coord>> {
    if w == 2 || h == 2 {
        // Thin rectangles only have the perimeter.
        let b = Block::new(1, 1, w, h);
        let mut out: Vec<Coord> = b.side_points(Side::Left);
        out.extend((2..=w).map(|x| c(x, h)));
        out.extend((1..h).rev().map(|y| c(w, y)));
        out.extend((2..w).rev().map(|x| c(x, 1)));
        return Ok(out);
    }
    let inner_w = w - 2;
    let inner_h = h - 1;
    if inner_w == 1 && inner_h > 2 {
        return Err(Error::Precondition(
            "a concave face on a side of three vertices needs the other side to be at most three"
                .into(),
        ));
    }
    let mut out: Vec<Coord> = (1..=h).map(|y| c(1, y)).collect();
    out.extend((2..=w).map(|x| c(x, h)));
    out.extend((1..h).rev().map(|y| c(w, y)));
    // Columns 2..w-1 of rows 1..h-1 remain, entered next to (w, 1) and left
    // next to (1, 1).
    let column = |x: i32, down: bool| -> Vec<Coord> {
        if down {
            (1..=inner_h).map(|y| c(x, y)).collect()
        } else {
            (1..=inner_h).rev().map(|y| c(x, y)).collect()
        }
    };
    if inner_w % 2 == 0 {
        for (j, x) in (2..w).rev().enumerate() {
            out.extend(column(x, j % 2 == 0));
        }
        return Ok(out);
    }
    if inner_w == 1 {
        out.extend([c(2, 2), c(2, 1)]);
        return Ok(out);
    }
    for (j, x) in (5..w).rev().enumerate() {
        out.extend(column(x, j % 2 == 0));
    }
    // Columns 2..4: down column 4, zig-zag rows h-1..3 over columns 3 and 2,
    // then the 2 x 2 block in rows 1..2.
    out.extend(column(4, true));
    for (j, y) in (3..=inner_h).rev().enumerate() {
        if j % 2 == 0 {
            out.extend([c(3, y), c(2, y)]);
        } else {
            out.extend([c(2, y), c(3, y)]);
        }
    }
    out.extend([c(3, 2), c(3, 1), c(2, 2), c(2, 1)]);
    Ok(out)
}

/// A Hamiltonian cycle of `R(m, n)` whose faces on the three sides other
/// than `concave_on` are flat (the cycle contains every boundary edge of
/// those sides).
///
/// Fails for thin rectangles, and when `concave_on` is a side of three
/// vertices while the other side is longer than three.
pub fn hc_rect(shape: &Shape, concave_on: Side) -> Result<Cycle> {
    let (m, n) = dims(shape)?;
    if m < 2 || n < 2 {
        return Err(Error::NoCycle(
            "a rectangle of width or height one has no cycle",
        ));
    }
    let (w, h) = match concave_on {
        Side::Top | Side::Bottom => (m, n),
        Side::Left | Side::Right => (n, m),
    };
    let to_global = |v: Coord| match concave_on {
        Side::Top => v,
        Side::Bottom => c(v.x, n + 1 - v.y),
        Side::Left => c(v.y, v.x),
        Side::Right => c(m + 1 - v.y, v.x),
    };
    let local = concave_top_cycle(w, h)?;
    let cycle = Cycle::new(local.into_iter().map(to_global).collect())?;
    cycle.validate_hamiltonian(shape)?;
    Ok(cycle)
}

/// (F2): the endpoint pairs for which no Hamiltonian path of `R(m, n)`
/// uses the edge `(w, z) = ((1,1), (2,1))`.
pub fn f2(n: i32, s: Coord, t: Coord) -> bool {
    let pair = |p: Coord, q: Coord| (s == p && t == q) || (s == q && t == p);
    let (w, z) = (c(1, 1), c(2, 1));
    if n == 2 {
        pair(w, z) || pair(c(1, 1), c(2, 2)) || pair(c(2, 1), c(1, 2))
    } else {
        n >= 3 && pair(w, z)
    }
}

fn check_hp_request(shape: &Shape, s: Coord, t: Coord) -> Result<()> {
    shape.check_pair(s, t)?;
    if classify::f1(shape, s, t) {
        return Err(Error::Forbidden(vec![Condition::F1]));
    }
    Ok(())
}

/// A Hamiltonian `(s, t)`-path through `forced` that also uses a boundary
/// edge of every side when it can.
fn canonical_hp(shape: &Shape, s: Coord, t: Coord, forced: &[Edge]) -> Result<Path> {
    let (m, n) = dims(shape)?;
    let r = shape.region();
    let first = solve::region_path(&r, s, t, forced)?;
    if m < 2 || n < 2 || touches_all_sides(m, n, &first.edges().collect::<Vec<_>>()) {
        return Ok(first);
    }
    let free = |e: &Edge| ![e.0, e.1].iter().any(|v| *v == s || *v == t);
    let candidates: Vec<Vec<Edge>> = Side::ALL
        .iter()
        .map(|&side| {
            let all = side_edges(m, n, side);
            let preferred: Vec<Edge> = all.iter().copied().filter(free).collect();
            if preferred.is_empty() {
                all
            } else {
                preferred
            }
        })
        .collect();
    for pick in 0..3 {
        let mut with: Vec<Edge> = forced.to_vec();
        for list in &candidates {
            let i = match pick {
                0 => list.len() / 2,
                1 => 0,
                _ => list.len() - 1,
            };
            if !with.contains(&list[i]) {
                with.push(list[i]);
            }
        }
        if let Ok(p) = solve::region_path(&r, s, t, &with) {
            return Ok(p);
        }
    }
    Ok(first)
}

/// A Hamiltonian `(s, t)`-path of `R(m, n)`. For `m, n >= 3` the path uses
/// at least one boundary edge of every side.
pub fn hp_rect(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    check_hp_request(shape, s, t)?;
    canonical_hp(shape, s, t, &[])
}

/// A Hamiltonian `(s, t)`-path of `R(m, n)` (`m >= 3`, `n >= 2`) through
/// `(z, f) = ((2,1), (3,1))` when (F2) holds and through
/// `(w, z) = ((1,1), (2,1))` otherwise.
pub fn hp_rect_forced_edge(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    let (m, n) = dims(shape)?;
    if m < 3 || n < 2 {
        return Err(Error::Precondition(
            "the forced-edge path needs m >= 3 and n >= 2".into(),
        ));
    }
    check_hp_request(shape, s, t)?;
    let edge = if f2(n, s, t) {
        (c(2, 1), c(3, 1))
    } else {
        (c(1, 1), c(2, 1))
    };
    let p = canonical_hp(shape, s, t, &[edge])?;
    if !p.contains_edge(edge.0, edge.1) {
        return Err(Error::Construction(format!(
            "path misses the forced edge {}-{}",
            edge.0, edge.1
        )));
    }
    Ok(p)
}

/// A Hamiltonian `(s, t)`-path of `R(m, 3)` containing both edges of the
/// last column, for `s` and `t` outside that column.
pub fn hp_3rect_tail(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    let (m, n) = dims(shape)?;
    if n != 3 || m < 3 {
        return Err(Error::Precondition(
            "the tail path needs R(m, 3) with m >= 3".into(),
        ));
    }
    shape.check_pair(s, t)?;
    if s.x == m || t.x == m {
        return Err(Error::Precondition(format!(
            "{s} and {t} must avoid the last column"
        )));
    }
    let tail = [(c(m, 1), c(m, 2)), (c(m, 2), c(m, 3))];
    let p = solve::region_path(&shape.region(), s, t, &tail)?;
    if !tail.iter().all(|e| p.contains_edge(e.0, e.1)) {
        return Err(Error::Construction("path misses a last-column edge".into()));
    }
    Ok(p)
}

/// A longest `(s, t)`-path of `R(m, n)`.
pub fn longest_rect(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    dims(shape)?;
    Ok(solve::longest(shape, s, t)?.path)
}

/// The longest-path length of `R(m, n)` in closed form.
pub fn upper_bound_rect(m: i32, n: i32, s: Coord, t: Coord) -> usize {
    let (m, n, s, t) = if n > m {
        (n, m, c(s.y, s.x), c(t.y, t.x))
    } else {
        (m, n, s, t)
    };
    let v = if n == 1 {
        (t.x - s.x).abs() + 1
    } else if n == 2 && s.x == t.x && 1 < s.x && s.x < m {
        (2 * s.x).max(2 * (m - s.x + 1))
    } else {
        m * n
    };
    v as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn side_covered(cyc: &Cycle, m: i32, n: i32, side: Side) -> bool {
        side_edges(m, n, side)
            .iter()
            .all(|e| cyc.contains_edge(e.0, e.1))
    }

    #[test]
    fn concave_cycles_are_flat_elsewhere() {
        for m in 2..=9 {
            for n in 2..=9 {
                let shape = Shape::rect(m, n).unwrap();
                for side in Side::ALL {
                    let along = match side {
                        Side::Top | Side::Bottom => m,
                        _ => n,
                    };
                    let across = m + n - along;
                    let cyc = hc_rect(&shape, side);
                    if along == 3 && across > 3 {
                        assert!(cyc.is_err());
                        continue;
                    }
                    let cyc = cyc.unwrap();
                    for other in Side::ALL {
                        if other != side {
                            assert!(
                                side_covered(&cyc, m, n, other),
                                "R({m},{n}) {side:?} {other:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn thin_rectangles_have_no_cycle() {
        assert!(matches!(
            hc_rect(&Shape::rect(5, 1).unwrap(), Side::Top),
            Err(Error::NoCycle(_))
        ));
        assert_eq!(
            hc_rect(&Shape::rect(2, 2).unwrap(), Side::Left)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn forced_edge_follows_f2() {
        assert!(f2(2, c(1, 1), c(2, 1)));
        assert!(f2(3, c(2, 1), c(1, 1)));
        assert!(!f2(3, c(3, 2), c(4, 3)));
        let p = hp_rect_forced_edge(&Shape::rect(3, 2).unwrap(), c(1, 1), c(2, 1)).unwrap();
        assert!(p.contains_edge(c(2, 1), c(3, 1)));
    }
}
