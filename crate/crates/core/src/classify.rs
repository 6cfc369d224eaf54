//! Closed-form forbidden-condition predicates on canonical shapes.
//!
//! Everything here is O(1). The traversal-based predicates on [`Region`]
//! are the ground truth; tests compare the two exhaustively on small shapes.
//!
//! [`Region`]: crate::geom::Region

use crate::cond::Condition;
use crate::geom::{c, Coord, Shape};

fn is_pair(s: Coord, t: Coord, p: Coord, q: Coord) -> bool {
    (s == p && t == q) || (s == q && t == p)
}

/// Both endpoints share column `x` and occupy rows `y` and `y + 1`.
fn vertical_pair(s: Coord, t: Coord) -> Option<(i32, i32)> {
    (s.x == t.x && (s.y - t.y).abs() == 1).then(|| (s.x, s.y.min(t.y)))
}

/// Both endpoints share row `y` and occupy columns `x` and `x + 1`.
fn horizontal_pair(s: Coord, t: Coord) -> Option<(i32, i32)> {
    (s.y == t.y && (s.x - t.x).abs() == 1).then(|| (s.x.min(t.x), s.y))
}

pub fn is_cut_vertex(shape: &Shape, v: Coord) -> bool {
    match *shape {
        Shape::Rect { m, n } => (n == 1 && 1 < v.x && v.x < m) || (m == 1 && 1 < v.y && v.y < n),
        Shape::L { m, n, k, l } => {
            let a = m - k;
            (a == 1 && v.x == 1 && (2..=l).contains(&v.y))
                || (n - l == 1 && v.y == n && (a + 1..m).contains(&v.x))
        }
        Shape::C { m, n, k, l, c } => {
            let (a, d) = (m - k, n - l - c);
            (a == 1 && v.x == 1 && (c + 1..=c + l).contains(&v.y))
                || (c == 1 && v.y == 1 && (a + 1..m).contains(&v.x))
                || (d == 1 && v.y == n && (a + 1..m).contains(&v.x))
        }
    }
}

/// Is `{s, t}` a vertex cut? Only meaningful when neither endpoint is a cut
/// vertex on its own; [`f1`] combines the two.
pub(crate) fn is_cut_pair_of_non_cut(shape: &Shape, s: Coord, t: Coord) -> bool {
    match *shape {
        Shape::Rect { m, n } => {
            (n == 2 && m >= 3 && s.x == t.x && 1 < s.x && s.x < m)
                || (m == 2 && n >= 3 && s.y == t.y && 1 < s.y && s.y < n)
        }
        Shape::L { m, n, k, l } => {
            let (a, b) = (m - k, n - l);
            let size = m * n - k * l;
            if let Some(y) = row_pair(s, t) {
                if a == 2 && (2..=l).contains(&y) {
                    return true;
                }
                if a == 1 && y == l + 1 && size > l + 2 {
                    return true;
                }
                if m == 2 && (l + 1..n).contains(&y) {
                    return true;
                }
            }
            if let Some((x, y)) = vertical_pair(s, t) {
                if b == 2 && y == n - 1 && (a + 1..m).contains(&x) {
                    return true;
                }
                if n == 2 && (2..=a).contains(&x) {
                    return true;
                }
            }
            b == 1 && is_pair(s, t, c(a, l), c(a, n)) && size > k + 2
        }
        Shape::C { m, n, k, l, c: cc } => {
            let (a, d) = (m - k, n - l - cc);
            if let Some(y) = row_pair(s, t) {
                if a == 2 && (cc + 1..=cc + l).contains(&y) {
                    return true;
                }
                if a == 1 && ((y == cc && m * cc > 2) || (y == cc + l + 1 && m * d > 2)) {
                    return true;
                }
                if m == 2 && ((2..=cc).contains(&y) || (cc + l + 1..n).contains(&y)) {
                    return true;
                }
            }
            if let Some((x, y)) = vertical_pair(s, t) {
                if (a + 1..m).contains(&x) && ((cc == 2 && y == 1) || (d == 2 && y == n - 1)) {
                    return true;
                }
            }
            (cc == 1 && is_pair(s, t, c(a, 1), c(a, 2)))
                || (d == 1 && is_pair(s, t, c(a, n - 1), c(a, n)))
        }
    }
}

/// `{s, t} = {(1, y), (2, y)}` for some row `y`.
fn row_pair(s: Coord, t: Coord) -> Option<i32> {
    horizontal_pair(s, t)
        .filter(|&(x, _)| x == 1)
        .map(|(_, y)| y)
}

/// (F1): `s` or `t` is a cut vertex, or `{s, t}` is a vertex cut.
pub fn f1(shape: &Shape, s: Coord, t: Coord) -> bool {
    is_cut_vertex(shape, s) || is_cut_vertex(shape, t) || is_cut_pair_of_non_cut(shape, s, t)
}

/// Vertices of degree one.
pub fn degree_one_vertices(shape: &Shape) -> Vec<Coord> {
    let mut out = Vec::new();
    match *shape {
        Shape::Rect { m, n } => {
            if n == 1 && m >= 2 {
                out.extend([c(1, 1), c(m, 1)]);
            } else if m == 1 && n >= 2 {
                out.extend([c(1, 1), c(1, n)]);
            }
        }
        Shape::L { m, n, k, l } => {
            if m - k == 1 && l >= 2 {
                out.push(c(1, 1));
            }
            if n - l == 1 && k >= 2 {
                out.push(c(m, n));
            }
        }
        Shape::C { m, n, k, l, c: cc } => {
            if cc == 1 && k >= 2 {
                out.push(c(m, 1));
            }
            if n - l - cc == 1 && k >= 2 {
                out.push(c(m, n));
            }
        }
    }
    out
}

/// (F3): a degree-one vertex other than `s` and `t`.
pub fn f3(shape: &Shape, s: Coord, t: Coord) -> bool {
    degree_one_vertices(shape)
        .into_iter()
        .any(|w| w != s && w != t)
}

/// (F4) in the orientation where the narrow arm is the single column `x = 1`.
fn f4_oriented(m: i32, n: i32, k: i32, l: i32, s: Coord, t: Coord) -> bool {
    m - k == 1
        && n - l == 2
        && l == 1
        && k >= 2
        && (is_pair(s, t, c(1, 2), c(2, 3)) || is_pair(s, t, c(1, 3), c(2, 2)))
}

/// Reflection across the anti-diagonal, mapping `L(m,n;k,l)` onto `L(n,m;l,k)`.
pub(crate) fn anti(m: i32, n: i32, v: Coord) -> Coord {
    c(n + 1 - v.y, m + 1 - v.x)
}

/// (F4), tested in both orientations of the L-shape.
pub fn f4(m: i32, n: i32, k: i32, l: i32, s: Coord, t: Coord) -> bool {
    f4_oriented(m, n, k, l, s, t) || f4_oriented(n, m, l, k, anti(m, n, s), anti(m, n, t))
}

/// (F7) for a canonical C-shape.
pub fn f7(m: i32, n: i32, k: i32, l: i32, cc: i32, s: Coord, t: Coord) -> bool {
    let (a, d) = (m - k, n - l - cc);
    m == 3
        && a == 2
        && ((cc == 1 && (is_pair(s, t, c(1, 1), c(2, 2)) || is_pair(s, t, c(1, 2), c(2, 1))))
            || (d == 1
                && (is_pair(s, t, c(1, n), c(2, n - 1)) || is_pair(s, t, c(1, n - 1), c(2, n)))))
}

/// The three (F8) patterns on a C with `n = 3`, `c = d = 1`, keyed to the
/// column `col` just left of the notch. With `col = m - 1` (so `k = 1`) this
/// is exactly (F8); the longest-path table reuses it with `col = a` for
/// wider notches.
pub(crate) fn f8_patterns(a: i32, col: i32, s: Coord, t: Coord) -> Option<Condition> {
    for (s, t) in [(s, t), (t, s)] {
        if a >= 2 && s.x == col && t.x == col && (s.y - t.y).abs() == 2 {
            return Some(Condition::F8_1);
        }
        if a == 2 && s.x == 1 && t.x == 2 && (s.y - t.y).abs() == 2 {
            return Some(Condition::F8_2);
        }
        if a > 2 && s.x < col && t == c(col, 2) {
            return Some(Condition::F8_3);
        }
    }
    None
}

pub fn f8(m: i32, n: i32, k: i32, l: i32, cc: i32, s: Coord, t: Coord) -> Option<Condition> {
    if n == 3 && k == 1 && cc == 1 && n - l - cc == 1 {
        f8_patterns(m - k, m - 1, s, t)
    } else {
        None
    }
}

/// (F9): waist of width one and both endpoints on the same side of it.
pub fn f9(m: i32, k: i32, l: i32, cc: i32, s: Coord, t: Coord) -> bool {
    m - k == 1 && ((s.y <= cc && t.y <= cc) || (s.y > cc + l && t.y > cc + l))
}

/// All forbidden conditions for a Hamiltonian `(s, t)`-path. Empty means
/// such a path exists.
pub fn hp_conditions(shape: &Shape, s: Coord, t: Coord) -> Vec<Condition> {
    let mut out = Vec::new();
    if s == t {
        // A one-vertex graph is its own Hamiltonian path; anything larger
        // cannot start and end at the same vertex.
        if shape.size() > 1 {
            out.push(Condition::F1);
        }
        return out;
    }
    if f1(shape, s, t) {
        out.push(Condition::F1);
    }
    match *shape {
        Shape::Rect { .. } => {}
        Shape::L { m, n, k, l } => {
            if f3(shape, s, t) {
                out.push(Condition::F3);
            }
            if f4(m, n, k, l, s, t) {
                out.push(Condition::F4);
            }
        }
        Shape::C { m, n, k, l, c: cc } => {
            if f3(shape, s, t) {
                out.push(Condition::F3);
            }
            if f7(m, n, k, l, cc, s, t) {
                out.push(Condition::F7);
            }
            if let Some(f) = f8(m, n, k, l, cc, s, t) {
                out.push(f);
            }
            if f9(m, k, l, cc, s, t) {
                out.push(Condition::F9);
            }
        }
    }
    out
}

pub fn hp_exists(shape: &Shape, s: Coord, t: Coord) -> bool {
    hp_conditions(shape, s, t).is_empty()
}

/// The condition ruling out a Hamiltonian cycle, if any. The triangle
/// `L(2,2;1,1)` has no cycle of length at least four but matches no
/// condition; callers handle it separately.
pub fn hc_condition(shape: &Shape) -> Option<Condition> {
    match *shape {
        Shape::Rect { .. } => None,
        Shape::L { .. } => (!degree_one_vertices(shape).is_empty()).then_some(Condition::F5),
        Shape::C { m, k, .. } => {
            (m - k == 1 || !degree_one_vertices(shape).is_empty()).then_some(Condition::F6)
        }
    }
}

/// Does the shape have a Hamiltonian cycle?
pub fn hc_exists(shape: &Shape) -> bool {
    match *shape {
        Shape::Rect { m, n } => m >= 2 && n >= 2,
        Shape::L { m: 2, n: 2, .. } => false,
        _ => hc_condition(shape).is_none(),
    }
}
