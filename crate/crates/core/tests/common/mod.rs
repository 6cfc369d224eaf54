#![allow(dead_code)]

use supergrid::{Coord, Shape};

/// Every rectangle with `mn <= max_mn`.
pub fn rects(max_mn: i32) -> Vec<Shape> {
    let mut out = Vec::new();
    for m in 1..=max_mn {
        for n in 1..=max_mn / m {
            out.push(Shape::rect(m, n).unwrap());
        }
    }
    out
}

/// Every L-shape within a 24 by 24 box whose vertex count satisfies `keep(mn, size)`.
pub fn l_shapes(keep: impl Fn(i32, i32) -> bool) -> Vec<Shape> {
    let mut out = Vec::new();
    for m in 2..=24 {
        for n in 2..=24 {
            for k in 1..m {
                for l in 1..n {
                    if keep(m * n, m * n - k * l) {
                        out.push(Shape::l_shape(m, n, k, l).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// Every C-shape within a 24 by 24 box whose vertex count satisfies `keep(mn, size)`.
pub fn c_shapes(keep: impl Fn(i32, i32) -> bool) -> Vec<Shape> {
    let mut out = Vec::new();
    for m in 2..=24 {
        for n in 3..=24 {
            for k in 1..m {
                for l in 1..n - 1 {
                    for c in 1..n - l {
                        if keep(m * n, m * n - k * l) {
                            out.push(Shape::c_shape(m, n, k, l, c, n - l - c).unwrap());
                        }
                    }
                }
            }
        }
    }
    out
}

/// All ordered pairs of distinct vertices.
pub fn pairs(shape: &Shape) -> Vec<(Coord, Coord)> {
    let vs = shape.vertices();
    let mut out = Vec::with_capacity(vs.len() * vs.len());
    for &s in &vs {
        for &t in &vs {
            if s != t {
                out.push((s, t));
            }
        }
    }
    out
}
