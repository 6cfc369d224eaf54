//! ASCII and SVG drawings of a shape with an optional path.

use std::collections::HashSet;
use std::fmt::Write;

use supergrid::{Coord, Shape};

/// What to draw on top of the shape.
#[derive(Clone, Debug, Default)]
pub struct Overlay<'a> {
    pub path: Option<&'a [Coord]>,
    pub closed: bool,
    pub s: Option<Coord>,
    pub t: Option<Coord>,
}

impl Overlay<'_> {
    fn edges(&self) -> Vec<(Coord, Coord)> {
        let Some(p) = self.path else {
            return Vec::new();
        };
        let mut out: Vec<(Coord, Coord)> = p.windows(2).map(|w| (w[0], w[1])).collect();
        if self.closed && p.len() > 2 {
            out.push((p[p.len() - 1], p[0]));
        }
        out
    }
}

fn key(e: (Coord, Coord)) -> (Coord, Coord) {
    (e.0.min(e.1), e.0.max(e.1))
}

/// Boundary edges of the shape and how many of them the path uses.
pub fn boundary_summary(shape: &Shape, overlay: &Overlay) -> (usize, usize) {
    let used: HashSet<_> = overlay.edges().into_iter().map(key).collect();
    let boundary = shape.boundary_edges();
    let on_path = boundary.iter().filter(|&&e| used.contains(&key(e))).count();
    (boundary.len(), on_path)
}

fn summary_line(shape: &Shape, overlay: &Overlay) -> String {
    let (total, used) = boundary_summary(shape, overlay);
    if overlay.path.is_some() {
        format!("boundary edges: {total} (path uses {used})")
    } else {
        format!("boundary edges: {total}")
    }
}

/// Vertices on a doubled grid: `o` vertex, `#` removed block, `S`/`T`
/// endpoints, and `-`, `|`, `\`, `/`, `X` for path edges.
pub fn ascii(shape: &Shape, overlay: &Overlay) -> String {
    let (w, h) = (2 * shape.width() - 1, 2 * shape.height() - 1);
    let mut grid = vec![vec![' '; w as usize]; h as usize];
    let cell = |v: Coord| ((2 * v.y - 2) as usize, (2 * v.x - 2) as usize);
    for y in 1..=shape.height() {
        for x in 1..=shape.width() {
            let v = Coord::new(x, y);
            let (r, c) = cell(v);
            grid[r][c] = if shape.contains(v) { 'o' } else { '#' };
        }
    }
    for (u, v) in overlay.edges() {
        let (r, c) = ((u.y + v.y - 2) as usize, (u.x + v.x - 2) as usize);
        let mark = match (v.x - u.x, v.y - u.y) {
            (_, 0) => '-',
            (0, _) => '|',
            (dx, dy) if dx == dy => '\\',
            _ => '/',
        };
        grid[r][c] = match (grid[r][c], mark) {
            ('\\', '/') | ('/', '\\') => 'X',
            _ => mark,
        };
    }
    for (end, ch) in [(overlay.s, 'S'), (overlay.t, 'T')] {
        if let Some(v) = end {
            let (r, c) = cell(v);
            grid[r][c] = ch;
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&summary_line(shape, overlay));
    out.push('\n');
    out
}

const SCALE: i32 = 40;
const MARGIN: i32 = 24;

fn px(v: i32) -> i32 {
    MARGIN + (v - 1) * SCALE
}

/// Vertices as circles, path edges as bold segments, the removed block
/// shaded, endpoints filled.
pub fn svg(shape: &Shape, overlay: &Overlay) -> String {
    let (w, h) = (px(shape.width()) + MARGIN, px(shape.height()) + MARGIN + 24);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, "  <title>{shape}</title>");
    if let Some(hole) = shape.hole() {
        let half = SCALE / 2;
        let _ = writeln!(
            out,
            r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#d0d0d0"/>"##,
            px(hole.x0) - half,
            px(hole.y0) - half,
            (hole.x1 - hole.x0 + 1) * SCALE,
            (hole.y1 - hole.y0 + 1) * SCALE
        );
    }
    for (u, v) in overlay.edges() {
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="4" stroke-linecap="round"/>"#,
            px(u.x),
            px(u.y),
            px(v.x),
            px(v.y)
        );
    }
    for v in shape.vertices() {
        let fill = match (overlay.s, overlay.t) {
            (Some(s), _) if s == v => "#1f77b4",
            (_, Some(t)) if t == v => "#d62728",
            _ => "white",
        };
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="6" fill="{fill}" stroke="black" stroke-width="1.5"/>"#,
            px(v.x),
            px(v.y)
        );
    }
    let _ = writeln!(
        out,
        r#"  <text x="{MARGIN}" y="{}" font-family="monospace" font-size="14">{}</text>"#,
        h - 8,
        summary_line(shape, overlay)
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_marks_edges_and_hole() {
        let shape = Shape::l_shape(2, 2, 1, 1).unwrap();
        let path = [Coord::new(1, 1), Coord::new(2, 2), Coord::new(1, 2)];
        let overlay = Overlay {
            path: Some(&path),
            s: Some(path[0]),
            t: Some(path[2]),
            ..Overlay::default()
        };
        assert_eq!(
            ascii(&shape, &overlay),
            "S #\n \\\nT-o\nboundary edges: 2 (path uses 1)\n"
        );
    }

    #[test]
    fn rectangle_reports_its_outline() {
        let shape = Shape::rect(10, 8).unwrap();
        assert_eq!(boundary_summary(&shape, &Overlay::default()), (32, 0));
        assert!(svg(&shape, &Overlay::default()).contains("boundary edges: 32"));
    }
}
