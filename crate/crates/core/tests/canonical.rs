mod common;

use supergrid::geom::c;
use supergrid::{rect, Coord, Cycle, Shape, Side};

/// Every edge between consecutive shape vertices on one side of the box.
fn is_flat(cyc: &Cycle, shape: &Shape, side: Side) -> bool {
    let (m, n) = (shape.width(), shape.height());
    let line: Vec<Coord> = match side {
        Side::Top => (1..=m).map(|x| c(x, 1)).collect(),
        Side::Bottom => (1..=m).map(|x| c(x, n)).collect(),
        Side::Left => (1..=n).map(|y| c(1, y)).collect(),
        Side::Right => (1..=n).map(|y| c(m, y)).collect(),
    };
    line.windows(2)
        .filter(|w| shape.contains(w[0]) && shape.contains(w[1]))
        .all(|w| cyc.contains_edge(w[0], w[1]))
}

#[test]
fn rectangle_paths_use_every_side() {
    for m in 3..=8 {
        for n in 3..=36 / m {
            let shape = Shape::rect(m, n).unwrap();
            for (s, t) in common::pairs(&shape) {
                let p = rect::hp_rect(&shape, s, t).unwrap();
                p.validate_hamiltonian(&shape, s, t).unwrap();
                for side in Side::ALL {
                    let used = rect::side_edges(m, n, side)
                        .iter()
                        .any(|e| p.contains_edge(e.0, e.1));
                    assert!(used, "{shape} {s}->{t} misses {side:?}");
                }
            }
        }
    }
}

#[test]
fn flat_faces_on_request() {
    for shape in common::l_shapes(|mn, _| mn <= 30) {
        for side in Side::ALL {
            if let Ok(cyc) = supergrid::lshape::hc_l_flat(&shape, side) {
                cyc.validate_hamiltonian(&shape).unwrap();
                assert!(is_flat(&cyc, &shape, side), "{shape} {side:?}");
            }
        }
    }
    let l = Shape::l_shape(6, 5, 3, 2).unwrap();
    for side in Side::ALL {
        assert!(is_flat(
            &supergrid::lshape::hc_l_flat(&l, side).unwrap(),
            &l,
            side
        ));
    }
    let cs = Shape::c_shape(6, 6, 3, 2, 2, 2).unwrap();
    for side in Side::ALL {
        assert!(is_flat(
            &supergrid::cshape::hc_c_flat(&cs, side).unwrap(),
            &cs,
            side
        ));
    }
}
