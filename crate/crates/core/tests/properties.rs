use std::collections::BTreeSet;

use proptest::prelude::*;
use supergrid::geom::{c, Axis};
use supergrid::stitch::{find_parallel_pair, merge_cycles};
use supergrid::{classify, hamiltonian_path, longest, upper_bound, Coord, Cycle, Error, Shape};

fn shape_strategy(max_side: i32) -> impl Strategy<Value = Shape> {
    (
        0..3u8,
        1..=max_side,
        1..=max_side,
        1..max_side,
        1..max_side,
        1..max_side,
    )
        .prop_filter_map(
            "parameters out of range",
            |(kind, m, n, k, l, cc)| match kind {
                0 => Shape::rect(m, n).ok(),
                1 => Shape::l_shape(m, n, k, l).ok(),
                _ => Shape::c_shape_nlc(m, n, k, l, cc).ok(),
            },
        )
}

/// A shape plus an ordered pair of distinct vertices.
fn instance(max_side: i32) -> impl Strategy<Value = (Shape, Coord, Coord)> {
    shape_strategy(max_side)
        .prop_filter("needs two vertices", |s| s.size() >= 2)
        .prop_flat_map(|shape| {
            let n = shape.size();
            (Just(shape), 0..n, 1..n)
        })
        .prop_map(|(shape, i, j)| {
            let vs = shape.vertices();
            (shape, vs[i], vs[(i + j) % vs.len()])
        })
}

/// A symmetry of the instance that lands on another canonical shape.
fn mirrored(shape: &Shape, s: Coord, t: Coord) -> (Shape, Coord, Coord) {
    match *shape {
        Shape::Rect { m, n } => {
            let f = |v: Coord| c(v.y, m + 1 - v.x);
            (Shape::rect(n, m).unwrap(), f(s), f(t))
        }
        Shape::L { m, n, k, l } => {
            let f = |v: Coord| c(n + 1 - v.y, m + 1 - v.x);
            (Shape::l_shape(n, m, l, k).unwrap(), f(s), f(t))
        }
        Shape::C { m, n, k, l, c: top } => {
            let f = |v: Coord| c(v.x, n + 1 - v.y);
            (
                Shape::c_shape_nlc(m, n, k, l, n - l - top).unwrap(),
                f(s),
                f(t),
            )
        }
    }
}

fn degree_by_scan(shape: &Shape, v: Coord) -> usize {
    shape
        .vertices()
        .into_iter()
        .filter(|&u| supergrid::adjacent(u, v))
        .count()
}

proptest! {
    #[test]
    fn longest_paths_are_valid_and_reach_the_bound((shape, s, t) in instance(9)) {
        let found = longest(&shape, s, t).unwrap();
        found.path.validate_in(&shape).unwrap();
        prop_assert_eq!((found.path.start(), found.path.end()), (s, t));
        prop_assert_eq!(found.path.len(), found.upper_bound);
        prop_assert!(found.upper_bound <= shape.size());
        prop_assert_eq!(upper_bound(&shape, s, t).unwrap(), (found.case, found.upper_bound));
    }

    #[test]
    fn hamiltonian_paths_exist_exactly_when_unforbidden((shape, s, t) in instance(9)) {
        let conds = classify::hp_conditions(&shape, s, t);
        match hamiltonian_path(&shape, s, t) {
            Ok(p) => {
                prop_assert!(conds.is_empty());
                p.validate_hamiltonian(&shape, s, t).unwrap();
                prop_assert_eq!(longest(&shape, s, t).unwrap().upper_bound, shape.size());
            }
            Err(Error::Forbidden(got)) => {
                prop_assert_eq!(&got, &conds);
                prop_assert!(upper_bound(&shape, s, t).unwrap().1 < shape.size());
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn mirrored_instances_agree((shape, s, t) in instance(9)) {
        let (image, s2, t2) = mirrored(&shape, s, t);
        prop_assert_eq!(image.size(), shape.size());
        prop_assert_eq!(upper_bound(&shape, s, t).unwrap().1, upper_bound(&image, s2, t2).unwrap().1);
        prop_assert_eq!(
            classify::hp_conditions(&shape, s, t).is_empty(),
            classify::hp_conditions(&image, s2, t2).is_empty()
        );
        prop_assert_eq!(classify::hc_exists(&shape), classify::hc_exists(&image));
    }

    #[test]
    fn solvers_are_deterministic((shape, s, t) in instance(7)) {
        prop_assert_eq!(longest(&shape, s, t).unwrap(), longest(&shape, s, t).unwrap());
    }

    #[test]
    fn degrees_match_a_neighbour_scan(shape in shape_strategy(10)) {
        prop_assume!(shape.size() <= 100);
        for v in shape.vertices() {
            prop_assert_eq!(shape.degree(v).unwrap(), degree_by_scan(&shape, v));
        }
    }

    #[test]
    fn closed_form_cuts_match_traversal(shape in shape_strategy(8)) {
        prop_assume!(shape.size() <= 64);
        let region = shape.region();
        let vs = shape.vertices();
        for &s in &vs {
            prop_assert_eq!(classify::is_cut_vertex(&shape, s), region.is_cut_vertex(s).unwrap());
            for &t in &vs {
                if s != t {
                    prop_assert_eq!(classify::f1(&shape, s, t), region.f1_by_traversal(s, t));
                }
            }
        }
    }

    #[test]
    fn separations_partition_the_shape(shape in shape_strategy(10), vertical in any::<bool>(), at in 1..10i32) {
        let (axis, extent) = if vertical { (Axis::Vertical, shape.width()) } else { (Axis::Horizontal, shape.height()) };
        prop_assume!(at < extent);
        let Ok((a, b)) = shape.separate(axis, at) else {
            // Cuts that would leave an unrecognised piece are refused.
            return Ok(());
        };
        let left: BTreeSet<Coord> = a.vertices().into_iter().collect();
        let right: BTreeSet<Coord> = b.vertices().into_iter().collect();
        prop_assert!(left.is_disjoint(&right));
        let all: BTreeSet<Coord> = shape.vertices().into_iter().collect();
        prop_assert_eq!(left.union(&right).copied().collect::<BTreeSet<_>>(), all);
    }

    #[test]
    fn merged_rectangle_cycles_are_hamiltonian(w1 in 2..6i32, w2 in 2..6i32, h in 2..6i32) {
        // Two rectangles side by side; each cycle is found on its own block.
        let left = supergrid::hamiltonian_cycle(&Shape::rect(w1, h).unwrap()).unwrap();
        let right = supergrid::hamiltonian_cycle(&Shape::rect(w2, h).unwrap()).unwrap();
        let shifted = Cycle::new(right.vertices().iter().map(|v| c(v.x + w1, v.y)).collect()).unwrap();
        let pair = find_parallel_pair(left.vertices(), true, shifted.vertices(), true);
        prop_assert!(pair.is_some());
        let merged = merge_cycles(&left, &shifted, pair.unwrap()).unwrap();
        merged.validate_hamiltonian(&Shape::rect(w1 + w2, h).unwrap()).unwrap();
    }
}
