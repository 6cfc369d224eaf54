//! Worked instances with frozen outcomes. Values marked as exhaustive were
//! produced by the oracle and are re-checked against it here.

use supergrid::geom::c;
use supergrid::oracle::{self, Budget};
use supergrid::{
    classify, cshape, hamiltonian_cycle, hamiltonian_path, longest, lshape, rect, BoundCase,
    CBoundCase, Condition, Error, LBoundCase, RectCase, Shape, Side,
};

fn forbidden<T: std::fmt::Debug>(r: supergrid::Result<T>) -> Vec<Condition> {
    match r {
        Err(Error::Forbidden(conds)) => conds,
        other => panic!("expected a forbidden verdict, got {other:?}"),
    }
}

#[test]
fn shape_sizes_and_degrees() {
    assert_eq!(Shape::rect(3, 3).unwrap().size(), 9);
    let cs = Shape::c_shape(5, 5, 2, 2, 1, 2).unwrap();
    assert_eq!(cs.size(), 21);
    assert!(!cs.contains(c(4, 2)) && !cs.contains(c(5, 3)) && cs.contains(c(4, 4)));
    let ls = Shape::l_shape(3, 3, 2, 2).unwrap();
    assert_eq!(
        ls.vertices(),
        vec![c(1, 1), c(1, 2), c(1, 3), c(2, 3), c(3, 3)]
    );
    let r33 = Shape::rect(3, 3).unwrap();
    assert_eq!(r33.degree(c(2, 2)).unwrap(), 8);
    assert_eq!(r33.degree(c(1, 1)).unwrap(), 3);
    assert_eq!(ls.degree(c(1, 1)).unwrap(), 1);
}

#[test]
fn cut_predicates() {
    assert!(Shape::rect(5, 1).unwrap().is_cut_vertex(c(3, 1)).unwrap());
    assert!(!Shape::rect(3, 3).unwrap().is_cut_vertex(c(2, 2)).unwrap());
    assert!(Shape::c_shape(3, 5, 2, 1, 2, 2)
        .unwrap()
        .is_cut_vertex(c(1, 3))
        .unwrap());
    assert!(Shape::rect(5, 2)
        .unwrap()
        .is_vertex_cut_pair(c(3, 1), c(3, 2))
        .unwrap());
    assert!(!Shape::rect(3, 3)
        .unwrap()
        .is_vertex_cut_pair(c(1, 1), c(3, 3))
        .unwrap());
    // A waist two columns wide is cut by a row pair, not by a column pair.
    let waist = Shape::c_shape(4, 4, 2, 2, 1, 1).unwrap();
    assert!(waist.is_vertex_cut_pair(c(1, 2), c(2, 2)).unwrap());
    assert!(!waist.is_vertex_cut_pair(c(2, 2), c(2, 3)).unwrap());
}

#[test]
fn rectangle_paths_and_cycles() {
    let r = Shape::rect(8, 6).unwrap();
    let cyc = rect::hc_rect(&r, Side::Top).unwrap();
    assert_eq!(cyc.len(), 48);
    for side in [Side::Bottom, Side::Left, Side::Right] {
        assert!(rect::side_edges(8, 6, side)
            .iter()
            .all(|e| cyc.contains_edge(e.0, e.1)));
    }
    assert_eq!(
        hamiltonian_cycle(&Shape::rect(10, 8).unwrap())
            .unwrap()
            .len(),
        80
    );

    let r51 = Shape::rect(5, 1).unwrap();
    assert_eq!(
        rect::hp_rect(&r51, c(1, 1), c(5, 1)).unwrap().vertices(),
        &[c(1, 1), c(2, 1), c(3, 1), c(4, 1), c(5, 1)]
    );
    assert_eq!(
        forbidden(rect::hp_rect(&r51, c(1, 1), c(3, 1))),
        vec![Condition::F1]
    );
    assert_eq!(
        rect::hp_rect(&Shape::rect(3, 3).unwrap(), c(1, 1), c(2, 1))
            .unwrap()
            .len(),
        9
    );

    let p = rect::hp_rect_forced_edge(&Shape::rect(3, 2).unwrap(), c(1, 1), c(2, 1)).unwrap();
    assert!(p.contains_edge(c(2, 1), c(3, 1)));
    let p = rect::hp_rect_forced_edge(&Shape::rect(4, 3).unwrap(), c(3, 2), c(4, 3)).unwrap();
    assert!(p.contains_edge(c(1, 1), c(2, 1)));
    let p = rect::hp_rect_forced_edge(&Shape::rect(3, 3).unwrap(), c(1, 1), c(2, 1)).unwrap();
    assert!(p.contains_edge(c(2, 1), c(3, 1)));

    let p = rect::hp_3rect_tail(&Shape::rect(3, 3).unwrap(), c(2, 1), c(2, 3)).unwrap();
    assert!(p.contains_edge(c(3, 1), c(3, 2)) && p.contains_edge(c(3, 2), c(3, 3)));
}

#[test]
fn rectangle_longest_values() {
    let cases = [
        (6, 1, c(2, 1), c(5, 1), 4, RectCase::Line),
        (5, 1, c(1, 1), c(3, 1), 3, RectCase::Line),
        (5, 2, c(3, 1), c(3, 2), 6, RectCase::Cut),
        (4, 4, c(1, 1), c(4, 4), 16, RectCase::Full),
        (2, 2, c(1, 1), c(2, 2), 4, RectCase::Full),
    ];
    for (m, n, s, t, want, case) in cases {
        let shape = Shape::rect(m, n).unwrap();
        let found = longest(&shape, s, t).unwrap();
        assert_eq!(
            (found.path.len(), found.case),
            (want, BoundCase::Rect(case)),
            "{shape}"
        );
        assert_eq!(rect::upper_bound_rect(m, n, s, t), want);
    }
}

#[test]
fn l_shape_examples() {
    let l = Shape::l_shape(4, 4, 3, 3).unwrap();
    assert_eq!(
        lshape::classify_l(&l, c(1, 1), c(1, 2)).unwrap().case,
        LBoundCase::FC1
    );
    assert_eq!(lshape::longest_l(&l, c(1, 1), c(1, 3)).unwrap().len(), 3);

    // Thin arm of width one, two rows below the notch, notch one row tall.
    let f4 = Shape::l_shape(5, 3, 4, 1).unwrap();
    assert_eq!(
        classify::hp_conditions(&f4, c(1, 2), c(2, 3)),
        vec![Condition::F4]
    );
    assert_eq!(
        lshape::longest_l(&f4, c(1, 2), c(2, 3)).unwrap().len(),
        f4.size() - 1
    );

    let l44 = Shape::l_shape(4, 4, 2, 2).unwrap();
    assert_eq!(
        lshape::classify_l(&l44, c(1, 1), c(4, 4)).unwrap().case,
        LBoundCase::C0
    );
    assert_eq!(lshape::longest_l(&l44, c(1, 1), c(4, 4)).unwrap().len(), 12);
    assert_eq!(lshape::hp_l(&l44, c(1, 1), c(1, 4)).unwrap().len(), 12);
    let flat = lshape::hc_l_flat(&l44, Side::Bottom).unwrap();
    assert_eq!(flat.len(), 12);
    assert!((1..4).all(|x| flat.contains_edge(c(x, 4), c(x + 1, 4))));

    assert_eq!(
        forbidden(lshape::hc_l(&Shape::l_shape(3, 3, 2, 2).unwrap())),
        vec![Condition::F5]
    );
    assert_eq!(
        lshape::hc_l(&Shape::l_shape(3, 3, 1, 1).unwrap())
            .unwrap()
            .len(),
        8
    );
    let pendant = Shape::l_shape(3, 4, 2, 2).unwrap();
    assert_eq!(
        forbidden(lshape::hp_l(&pendant, c(2, 3), c(3, 4))),
        vec![Condition::F3]
    );
}

#[test]
fn c_shape_examples() {
    let f7 = Shape::c_shape(3, 4, 1, 2, 1, 1).unwrap();
    assert_eq!(
        forbidden(cshape::hp_c(&f7, c(1, 1), c(2, 2))),
        vec![Condition::F7]
    );
    let f8 = Shape::c_shape(5, 3, 1, 1, 1, 1).unwrap();
    assert_eq!(
        cshape::classify_c_hp(&f8, c(4, 1), c(4, 3)).unwrap(),
        vec![Condition::F8_1]
    );
    let f9 = Shape::c_shape(3, 6, 2, 2, 2, 2).unwrap();
    assert!(cshape::classify_c_hp(&f9, c(1, 1), c(2, 2))
        .unwrap()
        .contains(&Condition::F9));
    assert_eq!(forbidden(cshape::hc_c(&f9)), vec![Condition::F6]);

    assert_eq!(
        forbidden(cshape::hc_c(&Shape::c_shape(5, 5, 2, 2, 1, 2).unwrap())),
        vec![Condition::F6]
    );
    assert_eq!(
        cshape::hc_c(&Shape::c_shape(5, 5, 2, 1, 2, 2).unwrap())
            .unwrap()
            .len(),
        23
    );

    // The shape has 12 - 1 = 11 vertices, so a Hamiltonian path has 11.
    let small = Shape::c_shape(4, 3, 1, 1, 1, 1).unwrap();
    assert_eq!(cshape::hp_c(&small, c(1, 1), c(1, 3)).unwrap().len(), 11);
    let p = cshape::hp_c(&Shape::c_shape(4, 5, 2, 2, 2, 1).unwrap(), c(1, 1), c(4, 5)).unwrap();
    assert_eq!(p.len(), 16);
}

#[test]
fn c_shape_longest_values() {
    let b = Budget::default();
    let cases = [
        (
            Shape::c_shape(5, 5, 2, 1, 2, 2).unwrap(),
            c(1, 1),
            c(5, 5),
            CBoundCase::C1,
            23,
        ),
        (
            Shape::c_shape(5, 4, 3, 2, 1, 1).unwrap(),
            c(3, 1),
            c(5, 1),
            CBoundCase::FC11,
            3,
        ),
        (
            Shape::c_shape(3, 5, 2, 1, 2, 2).unwrap(),
            c(1, 1),
            c(2, 1),
            CBoundCase::FC7,
            7,
        ),
    ];
    for (shape, s, t, case, want) in cases {
        assert_eq!(
            cshape::classify_c_longest(&shape, s, t).unwrap(),
            case,
            "{shape}"
        );
        assert_eq!(cshape::upper_bound_c(&shape, s, t).unwrap(), want);
        let p = cshape::longest_c(&shape, s, t).unwrap();
        p.validate_in(&shape).unwrap();
        assert_eq!((p.start(), p.end(), p.len()), (s, t, want));
        assert_eq!(oracle::longest(&shape, s, t, &b).unwrap().0, want);
    }
}

#[test]
fn oracle_with_required_edges() {
    let b = Budget::default();
    let r33 = Shape::rect(3, 3).unwrap();
    let tail = [(c(3, 1), c(3, 2)), (c(3, 2), c(3, 3))];
    assert!(oracle::hp_with_edges(&r33, c(1, 1), c(1, 3), &tail, &b)
        .unwrap()
        .is_some());
    let r32 = Shape::rect(3, 2).unwrap();
    assert!(
        oracle::hp_with_edges(&r32, c(1, 1), c(2, 1), &[(c(1, 1), c(2, 1))], &b)
            .unwrap()
            .is_none()
    );
    let r43 = Shape::rect(4, 3).unwrap();
    assert!(
        oracle::hp_with_edges(&r43, c(3, 2), c(4, 3), &[(c(1, 1), c(2, 1))], &b)
            .unwrap()
            .is_some()
    );
}

#[test]
fn public_entry_points_agree_with_the_classifier() {
    let shape = Shape::c_shape(3, 4, 1, 2, 1, 1).unwrap();
    for s in shape.vertices() {
        for t in shape.vertices() {
            if s == t {
                continue;
            }
            let conds = classify::hp_conditions(&shape, s, t);
            match hamiltonian_path(&shape, s, t) {
                Ok(p) => {
                    assert!(conds.is_empty());
                    p.validate_hamiltonian(&shape, s, t).unwrap();
                }
                Err(e) => assert_eq!(forbidden::<()>(Err(e)), conds),
            }
        }
    }
}

#[test]
fn reports_serialise_in_a_stable_layout() {
    let shape = Shape::c_shape(5, 5, 2, 1, 2, 2).unwrap();
    let json = serde_json::to_string(&shape).unwrap();
    assert_eq!(json, r#"{"kind":"C","m":5,"n":5,"k":2,"l":1,"c":2,"d":2}"#);
    assert_eq!(serde_json::from_str::<Shape>(&json).unwrap(), shape);
    assert_eq!(
        serde_json::from_str::<Shape>(r#"{"kind":"C","m":5,"n":5,"k":2,"l":1,"c":2}"#).unwrap(),
        shape
    );
    assert!(
        serde_json::from_str::<Shape>(r#"{"kind":"C","m":5,"n":5,"k":2,"l":1,"c":2,"d":1}"#)
            .is_err()
    );
    assert!(serde_json::from_str::<Shape>(r#"{"kind":"L","m":3,"n":3,"k":3,"l":1}"#).is_err());

    let rep = supergrid::SolveReport::longest(&shape, c(1, 1), c(5, 5)).unwrap();
    let v = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["case"], "C1");
    assert_eq!(v["length"], 23);
    assert_eq!(v["s"], serde_json::json!([1, 1]));
    let text = serde_json::to_string(&rep).unwrap();
    let keys = [
        "\"shape\"",
        "\"s\"",
        "\"t\"",
        "\"case\"",
        "\"upper_bound\"",
        "\"length\"",
        "\"path\"",
        "\"forbidden\"",
    ];
    let at: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{text}");
    assert_eq!(
        serde_json::from_str::<supergrid::SolveReport>(&text).unwrap(),
        rep
    );

    let refused =
        supergrid::SolveReport::hp(&Shape::c_shape(3, 4, 1, 2, 1, 1).unwrap(), c(1, 1), c(2, 2))
            .unwrap();
    let v = serde_json::to_value(&refused).unwrap();
    assert_eq!(v["forbidden"], serde_json::json!(["F7"]));
    assert!(v["path"].is_null());
}
