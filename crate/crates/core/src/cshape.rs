//! C-shaped supergrid graphs `C(m, n; k, l; c, d)`.

use crate::classify;
use crate::cond::{BoundCase, CBoundCase, Condition};
use crate::error::{Error, Result};
use crate::geom::{Coord, Shape, Side};
use crate::lshape::debug_check_f1;
use crate::path::{Cycle, Path};
use crate::solve;

fn check(shape: &Shape) -> Result<()> {
    match shape {
        Shape::C { .. } => Ok(()),
        _ => Err(Error::Precondition(format!("{shape} is not a C-shape"))),
    }
}

/// The forbidden conditions among (F1), (F3), (F7), (F8), (F9) that hold;
/// empty exactly when a Hamiltonian `(s, t)`-path exists.
pub fn classify_c_hp(shape: &Shape, s: Coord, t: Coord) -> Result<Vec<Condition>> {
    check(shape)?;
    shape.check_pair(s, t)?;
    debug_check_f1(shape, s, t);
    Ok(classify::hp_conditions(shape, s, t))
}

/// A Hamiltonian cycle; fails with (F6) when the waist is one column wide
/// or some vertex has degree one.
pub fn hc_c(shape: &Shape) -> Result<Cycle> {
    check(shape)?;
    solve::hamiltonian_cycle(shape)
}

/// A Hamiltonian cycle with a flat face on `side` of the bounding box.
pub fn hc_c_flat(shape: &Shape, side: Side) -> Result<Cycle> {
    check(shape)?;
    let forced = solve::side_walk_edges(shape, side);
    let cyc = solve::lc_cycle(shape, &forced)?;
    cyc.validate_hamiltonian(shape)?;
    Ok(cyc)
}

/// A Hamiltonian `(s, t)`-path, or the conditions that rule one out.
pub fn hp_c(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    check(shape)?;
    solve::hamiltonian_path(shape, s, t)
}

/// The longest-path case; `C1` exactly when a Hamiltonian path exists.
pub fn classify_c_longest(shape: &Shape, s: Coord, t: Coord) -> Result<CBoundCase> {
    check(shape)?;
    match solve::upper_bound(shape, s, t)?.0 {
        BoundCase::C(case) => Ok(case),
        other => Err(Error::Construction(format!(
            "C-shape classified as {other}"
        ))),
    }
}

/// The bound-table value, the length of a longest `(s, t)`-path.
pub fn upper_bound_c(shape: &Shape, s: Coord, t: Coord) -> Result<usize> {
    check(shape)?;
    Ok(solve::upper_bound(shape, s, t)?.1)
}

/// A longest `(s, t)`-path.
pub fn longest_c(shape: &Shape, s: Coord, t: Coord) -> Result<Path> {
    check(shape)?;
    Ok(solve::longest(shape, s, t)?.path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::c;

    #[test]
    fn examples() {
        let f7 = Shape::c_shape(3, 4, 1, 2, 1, 1).unwrap();
        assert_eq!(
            classify_c_hp(&f7, c(1, 1), c(2, 2)).unwrap(),
            vec![Condition::F7]
        );
        let f8 = Shape::c_shape(5, 3, 1, 1, 1, 1).unwrap();
        assert_eq!(
            classify_c_hp(&f8, c(4, 1), c(4, 3)).unwrap(),
            vec![Condition::F8_1]
        );
        let thin = Shape::c_shape(3, 6, 2, 2, 2, 2).unwrap();
        assert!(classify_c_hp(&thin, c(1, 1), c(2, 2))
            .unwrap()
            .contains(&Condition::F9));
        assert!(matches!(hc_c(&thin), Err(Error::Forbidden(f)) if f == vec![Condition::F6]));
        let deg1 = Shape::c_shape(5, 5, 2, 2, 1, 2).unwrap();
        assert!(matches!(hc_c(&deg1), Err(Error::Forbidden(f)) if f == vec![Condition::F6]));
        assert_eq!(
            hc_c(&Shape::c_shape(5, 5, 2, 1, 2, 2).unwrap())
                .unwrap()
                .len(),
            23
        );
        // 12 - 1 = 11 vertices.
        assert_eq!(
            hp_c(&Shape::c_shape(4, 3, 1, 1, 1, 1).unwrap(), c(1, 1), c(1, 3))
                .unwrap()
                .len(),
            11
        );
        assert_eq!(
            hp_c(&Shape::c_shape(4, 5, 2, 2, 2, 1).unwrap(), c(1, 1), c(4, 5))
                .unwrap()
                .len(),
            16
        );
        let top = Shape::c_shape(3, 5, 2, 1, 2, 2).unwrap();
        assert_eq!(
            classify_c_longest(&top, c(1, 1), c(2, 1)).unwrap(),
            CBoundCase::FC7
        );
    }
}
