//! Solver-versus-oracle comparison over every small instance.

use rayon::prelude::*;
use serde::Serialize;
use supergrid::oracle::{self, Budget};
use supergrid::{Coord, Error, Shape};

use crate::cli::InstanceSpec;
use crate::error::{CliError, Result};

/// Default enumeration bound; exhaustive longest paths stay quick up to here.
pub const DEFAULT_MAX_VERTICES: usize = 18;

/// Parses `vertices` or `vertices,nodes` into oracle caps.
pub fn parse_budget(text: &str) -> Result<Budget> {
    let bad = || {
        CliError::Usage(format!(
            "budget must be `vertices` or `vertices,nodes`, got {text:?}"
        ))
    };
    let mut parts = text.split(',').map(str::trim);
    let vertices: usize = parts.next().and_then(|v| v.parse().ok()).ok_or_else(bad)?;
    let mut budget = Budget::with_max_vertices(vertices);
    if let Some(nodes) = parts.next() {
        budget.max_nodes_expanded = nodes.parse().map_err(|_| bad())?;
    }
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(budget)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub shape: Shape,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Coord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Coord>,
    pub query: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub shapes: usize,
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Every rectangle, L-shape and C-shape with at most `max` vertices.
pub fn shapes_up_to(max: usize) -> Vec<Shape> {
    let max = max as i32;
    let mut out = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            if m * n <= max {
                out.push(Shape::Rect { m, n });
            }
            for k in 1..m {
                for l in 1..n {
                    if m * n - k * l > max {
                        continue;
                    }
                    out.extend(Shape::l_shape(m, n, k, l));
                    for c in 1..n - l {
                        out.extend(Shape::c_shape_nlc(m, n, k, l, c));
                    }
                }
            }
        }
    }
    out
}

struct Checker<'a> {
    budget: &'a Budget,
    found: Vec<Mismatch>,
}

impl Checker<'_> {
    fn flag(
        &mut self,
        shape: &Shape,
        st: Option<(Coord, Coord)>,
        query: &'static str,
        detail: String,
    ) {
        self.found.push(Mismatch {
            shape: *shape,
            s: st.map(|p| p.0),
            t: st.map(|p| p.1),
            query,
            detail,
        });
    }

    fn cycle(&mut self, shape: &Shape) {
        let truth = match oracle::hc_exists(shape, self.budget) {
            Ok(v) => v,
            Err(e) => return self.flag(shape, None, "hc", format!("oracle: {e}")),
        };
        let built = supergrid::hamiltonian_cycle(shape);
        match (&built, truth) {
            (Ok(cyc), true) => {
                if let Err(e) = cyc.validate_hamiltonian(shape) {
                    self.flag(shape, None, "hc", format!("invalid cycle: {e}"));
                }
            }
            (Err(Error::Forbidden(_) | Error::NoCycle(_)), false) => {}
            _ => self.flag(
                shape,
                None,
                "hc",
                format!("solver {:?}, oracle {truth}", built.err()),
            ),
        }
    }

    fn pair(&mut self, shape: &Shape, s: Coord, t: Coord) {
        let st = Some((s, t));
        match oracle::hp_exists(shape, s, t, self.budget) {
            Ok(truth) => {
                let built = supergrid::hamiltonian_path(shape, s, t);
                match (&built, truth) {
                    (Ok(p), true) => {
                        if let Err(e) = p.validate_hamiltonian(shape, s, t) {
                            self.flag(shape, st, "hp", format!("invalid path: {e}"));
                        }
                    }
                    (Err(Error::Forbidden(_)), false) => {}
                    _ => self.flag(
                        shape,
                        st,
                        "hp",
                        format!("solver {:?}, oracle {truth}", built.err()),
                    ),
                }
            }
            Err(e) => self.flag(shape, st, "hp", format!("oracle: {e}")),
        }
        let truth = match oracle::longest(shape, s, t, self.budget) {
            Ok((len, _)) => len,
            Err(e) => return self.flag(shape, st, "longest", format!("oracle: {e}")),
        };
        match supergrid::longest(shape, s, t) {
            Ok(found) => {
                let p = &found.path;
                let valid = p.validate_in(shape).is_ok() && p.start() == s && p.end() == t;
                if !valid || p.len() != truth || found.upper_bound != truth {
                    self.flag(
                        shape,
                        st,
                        "longest",
                        format!(
                            "built {} (valid {valid}), bound {} ({}), oracle {truth}",
                            p.len(),
                            found.upper_bound,
                            found.case
                        ),
                    );
                }
            }
            Err(e) => self.flag(shape, st, "longest", format!("solver: {e}")),
        }
    }
}

/// All checks for one shape: its cycle and every ordered pair.
fn check_shape(shape: &Shape, budget: &Budget) -> (usize, Vec<Mismatch>) {
    let mut ck = Checker {
        budget,
        found: Vec::new(),
    };
    ck.cycle(shape);
    let vs = shape.vertices();
    let mut pairs = 0;
    for &s in &vs {
        for &t in &vs {
            if s != t {
                pairs += 1;
                ck.pair(shape, s, t);
            }
        }
    }
    (pairs, ck.found)
}

fn check_instance(spec: &InstanceSpec, budget: &Budget) -> (usize, Vec<Mismatch>) {
    let mut ck = Checker {
        budget,
        found: Vec::new(),
    };
    ck.cycle(&spec.shape);
    match (spec.s, spec.t) {
        (Some(s), Some(t)) => {
            if let Err(e) = spec.shape.check_pair(s, t) {
                ck.flag(
                    &spec.shape,
                    Some((s, t)),
                    "hp",
                    format!("bad instance: {e}"),
                );
            } else {
                ck.pair(&spec.shape, s, t);
            }
            (1, ck.found)
        }
        _ => (0, ck.found),
    }
}

/// Enumerates every shape up to `max_vertices`; results keep the
/// enumeration order whatever the thread count.
pub fn enumerate(max_vertices: usize, budget: &Budget) -> Result<FuzzReport> {
    if max_vertices > budget.max_vertices {
        return Err(CliError::Usage(format!(
            "--max-vertices {max_vertices} exceeds the oracle cap of {}",
            budget.max_vertices
        )));
    }
    let shapes = shapes_up_to(max_vertices);
    let results: Vec<_> = shapes.par_iter().map(|s| check_shape(s, budget)).collect();
    Ok(collect(shapes.len(), results))
}

pub fn instances(specs: &[InstanceSpec], budget: &Budget) -> FuzzReport {
    let results: Vec<_> = specs
        .par_iter()
        .map(|s| check_instance(s, budget))
        .collect();
    collect(specs.len(), results)
}

fn collect(shapes: usize, results: Vec<(usize, Vec<Mismatch>)>) -> FuzzReport {
    let mut report = FuzzReport {
        shapes,
        ..FuzzReport::default()
    };
    for (pairs, found) in results {
        report.pairs += pairs;
        report.mismatches.extend(found);
    }
    report
}
