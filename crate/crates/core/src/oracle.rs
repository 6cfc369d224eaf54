//! Exhaustive ground truth for small instances.
//!
//! Everything here is a plain depth-first search over a bitmask graph and is
//! deliberately independent of the constructive solvers; tests compare the
//! two. Searches refuse instances above the vertex budget and abort once the
//! node budget is spent.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::geom::{adjacent, Coord, Shape};
use crate::path::{Cycle, Path};

/// Caps on oracle work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_nodes_expanded: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 24,
            max_nodes_expanded: 2_000_000_000,
        }
    }
}

impl Budget {
    pub fn with_max_vertices(max_vertices: usize) -> Budget {
        Budget {
            max_vertices,
            ..Budget::default()
        }
    }
}

/// Induced supergrid graph on at most 64 vertices, vertices in ascending
/// coordinate order.
struct Graph {
    verts: Vec<Coord>,
    adj: Vec<u64>,
}

impl Graph {
    fn build(shape: &Shape, budget: &Budget) -> Result<Graph> {
        let n = shape.size();
        if n > budget.max_vertices || n > 64 {
            return Err(Error::Budget(format!(
                "{shape} has {n} vertices, cap is {}",
                budget.max_vertices.min(64)
            )));
        }
        let verts = shape.vertices();
        let adj = verts
            .iter()
            .map(|&u| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| adjacent(u, v))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Ok(Graph { verts, adj })
    }

    fn index(&self, v: Coord) -> Result<usize> {
        self.verts
            .binary_search(&v)
            .map_err(|_| Error::OutOfShape(v))
    }

    fn full(&self) -> u64 {
        if self.verts.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.verts.len()) - 1
        }
    }

    /// Vertices reachable from `from` through `allowed` (excluding `from`).
    fn reach(&self, from: usize, allowed: u64) -> u64 {
        let mut seen = self.adj[from] & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let b = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[b];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn path_of(&self, idx: &[usize]) -> Path {
        Path::from_vec_unchecked(idx.iter().map(|&i| self.verts[i]).collect())
    }
}

struct Counter<'a> {
    nodes: Cell<u64>,
    budget: &'a Budget,
}

impl Counter<'_> {
    fn tick(&self) -> Result<()> {
        let n = self.nodes.get() + 1;
        self.nodes.set(n);
        if n > self.budget.max_nodes_expanded {
            Err(Error::Budget(format!(
                "more than {} search nodes",
                self.budget.max_nodes_expanded
            )))
        } else {
            Ok(())
        }
    }
}

fn check_endpoints(shape: &Shape, s: Coord, t: Coord) -> Result<()> {
    shape.check_pair(s, t)
}

/// Exact length (vertex count) of a longest simple `(s, t)`-path, with the
/// lexicographically least path of that length as witness.
pub fn longest(shape: &Shape, s: Coord, t: Coord, budget: &Budget) -> Result<(usize, Path)> {
    check_endpoints(shape, s, t)?;
    let g = Graph::build(shape, budget)?;
    let (si, ti) = (g.index(s)?, g.index(t)?);
    let total = g.verts.len();
    let counter = Counter {
        nodes: Cell::new(0),
        budget,
    };
    let mut best: Vec<usize> = Vec::new();
    let mut stack = vec![si];
    longest_dfs(&g, ti, 1 << si, &mut stack, &mut best, total, &counter)?;
    Ok((best.len(), g.path_of(&best)))
}

fn longest_dfs(
    g: &Graph,
    t: usize,
    visited: u64,
    stack: &mut Vec<usize>,
    best: &mut Vec<usize>,
    total: usize,
    counter: &Counter,
) -> Result<bool> {
    counter.tick()?;
    let v = *stack.last().expect("non-empty stack");
    if v == t {
        if stack.len() > best.len() {
            best.clone_from(stack);
        }
        return Ok(best.len() == total);
    }
    let free = g.full() & !visited;
    let reach = g.reach(v, free);
    if reach & (1 << t) == 0 {
        return Ok(false);
    }
    if stack.len() + reach.count_ones() as usize <= best.len() {
        return Ok(false);
    }
    let mut next = g.adj[v] & reach;
    while next != 0 {
        let u = next.trailing_zeros() as usize;
        next &= next - 1;
        stack.push(u);
        let done = longest_dfs(g, t, visited | 1 << u, stack, best, total, counter)?;
        stack.pop();
        if done {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Per-vertex constraint: vertices that must be path-neighbours.
struct Required {
    partners: Vec<u64>,
}

/// Searches for a Hamiltonian `(s, t)`-path containing every edge in
/// `required`. Returns the lexicographically least such path.
fn hp_search(
    g: &Graph,
    si: usize,
    ti: usize,
    req: &Required,
    counter: &Counter,
) -> Result<Option<Vec<usize>>> {
    let total = g.verts.len();
    if total == 1 {
        return Ok(None);
    }
    let mut stack = vec![si];
    if hp_dfs(g, ti, 1 << si, &mut stack, req, total, counter)? {
        Ok(Some(stack))
    } else {
        Ok(None)
    }
}

fn hp_dfs(
    g: &Graph,
    t: usize,
    visited: u64,
    stack: &mut Vec<usize>,
    req: &Required,
    total: usize,
    counter: &Counter,
) -> Result<bool> {
    counter.tick()?;
    let v = *stack.last().expect("non-empty stack");
    let prev_bit = if stack.len() >= 2 {
        1u64 << stack[stack.len() - 2]
    } else {
        0
    };
    let pending = req.partners[v] & !prev_bit;
    if v == t {
        return Ok(stack.len() == total && pending == 0);
    }
    let free = g.full() & !visited;
    // Every free vertex other than t needs two usable neighbours (free or the
    // current vertex); t needs one.
    let usable = free | 1 << v;
    let mut f = free;
    while f != 0 {
        let u = f.trailing_zeros() as usize;
        f &= f - 1;
        let deg = (g.adj[u] & usable).count_ones();
        if deg < 1 || (u != t && deg < 2) {
            return Ok(false);
        }
    }
    if g.reach(v, free).count_ones() as usize != total - stack.len() {
        return Ok(false);
    }
    let mut next = g.adj[v] & free;
    if pending != 0 {
        if pending.count_ones() > 1 {
            return Ok(false);
        }
        next &= pending;
    }
    while next != 0 {
        let u = next.trailing_zeros() as usize;
        next &= next - 1;
        // A vertex whose required partners are all behind it cannot be
        // entered from elsewhere.
        let u_pending = req.partners[u] & !(1 << v);
        if u_pending & visited != 0 {
            continue;
        }
        stack.push(u);
        if hp_dfs(g, t, visited | 1 << u, stack, req, total, counter)? {
            return Ok(true);
        }
        stack.pop();
    }
    Ok(false)
}

/// A Hamiltonian `(s, t)`-path, if one exists (lexicographically least).
pub fn hp(shape: &Shape, s: Coord, t: Coord, budget: &Budget) -> Result<Option<Path>> {
    hp_with_edges(shape, s, t, &[], budget)
}

pub fn hp_exists(shape: &Shape, s: Coord, t: Coord, budget: &Budget) -> Result<bool> {
    hp(shape, s, t, budget).map(|p| p.is_some())
}

/// Some Hamiltonian `(s, t)`-path containing every edge of `required`, or
/// `None` when exhaustive search finds none.
pub fn hp_with_edges(
    shape: &Shape,
    s: Coord,
    t: Coord,
    required: &[(Coord, Coord)],
    budget: &Budget,
) -> Result<Option<Path>> {
    check_endpoints(shape, s, t)?;
    let g = Graph::build(shape, budget)?;
    let (si, ti) = (g.index(s)?, g.index(t)?);
    let mut partners = vec![0u64; g.verts.len()];
    for &(a, b) in required {
        let (ai, bi) = (g.index(a)?, g.index(b)?);
        if !adjacent(a, b) {
            return Ok(None);
        }
        partners[ai] |= 1 << bi;
        partners[bi] |= 1 << ai;
    }
    if partners.iter().any(|p| p.count_ones() > 2)
        || partners[si].count_ones() > 1
        || partners[ti].count_ones() > 1
    {
        return Ok(None);
    }
    let counter = Counter {
        nodes: Cell::new(0),
        budget,
    };
    let req = Required { partners };
    Ok(hp_search(&g, si, ti, &req, &counter)?.map(|p| g.path_of(&p)))
}

/// A Hamiltonian cycle, if one exists. Cycles need at least four vertices.
pub fn hc(shape: &Shape, budget: &Budget) -> Result<Option<Cycle>> {
    let g = Graph::build(shape, budget)?;
    let total = g.verts.len();
    if total < 4 {
        return Ok(None);
    }
    let counter = Counter {
        nodes: Cell::new(0),
        budget,
    };
    let req = Required {
        partners: vec![0; total],
    };
    let mut nbrs = g.adj[0];
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if let Some(p) = hp_search(&g, 0, u, &req, &counter)? {
            let verts = p.iter().map(|&i| g.verts[i]).collect();
            return Ok(Some(Cycle::from_vec_unchecked(verts)));
        }
    }
    Ok(None)
}

pub fn hc_exists(shape: &Shape, budget: &Budget) -> Result<bool> {
    hc(shape, budget).map(|c| c.is_some())
}
