//! Exhaustive Hamiltonian path search for the small cores left over after
//! the recursive constructions have peeled and split everything they can.
//!
//! This is deliberately separate from [`crate::oracle`]: the oracle checks
//! the solvers, so the solvers must not lean on it.

use crate::geom::{adjacent, Coord, Region};

pub(crate) type Edge = (Coord, Coord);

/// Largest region handed to the search.
pub(crate) const MAX_VERTICES: usize = 64;

struct Search {
    adj: Vec<u64>,
    forced: Vec<[usize; 2]>,
    full: u64,
    t: usize,
    path: Vec<usize>,
    nodes: usize,
    limit: usize,
}

const NO: usize = usize::MAX;

impl Search {
    fn forced_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.forced[v].iter().copied().filter(|&x| x != NO)
    }

    fn viable(&self, visited: u64, head: usize) -> bool {
        let rest = self.full & !visited;
        if rest == 0 {
            return true;
        }
        if rest & (1 << self.t) == 0 {
            return false;
        }
        // Every unvisited vertex must still be reachable from the head.
        let mut seen = 0u64;
        let mut frontier = self.adj[head] & rest;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[i];
            }
            frontier = next & rest & !seen;
        }
        if seen != rest {
            return false;
        }
        // Interior vertices need two usable neighbours, the target one.
        let open = rest | (1 << head);
        let mut r = rest;
        while r != 0 {
            let i = r.trailing_zeros() as usize;
            r &= r - 1;
            let deg = (self.adj[i] & open).count_ones();
            if deg < if i == self.t { 1 } else { 2 } {
                return false;
            }
        }
        true
    }

    fn go(&mut self, v: usize, visited: u64) -> bool {
        if visited == self.full {
            return v == self.t;
        }
        if v == self.t {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return false;
        }
        let pending: Vec<usize> = self
            .forced_of(v)
            .filter(|&u| visited & (1 << u) == 0)
            .collect();
        let mut cands: Vec<usize> = match pending.len() {
            0 => {
                let mut m = self.adj[v] & !visited;
                let mut out = Vec::new();
                while m != 0 {
                    out.push(m.trailing_zeros() as usize);
                    m &= m - 1;
                }
                out
            }
            1 => pending,
            _ => return false,
        };
        let rest = self.full & !visited;
        cands.sort_by_key(|&u| (self.adj[u] & rest).count_ones());
        for u in cands {
            let nv = visited | (1 << u);
            if u == self.t && nv != self.full {
                continue;
            }
            // A forced partner of u that is already on the path must be v.
            if self.forced_of(u).any(|w| w != v && visited & (1 << w) != 0) {
                continue;
            }
            if !self.viable(nv, u) {
                continue;
            }
            self.path.push(u);
            if self.go(u, nv) {
                return true;
            }
            self.path.pop();
            if self.nodes > self.limit {
                return false;
            }
        }
        false
    }
}

/// Searches for a Hamiltonian `(s, t)`-path of `r` through every edge in
/// `forced`. Returns `None` when none exists or the node limit is hit.
pub(crate) fn hp(
    r: &Region,
    s: Coord,
    t: Coord,
    forced: &[Edge],
    limit: usize,
) -> Option<Vec<Coord>> {
    let verts = r.vertices();
    let n = verts.len();
    if n > MAX_VERTICES || !r.contains(s) || !r.contains(t) {
        return None;
    }
    if s == t {
        return (n == 1).then(|| vec![s]);
    }
    let index = |v: Coord| verts.binary_search(&v).ok();
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            if adjacent(verts[i], verts[j]) {
                adj[i] |= 1 << j;
            }
        }
    }
    let mut forced_idx = vec![[NO; 2]; n];
    for &(u, v) in forced {
        let (Some(i), Some(j)) = (index(u), index(v)) else {
            return None;
        };
        if !adjacent(u, v) {
            return None;
        }
        for (a, b) in [(i, j), (j, i)] {
            let slot = forced_idx[a].iter().position(|&x| x == NO || x == b)?;
            forced_idx[a][slot] = b;
        }
    }
    let (si, ti) = (index(s)?, index(t)?);
    for e in [si, ti] {
        if forced_idx[e][1] != NO {
            return None;
        }
    }
    if n > 2 && (forced_idx[si][0] == ti) {
        return None;
    }
    let mut search = Search {
        adj,
        forced: forced_idx,
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        t: ti,
        path: vec![si],
        nodes: 0,
        limit,
    };
    if !search.viable(1 << si, si) {
        return None;
    }
    search
        .go(si, 1 << si)
        .then(|| search.path.iter().map(|&i| verts[i]).collect())
}
