//! Undirected degree-two adjacency over a dense grid: the working store for
//! paths and cycles while they are being spliced together.
//!
//! Every mutation is journaled so a failed construction branch can be rolled
//! back in time proportional to the work it did.

use crate::error::{Error, Result};
use crate::geom::{Block, Coord};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
enum Op {
    Add(u32, u32),
    Remove(u32, u32),
}

pub(crate) struct Links {
    frame: Block,
    w: usize,
    adj: Vec<[u32; 2]>,
    log: Vec<Op>,
}

impl Links {
    pub fn new(frame: Block) -> Links {
        let w = frame.width() as usize;
        Links {
            frame,
            w,
            adj: vec![[NONE; 2]; frame.area()],
            log: Vec::new(),
        }
    }

    #[inline]
    fn idx(&self, v: Coord) -> u32 {
        debug_assert!(self.frame.contains(v), "{v} outside {:?}", self.frame);
        ((v.y - self.frame.y0) as usize * self.w + (v.x - self.frame.x0) as usize) as u32
    }

    #[inline]
    fn coord(&self, i: u32) -> Coord {
        let i = i as usize;
        Coord::new(
            self.frame.x0 + (i % self.w) as i32,
            self.frame.y0 + (i / self.w) as i32,
        )
    }

    fn put(&mut self, a: u32, b: u32) -> bool {
        let slots = &mut self.adj[a as usize];
        if slots[0] == NONE {
            slots[0] = b;
        } else if slots[1] == NONE {
            slots[1] = b;
        } else {
            return false;
        }
        true
    }

    fn take(&mut self, a: u32, b: u32) -> bool {
        let slots = &mut self.adj[a as usize];
        if slots[0] == b {
            slots[0] = slots[1];
            slots[1] = NONE;
        } else if slots[1] == b {
            slots[1] = NONE;
        } else {
            return false;
        }
        true
    }

    pub fn add(&mut self, u: Coord, v: Coord) -> Result<()> {
        let (a, b) = (self.idx(u), self.idx(v));
        if !self.put(a, b) {
            return Err(Error::Stitch(format!("{u} already has two neighbours")));
        }
        if !self.put(b, a) {
            self.take(a, b);
            return Err(Error::Stitch(format!("{v} already has two neighbours")));
        }
        self.log.push(Op::Add(a, b));
        Ok(())
    }

    pub fn remove(&mut self, u: Coord, v: Coord) -> Result<()> {
        let (a, b) = (self.idx(u), self.idx(v));
        if !self.take(a, b) {
            return Err(Error::Stitch(format!("edge {u}-{v} is not present")));
        }
        self.take(b, a);
        self.log.push(Op::Remove(a, b));
        Ok(())
    }

    /// Adds the edges of a vertex sequence, optionally closing it.
    pub fn add_walk(&mut self, verts: &[Coord], closed: bool) -> Result<()> {
        for w in verts.windows(2) {
            self.add(w[0], w[1])?;
        }
        if closed && verts.len() > 2 {
            self.add(verts[verts.len() - 1], verts[0])?;
        }
        Ok(())
    }

    pub fn checkpoint(&self) -> usize {
        self.log.len()
    }

    pub fn rollback(&mut self, cp: usize) {
        while self.log.len() > cp {
            match self.log.pop().expect("log is longer than the checkpoint") {
                Op::Add(a, b) => {
                    self.take(a, b);
                    self.take(b, a);
                }
                Op::Remove(a, b) => {
                    self.put(a, b);
                    self.put(b, a);
                }
            }
        }
    }

    /// Follows links from `start`, which must have degree at most one.
    pub fn walk_path(&self, start: Coord) -> Vec<Coord> {
        let mut out = vec![start];
        let mut prev = NONE;
        let mut cur = self.idx(start);
        loop {
            let [x, y] = self.adj[cur as usize];
            let next = if x != NONE && x != prev {
                x
            } else if y != NONE && y != prev {
                y
            } else {
                break;
            };
            prev = cur;
            cur = next;
            out.push(self.coord(cur));
        }
        out
    }

    /// Follows links around the cycle through `start`.
    pub fn walk_cycle(&self, start: Coord) -> Vec<Coord> {
        let first = self.idx(start);
        let mut out = vec![start];
        let mut prev = first;
        let mut cur = self.adj[first as usize][0];
        while cur != NONE && cur != first {
            out.push(self.coord(cur));
            let [x, y] = self.adj[cur as usize];
            let next = if x != prev { x } else { y };
            prev = cur;
            cur = next;
        }
        out
    }
}
