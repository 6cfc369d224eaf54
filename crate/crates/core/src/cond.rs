//! Names for forbidden conditions and longest-path bound cases.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A forbidden condition: a predicate on `(shape, s, t)` (or on the shape
/// alone for `F5`/`F6`) that rules out the requested Hamiltonian structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    /// `s` or `t` is a cut vertex, or `{s, t}` is a vertex cut.
    F1,
    /// Some vertex other than `s` and `t` has degree one.
    F3,
    /// The thin L-shape pattern with `m - k = 1`, `n - l = 2`, `l = 1`.
    F4,
    /// An L-shape with a vertex of degree one (no Hamiltonian cycle).
    F5,
    /// A C-shape with `a = 1` or a vertex of degree one (no Hamiltonian cycle).
    F6,
    /// `m = 3`, `a = 2` and the endpoints sit diagonally across a one-row margin.
    F7,
    /// `n = 3`, `k = c = d = 1`, endpoints straddling the notch column.
    #[serde(rename = "F8_1")]
    F8_1,
    /// `n = 3`, `k = c = d = 1`, `a = 2`, endpoints in different columns two rows apart.
    #[serde(rename = "F8_2")]
    F8_2,
    /// `n = 3`, `k = c = d = 1`, `a > 2`, `t` at the notch mouth.
    #[serde(rename = "F8_3")]
    F8_3,
    /// `a = 1` and both endpoints on the same side of the waist.
    F9,
}

impl Condition {
    pub const ALL: [Condition; 10] = [
        Condition::F1,
        Condition::F3,
        Condition::F4,
        Condition::F5,
        Condition::F6,
        Condition::F7,
        Condition::F8_1,
        Condition::F8_2,
        Condition::F8_3,
        Condition::F9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::F1 => "F1",
            Condition::F3 => "F3",
            Condition::F4 => "F4",
            Condition::F5 => "F5",
            Condition::F6 => "F6",
            Condition::F7 => "F7",
            Condition::F8_1 => "F8_1",
            Condition::F8_2 => "F8_2",
            Condition::F8_3 => "F8_3",
            Condition::F9 => "F9",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Condition::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown condition {s:?}"))
    }
}

/// Longest-path bound cases for L-shapes, tested in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LBoundCase {
    FC1,
    FC2,
    FC3,
    FC4,
    FC5,
    FC6a,
    FC6b,
    FC6c,
    FC6d,
    #[serde(rename = "F4")]
    F4Case,
    C0,
}

impl LBoundCase {
    pub fn name(self) -> &'static str {
        match self {
            LBoundCase::FC1 => "FC1",
            LBoundCase::FC2 => "FC2",
            LBoundCase::FC3 => "FC3",
            LBoundCase::FC4 => "FC4",
            LBoundCase::FC5 => "FC5",
            LBoundCase::FC6a => "FC6a",
            LBoundCase::FC6b => "FC6b",
            LBoundCase::FC6c => "FC6c",
            LBoundCase::FC6d => "FC6d",
            LBoundCase::F4Case => "F4",
            LBoundCase::C0 => "C0",
        }
    }
}

impl fmt::Display for LBoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Longest-path bound cases for C-shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CBoundCase {
    C1,
    FC7,
    FC8,
    FC9,
    FC10,
    FC11,
    FC12,
    FC13,
    FC14,
    FC15,
    FC16,
    FC17,
    FC18,
}

impl CBoundCase {
    pub fn name(self) -> &'static str {
        match self {
            CBoundCase::C1 => "C1",
            CBoundCase::FC7 => "FC7",
            CBoundCase::FC8 => "FC8",
            CBoundCase::FC9 => "FC9",
            CBoundCase::FC10 => "FC10",
            CBoundCase::FC11 => "FC11",
            CBoundCase::FC12 => "FC12",
            CBoundCase::FC13 => "FC13",
            CBoundCase::FC14 => "FC14",
            CBoundCase::FC15 => "FC15",
            CBoundCase::FC16 => "FC16",
            CBoundCase::FC17 => "FC17",
            CBoundCase::FC18 => "FC18",
        }
    }
}

impl fmt::Display for CBoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Longest-path cases for rectangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RectCase {
    /// A Hamiltonian path exists.
    Full,
    /// A single row or column: the segment between the endpoints.
    Line,
    /// Two rows or columns with the endpoints forming a vertex cut: the
    /// better of the two sides.
    Cut,
}

impl RectCase {
    pub fn name(self) -> &'static str {
        match self {
            RectCase::Full => "full",
            RectCase::Line => "line",
            RectCase::Cut => "cut",
        }
    }
}

/// The bound case that decided a longest-path query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundCase {
    Rect(RectCase),
    L(LBoundCase),
    C(CBoundCase),
}

impl BoundCase {
    pub fn name(self) -> &'static str {
        match self {
            BoundCase::Rect(c) => c.name(),
            BoundCase::L(c) => c.name(),
            BoundCase::C(c) => c.name(),
        }
    }
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
