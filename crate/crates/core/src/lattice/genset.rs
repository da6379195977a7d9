use std::collections::BTreeSet;
use std::fmt;

use super::vec::{IntVec2, IntVec3};

/// Finite generating set of a subsemigroup of `ℕ²`, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenSet {
    points: Vec<IntVec2>,
    pub minimal: bool,
}

impl GenSet {
    pub fn new(points: impl IntoIterator<Item = IntVec2>, minimal: bool) -> Self {
        let set: BTreeSet<IntVec2> = points.into_iter().filter(|p| !p.is_zero()).collect();
        Self {
            points: set.into_iter().collect(),
            minimal,
        }
    }

    pub fn empty() -> Self {
        Self {
            points: Vec::new(),
            minimal: true,
        }
    }

    pub fn points(&self) -> &[IntVec2] {
        &self.points
    }

    pub fn into_points(self) -> Vec<IntVec2> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &IntVec2) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &IntVec2> {
        self.points.iter()
    }

    pub fn max_norm1(&self) -> i64 {
        self.points.iter().map(|p| p.norm1()).max().unwrap_or(0)
    }

    /// Whether `x` is a non-negative integer combination of the points.
    pub fn generates(&self, x: IntVec2) -> bool {
        super::member_of_generated(x, self)
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Finite generating set of a subsemigroup of `ℤ³`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenSet3 {
    points: Vec<IntVec3>,
    pub minimal: bool,
}

impl GenSet3 {
    pub fn new(points: impl IntoIterator<Item = IntVec3>, minimal: bool) -> Self {
        let set: BTreeSet<IntVec3> = points.into_iter().filter(|p| !p.is_zero()).collect();
        Self {
            points: set.into_iter().collect(),
            minimal,
        }
    }

    pub fn points(&self) -> &[IntVec3] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}
