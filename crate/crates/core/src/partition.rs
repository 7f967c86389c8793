use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Ordered pair `(X1, X2)` of disjoint vertex sets covering `0..n`.
///
/// Either side may be empty while a search is running; solver results never
/// carry an empty side.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    x1: VertexSet,
    x2: VertexSet,
}

impl Partition {
    pub fn new(x1: VertexSet, x2: VertexSet) -> Result<Self> {
        if x1.universe() != x2.universe() {
            return Err(Error::NotAPartition(format!(
                "sides over different universes ({} vs {})",
                x1.universe(),
                x2.universe()
            )));
        }
        if !x1.is_disjoint(&x2) {
            let shared = x1.intersection(&x2);
            return Err(Error::NotAPartition(format!("sides overlap on {shared:?}")));
        }
        let missing = x1.union(&x2).complement();
        if !missing.is_empty() {
            return Err(Error::NotAPartition(format!(
                "vertices {missing:?} are on neither side"
            )));
        }
        Ok(Partition { x1, x2 })
    }

    /// `(X1, V \ X1)`.
    pub fn from_first(x1: VertexSet) -> Self {
        let x2 = x1.complement();
        Partition { x1, x2 }
    }

    /// Partition of `0..n` with `X1` given by the set bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self::from_first(VertexSet::from_mask(n, mask))
    }

    pub fn from_ids(n: usize, x1: &[usize]) -> Result<Self> {
        Ok(Self::from_first(VertexSet::from_ids(n, x1.iter().copied())?))
    }

    #[inline]
    pub fn x1(&self) -> &VertexSet {
        &self.x1
    }

    #[inline]
    pub fn x2(&self) -> &VertexSet {
        &self.x2
    }

    pub fn n(&self) -> usize {
        self.x1.universe()
    }

    pub fn into_sides(self) -> (VertexSet, VertexSet) {
        (self.x1, self.x2)
    }

    /// 1 or 2.
    pub fn side_of(&self, v: usize) -> u8 {
        if self.x1.contains(v) {
            1
        } else {
            2
        }
    }

    /// Moves `v` to the other side.
    pub(crate) fn flip(&mut self, v: usize) {
        if self.x1.remove(v) {
            self.x2.insert(v);
        } else {
            self.x2.remove(v);
            self.x1.insert(v);
        }
    }

    pub fn both_nonempty(&self) -> bool {
        !self.x1.is_empty() && !self.x2.is_empty()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x1, self.x2)
    }
}
