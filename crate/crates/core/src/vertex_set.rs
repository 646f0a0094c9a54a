use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A subset of the vertices of one particular graph.
///
/// Membership is a 64-bit mask; the tag is the structural fingerprint of the
/// owning graph and set algebra between sets of different graphs panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    tag: u64,
    n: usize,
    bits: u64,
}

impl VertexSet {
    pub fn empty(g: &Graph) -> Self {
        VertexSet {
            tag: g.tag(),
            n: g.n(),
            bits: 0,
        }
    }

    pub fn full(g: &Graph) -> Self {
        VertexSet {
            tag: g.tag(),
            n: g.n(),
            bits: g.full_mask(),
        }
    }

    pub fn from_vertices<I>(g: &Graph, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for v in vertices {
            if v >= g.n() {
                return Err(Error::domain(format!(
                    "vertex {v} out of range for graph of order {}",
                    g.n()
                )));
            }
            bits |= 1 << v;
        }
        Ok(VertexSet {
            tag: g.tag(),
            n: g.n(),
            bits,
        })
    }

    /// Builds a set from a raw mask. Bits at or above `g.n()` are rejected.
    pub fn from_mask(g: &Graph, bits: u64) -> Result<Self> {
        if bits & !g.full_mask() != 0 {
            return Err(Error::domain("mask has bits outside the vertex range"));
        }
        Ok(VertexSet {
            tag: g.tag(),
            n: g.n(),
            bits,
        })
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits >> v & 1 == 1
    }

    pub fn belongs_to(&self, g: &Graph) -> bool {
        self.tag == g.tag() && self.n == g.n()
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range");
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range");
        self.bits &= !(1 << v);
    }

    pub fn complement(&self) -> Self {
        let full = if self.n == MAX_VERTICES {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        VertexSet {
            bits: !self.bits & full,
            ..*self
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        VertexSet {
            bits: self.bits | other.bits,
            ..*self
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        VertexSet {
            bits: self.bits & other.bits,
            ..*self
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same(other);
        VertexSet {
            bits: self.bits & !other.bits,
            ..*self
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.bits & !other.bits == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same(&self, other: &Self) {
        assert!(
            self.tag == other.tag && self.n == other.n,
            "vertex sets belong to different graphs"
        );
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
