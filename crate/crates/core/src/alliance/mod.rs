//! Defensive k-alliance and domination predicates.
//!
//! A nonempty set `S` is a defensive k-alliance when every member has at
//! least `k` more neighbours inside `S` than outside it:
//! `δ_S(v) >= δ_S̄(v) + k`, equivalently `δ(v) >= 2·δ_S̄(v) + k`.

mod certificate;
mod construct;

pub use certificate::{certify, AllianceCertificate, Requirement};
pub use construct::{construct_upper_witness, cubic_augment_dominating, shrink_to_lower_k};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Interior and exterior neighbour counts of a vertex relative to a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryDegree {
    pub inside: usize,
    pub outside: usize,
}

/// `(δ_S(v), δ_S̄(v))` for every vertex of `g`.
pub fn boundary_degrees(g: &Graph, s: &VertexSet) -> Vec<BoundaryDegree> {
    assert!(s.belongs_to(g), "vertex set belongs to another graph");
    (0..g.n())
        .map(|v| {
            let nbrs = g.neighbor_mask(v);
            BoundaryDegree {
                inside: (nbrs & s.mask()).count_ones() as usize,
                outside: (nbrs & !s.mask()).count_ones() as usize,
            }
        })
        .collect()
}

pub(crate) fn check_nonempty(g: &Graph, s: &VertexSet) -> Result<()> {
    if !s.belongs_to(g) {
        return Err(Error::domain("vertex set belongs to another graph"));
    }
    if s.is_empty() {
        return Err(Error::domain("alliances are nonempty"));
    }
    Ok(())
}

/// Whether `v` meets the alliance inequality for `s` at level `k`.
pub fn is_k_satisfied(g: &Graph, s: &VertexSet, v: usize, k: i64) -> bool {
    let inside = (g.neighbor_mask(v) & s.mask()).count_ones() as i64;
    let outside = g.degree(v) as i64 - inside;
    inside >= outside + k
}

pub fn is_defensive_k_alliance(g: &Graph, s: &VertexSet, k: i64) -> Result<bool> {
    check_nonempty(g, s)?;
    Ok(s.iter().all(|v| is_k_satisfied(g, s, v, k)))
}

pub fn is_global_defensive_k_alliance(g: &Graph, s: &VertexSet, k: i64) -> Result<bool> {
    Ok(is_defensive_k_alliance(g, s, k)? && is_dominating(g, s))
}

/// Every vertex outside `s` has a neighbour in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    assert!(s.belongs_to(g), "vertex set belongs to another graph");
    (0..g.n()).all(|u| s.contains(u) || g.neighbor_mask(u) & s.mask() != 0)
}

/// Every vertex of `g`, members included, has a neighbour in `s`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    assert!(s.belongs_to(g), "vertex set belongs to another graph");
    (0..g.n()).all(|u| g.neighbor_mask(u) & s.mask() != 0)
}

/// Whether `⟨s⟩` is connected; the empty set is not.
pub fn induces_connected(g: &Graph, s: &VertexSet) -> bool {
    g.components_in_mask(s.mask()) == 1
}
