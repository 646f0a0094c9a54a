use serde::Serialize;

use super::{boundary_degrees, check_nonempty, induces_connected};
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Requirement {
    Defensive,
    Global,
    GlobalConnected,
}

/// Margin of a member: `δ_S(v) - δ_S̄(v) - k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberMargin {
    pub vertex: usize,
    pub inside: usize,
    pub outside: usize,
    pub margin: i64,
}

/// Number of members adjacent to a non-member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dominators {
    pub vertex: usize,
    pub count: usize,
}

/// Evidence for or against an alliance claim.
#[derive(Clone, Debug, Serialize)]
pub struct AllianceCertificate {
    pub set: Vec<usize>,
    pub k: i64,
    pub requirement: Requirement,
    pub members: Vec<MemberMargin>,
    pub outsiders: Vec<Dominators>,
    pub is_defensive: bool,
    pub is_dominating: bool,
    pub is_connected_induced: bool,
    /// The requested predicate.
    pub holds: bool,
}

impl AllianceCertificate {
    /// `Σ_{v∈S} δ_S(v)`.
    pub fn interior_degree_sum(&self) -> usize {
        self.members.iter().map(|m| m.inside).sum()
    }

    /// `Σ_{v∈S} δ_S̄(v)`.
    pub fn exterior_degree_sum(&self) -> usize {
        self.members.iter().map(|m| m.outside).sum()
    }

    /// Returns the violated counting inequalities, if any: every vertex
    /// outside a dominating set is reached by some edge leaving it, and
    /// an alliance's interior degree sum is squeezed between `k|S| +
    /// Σ δ_S̄` and `|S|(|S| - 1)`.
    pub fn counting_violations(&self, n: usize) -> Vec<String> {
        let size = self.set.len() as i64;
        let inside = self.interior_degree_sum() as i64;
        let outside = self.exterior_degree_sum() as i64;
        let mut out = Vec::new();
        if self.is_dominating && n as i64 - size > outside {
            out.push(format!("n-|S| = {} > exterior sum {outside}", n as i64 - size));
        }
        if self.is_defensive {
            if self.k * size + outside > inside {
                out.push(format!(
                    "k|S| + exterior sum = {} > interior sum {inside}",
                    self.k * size + outside
                ));
            }
            if inside > size * (size - 1) {
                out.push(format!("interior sum {inside} > |S|(|S|-1)"));
            }
        }
        out
    }
}

pub fn certify(g: &Graph, s: &VertexSet, k: i64, requirement: Requirement) -> Result<AllianceCertificate> {
    check_nonempty(g, s)?;
    let degrees = boundary_degrees(g, s);
    let members: Vec<MemberMargin> = s
        .iter()
        .map(|v| MemberMargin {
            vertex: v,
            inside: degrees[v].inside,
            outside: degrees[v].outside,
            margin: degrees[v].inside as i64 - degrees[v].outside as i64 - k,
        })
        .collect();
    let outsiders: Vec<Dominators> = s
        .complement()
        .iter()
        .map(|u| Dominators {
            vertex: u,
            count: degrees[u].inside,
        })
        .collect();
    let is_defensive = members.iter().all(|m| m.margin >= 0);
    let is_dominating = outsiders.iter().all(|d| d.count >= 1);
    let is_connected_induced = induces_connected(g, s);
    let holds = match requirement {
        Requirement::Defensive => is_defensive,
        Requirement::Global => is_defensive && is_dominating,
        Requirement::GlobalConnected => is_defensive && is_dominating && is_connected_induced,
    };
    Ok(AllianceCertificate {
        set: s.to_vec(),
        k,
        requirement,
        members,
        outsiders,
        is_defensive,
        is_dominating,
        is_connected_induced,
        holds,
    })
}
