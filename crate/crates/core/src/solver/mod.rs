//! Exact alliance and domination numbers.
//!
//! Cardinalities are tried in increasing order starting from the best
//! applicable lower bound. Within a cardinality, subsets are visited in
//! lexicographic order by depth-first search over increasing vertex
//! indices, so the first feasible subset found is the lexicographically
//! least witness. A partial selection is dropped as soon as some chosen
//! vertex cannot reach its alliance threshold or some vertex can no longer
//! be dominated.

pub mod oracle;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_N: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parameter {
    /// Smallest defensive k-alliance.
    #[serde(rename = "a_k")]
    AK,
    /// Smallest global defensive k-alliance.
    #[serde(rename = "gamma_k_a")]
    GammaKA,
    /// Smallest global connected defensive k-alliance.
    #[serde(rename = "gamma_k_ca")]
    GammaKCA,
    /// Domination number.
    #[serde(rename = "gamma")]
    Gamma,
    /// Total domination number.
    #[serde(rename = "gamma_t")]
    GammaT,
}

impl Parameter {
    pub const ALL: [Parameter; 5] = [
        Parameter::AK,
        Parameter::GammaKA,
        Parameter::GammaKCA,
        Parameter::Gamma,
        Parameter::GammaT,
    ];

    pub fn takes_k(self) -> bool {
        matches!(self, Parameter::AK | Parameter::GammaKA | Parameter::GammaKCA)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parameter::AK => "a_k",
            Parameter::GammaKA => "gamma_k_a",
            Parameter::GammaKCA => "gamma_k_ca",
            Parameter::Gamma => "gamma",
            Parameter::GammaT => "gamma_t",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    /// Accepts both the short command-line names and the report names.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ak" | "a_k" => Ok(Parameter::AK),
            "gka" | "gamma_k_a" => Ok(Parameter::GammaKA),
            "gkca" | "gamma_k_ca" => Ok(Parameter::GammaKCA),
            "gamma" => Ok(Parameter::Gamma),
            "gammat" | "gamma_t" => Ok(Parameter::GammaT),
            other => Err(Error::domain(format!("unknown parameter `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Found,
    NoneExists,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub subsets: u64,
    pub prunes: u64,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub parameter: Parameter,
    pub k: Option<i64>,
    pub status: Status,
    pub value: Option<usize>,
    #[serde(serialize_with = "witness_as_list")]
    pub witness: Option<VertexSet>,
    pub stats: SearchStats,
}

fn witness_as_list<S: Serializer>(w: &Option<VertexSet>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    let list = w.map(|s| s.to_vec()).unwrap_or_default();
    list.serialize(ser)
}

impl SolveResult {
    pub fn is_found(&self) -> bool {
        self.status == Status::Found
    }

    pub(crate) fn from_mask(
        g: &Graph,
        parameter: Parameter,
        k: Option<i64>,
        mask: Option<u64>,
        stats: SearchStats,
    ) -> SolveResult {
        let witness = mask.map(|m| VertexSet::from_mask(g, m).expect("mask within range"));
        SolveResult {
            parameter,
            k,
            status: if witness.is_some() {
                Status::Found
            } else {
                Status::NoneExists
            },
            value: witness.map(|w| w.len()),
            witness,
            stats,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub use_pruning: bool,
    pub workers: usize,
    pub max_n: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            use_pruning: true,
            workers: 1,
            max_n: DEFAULT_MAX_N,
        }
    }
}

/// What a candidate set must satisfy.
#[derive(Clone, Copy, Debug)]
struct Constraints {
    alliance_k: Option<i64>,
    dominating: bool,
    total: bool,
    connected: bool,
}

impl Constraints {
    fn new(parameter: Parameter, k: i64) -> Self {
        let none = Constraints {
            alliance_k: None,
            dominating: false,
            total: false,
            connected: false,
        };
        match parameter {
            Parameter::AK => Constraints {
                alliance_k: Some(k),
                ..none
            },
            Parameter::GammaKA => Constraints {
                alliance_k: Some(k),
                dominating: true,
                ..none
            },
            Parameter::GammaKCA => Constraints {
                alliance_k: Some(k),
                dominating: true,
                connected: true,
                ..none
            },
            Parameter::Gamma => Constraints {
                dominating: true,
                ..none
            },
            Parameter::GammaT => Constraints { total: true, ..none },
        }
    }
}

fn resolve_k(parameter: Parameter, k: Option<i64>) -> Result<Option<i64>> {
    match (parameter.takes_k(), k) {
        (true, Some(k)) => Ok(Some(k)),
        (true, None) => Err(Error::domain(format!("{parameter} requires k"))),
        (false, _) => Ok(None),
    }
}

pub(crate) fn check_size(g: &Graph, cap: usize) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::domain("graph has no vertices"));
    }
    if g.n() > cap.min(MAX_VERTICES) {
        return Err(Error::Resource(format!(
            "order {} exceeds the solver cap of {}",
            g.n(),
            cap.min(MAX_VERTICES)
        )));
    }
    Ok(())
}

pub fn solve(g: &Graph, parameter: Parameter, k: Option<i64>, options: SolveOptions) -> Result<SolveResult> {
    let started = Instant::now();
    check_size(g, options.max_n)?;
    let k = resolve_k(parameter, k)?;
    let constraints = Constraints::new(parameter, k.unwrap_or(0));
    let floor = if options.use_pruning {
        bounds::solver_floor(g, parameter, k.unwrap_or(0)).max(1)
    } else {
        1
    };

    let counters = Counters::default();
    let search = Search {
        masks: g.neighbor_masks(),
        degrees: (0..g.n()).map(|v| g.degree(v) as i64).collect(),
        n: g.n(),
        full: g.full_mask(),
        constraints,
        prune: options.use_pruning,
    };

    let mut found = None;
    if options.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.workers)
            .build()
            .map_err(|e| Error::Resource(format!("worker pool: {e}")))?;
        for size in floor..=g.n() {
            found = pool.install(|| search.first_of_size_parallel(size, &counters));
            if found.is_some() {
                break;
            }
        }
    } else {
        for size in floor..=g.n() {
            found = search.first_of_size(size, &counters);
            if found.is_some() {
                break;
            }
        }
    }

    let stats = SearchStats {
        subsets: counters.subsets.load(Ordering::Relaxed),
        prunes: counters.prunes.load(Ordering::Relaxed),
        millis: started.elapsed().as_millis() as u64,
    };
    Ok(SolveResult::from_mask(g, parameter, k, found, stats))
}

#[derive(Default)]
struct Counters {
    subsets: AtomicU64,
    prunes: AtomicU64,
}

struct Search<'a> {
    masks: &'a [u64],
    degrees: Vec<i64>,
    n: usize,
    full: u64,
    constraints: Constraints,
    prune: bool,
}

/// Per-task state of one depth-first walk.
struct Walk<'a> {
    subsets: u64,
    prunes: u64,
    first: usize,
    /// Smallest first vertex that has produced a witness in any worker.
    best_first: Option<&'a AtomicUsize>,
}

impl Walk<'_> {
    fn superseded(&self) -> bool {
        self.best_first.is_some_and(|b| b.load(Ordering::Relaxed) < self.first)
    }
}

impl Search<'_> {
    fn first_of_size(&self, size: usize, counters: &Counters) -> Option<u64> {
        for first in 0..=self.n - size {
            let mut walk = Walk {
                subsets: 0,
                prunes: 0,
                first,
                best_first: None,
            };
            let hit = self.descend(1 << first, first + 1, size - 1, &mut walk);
            counters.subsets.fetch_add(walk.subsets, Ordering::Relaxed);
            counters.prunes.fetch_add(walk.prunes, Ordering::Relaxed);
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    /// Splits the lexicographic range by first vertex. Any witness from a
    /// smaller first vertex precedes all witnesses from larger ones, so
    /// workers with a larger first vertex stop once a smaller one succeeds.
    fn first_of_size_parallel(&self, size: usize, counters: &Counters) -> Option<u64> {
        let best_first = AtomicUsize::new(usize::MAX);
        (0..=self.n - size)
            .into_par_iter()
            .filter_map(|first| {
                let mut walk = Walk {
                    subsets: 0,
                    prunes: 0,
                    first,
                    best_first: Some(&best_first),
                };
                let hit = if walk.superseded() {
                    None
                } else {
                    self.descend(1 << first, first + 1, size - 1, &mut walk)
                };
                counters.subsets.fetch_add(walk.subsets, Ordering::Relaxed);
                counters.prunes.fetch_add(walk.prunes, Ordering::Relaxed);
                if hit.is_some() {
                    best_first.fetch_min(first, Ordering::Relaxed);
                }
                hit.map(|m| (first, m))
            })
            .min_by_key(|&(first, _)| first)
            .map(|(_, m)| m)
    }

    fn descend(&self, chosen: u64, next: usize, remaining: usize, walk: &mut Walk) -> Option<u64> {
        if walk.superseded() {
            return None;
        }
        if remaining == 0 {
            walk.subsets += 1;
            return self.feasible(chosen).then_some(chosen);
        }
        if self.prune && self.hopeless(chosen, next, remaining) {
            walk.prunes += 1;
            return None;
        }
        for v in next..=self.n - remaining {
            if let Some(hit) = self.descend(chosen | 1 << v, v + 1, remaining - 1, walk) {
                return Some(hit);
            }
        }
        None
    }

    fn hopeless(&self, chosen: u64, next: usize, remaining: usize) -> bool {
        let future = self.full & !((1u64 << next) - 1);
        let reachable = chosen | future;
        if let Some(k) = self.constraints.alliance_k {
            let mut rest = chosen;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let inside = (self.masks[v] & chosen).count_ones() as i64;
                let gain = ((self.masks[v] & future).count_ones() as i64).min(remaining as i64);
                if 2 * (inside + gain) < self.degrees[v] + k {
                    return true;
                }
            }
        }
        if self.constraints.total {
            if (0..self.n).any(|u| self.masks[u] & reachable == 0) {
                return true;
            }
        } else if self.constraints.dominating {
            let mut excluded = self.full & !reachable;
            while excluded != 0 {
                let u = excluded.trailing_zeros() as usize;
                excluded &= excluded - 1;
                if self.masks[u] & reachable == 0 {
                    return true;
                }
            }
        }
        false
    }

    fn feasible(&self, s: u64) -> bool {
        let c = &self.constraints;
        if let Some(k) = c.alliance_k {
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let inside = (self.masks[v] & s).count_ones() as i64;
                if 2 * inside < self.degrees[v] + k {
                    return false;
                }
            }
        }
        if c.dominating {
            let mut outside = self.full & !s;
            while outside != 0 {
                let u = outside.trailing_zeros() as usize;
                outside &= outside - 1;
                if self.masks[u] & s == 0 {
                    return false;
                }
            }
        }
        if c.total && (0..self.n).any(|u| self.masks[u] & s == 0) {
            return false;
        }
        if c.connected && !self.connected(s) {
            return false;
        }
        true
    }

    fn connected(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let mut seen = s & s.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.masks[v] & s & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == s
    }
}

/// Existence of defensive and global defensive k-alliances at one k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub k: i64,
    pub exists_defensive: bool,
    pub exists_global: bool,
    pub a_k: Option<usize>,
    pub gamma_k_a: Option<usize>,
}

/// Existence flags for every `k` in `-d_1..=d_1`.
pub fn feasibility_profile(g: &Graph, options: SolveOptions) -> Result<Vec<Feasibility>> {
    let d1 = g.max_degree() as i64;
    (-d1..=d1)
        .map(|k| {
            let a = solve(g, Parameter::AK, Some(k), options)?;
            let ga = solve(g, Parameter::GammaKA, Some(k), options)?;
            Ok(Feasibility {
                k,
                exists_defensive: a.is_found(),
                exists_global: ga.is_found(),
                a_k: a.value,
                gamma_k_a: ga.value,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    fn value(g: &Graph, p: Parameter, k: Option<i64>) -> Option<usize> {
        solve(g, p, k, SolveOptions::default()).unwrap().value
    }

    #[test]
    fn cube_values() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(value(&q3, Parameter::AK, Some(-1)), Some(2));
        assert_eq!(value(&q3, Parameter::AK, Some(0)), Some(4));
        assert_eq!(value(&q3, Parameter::GammaKA, Some(0)), Some(4));
        assert_eq!(value(&q3, Parameter::Gamma, None), Some(2));
        assert_eq!(value(&q3, Parameter::GammaT, None), Some(4));
    }

    #[test]
    fn complete_and_petersen() {
        assert_eq!(value(&complete(7).unwrap(), Parameter::GammaKA, Some(2)), Some(5));
        assert_eq!(value(&petersen(), Parameter::GammaKA, Some(2)), Some(10));
    }

    #[test]
    fn nonregular_graph_has_no_global_alliance_at_max_degree() {
        let g = star(5).unwrap();
        let r = solve(&g, Parameter::GammaKA, Some(4), SolveOptions::default()).unwrap();
        assert_eq!(r.status, Status::NoneExists);
        assert!(r.witness.is_none() && r.value.is_none());
    }

    #[test]
    fn k_is_required_for_alliance_parameters() {
        let g = path(3).unwrap();
        assert!(solve(&g, Parameter::AK, None, SolveOptions::default()).is_err());
        let r = solve(&g, Parameter::Gamma, Some(5), SolveOptions::default()).unwrap();
        assert_eq!(r.k, None);
    }

    #[test]
    fn size_cap() {
        let g = path(30).unwrap();
        let err = solve(&g, Parameter::Gamma, None, SolveOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
        let opts = SolveOptions {
            max_n: 32,
            ..SolveOptions::default()
        };
        assert_eq!(solve(&g, Parameter::Gamma, None, opts).unwrap().value, Some(10));
        assert!(solve(&Graph::new(0, []).unwrap(), Parameter::Gamma, None, opts).is_err());
    }

    #[test]
    fn witness_independent_of_workers_and_pruning() {
        let g = random_graph(13, 0.35, 11).unwrap();
        for p in Parameter::ALL {
            for k in [-2, 0, 1] {
                let base = solve(&g, p, Some(k), SolveOptions::default()).unwrap();
                for (workers, use_pruning) in [(4, true), (3, false), (1, false)] {
                    let opts = SolveOptions {
                        use_pruning,
                        workers,
                        ..SolveOptions::default()
                    };
                    let other = solve(&g, p, Some(k), opts).unwrap();
                    assert_eq!(other.witness, base.witness, "{p} k={k} workers={workers}");
                }
            }
        }
    }

    #[test]
    fn star_profile() {
        let profile = feasibility_profile(&star(5).unwrap(), SolveOptions::default()).unwrap();
        assert_eq!(profile.len(), 9);
        for row in &profile {
            assert_eq!(row.exists_defensive, row.k < 2, "k = {}", row.k);
        }
        assert!(profile[0].exists_global);
    }

    #[test]
    fn result_json_shape() {
        let q3 = hypercube(3).unwrap();
        let r = solve(&q3, Parameter::GammaKA, Some(0), SolveOptions::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["parameter"], "gamma_k_a");
        assert_eq!(v["status"], "found");
        assert_eq!(v["value"], 4);
        assert_eq!(v["witness"].as_array().unwrap().len(), 4);
        assert!(v["stats"]["subsets"].is_u64());
    }
}
