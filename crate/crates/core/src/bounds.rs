//! Closed-form lower and upper bounds on alliance numbers.
//!
//! Every bound is evaluated to an integer: real-valued lower bounds are
//! rounded up and clamped to at least 1, since alliances are nonempty.
//! A bound whose hypotheses fail (a nonpositive denominator, a missing
//! planarity assertion, an order below the threshold) is reported as
//! inapplicable with a reason rather than as an error.

use serde::Serialize;

use crate::alliance::{self, Requirement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{self, Parameter, SolveOptions};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// The quantity a bound constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Target {
    #[serde(rename = "a_k")]
    AK,
    #[serde(rename = "gamma_k_a")]
    GammaKA,
    #[serde(rename = "gamma_k_ca")]
    GammaKCA,
    /// The cardinality of one specific global defensive k-alliance.
    #[serde(rename = "alliance_size")]
    AllianceSize,
}

impl TryFrom<Parameter> for Target {
    type Error = Error;

    fn try_from(p: Parameter) -> Result<Target> {
        match p {
            Parameter::AK => Ok(Target::AK),
            Parameter::GammaKA => Ok(Target::GammaKA),
            Parameter::GammaKCA => Ok(Target::GammaKCA),
            other => Err(Error::domain(format!("no bound suite for {other}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    /// The inequality, written out.
    pub anchor: String,
    pub kind: BoundKind,
    pub target: Target,
    pub k: i64,
    pub value: Option<i64>,
    pub applicable: bool,
    pub reason: Option<String>,
}

impl BoundReport {
    fn holds(name: &str, anchor: &str, kind: BoundKind, target: Target, k: i64, value: i64) -> Self {
        BoundReport {
            name: name.to_string(),
            anchor: anchor.to_string(),
            kind,
            target,
            k,
            value: Some(value),
            applicable: true,
            reason: None,
        }
    }

    fn void(name: &str, anchor: &str, kind: BoundKind, target: Target, k: i64, why: impl Into<String>) -> Self {
        BoundReport {
            name: name.to_string(),
            anchor: anchor.to_string(),
            kind,
            target,
            k,
            value: None,
            applicable: false,
            reason: Some(why.into()),
        }
    }

    /// The same statement read as a bound on another quantity.
    pub fn for_target(mut self, target: Target) -> Self {
        self.target = target;
        self
    }
}

/// Largest applicable lower value.
pub fn aggregate_lower(reports: &[BoundReport]) -> Option<i64> {
    reports
        .iter()
        .filter(|r| r.applicable && r.kind == BoundKind::Lower)
        .filter_map(|r| r.value)
        .max()
}

/// Smallest applicable upper value.
pub fn aggregate_upper(reports: &[BoundReport]) -> Option<i64> {
    reports
        .iter()
        .filter(|r| r.applicable && r.kind == BoundKind::Upper)
        .filter_map(|r| r.value)
        .min()
}

fn ceil_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    num.div_euclid(den) + i64::from(num.rem_euclid(den) != 0)
}

fn floor_half(x: i64) -> i64 {
    x.div_euclid(2)
}

/// Smallest integer `s >= 0` with `s^2 + b·s - c >= 0`, for `c >= 0`; this
/// is the ceiling of the positive root `(-b + sqrt(b^2 + 4c)) / 2`,
/// computed without floating point.
fn ceil_positive_root(b: i64, c: i64) -> i64 {
    debug_assert!(c >= 0);
    let mut s = ceil_div(-b, 2).max(0);
    while s * s + b * s - c < 0 {
        s += 1;
    }
    s
}

const SQRT: &str = "gamma_k^a >= ceil((sqrt(4n + k^2) + k) / 2)";
const MIN_DEGREE: &str = "gamma_k^a <= n - floor((d_n - k) / 2)";
const MAX_DEGREE: &str = "gamma_k^a >= ceil(n / (floor((d_1 - k) / 2) + 1))";
const LINE: &str = "gamma_k^a(L) >= ceil(m / (floor((d_1 + d_2 - 2 - k) / 2) + 1))";
const CUBIC: &str = "cubic: gamma_{-1}^a <= 2 gamma";
const PLANAR: &str = "planar <S>, n > 2(2-k): |S| >= ceil((n + 12) / (7 - k))";
const PLANAR_TF: &str = "planar triangle-free <S>, n > 2(2-k): |S| >= ceil((n + 8) / (5 - k))";
const FACES: &str = "planar connected <S> with f faces: |S| >= ceil((n - 2f + 4) / (3 - k))";
const PLANAR_G: &str = "planar graph, n > 2(2-k): gamma_k^a >= ceil((n + 12) / (7 - k))";
const PLANAR_G_TF: &str = "planar triangle-free graph, n > 2(2-k): gamma_k^a >= ceil((n + 8) / (5 - k))";
const TREE: &str = "tree, <S> with c components: |S| >= ceil((n + 2c) / (3 - k))";
const CONN_I: &str = "gamma_k^ca >= ceil((sqrt(4(D + n - 1) + (1 - k)^2) + k - 1) / 2)";
const CONN_II: &str = "gamma_k^ca >= ceil((n + D - 1) / (floor((d_1 - k) / 2) + 2))";
const LINE_CONN_I: &str = "gamma_k^ca(L) >= ceil((sqrt(4(D + m - 2) + (1 - k)^2) - (1 - k)) / 2)";
const LINE_CONN_II: &str = "gamma_k^ca(L) >= ceil(2(m + D - 2) / (d_1 + d_2 - k + 2))";

pub fn lower_sqrt(n: usize, k: i64) -> BoundReport {
    let value = ceil_positive_root(-k, n as i64).max(1);
    BoundReport::holds("lower_sqrt", SQRT, BoundKind::Lower, Target::GammaKA, k, value)
}

/// `existence` states that a global defensive k-alliance is known to exist;
/// without it the bound says nothing. The bound also needs room to drop
/// `⌊(d_n - k)/2⌋` neighbours of one vertex, so it is void when that
/// exceeds `d_1`.
pub fn upper_min_degree(n: usize, d_min: usize, d_max: usize, k: i64, existence: bool) -> BoundReport {
    let (name, kind, target) = ("upper_min_degree", BoundKind::Upper, Target::GammaKA);
    if !existence {
        return BoundReport::void(
            name,
            MIN_DEGREE,
            kind,
            target,
            k,
            "existence of a global defensive k-alliance not established",
        );
    }
    let drop = floor_half(d_min as i64 - k);
    if drop > d_max as i64 {
        return BoundReport::void(
            name,
            MIN_DEGREE,
            kind,
            target,
            k,
            "k below -d_1 leaves too few neighbours to drop",
        );
    }
    BoundReport::holds(name, MIN_DEGREE, kind, target, k, n as i64 - drop)
}

pub fn lower_maxdeg(n: usize, d_max: usize, k: i64) -> BoundReport {
    let (name, kind, target) = ("lower_maxdeg", BoundKind::Lower, Target::GammaKA);
    if (d_max as i64) < k {
        return BoundReport::void(name, MAX_DEGREE, kind, target, k, "k exceeds d_1");
    }
    let den = floor_half(d_max as i64 - k) + 1;
    BoundReport::holds(name, MAX_DEGREE, kind, target, k, ceil_div(n as i64, den).max(1))
}

/// Bound on the line graph of a graph with `m` edges and two largest
/// degrees `d_1 >= d_2`.
pub fn line_graph_lower(m: usize, d1: usize, d2: usize, k: i64) -> BoundReport {
    let (name, kind, target) = ("line_graph_lower", BoundKind::Lower, Target::GammaKA);
    let top = d1 as i64 + d2 as i64 - 2 - k;
    if m == 0 {
        return BoundReport::void(name, LINE, kind, target, k, "graph has no edges");
    }
    if top < 0 {
        return BoundReport::void(name, LINE, kind, target, k, "k exceeds d_1 + d_2 - 2");
    }
    BoundReport::holds(
        name,
        LINE,
        kind,
        target,
        k,
        ceil_div(m as i64, floor_half(top) + 1).max(1),
    )
}

/// `2γ` for cubic graphs, solving for `γ`. Reported at `k = -1`.
pub fn cubic_upper_2gamma(g: &Graph) -> Result<BoundReport> {
    let gamma = if g.is_cubic() {
        solver::solve(g, Parameter::Gamma, None, SolveOptions::default())?.value
    } else {
        None
    };
    Ok(cubic_upper_from_gamma(g, -1, gamma))
}

fn cubic_upper_from_gamma(g: &Graph, k: i64, gamma: Option<usize>) -> BoundReport {
    let (name, kind, target) = ("cubic_upper_2gamma", BoundKind::Upper, Target::GammaKA);
    if !g.is_cubic() {
        return BoundReport::void(name, CUBIC, kind, target, k, "not cubic");
    }
    if k > -1 {
        return BoundReport::void(name, CUBIC, kind, target, k, "only bounds k <= -1");
    }
    match gamma {
        Some(gamma) => BoundReport::holds(name, CUBIC, kind, target, k, 2 * gamma as i64),
        None => BoundReport::void(name, CUBIC, kind, target, k, "domination number unavailable"),
    }
}

/// Bound on `|S|` for a global defensive k-alliance `S` whose induced
/// subgraph the caller asserts planar (and triangle-free for the second
/// variant).
pub fn planar_subgraph_lower(n: usize, k: i64, triangle_free: bool) -> BoundReport {
    planar_formula("planar_subgraph_lower", n, k, triangle_free, Target::AllianceSize)
}

fn planar_formula(name: &str, n: usize, k: i64, triangle_free: bool, target: Target) -> BoundReport {
    let whole_graph = target != Target::AllianceSize;
    let (anchor, add, cap) = match (triangle_free, whole_graph) {
        (false, false) => (PLANAR, 12, 7),
        (true, false) => (PLANAR_TF, 8, 5),
        (false, true) => (PLANAR_G, 12, 7),
        (true, true) => (PLANAR_G_TF, 8, 5),
    };
    let kind = BoundKind::Lower;
    if n as i64 <= 2 * (2 - k) {
        return BoundReport::void(
            name,
            anchor,
            kind,
            target,
            k,
            format!("n = {n} <= 2(2-k) = {}", 2 * (2 - k)),
        );
    }
    if k >= cap {
        return BoundReport::void(
            name,
            anchor,
            kind,
            target,
            k,
            format!("denominator {cap} - k is not positive"),
        );
    }
    BoundReport::holds(name, anchor, kind, target, k, ceil_div(n as i64 + add, cap - k).max(1))
}

/// Faces of a connected planar `⟨S⟩` from Euler's formula,
/// `Σ_{v∈S} δ_S(v) = 2(|S| + f - 2)`. Fails when `⟨S⟩` is disconnected or
/// has too many edges to be planar.
pub fn face_count(g: &Graph, s: &VertexSet) -> Result<i64> {
    let sub = g.induced_subgraph(s)?;
    if !sub.is_connected() {
        return Err(Error::domain("induced subgraph is not connected"));
    }
    let order = sub.n() as i64;
    if order >= 3 && sub.m() as i64 > 3 * (order - 2) {
        return Err(Error::domain(format!(
            "induced subgraph has {} > 3(|S|-2) edges, so it is not planar",
            sub.m()
        )));
    }
    let interior: i64 = alliance::boundary_degrees(g, s)
        .iter()
        .enumerate()
        .filter(|&(v, _)| s.contains(v))
        .map(|(_, b)| b.inside as i64)
        .sum();
    if interior % 2 != 0 {
        return Err(Error::Internal("odd interior degree sum".into()));
    }
    Ok(interior / 2 - order + 2)
}

pub fn faces_lower(n: usize, f: i64, k: i64) -> BoundReport {
    let (name, kind, target) = ("faces_lower", BoundKind::Lower, Target::AllianceSize);
    if k >= 3 {
        return BoundReport::void(name, FACES, kind, target, k, "denominator 3 - k is not positive");
    }
    BoundReport::holds(
        name,
        FACES,
        kind,
        target,
        k,
        ceil_div(n as i64 - 2 * f + 4, 3 - k).max(1),
    )
}

/// Whole-graph planar bound; void unless the graph carries a planarity
/// assertion (and, for the triangle-free variant, is triangle-free).
pub fn planar_graph_lower(g: &Graph, k: i64, triangle_free: bool) -> BoundReport {
    let name = if triangle_free {
        "planar_graph_lower_triangle_free"
    } else {
        "planar_graph_lower"
    };
    let anchor = if triangle_free { PLANAR_G_TF } else { PLANAR_G };
    if !g.flags().asserted_planar {
        return BoundReport::void(
            name,
            anchor,
            BoundKind::Lower,
            Target::GammaKA,
            k,
            "graph not asserted planar",
        );
    }
    if triangle_free && !g.is_triangle_free() {
        return BoundReport::void(
            name,
            anchor,
            BoundKind::Lower,
            Target::GammaKA,
            k,
            "graph has a triangle",
        );
    }
    planar_formula(name, g.n(), k, triangle_free, Target::GammaKA)
}

/// Bound on `|S|` for a global defensive k-alliance of a tree whose
/// induced subgraph has `c` components; `c = 1` gives the bound on the
/// alliance number of the tree.
pub fn tree_lower(n: usize, c: usize, k: i64) -> BoundReport {
    let (name, kind, target) = ("tree_lower", BoundKind::Lower, Target::AllianceSize);
    if k >= 3 {
        return BoundReport::void(name, TREE, kind, target, k, "denominator 3 - k is not positive");
    }
    BoundReport::holds(
        name,
        TREE,
        kind,
        target,
        k,
        ceil_div(n as i64 + 2 * c as i64, 3 - k).max(1),
    )
}

pub fn connected_lower_i(n: usize, diameter: usize, k: i64) -> BoundReport {
    let c = diameter as i64 + n as i64 - 1;
    let value = ceil_positive_root(1 - k, c).max(1);
    BoundReport::holds(
        "connected_lower_i",
        CONN_I,
        BoundKind::Lower,
        Target::GammaKCA,
        k,
        value,
    )
}

pub fn connected_lower_ii(n: usize, diameter: usize, d_max: usize, k: i64) -> BoundReport {
    let (name, kind, target) = ("connected_lower_ii", BoundKind::Lower, Target::GammaKCA);
    let den = floor_half(d_max as i64 - k) + 2;
    if den <= 0 {
        return BoundReport::void(name, CONN_II, kind, target, k, "denominator is not positive");
    }
    let value = ceil_div(n as i64 + diameter as i64 - 1, den).max(1);
    BoundReport::holds(name, CONN_II, kind, target, k, value)
}

/// Both connected bounds on the line graph of a connected graph with `m`
/// edges, diameter `D` and two largest degrees `d_1 >= d_2`.
pub fn line_graph_connected_lower(m: usize, diameter: usize, d1: usize, d2: usize, k: i64) -> [BoundReport; 2] {
    let kind = BoundKind::Lower;
    let target = Target::GammaKCA;
    if m == 0 {
        return [
            BoundReport::void(
                "line_graph_connected_lower_i",
                LINE_CONN_I,
                kind,
                target,
                k,
                "graph has no edges",
            ),
            BoundReport::void(
                "line_graph_connected_lower_ii",
                LINE_CONN_II,
                kind,
                target,
                k,
                "graph has no edges",
            ),
        ];
    }
    let c = (diameter as i64 + m as i64 - 2).max(0);
    let first = BoundReport::holds(
        "line_graph_connected_lower_i",
        LINE_CONN_I,
        kind,
        target,
        k,
        ceil_positive_root(1 - k, c).max(1),
    );
    // the line graph has maximum degree at most d_1 + d_2 - 2
    let den = d1 as i64 + d2 as i64 - k + 2;
    let second = if den <= 0 {
        BoundReport::void(
            "line_graph_connected_lower_ii",
            LINE_CONN_II,
            kind,
            target,
            k,
            "denominator is not positive",
        )
    } else {
        let num = 2 * (m as i64 + diameter as i64 - 2);
        BoundReport::holds(
            "line_graph_connected_lower_ii",
            LINE_CONN_II,
            kind,
            target,
            k,
            ceil_div(num, den).max(1),
        )
    };
    [first, second]
}

/// `γ_k^a(K_n) = ⌈(n + k + 1)/2⌉` for `1 - n <= k <= n - 1`.
pub fn kn_closed_form(n: usize, k: i64) -> Result<i64> {
    let n = n as i64;
    if n < 1 || k < 1 - n || k > n - 1 {
        return Err(Error::domain(format!("k = {k} outside 1-n..=n-1 for n = {n}")));
    }
    Ok(ceil_div(n + k + 1, 2))
}

/// Moves `k` up by one when degree parity makes `k` and `k + 1` equivalent:
/// all degrees even with `k` odd, or all degrees odd with `k` even.
pub fn parity_collapse(g: &Graph, k: i64) -> i64 {
    let all_even = (0..g.n()).all(|v| g.degree(v).is_multiple_of(2));
    let all_odd = (0..g.n()).all(|v| g.degree(v) % 2 == 1);
    let k_odd = k.rem_euclid(2) == 1;
    if (all_even && k_odd) || (all_odd && !k_odd) {
        k + 1
    } else {
        k
    }
}

/// Extra facts that widen which bounds apply.
#[derive(Clone, Copy, Debug, Default)]
pub struct BoundContext {
    /// Caller vouches that a global defensive k-alliance exists.
    pub assume_exists: bool,
    /// Known domination number, used by the cubic bound.
    pub gamma: Option<usize>,
}

/// Lower bounds that need no solver call.
fn lower_suite(g: &Graph, k: i64, target: Target) -> Vec<BoundReport> {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 || target == Target::AK {
        return out;
    }
    let d1 = g.max_degree();
    out.push(lower_sqrt(n, k).for_target(target));
    out.push(lower_maxdeg(n, d1, k).for_target(target));
    out.push(planar_graph_lower(g, k, false).for_target(target));
    out.push(planar_graph_lower(g, k, true).for_target(target));
    if g.is_tree() {
        out.push(tree_lower(n, 1, k).for_target(target));
    }
    if target == Target::GammaKCA {
        match g.diameter() {
            Ok(d) => {
                out.push(connected_lower_i(n, d, k));
                out.push(connected_lower_ii(n, d, d1, k));
            }
            Err(_) => {
                out.push(BoundReport::void(
                    "connected_lower_i",
                    CONN_I,
                    BoundKind::Lower,
                    target,
                    k,
                    "graph is disconnected",
                ));
                out.push(BoundReport::void(
                    "connected_lower_ii",
                    CONN_II,
                    BoundKind::Lower,
                    target,
                    k,
                    "graph is disconnected",
                ));
            }
        }
    }
    out
}

/// Every bound on `target` that `g` is eligible for, at level `k`.
/// Needs the domination number for cubic graphs at `k <= -1`; it is
/// computed when not supplied.
pub fn evaluate_with(g: &Graph, k: i64, target: Target, ctx: &BoundContext) -> Result<Vec<BoundReport>> {
    let mut out = lower_suite(g, k, target);
    if g.n() == 0 || target == Target::GammaKCA || target == Target::AllianceSize {
        return Ok(out);
    }
    let (d1, dn) = (g.max_degree(), g.min_degree());
    let existence = ctx.assume_exists || k <= dn as i64;
    out.push(upper_min_degree(g.n(), dn, d1, k, existence).for_target(target));
    if target == Target::GammaKA {
        let gamma = match ctx.gamma {
            Some(gamma) => Some(gamma),
            None if g.is_cubic() && k <= -1 => solver::solve(g, Parameter::Gamma, None, SolveOptions::default())?.value,
            None => None,
        };
        out.push(cubic_upper_from_gamma(g, k, gamma));
    }
    Ok(out)
}

pub fn evaluate_all(g: &Graph, k: i64, target: Target) -> Result<Vec<BoundReport>> {
    evaluate_with(g, k, target, &BoundContext::default())
}

/// Bounds on the line graph of `g`, stated in terms of `g`.
pub fn evaluate_line_graph(g: &Graph, k: i64, target: Target) -> Vec<BoundReport> {
    let seq = g.degree_sequence();
    let (m, d1, d2) = (g.m(), seq.max(), seq.second_max());
    match target {
        Target::GammaKA => vec![line_graph_lower(m, d1, d2, k)],
        Target::GammaKCA => match g.diameter() {
            Ok(d) if m > 0 => {
                let mut out = vec![line_graph_lower(m, d1, d2, k).for_target(Target::GammaKCA)];
                out.extend(line_graph_connected_lower(m, d, d1, d2, k));
                out
            }
            _ => Vec::new(),
        },
        _ => Vec::new(),
    }
}

/// Bounds on the size of one specific set `s`, which must certify as a
/// global defensive k-alliance. `assume_planar` asserts `⟨s⟩` is planar;
/// the graph's own planarity assertion implies it.
pub fn evaluate_for_set(g: &Graph, s: &VertexSet, k: i64, assume_planar: bool) -> Result<Vec<BoundReport>> {
    let cert = alliance::certify(g, s, k, Requirement::Global)?;
    if !cert.holds {
        return Err(Error::domain(format!("{:?} is not a global defensive {k}-alliance", s)));
    }
    let n = g.n();
    let planar = assume_planar || g.flags().asserted_planar;
    let mut out = Vec::new();
    let sub = g.induced_subgraph(s)?;
    if planar {
        out.push(planar_subgraph_lower(n, k, false));
        if sub.is_triangle_free() {
            out.push(planar_subgraph_lower(n, k, true));
        }
        if sub.is_connected() {
            let f = face_count(g, s)?;
            out.push(faces_lower(n, f, k));
        }
    }
    if g.is_tree() {
        out.push(tree_lower(n, g.connected_components_of(s), k));
    }
    Ok(out)
}

/// Lower bound used to seed the solver's first cardinality. Uses only
/// bounds whose hypotheses `g` verifiably meets.
pub fn solver_floor(g: &Graph, parameter: Parameter, k: i64) -> usize {
    let reports = match parameter {
        Parameter::AK => return 1,
        Parameter::GammaKA => lower_suite(g, k, Target::GammaKA),
        Parameter::GammaKCA => lower_suite(g, k, Target::GammaKCA),
        // γ = γ_{-d_1}^a and γ_t >= γ
        Parameter::Gamma | Parameter::GammaT => lower_suite(g, -(g.max_degree() as i64), Target::GammaKA),
    };
    aggregate_lower(&reports).unwrap_or(1).max(1) as usize
}
