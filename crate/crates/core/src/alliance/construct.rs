//! Constructions that turn one alliance (or dominating set) into another.
//!
//! Each procedure re-certifies its output before returning it; a failed
//! re-certification is reported as [`Error::Internal`]. All choices break
//! ties by smallest vertex index.

use super::{certify, is_dominating, Requirement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn recertify(g: &Graph, s: &VertexSet, k: i64, what: &str) -> Result<()> {
    let cert = certify(g, s, k, Requirement::Global)?;
    if cert.holds {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "{what}: {:?} is not a global defensive {k}-alliance",
            s
        )))
    }
}

/// Removes the `r` smallest members of `S \ W` from a global defensive
/// k-alliance `S`. Since each remaining member loses at most `r` inside
/// neighbours and gains as many outside ones, the result is a global
/// defensive `(k - 2r)`-alliance still dominated by `W`.
pub fn shrink_to_lower_k(g: &Graph, s: &VertexSet, k: i64, w: &VertexSet, r: usize) -> Result<VertexSet> {
    if !certify(g, s, k, Requirement::Global)?.holds {
        return Err(Error::domain(format!("input is not a global defensive {k}-alliance")));
    }
    if !w.belongs_to(g) || !w.is_subset(s) {
        return Err(Error::domain("W must be a subset of S"));
    }
    if !is_dominating(g, w) {
        return Err(Error::domain("W must dominate the graph"));
    }
    let removable = s.difference(w);
    if r > removable.len() {
        return Err(Error::domain(format!(
            "r = {r} exceeds |S| - |W| = {}",
            removable.len()
        )));
    }
    let mut y = *s;
    for v in removable.iter().take(r) {
        y.remove(v);
    }
    recertify(g, &y, k - 2 * r as i64, "shrink_to_lower_k")?;
    Ok(y)
}

/// Drops `⌊(d_n - k)/2⌋` neighbours of the first maximum-degree vertex
/// from `V`. Every survivor loses at most that many inside neighbours,
/// which `δ(v) >= d_n` absorbs, and the chosen vertex dominates what was
/// dropped.
///
/// For `k >= d_n` the whole vertex set is returned unchanged; it is an
/// alliance only when `k == d_n`.
pub fn construct_upper_witness(g: &Graph, k: i64) -> Result<VertexSet> {
    if g.n() == 0 {
        return Err(Error::domain("empty graph"));
    }
    let full = VertexSet::full(g);
    let dn = g.min_degree() as i64;
    if k >= dn {
        if k == dn {
            recertify(g, &full, k, "construct_upper_witness")?;
        }
        return Ok(full);
    }
    let drop = ((dn - k) / 2) as usize;
    let d1 = g.max_degree();
    let hub = (0..g.n())
        .find(|&v| g.degree(v) == d1)
        .expect("nonempty graph has a vertex of maximum degree");
    if drop > d1 {
        return Err(Error::domain(format!(
            "k = {k} is too small: {drop} removals exceed the maximum degree {d1}"
        )));
    }
    let mut result = full;
    for &u in g.neighbors(hub).iter().take(drop) {
        result.remove(u);
    }
    recertify(g, &result, k, "construct_upper_witness")?;
    Ok(result)
}

/// Extends a dominating set of a cubic graph to a global defensive
/// (-1)-alliance by giving every isolated member of `⟨S⟩` its smallest
/// neighbour. At most `|S|` vertices are added.
pub fn cubic_augment_dominating(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if !g.is_cubic() {
        return Err(Error::domain("graph is not cubic"));
    }
    if !s.belongs_to(g) || !is_dominating(g, s) {
        return Err(Error::domain("set does not dominate the graph"));
    }
    let mut result = *s;
    for v in s.iter() {
        if g.neighbor_mask(v) & s.mask() == 0 {
            result.insert(g.neighbors(v)[0]);
        }
    }
    recertify(g, &result, -1, "cubic_augment_dominating")?;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    fn set(g: &Graph, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(g, vs.iter().copied()).unwrap()
    }

    #[test]
    fn shrink_with_zero_r_is_identity() {
        let q3 = hypercube(3).unwrap();
        let v = VertexSet::full(&q3);
        let w = set(&q3, &[0, 7]);
        assert_eq!(shrink_to_lower_k(&q3, &v, 3, &w, 0).unwrap(), v);
    }

    #[test]
    fn shrink_complete_graph() {
        let k5 = complete(5).unwrap();
        let y = shrink_to_lower_k(&k5, &VertexSet::full(&k5), 4, &set(&k5, &[0]), 2).unwrap();
        assert_eq!(y.to_vec(), vec![0, 3, 4]);
        assert!(certify(&k5, &y, 0, Requirement::Global).unwrap().holds);
    }

    #[test]
    fn shrink_cube() {
        let q3 = hypercube(3).unwrap();
        let y = shrink_to_lower_k(&q3, &VertexSet::full(&q3), 3, &set(&q3, &[0, 7]), 1).unwrap();
        assert_eq!(y.len(), 7);
        assert!(certify(&q3, &y, 1, Requirement::Global).unwrap().holds);
    }

    #[test]
    fn shrink_rejects_bad_preconditions() {
        let q3 = hypercube(3).unwrap();
        let v = VertexSet::full(&q3);
        assert!(shrink_to_lower_k(&q3, &v, 4, &set(&q3, &[0, 7]), 1).is_err());
        assert!(shrink_to_lower_k(&q3, &v, 3, &set(&q3, &[0]), 1).is_err());
        assert!(shrink_to_lower_k(&q3, &v, 3, &set(&q3, &[0, 7]), 7).is_err());
    }

    #[test]
    fn upper_witness_examples() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(construct_upper_witness(&q3, 3).unwrap(), VertexSet::full(&q3));
        let w = construct_upper_witness(&q3, -3).unwrap();
        assert_eq!(w.len(), 5);
        assert!(certify(&q3, &w, -3, Requirement::Global).unwrap().holds);

        let k5 = complete(5).unwrap();
        let w = construct_upper_witness(&k5, 0).unwrap();
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn upper_witness_rejects_unreachable_k() {
        let k2 = complete(2).unwrap();
        assert!(construct_upper_witness(&k2, -10).is_err());
    }

    #[test]
    fn cubic_augment_examples() {
        let q3 = hypercube(3).unwrap();
        let out = cubic_augment_dominating(&q3, &set(&q3, &[0, 7])).unwrap();
        assert_eq!(out.len(), 4);

        let face = set(&q3, &[0, 1, 2, 3]);
        assert_eq!(cubic_augment_dominating(&q3, &face).unwrap(), face);

        let p = petersen();
        // first dominating triple in lex order
        let dom = (0..p.n())
            .flat_map(|a| (a + 1..p.n()).flat_map(move |b| (b + 1..10).map(move |c| [a, b, c])))
            .map(|t| set(&p, &t))
            .find(|s| is_dominating(&p, s))
            .unwrap();
        let out = cubic_augment_dominating(&p, &dom).unwrap();
        assert!(out.len() <= 6);

        assert!(cubic_augment_dominating(&star(4).unwrap(), &set(&star(4).unwrap(), &[0])).is_err());
        assert!(cubic_augment_dominating(&q3, &set(&q3, &[0])).is_err());
    }
}
