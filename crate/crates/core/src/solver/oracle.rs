//! Unpruned reference enumeration used to cross-check [`super::solve`].
//!
//! Walks every nonempty subset once, evaluates the target predicate from
//! neighbour lists, and keeps the lexicographically least feasible subset
//! of the smallest feasible size.

use std::time::Instant;

use super::{Parameter, SearchStats, SolveResult};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_N: usize = 20;

pub fn brute_force_oracle(g: &Graph, parameter: Parameter, k: Option<i64>) -> Result<SolveResult> {
    let started = Instant::now();
    if g.n() == 0 {
        return Err(Error::domain("graph has no vertices"));
    }
    if g.n() > ORACLE_MAX_N {
        return Err(Error::Resource(format!(
            "oracle limited to n <= {ORACLE_MAX_N}, got {}",
            g.n()
        )));
    }
    let k = match (parameter.takes_k(), k) {
        (true, None) => return Err(Error::domain(format!("{parameter} requires k"))),
        (true, k) => k,
        (false, _) => None,
    };
    let n = g.n();
    let neighbors: Vec<&[usize]> = (0..n).map(|v| g.neighbors(v)).collect();

    // best[s] = lexicographically least feasible member list of size s
    let mut best: Vec<Option<Vec<usize>>> = vec![None; n + 1];
    let mut examined = 0u64;
    for mask in 1u64..(1u64 << n) {
        examined += 1;
        let member: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if !satisfies(&neighbors, &member, parameter, k.unwrap_or(0)) {
            continue;
        }
        let list: Vec<usize> = (0..n).filter(|&v| member[v]).collect();
        let slot = &mut best[list.len()];
        if slot.as_ref().is_none_or(|cur| list < *cur) {
            *slot = Some(list);
        }
    }

    let winner = best.into_iter().flatten().next();
    let mask = winner.map(|list| list.iter().fold(0u64, |m, &v| m | 1 << v));
    let stats = SearchStats {
        subsets: examined,
        prunes: 0,
        millis: started.elapsed().as_millis() as u64,
    };
    Ok(SolveResult::from_mask(g, parameter, k, mask, stats))
}

fn satisfies(neighbors: &[&[usize]], member: &[bool], parameter: Parameter, k: i64) -> bool {
    let n = member.len();
    let inside = |v: usize| neighbors[v].iter().filter(|&&u| member[u]).count() as i64;
    let outside = |v: usize| neighbors[v].len() as i64 - inside(v);
    let defensive = || (0..n).filter(|&v| member[v]).all(|v| inside(v) >= outside(v) + k);
    let dominating = || (0..n).all(|v| member[v] || inside(v) > 0);
    let total = || (0..n).all(|v| inside(v) > 0);
    let connected = || {
        let start = (0..n).find(|&v| member[v]).unwrap();
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in neighbors[v] {
                if member[u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        (0..n).all(|v| !member[v] || seen[v])
    };
    match parameter {
        Parameter::AK => defensive(),
        Parameter::GammaKA => defensive() && dominating(),
        Parameter::GammaKCA => defensive() && dominating() && connected(),
        Parameter::Gamma => dominating(),
        Parameter::GammaT => total(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn oracle_examples() {
        let q3 = hypercube(3).unwrap();
        let r = brute_force_oracle(&q3, Parameter::Gamma, None).unwrap();
        assert_eq!(r.value, Some(2));
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 7]);
        assert_eq!(brute_force_oracle(&q3, Parameter::GammaT, None).unwrap().value, Some(4));
        let k1 = complete(1).unwrap();
        assert_eq!(brute_force_oracle(&k1, Parameter::AK, Some(0)).unwrap().value, Some(1));
        assert_eq!(brute_force_oracle(&k1, Parameter::GammaT, None).unwrap().value, None);
    }

    #[test]
    fn oracle_cap() {
        let g = path(21).unwrap();
        assert!(matches!(
            brute_force_oracle(&g, Parameter::Gamma, None),
            Err(Error::Resource(_))
        ));
    }
}
