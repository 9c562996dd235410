//! Maximum stable sets by branch and bound.

use crate::bits::{full, Bits};
use crate::graph::MASK_MAX_VERTICES;
use crate::{Error, Graph, Result, VertexSet};

pub const INDEPENDENCE_MAX_VERTICES: usize = MASK_MAX_VERTICES;

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the stable sets inside `cand`.
fn clique_cover_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique = 1u64 << v;
        let mut extend = cand & adj[v];
        while extend != 0 {
            let u = extend.trailing_zeros() as usize;
            clique |= 1 << u;
            extend &= adj[u];
        }
        cand &= !clique;
        cliques += 1;
    }
    cliques
}

struct Search<'a> {
    adj: &'a [u64],
    best_size: usize,
    best: u64,
}

impl Search<'_> {
    /// Branches on the lowest candidate, taking it first. Leaves are met in
    /// decreasing characteristic-vector order, so the first maximum found
    /// is the lexicographically smallest one.
    fn run(&mut self, chosen: u64, cand: u64) {
        let size = chosen.count_ones() as usize;
        if cand == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if size + clique_cover_bound(self.adj, cand) <= self.best_size {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        self.run(chosen | (1 << v), cand & !(self.adj[v] | (1 << v)));
        self.run(chosen, cand & !(1 << v));
    }
}

/// α(G) together with the lexicographically smallest maximum stable set.
pub fn independence_number(graph: &Graph) -> Result<(usize, VertexSet)> {
    Error::ceiling(
        "independence number graph order",
        INDEPENDENCE_MAX_VERTICES,
        graph.order(),
    )?;
    let adj = graph.adjacency_masks()?;
    let mut search = Search {
        adj: &adj,
        best_size: 0,
        best: 0,
    };
    search.run(0, full(graph.order()));
    Ok((search.best_size, VertexSet::from_mask(search.best)))
}

/// Brute-force search for a stable set of exactly `size` vertices.
pub fn find_stable_set(graph: &Graph, size: usize) -> Result<Option<VertexSet>> {
    fn go(adj: &[u64], chosen: u64, cand: u64, need: usize) -> Option<u64> {
        if need == 0 {
            return Some(chosen);
        }
        if (cand.count_ones() as usize) < need {
            return None;
        }
        for v in Bits(cand) {
            // only later vertices, so each set is tried once
            let later = cand & !full(v + 1) & !adj[v];
            if let Some(found) = go(adj, chosen | (1 << v), later, need - 1) {
                return Some(found);
            }
        }
        None
    }
    Error::ceiling(
        "stable set search graph order",
        INDEPENDENCE_MAX_VERTICES,
        graph.order(),
    )?;
    let adj = graph.adjacency_masks()?;
    Ok(go(&adj, 0, full(graph.order()), size).map(VertexSet::from_mask))
}
