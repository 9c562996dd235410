//! Exact treewidth by dynamic programming over vertex subsets.
//!
//! `TW(S)` is the best width achievable when the vertices of `S` are
//! eliminated first:
//!
//! ```text
//! TW(∅) = 0
//! TW(S) = min_{v ∈ S} max(TW(S \ v), |Q(S \ v, v)|)
//! ```
//!
//! where `Q(S, v)` is the set of vertices outside `S ∪ {v}` reachable from
//! `v` through `S`, i.e. the later neighbours of `v` in the filled graph.

use alloc::vec;
use alloc::vec::Vec;

use super::TreeDecomposition;
use crate::bits::{full, neighbourhood, Bits};
use crate::{Error, Graph, Result, VertexSet};

pub const TREEWIDTH_MAX_VERTICES: usize = 20;

/// `Q(inner, v)` as a mask.
pub(crate) fn reach_beyond(adj: &[u64], inner: u64, v: usize) -> u64 {
    let allowed = inner | (1 << v);
    let mut comp = 1u64 << v;
    loop {
        let next = comp | (neighbourhood(adj, comp) & allowed);
        if next == comp {
            break;
        }
        comp = next;
    }
    neighbourhood(adj, comp) & !allowed
}

/// Tree decomposition from an elimination order: the bag of `v` is `v`
/// plus its later neighbours in the filled graph, attached to the bag of
/// the earliest-eliminated of those neighbours.
pub(crate) fn decomposition_from_order(adj: &[u64], order: &[usize]) -> TreeDecomposition {
    let n = order.len();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![VertexSet::default()],
            tree_edges: Vec::new(),
        };
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut tree_edges = Vec::with_capacity(n - 1);
    let mut roots = Vec::new();
    let mut before = 0u64;
    for (i, &v) in order.iter().enumerate() {
        let later = reach_beyond(adj, before, v);
        bags.push(VertexSet::from_mask(later | (1 << v)));
        match Bits(later).map(|w| position[w]).min() {
            Some(p) => tree_edges.push((i, p)),
            None => roots.push(i),
        }
        before |= 1 << v;
    }
    // one root per component; chain them into a single tree
    for pair in roots.windows(2) {
        tree_edges.push((pair[0], pair[1]));
    }
    TreeDecomposition { bags, tree_edges }
}

/// Exact treewidth and a decomposition of that width.
pub fn treewidth(graph: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = graph.order();
    Error::ceiling("treewidth graph order", TREEWIDTH_MAX_VERTICES, n)?;
    let adj = graph.adjacency_masks()?;
    let all = full(n);
    let mut table = vec![u8::MAX; 1usize << n];
    table[0] = 0;
    for s in 1..=all {
        let mut best = u8::MAX;
        for v in Bits(s) {
            let prev = s & !(1 << v);
            let width = table[prev as usize];
            if width >= best {
                continue;
            }
            let q = reach_beyond(&adj, prev, v).count_ones() as u8;
            best = best.min(width.max(q));
        }
        table[s as usize] = best;
    }

    // walk back from V, choosing the lowest vertex that keeps the optimum
    // as the last one eliminated
    let mut rest = all;
    let mut reversed = Vec::with_capacity(n);
    while rest != 0 {
        let target = table[rest as usize];
        let v = Bits(rest)
            .find(|&v| {
                let prev = rest & !(1 << v);
                let q = reach_beyond(&adj, prev, v).count_ones() as u8;
                table[prev as usize].max(q) == target
            })
            .expect("optimal choice exists");
        reversed.push(v);
        rest &= !(1 << v);
    }
    reversed.reverse();
    let td = decomposition_from_order(&adj, &reversed);
    let width = usize::from(table[all as usize]);
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}
