//! Exact pathwidth as vertex separation number, by subset dynamic
//! programming: `VS(S) = max(|∂S|, min_{v ∈ S} VS(S \ v))`, where `∂S` is
//! the set of vertices of `S` with a neighbour outside `S`.

use alloc::vec;
use alloc::vec::Vec;

use super::PathDecomposition;
use crate::bits::{full, Bits};
use crate::{Error, Graph, Result, VertexSet};

pub const PATHWIDTH_MAX_VERTICES: usize = 20;

fn boundary(adj: &[u64], set: u64) -> u64 {
    Bits(set)
        .filter(|&u| adj[u] & !set != 0)
        .fold(0, |m, u| m | (1 << u))
}

/// Exact pathwidth and a path decomposition of that width.
pub fn pathwidth(graph: &Graph) -> Result<(usize, PathDecomposition)> {
    let n = graph.order();
    Error::ceiling("pathwidth graph order", PATHWIDTH_MAX_VERTICES, n)?;
    let adj = graph.adjacency_masks()?;
    let all = full(n);
    let mut table = vec![0u8; 1usize << n];
    for s in 1..=all {
        let best = Bits(s)
            .map(|v| table[(s & !(1 << v)) as usize])
            .min()
            .unwrap_or(0);
        table[s as usize] = best.max(boundary(&adj, s).count_ones() as u8);
    }

    let mut rest = all;
    let mut reversed = Vec::with_capacity(n);
    while rest != 0 {
        let target = table[rest as usize];
        let here = boundary(&adj, rest).count_ones() as u8;
        let v = Bits(rest)
            .find(|&v| table[(rest & !(1 << v)) as usize].max(here) == target)
            .expect("optimal choice exists");
        reversed.push(v);
        rest &= !(1 << v);
    }
    reversed.reverse();

    // bag i holds v_i and the boundary of the vertices placed before it
    let mut bags = Vec::with_capacity(n.max(1));
    let mut placed = 0u64;
    for &v in &reversed {
        bags.push(VertexSet::from_mask(boundary(&adj, placed) | (1 << v)));
        placed |= 1 << v;
    }
    if bags.is_empty() {
        bags.push(VertexSet::default());
    }
    let pd = PathDecomposition { bags };
    let width = usize::from(table[all as usize]);
    debug_assert_eq!(pd.width(), width);
    Ok((width, pd))
}
