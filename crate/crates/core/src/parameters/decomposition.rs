//! Tree and path decompositions and their validity checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Graph, VertexSet};

/// A tree decomposition: bags indexed by tree node, plus the tree edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
}

/// A path decomposition; consecutive bags are adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

fn width_of(bags: &[VertexSet]) -> usize {
    bags.iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
        .saturating_sub(1)
}

/// Index of the first bag of maximum size.
fn largest(bags: &[VertexSet]) -> Option<usize> {
    let max = bags.iter().map(VertexSet::len).max()?;
    bags.iter().position(|b| b.len() == max)
}

impl TreeDecomposition {
    /// The decomposition with a single bag holding every vertex.
    pub fn trivial(graph: &Graph) -> Self {
        TreeDecomposition {
            bags: vec![graph.vertices()],
            tree_edges: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        width_of(&self.bags)
    }

    pub fn largest_bag(&self) -> Option<&VertexSet> {
        largest(&self.bags).map(|i| &self.bags[i])
    }

    /// Neighbour lists of the tree, or `None` if the edges do not form a
    /// tree on the bag indices.
    pub(crate) fn tree_adjacency(&self) -> Option<Vec<Vec<usize>>> {
        let nodes = self.bags.len();
        if nodes == 0 || self.tree_edges.len() != nodes - 1 {
            return None;
        }
        let mut adj = vec![Vec::new(); nodes];
        for &(a, b) in &self.tree_edges {
            if a >= nodes || b >= nodes || a == b {
                return None;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; nodes];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        (count == nodes).then_some(adj)
    }

    /// Checks vertex coverage, edge coverage, and that the bags containing
    /// each vertex form a connected subtree.
    pub fn validate(&self, graph: &Graph) -> bool {
        let Some(adj) = self.tree_adjacency() else {
            return false;
        };
        let n = graph.order();
        if self.bags.iter().any(|b| b.check_within(n).is_err()) {
            return false;
        }
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                holders[v].push(i);
            }
        }
        if holders.iter().any(Vec::is_empty) {
            return false;
        }
        let edges_covered = graph
            .edges()
            .iter()
            .all(|&(u, v)| self.bags.iter().any(|b| b.contains(u) && b.contains(v)));
        if !edges_covered {
            return false;
        }
        // subtree property: the holder nodes of v are connected through
        // holder nodes only
        let mut mark = vec![usize::MAX; self.bags.len()];
        for (v, nodes) in holders.iter().enumerate() {
            for &x in nodes {
                mark[x] = v;
            }
            let mut seen = vec![false; self.bags.len()];
            let mut stack = vec![nodes[0]];
            seen[nodes[0]] = true;
            let mut reached = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] && mark[y] == v {
                        seen[y] = true;
                        reached += 1;
                        stack.push(y);
                    }
                }
            }
            if reached != nodes.len() {
                return false;
            }
        }
        true
    }
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        width_of(&self.bags)
    }

    pub fn largest_bag(&self) -> Option<&VertexSet> {
        largest(&self.bags).map(|i| &self.bags[i])
    }

    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        TreeDecomposition {
            bags: self.bags.clone(),
            tree_edges: (1..self.bags.len()).map(|i| (i - 1, i)).collect(),
        }
    }

    /// Same three properties as for trees; on a path the subtree property
    /// means each vertex occurs in a consecutive run of bags.
    pub fn validate(&self, graph: &Graph) -> bool {
        let n = graph.order();
        if self.bags.is_empty() || self.bags.iter().any(|b| b.check_within(n).is_err()) {
            return false;
        }
        let mut first = vec![usize::MAX; n];
        let mut last = vec![0; n];
        let mut count = vec![0; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                first[v] = first[v].min(i);
                last[v] = i;
                count[v] += 1;
            }
        }
        let runs_ok = (0..n).all(|v| count[v] > 0 && last[v] - first[v] + 1 == count[v]);
        runs_ok
            && graph
                .edges()
                .iter()
                .all(|&(u, v)| self.bags.iter().any(|b| b.contains(u) && b.contains(v)))
    }
}
