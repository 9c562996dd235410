//! Immutable simple undirected graphs on vertices `0..n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::{Error, Result};

/// Graphs handed to the bitset-based algorithms may have at most this many
/// vertices.
pub const MASK_MAX_VERTICES: usize = 64;

/// A simple undirected graph with vertex ids `0..n`.
///
/// Edges are stored normalised (`u < v`) and sorted; neighbour lists are
/// sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs are
    /// collapsed.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(if u < v { (u, v) } else { (v, u) });
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_edges(n, list))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_edges(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted_edges(n, edges)
    }

    /// The cycle `0-1-…-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("a cycle needs at least 3 vertices"));
        }
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by
    /// `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_sorted_edges(self.n + other.n, edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    /// Neighbourhood masks, one per vertex. Fails above
    /// [`MASK_MAX_VERTICES`].
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        Error::ceiling("bitset graph order", MASK_MAX_VERTICES, self.n)?;
        Ok(self
            .adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect())
    }

    /// The subgraph induced by `set`, relabelled `0..|set|` in ascending
    /// order of original id.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        set.check_within(self.n)?;
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in set.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (relabel[u], relabel[v]);
                (a != usize::MAX && b != usize::MAX).then_some((a, b))
            })
            .collect();
        // relabelling is monotone, so the edge list stays sorted
        Ok(Self::from_sorted_edges(set.len(), edges))
    }

    /// Induced subgraph on the vertices of a mask (`n <= 64`).
    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        self.induced_subgraph(&VertexSet::from_mask(mask))
            .expect("mask within graph")
    }

    /// `G \ S`: the subgraph induced by the complement of `set`.
    pub fn delete_vertices(&self, set: &VertexSet) -> Result<Graph> {
        set.check_within(self.n)?;
        let keep = VertexSet(
            (0..self.n)
                .filter(|v| set.as_slice().binary_search(v).is_err())
                .collect(),
        );
        self.induced_subgraph(&keep)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// `K_{n|k}`: the complete k-partite graph with `part_size` vertices in
/// each part. Vertex `v` lies in part `v / part_size`.
pub fn complete_multipartite(part_size: usize, parts: usize) -> Result<(Graph, Partition)> {
    if part_size == 0 || parts == 0 {
        return Err(Error::InvalidArgument(
            "complete multipartite graph needs part size and part count >= 1",
        ));
    }
    let n = part_size * parts;
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u / part_size != v / part_size)
        .collect();
    let graph = Graph::from_sorted_edges(n, edges);
    let partition = Partition {
        parts: (0..parts)
            .map(|p| VertexSet((p * part_size..(p + 1) * part_size).collect()))
            .collect(),
    };
    Ok((graph, partition))
}

/// The lexicographic product `K_k · G`: `k` disjoint copies of `G` with
/// every edge between distinct copies. Copy `c` occupies vertices
/// `c*|G| .. (c+1)*|G|`; the copy blocks are returned alongside.
pub fn lex_product_with_complete(graph: &Graph, k: usize) -> Result<(Graph, Vec<VertexSet>)> {
    if k < 2 {
        return Err(Error::InvalidArgument("lexicographic product needs k >= 2"));
    }
    let n = graph.order();
    let total = n * k;
    let mut edges = Vec::with_capacity(k * graph.size() + total * total / 2);
    for u in 0..total {
        let (cu, ou) = (u / n, u % n);
        for v in u + 1..total {
            let (cv, ov) = (v / n, v % n);
            if cu != cv || graph.has_edge(ou, ov) {
                edges.push((u, v));
            }
        }
    }
    let blocks = (0..k)
        .map(|c| VertexSet((c * n..(c + 1) * n).collect()))
        .collect();
    Ok((Graph::from_sorted_edges(total, edges), blocks))
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(Bits(mask).collect())
    }

    /// Mask of the members; all must be below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1 << v))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    /// Maps ids of an induced subgraph back to the ids of its host, where
    /// `host_ids` lists the host vertices in relabelling order.
    pub fn lift(&self, host_ids: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().map(|&v| host_ids.0[v]).collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = core::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

/// A partition of (a subset of) the vertices into parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub parts: Vec<VertexSet>,
}

impl Partition {
    /// Parts are disjoint, cover every vertex of `graph`, and no edge lies
    /// inside a part.
    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        let mut part_of = vec![usize::MAX; graph.order()];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v >= graph.order() || part_of[v] != usize::MAX {
                    return false;
                }
                part_of[v] = i;
            }
        }
        part_of.iter().all(|&p| p != usize::MAX)
            && graph.edges().iter().all(|&(u, v)| part_of[u] != part_of[v])
    }
}
