//! Bipartiteness, k-colourability and the chromatic number.
//!
//! The general decision counts ordered covers of the vertex set by `k`
//! independent sets with inclusion–exclusion:
//!
//! ```text
//! covers_k(G) = Σ_{S ⊆ V} (-1)^{|V \ S|} i(S)^k
//! ```
//!
//! where `i(S)` is the number of independent sets inside `S`. The graph is
//! k-colourable exactly when `covers_k(G) > 0`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bits::{full, Bits};
use crate::parameters::TreeDecomposition;
use crate::{Error, Graph, Partition, Result, VertexSet};

/// Largest graph accepted by the inclusion–exclusion routines.
pub const CHROMATIC_MAX_VERTICES: usize = 30;

/// A proper colouring with colours `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringWitness {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl ColoringWitness {
    /// Every colour is below `k`, there is one colour per vertex, and no
    /// edge is monochromatic.
    pub fn is_proper_for(&self, graph: &Graph) -> bool {
        self.colors.len() == graph.order()
            && self.colors.iter().all(|&c| c < self.k)
            && graph
                .edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// The colour classes as a partition with `k` (possibly empty) parts.
    pub fn partition(&self) -> Partition {
        let mut parts = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            parts[c].push(v);
        }
        Partition {
            parts: parts.into_iter().map(VertexSet::new).collect(),
        }
    }
}

/// Two-colouring by depth-first search, or `None` if there is an odd
/// cycle.
pub fn is_bipartite(graph: &Graph) -> Option<ColoringWitness> {
    let n = graph.order();
    let mut color = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if color[root] != usize::MAX {
            continue;
        }
        color[root] = 0;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &w in graph.neighbors(v) {
                if color[w] == usize::MAX {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(ColoringWitness {
        colors: color,
        k: 2,
    })
}

/// `i(S)` for every `S ⊆ V`, via `i(S) = i(S \ v) + i(S \ N[v])` with `v`
/// the lowest member of `S`.
fn independent_set_counts(adj: &[u64]) -> Vec<u32> {
    let n = adj.len();
    let mut counts = vec![0u32; 1 << n];
    counts[0] = 1;
    for s in 1..counts.len() {
        let v = s.trailing_zeros() as usize;
        let without = s & (s - 1);
        let closed = (adj[v] as usize) | (1 << v);
        counts[s] = counts[without] + counts[s & !closed];
    }
    counts
}

/// Large primes below 2^63; their product exceeds 2^1000.
const PRIMES: [u64; 16] = [
    9223372036854775783,
    9223372036854775643,
    9223372036854775549,
    9223372036854775507,
    9223372036854775433,
    9223372036854775421,
    9223372036854775417,
    9223372036854775399,
    9223372036854775351,
    9223372036854775337,
    9223372036854775291,
    9223372036854775279,
    9223372036854775259,
    9223372036854775181,
    9223372036854775159,
    9223372036854775139,
];

fn pow_mod(base: u64, mut exp: usize, p: u64) -> u64 {
    let p128 = u128::from(p);
    let mut b = u128::from(base) % p128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p128;
        }
        b = b * b % p128;
        exp >>= 1;
    }
    acc as u64
}

/// Whether the cover count for `k` colours is positive.
///
/// The count is bounded by `i(V)^k`. When `2^n · i(V)^k` fits in an
/// `i128` the sum is evaluated exactly; otherwise it is evaluated modulo
/// enough primes that their product exceeds the bound, so a non-zero count
/// always leaves a non-zero residue.
fn covers_exist(counts: &[u32], n: usize, k: usize) -> bool {
    if k == 0 {
        return n == 0;
    }
    let total = counts[counts.len() - 1];
    let total_bits = (u32::BITS - total.leading_zeros()) as usize;
    if n + k * total_bits <= 126 {
        covers_exact(counts, n, k)
    } else {
        covers_modular(counts, n, k)
    }
}

fn negative(n: usize, s: usize) -> bool {
    (n - s.count_ones() as usize) % 2 == 1
}

fn covers_exact(counts: &[u32], n: usize, k: usize) -> bool {
    let sum: i128 = counts
        .iter()
        .enumerate()
        .map(|(s, &c)| {
            let term = i128::from(c).pow(k as u32);
            if negative(n, s) {
                -term
            } else {
                term
            }
        })
        .sum();
    assert!(sum >= 0, "cover count must be non-negative");
    sum > 0
}

fn covers_modular(counts: &[u32], n: usize, k: usize) -> bool {
    let total = counts[counts.len() - 1];
    let total_bits = (u32::BITS - total.leading_zeros()) as usize;
    let needed = (k * total_bits).div_ceil(62) + 1;
    assert!(
        needed <= PRIMES.len(),
        "cover count bound exceeds prime budget"
    );
    PRIMES[..needed].iter().any(|&p| {
        let p128 = u128::from(p);
        let residue = counts.iter().enumerate().fold(0u128, |acc, (s, &c)| {
            let t = u128::from(pow_mod(u64::from(c), k, p));
            if negative(n, s) {
                (acc + p128 - t) % p128
            } else {
                (acc + t) % p128
            }
        });
        residue != 0
    })
}

/// `table[S]` says whether the subgraph induced by the vertex mask `S` is
/// k-colourable, for every `S` at once.
///
/// The cover counts of all subsets are the Möbius transform of
/// `T ↦ i(T)^k`, evaluated exactly or modulo primes with the same bounds
/// as [`covers_exist`].
pub(crate) fn colorable_subsets(graph: &Graph, k: usize) -> Result<Vec<bool>> {
    check_k(k)?;
    let n = graph.order();
    Error::ceiling("colourable subset table order", 24, n)?;
    if k >= n {
        return Ok(vec![true; 1 << n]);
    }
    let counts = independent_set_counts(&masks_of(graph));
    let total = counts[counts.len() - 1];
    let total_bits = (u32::BITS - total.leading_zeros()) as usize;
    if n + k * total_bits <= 126 {
        let mut f: Vec<i128> = counts
            .iter()
            .map(|&c| i128::from(c).pow(k as u32))
            .collect();
        mobius(&mut f, n, |a, b| a - b);
        return Ok(f.into_iter().map(|x| x > 0).collect());
    }
    let needed = (k * total_bits).div_ceil(62) + 1;
    assert!(
        needed <= PRIMES.len(),
        "cover count bound exceeds prime budget"
    );
    let mut table = vec![false; 1 << n];
    for &p in &PRIMES[..needed] {
        let mut f: Vec<u64> = counts
            .iter()
            .map(|&c| pow_mod(u64::from(c), k, p))
            .collect();
        mobius(&mut f, n, |a, b| if a >= b { a - b } else { a + (p - b) });
        for (slot, x) in table.iter_mut().zip(f) {
            *slot |= x != 0;
        }
    }
    Ok(table)
}

fn mobius<T: Copy>(f: &mut [T], n: usize, sub: impl Fn(T, T) -> T) {
    for i in 0..n {
        let bit = 1 << i;
        for s in 0..f.len() {
            if s & bit != 0 {
                f[s] = sub(f[s], f[s ^ bit]);
            }
        }
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("number of colours must be >= 1"));
    }
    Ok(())
}

/// Decision for a connected graph given as masks.
fn connected_colorable(adj: &[u64], k: usize) -> bool {
    let n = adj.len();
    if k >= n {
        return true;
    }
    if k == 1 {
        return adj.iter().all(|&m| m == 0);
    }
    covers_exist(&independent_set_counts(adj), n, k)
}

fn masks_of(graph: &Graph) -> Vec<u64> {
    graph.adjacency_masks().expect("checked against ceiling")
}

/// Decides `χ(G) ≤ k` without producing a colouring. Uses depth-first
/// search for `k = 2` and inclusion–exclusion per component otherwise.
pub fn is_k_colorable(graph: &Graph, k: usize) -> Result<bool> {
    check_k(k)?;
    if k >= graph.order() {
        return Ok(true);
    }
    if k == 1 {
        return Ok(graph.size() == 0);
    }
    if k == 2 {
        return Ok(is_bipartite(graph).is_some());
    }
    Error::ceiling(
        "chromatic number graph order",
        CHROMATIC_MAX_VERTICES,
        graph.order(),
    )?;
    for comp in graph.components() {
        if comp.len() <= k {
            continue;
        }
        let sub = graph.induced_subgraph(&comp)?;
        if !connected_colorable(&masks_of(&sub), k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact chromatic number; 0 for the graph with no vertices.
pub fn chromatic_number(graph: &Graph) -> Result<usize> {
    Error::ceiling(
        "chromatic number graph order",
        CHROMATIC_MAX_VERTICES,
        graph.order(),
    )?;
    if graph.order() == 0 {
        return Ok(0);
    }
    if graph.size() == 0 {
        return Ok(1);
    }
    if is_bipartite(graph).is_some() {
        return Ok(2);
    }
    let mut best = 3;
    for comp in graph.components() {
        if comp.len() <= best {
            continue;
        }
        let adj = masks_of(&graph.induced_subgraph(&comp)?);
        let counts = independent_set_counts(&adj);
        while !covers_exist(&counts, adj.len(), best) {
            best += 1;
        }
    }
    Ok(best)
}

/// Calls `f` with every maximal independent set of `G[candidates]`,
/// in a fixed order, until it breaks.
fn for_each_maximal_independent(
    adj: &[u64],
    current: u64,
    candidates: u64,
    excluded: u64,
    f: &mut impl FnMut(u64) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if candidates == 0 {
        if excluded == 0 {
            return f(current);
        }
        return ControlFlow::Continue(());
    }
    let (mut p, mut x) = (candidates, excluded);
    for v in Bits(candidates) {
        let closed = adj[v] | (1 << v);
        for_each_maximal_independent(adj, current | (1 << v), p & !closed, x & !closed, f)?;
        p &= !(1 << v);
        x |= 1 << v;
    }
    ControlFlow::Continue(())
}

/// A k-colouring if `χ(G) ≤ k`.
///
/// The colouring is recovered by peeling colour classes: the class of
/// the lowest remaining vertex is taken to be a maximal independent set
/// whose removal leaves a graph that is still colourable with one colour
/// fewer.
pub fn is_k_partite(graph: &Graph, k: usize) -> Result<Option<ColoringWitness>> {
    check_k(k)?;
    let n = graph.order();
    if k <= 2 {
        return Ok(match k {
            1 => (graph.size() == 0).then(|| ColoringWitness {
                colors: vec![0; n],
                k: 1,
            }),
            _ => is_bipartite(graph),
        });
    }
    if k >= n {
        return Ok(Some(ColoringWitness {
            colors: (0..n).collect(),
            k,
        }));
    }
    if !is_k_colorable(graph, k)? {
        return Ok(None);
    }
    let adj = masks_of(graph);
    let mut colors = vec![usize::MAX; n];
    let mut remaining = full(n);
    for color in 0..k {
        if remaining == 0 {
            break;
        }
        let class = if color == k - 1 {
            remaining
        } else {
            let low = remaining.trailing_zeros() as usize;
            let rest = remaining & !(adj[low] | (1 << low));
            let mut found = None;
            let left = k - color - 1;
            let _ = for_each_maximal_independent(&adj, 1 << low, rest, 0, &mut |class| {
                let sub = graph.induced_by_mask(remaining & !class);
                if is_k_colorable(&sub, left).unwrap_or(false) {
                    found = Some(class);
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            found.expect("a feasible colour class exists when the graph is k-colourable")
        };
        for v in Bits(class) {
            colors[v] = color;
        }
        remaining &= !class;
    }
    let witness = ColoringWitness { colors, k };
    debug_assert!(witness.is_proper_for(graph));
    Ok(Some(witness))
}

struct NodeTable {
    /// Vertices shared with the parent bag, ascending.
    shared: Vec<usize>,
    feasible: Vec<Vec<usize>>,
    by_projection: BTreeMap<Vec<usize>, usize>,
}

fn proper_bag_colorings(graph: &Graph, bag: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn extend(
        graph: &Graph,
        bag: &[usize],
        k: usize,
        partial: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = partial.len();
        if i == bag.len() {
            out.push(partial.clone());
            return;
        }
        for c in 0..k {
            if (0..i).all(|j| partial[j] != c || !graph.has_edge(bag[j], bag[i])) {
                partial.push(c);
                extend(graph, bag, k, partial, out);
                partial.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(graph, bag, k, &mut Vec::with_capacity(bag.len()), &mut out);
    out
}

/// A k-colouring found by dynamic programming over a tree decomposition.
///
/// Each tree node keeps the proper colourings of its bag that extend to
/// its whole subtree; the table size is at most `k^(width+1)` per node.
pub fn is_k_partite_via_decomposition(
    graph: &Graph,
    decomposition: &TreeDecomposition,
    k: usize,
) -> Result<Option<ColoringWitness>> {
    check_k(k)?;
    if !decomposition.validate(graph) {
        return Err(Error::InvalidDecomposition(
            "decomposition does not satisfy the tree decomposition properties",
        ));
    }
    let n = graph.order();
    let k_eff = k.min(n.max(1));
    let tree = decomposition
        .tree_adjacency()
        .expect("validated decomposition is a tree");
    let nodes = decomposition.bags.len();

    // root at node 0; `order` lists parents before children
    let mut parent = vec![usize::MAX; nodes];
    let mut order = vec![0];
    let mut seen = vec![false; nodes];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for &y in &tree[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                order.push(y);
            }
        }
        i += 1;
    }
    let mut children = vec![Vec::new(); nodes];
    for &x in &order[1..] {
        children[parent[x]].push(x);
    }

    let bag = |x: usize| decomposition.bags[x].as_slice();
    let mut tables: Vec<Option<NodeTable>> = (0..nodes).map(|_| None).collect();
    for &x in order.iter().rev() {
        let shared: Vec<usize> = if parent[x] == usize::MAX {
            Vec::new()
        } else {
            let pb = &decomposition.bags[parent[x]];
            bag(x).iter().copied().filter(|&v| pb.contains(v)).collect()
        };
        let position = |v: usize| bag(x).binary_search(&v).expect("shared vertex in bag");
        let shared_pos: Vec<usize> = shared.iter().map(|&v| position(v)).collect();
        let child_pos: Vec<(usize, Vec<usize>)> = children[x]
            .iter()
            .map(|&c| {
                let t = tables[c].as_ref().expect("children processed first");
                (c, t.shared.iter().map(|&v| position(v)).collect())
            })
            .collect();
        let mut feasible = Vec::new();
        let mut by_projection = BTreeMap::new();
        for coloring in proper_bag_colorings(graph, bag(x), k_eff) {
            let consistent = child_pos.iter().all(|(c, pos)| {
                let proj: Vec<usize> = pos.iter().map(|&p| coloring[p]).collect();
                tables[*c]
                    .as_ref()
                    .is_some_and(|t| t.by_projection.contains_key(&proj))
            });
            if consistent {
                let key: Vec<usize> = shared_pos.iter().map(|&p| coloring[p]).collect();
                by_projection.entry(key).or_insert(feasible.len());
                feasible.push(coloring);
            }
        }
        if feasible.is_empty() {
            return Ok(None);
        }
        tables[x] = Some(NodeTable {
            shared,
            feasible,
            by_projection,
        });
    }

    let mut colors = vec![0; n];
    let mut stack = vec![(0usize, 0usize)];
    while let Some((x, idx)) = stack.pop() {
        let table = tables[x].as_ref().expect("table built");
        let coloring = &table.feasible[idx];
        for (&v, &c) in bag(x).iter().zip(coloring) {
            colors[v] = c;
        }
        for &c in &children[x] {
            let ct = tables[c].as_ref().expect("table built");
            let proj: Vec<usize> = ct
                .shared
                .iter()
                .map(|&v| coloring[bag(x).binary_search(&v).expect("shared vertex")])
                .collect();
            stack.push((c, ct.by_projection[&proj]));
        }
    }
    let witness = ColoringWitness { colors, k };
    debug_assert!(witness.is_proper_for(graph));
    Ok(Some(witness))
}
