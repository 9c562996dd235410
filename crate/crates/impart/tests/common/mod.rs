//! Brute-force reference computations, deliberately naive and independent
//! of the library's algorithms.
#![allow(dead_code)]

use impart::{generate, GenKind};
use impart_core::Graph;

/// Every labelled graph on `n` vertices, in edge-mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    generate(&GenKind::Gnp { n, p }, seed).unwrap()
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn alpha(g: &Graph) -> usize {
    let a = adjacency(g);
    let n = g.order();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || (0..n).all(|v| s >> v & 1 == 0 || !a[u][v])))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Colour vertices in order, trying every colour.
pub fn colorable(g: &Graph, k: usize) -> bool {
    fn go(a: &[Vec<bool>], k: usize, colors: &mut Vec<usize>) -> bool {
        let v = colors.len();
        if v == a.len() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !a[u][v] || colors[u] != c) {
                colors.push(c);
                if go(a, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(&adjacency(g), k, &mut Vec::new())
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn masks(g: &Graph) -> Vec<u64> {
    let mut m = vec![0u64; g.order()];
    for &(u, v) in g.edges() {
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }
    m
}

/// Minimum over elimination orders of the largest neighbourhood at
/// elimination time, with fill edges added.
pub fn treewidth(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let base = masks(g);
    permutations(n)
        .into_iter()
        .map(|order| {
            let mut a = base.clone();
            let mut alive = (1u64 << n) - 1;
            let mut worst = 0;
            for &v in &order {
                alive &= !(1 << v);
                let nbrs = a[v] & alive;
                worst = worst.max(nbrs.count_ones() as usize);
                for (x, row) in a.iter_mut().enumerate() {
                    if nbrs >> x & 1 == 1 {
                        *row |= nbrs & !(1 << x);
                    }
                }
            }
            worst
        })
        .min()
        .unwrap()
}

/// Vertex separation number: minimum over orders of the largest number of
/// placed vertices that still have an unplaced neighbour.
pub fn pathwidth(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let a = masks(g);
    permutations(n)
        .into_iter()
        .map(|order| {
            let mut placed = 0u64;
            let mut worst = 0;
            for &v in &order {
                placed |= 1 << v;
                let open = (0..n)
                    .filter(|&u| placed >> u & 1 == 1 && a[u] & !placed != 0)
                    .count();
                worst = worst.max(open);
            }
            worst
        })
        .min()
        .unwrap()
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let a = adjacency(g);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if a[v][u] && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
