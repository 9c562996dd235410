//! Chromatic index. By Vizing's theorem χ′(G) is Δ or Δ + 1, so only the
//! question "is there a proper Δ-edge-colouring" is searched.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{full, Bits};
use crate::{Error, Graph, Result};

pub const CHROMATIC_INDEX_MAX_EDGES: usize = 40;

struct EdgeColorer<'a> {
    edges: &'a [(usize, usize)],
    palette: u64,
    used: Vec<u64>,
    uncolored_degree: Vec<usize>,
    color: Vec<Option<usize>>,
    /// colours `0..fresh` have been used somewhere
    fresh: usize,
}

impl EdgeColorer<'_> {
    fn free_at(&self, v: usize) -> u64 {
        self.palette & !self.used[v]
    }

    fn solve(&mut self) -> bool {
        // most constrained uncoloured edge first
        let mut pick: Option<(usize, u64)> = None;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if self.color[i].is_some() {
                continue;
            }
            let avail = self.free_at(u) & self.free_at(v);
            if avail == 0 {
                return false;
            }
            if pick.is_none_or(|(_, a)| avail.count_ones() < a.count_ones()) {
                pick = Some((i, avail));
            }
        }
        let Some((i, avail)) = pick else {
            return true;
        };
        let (u, v) = self.edges[i];
        // unused colours are interchangeable: try only the first of them
        for c in Bits(avail & full(self.fresh + 1)) {
            let bit = 1u64 << c;
            self.color[i] = Some(c);
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.uncolored_degree[u] -= 1;
            self.uncolored_degree[v] -= 1;
            let saved = self.fresh;
            self.fresh = self.fresh.max(c + 1);
            let room = |x: usize| self.free_at(x).count_ones() as usize >= self.uncolored_degree[x];
            if room(u) && room(v) && self.solve() {
                return true;
            }
            self.fresh = saved;
            self.uncolored_degree[u] += 1;
            self.uncolored_degree[v] += 1;
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.color[i] = None;
        }
        false
    }
}

/// A proper edge colouring with at most `colors` colours, indexed like
/// `graph.edges()`.
pub fn edge_coloring(graph: &Graph, colors: usize) -> Result<Option<Vec<usize>>> {
    Error::ceiling(
        "chromatic index edge count",
        CHROMATIC_INDEX_MAX_EDGES,
        graph.size(),
    )?;
    if colors >= 64 {
        return Err(Error::InvalidArgument(
            "at most 63 edge colours are supported",
        ));
    }
    let n = graph.order();
    let mut colorer = EdgeColorer {
        edges: graph.edges(),
        palette: full(colors),
        used: vec![0; n],
        uncolored_degree: (0..n).map(|v| graph.degree(v)).collect(),
        color: vec![None; graph.size()],
        fresh: 0,
    };
    if (0..n).any(|v| graph.degree(v) > colors) {
        return Ok(None);
    }
    Ok(colorer.solve().then(|| {
        colorer
            .color
            .into_iter()
            .map(|c| c.expect("all coloured"))
            .collect()
    }))
}

/// χ′(G), exact.
pub fn chromatic_index(graph: &Graph) -> Result<usize> {
    Error::ceiling(
        "chromatic index edge count",
        CHROMATIC_INDEX_MAX_EDGES,
        graph.size(),
    )?;
    let m = graph.size();
    if m == 0 {
        return Ok(0);
    }
    let delta = graph.max_degree().unwrap_or(0);
    // overfull: each colour class is a matching of at most ⌊n/2⌋ edges
    if m > delta * (graph.order() / 2) {
        return Ok(delta + 1);
    }
    Ok(if edge_coloring(graph, delta)?.is_some() {
        delta
    } else {
        delta + 1
    })
}
