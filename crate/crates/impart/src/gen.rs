//! Seeded instance generators.

use clap::Subcommand;
use impart_core::graph::complete_multipartite;
use impart_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("edge probability must lie in [0, 1], got {0}")]
    Probability(f64),
    #[error("{0}")]
    Graph(#[from] impart_core::Error),
}

#[derive(Clone, Debug, PartialEq, Subcommand)]
pub enum GenKind {
    /// Erdős–Rényi G(n, p)
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// The cycle C_n
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// The path on n vertices
    Path {
        #[arg(long)]
        n: usize,
    },
    /// The complete graph K_n
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// K_{n|k}: k parts of n vertices each
    #[command(name = "complete_multipartite", alias = "complete-multipartite")]
    CompleteMultipartite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Random graph with maximum degree at most 4 and up to `edges` edges
    #[command(name = "max_degree4", alias = "max-degree4")]
    MaxDegree4 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: usize,
    },
}

/// Builds the graph described by `kind`. Random kinds draw from a ChaCha8
/// stream seeded with `seed`, so equal seeds give equal graphs.
pub fn generate(kind: &GenKind, seed: u64) -> Result<Graph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match *kind {
        GenKind::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GenError::Probability(p));
            }
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges)?
        }
        GenKind::Cycle { n } => Graph::cycle(n)?,
        GenKind::Path { n } => Graph::path(n),
        GenKind::Complete { n } => Graph::complete(n),
        GenKind::CompleteMultipartite { n, k } => complete_multipartite(n, k)?.0,
        GenKind::MaxDegree4 { n, edges } => {
            // shuffle all pairs, keep each one whose endpoints still have
            // spare degree
            let mut pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            pairs.shuffle(&mut rng);
            let mut degree = vec![0usize; n];
            let mut chosen = Vec::new();
            for (u, v) in pairs {
                if chosen.len() == edges {
                    break;
                }
                if degree[u] < 4 && degree[v] < 4 {
                    degree[u] += 1;
                    degree[v] += 1;
                    chosen.push((u, v));
                }
            }
            Graph::new(n, chosen)?
        }
    })
}
