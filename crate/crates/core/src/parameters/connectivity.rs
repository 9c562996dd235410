//! Vertex and edge connectivity by unit-capacity max-flow (Menger).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

struct Arc {
    to: usize,
    cap: usize,
    rev: usize,
}

struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: usize) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc {
            to,
            cap,
            rev: rev_from,
        });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: rev_to,
        });
    }

    /// Max flow by shortest augmenting paths, stopping once `limit` is
    /// reached.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let nodes = self.arcs.len();
        while flow < limit {
            let mut pred: Vec<Option<(usize, usize)>> = vec![None; nodes];
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                for (i, arc) in self.arcs[x].iter().enumerate() {
                    if arc.cap > 0 && arc.to != source && pred[arc.to].is_none() {
                        pred[arc.to] = Some((x, i));
                        if arc.to == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(arc.to);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            // every augmenting path carries one unit
            let mut y = sink;
            while let Some((x, i)) = pred[y] {
                self.arcs[x][i].cap -= 1;
                let rev = self.arcs[x][i].rev;
                self.arcs[y][rev].cap += 1;
                y = x;
                if y == source {
                    break;
                }
            }
            flow += 1;
        }
        flow
    }
}

/// Number of internally vertex-disjoint paths between non-adjacent `s`
/// and `t`, via the split graph (`v_in = 2v`, `v_out = 2v + 1`).
fn local_vertex_connectivity(graph: &Graph, s: usize, t: usize) -> usize {
    let n = graph.order();
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, 1);
    }
    for &(u, v) in graph.edges() {
        net.add_arc(2 * u + 1, 2 * v, n);
        net.add_arc(2 * v + 1, 2 * u, n);
    }
    net.max_flow(2 * s + 1, 2 * t, n)
}

/// κ(G): the fewest vertices whose deletion disconnects `G`, with
/// κ(K_n) = n − 1 and 0 for disconnected graphs.
pub fn vertex_connectivity(graph: &Graph) -> Result<usize> {
    let n = graph.order();
    if n == 0 {
        return Err(Error::Undefined {
            what: "vertex connectivity",
            n,
        });
    }
    if graph.size() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    if !graph.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !graph.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(graph, s, t));
            }
        }
    }
    Ok(best)
}

/// λ(G): the fewest edges whose deletion disconnects `G`; 0 for
/// disconnected graphs and for the one-vertex graph.
pub fn edge_connectivity(graph: &Graph) -> Result<usize> {
    let n = graph.order();
    if n == 0 {
        return Err(Error::Undefined {
            what: "edge connectivity",
            n,
        });
    }
    if n == 1 || !graph.is_connected() {
        return Ok(0);
    }
    let mut best = graph.min_degree().unwrap_or(0);
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for &(u, v) in graph.edges() {
            net.add_arc(u, v, 1);
            net.add_arc(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best));
    }
    Ok(best)
}
