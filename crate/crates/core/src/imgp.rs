//! Induced multipartite graph parameters.
//!
//! A parameter `p` belongs to the family when
//!
//! * every induced subgraph `H` of `K_{n|k}` has `p(H) ≤ p(K_{n|k})`, and
//! * for each `k ≥ 2`, `n ↦ p(K_{n|k})` is an efficiently computable
//!   injective function `f_k`.
//!
//! [`ParameterId`] enumerates the ten members handled here and [`f_k`] is
//! their closed form on balanced complete multipartite graphs.
//! [`p_of_g_k`] evaluates `p(G, k)`, the maximum of `p` over all induced
//! k-partite subgraphs, by enumerating vertex subsets.

use core::fmt;
use core::str::FromStr;

use rand_core::RngCore;

use crate::bits::full;
use crate::graph::complete_multipartite;
use crate::parameters::{self, ParameterValue};
use crate::partiteness::colorable_subsets;
use crate::{Error, Graph, Result, VertexSet};

/// Largest graph accepted by [`p_of_g_k`].
pub const P_OF_G_K_MAX_VERTICES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParameterId {
    Order,
    Size,
    MinDegree,
    MaxDegree,
    VertexConnectivity,
    EdgeConnectivity,
    IndependenceNumber,
    ChromaticIndex,
    Treewidth,
    Pathwidth,
}

impl ParameterId {
    pub const ALL: [ParameterId; 10] = [
        ParameterId::Order,
        ParameterId::Size,
        ParameterId::MinDegree,
        ParameterId::MaxDegree,
        ParameterId::VertexConnectivity,
        ParameterId::EdgeConnectivity,
        ParameterId::IndependenceNumber,
        ParameterId::ChromaticIndex,
        ParameterId::Treewidth,
        ParameterId::Pathwidth,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ParameterId::Order => "order",
            ParameterId::Size => "size",
            ParameterId::MinDegree => "min_degree",
            ParameterId::MaxDegree => "max_degree",
            ParameterId::VertexConnectivity => "vertex_connectivity",
            ParameterId::EdgeConnectivity => "edge_connectivity",
            ParameterId::IndependenceNumber => "independence_number",
            ParameterId::ChromaticIndex => "chromatic_index",
            ParameterId::Treewidth => "treewidth",
            ParameterId::Pathwidth => "pathwidth",
        }
    }

    /// Non-increasing under induced subgraphs of any graph. Minimum degree
    /// and the two connectivities are not.
    pub fn is_hereditary(self) -> bool {
        !matches!(
            self,
            ParameterId::MinDegree
                | ParameterId::VertexConnectivity
                | ParameterId::EdgeConnectivity
        )
    }

    /// The parameter value of `graph`. Returns [`Error::Undefined`] where
    /// the parameter has no value (degrees and connectivities of the
    /// graph with no vertices).
    pub fn evaluate(self, graph: &Graph) -> Result<usize> {
        match self {
            ParameterId::Order => Ok(parameters::order(graph)),
            ParameterId::Size => Ok(parameters::size(graph)),
            ParameterId::MinDegree => parameters::min_degree(graph),
            ParameterId::MaxDegree => parameters::max_degree(graph),
            ParameterId::VertexConnectivity => parameters::vertex_connectivity(graph),
            ParameterId::EdgeConnectivity => parameters::edge_connectivity(graph),
            ParameterId::IndependenceNumber => parameters::independence_number(graph).map(|r| r.0),
            ParameterId::ChromaticIndex => parameters::chromatic_index(graph),
            ParameterId::Treewidth => parameters::treewidth(graph).map(|r| r.0),
            ParameterId::Pathwidth => parameters::pathwidth(graph).map(|r| r.0),
        }
    }

    pub fn value_of(self, graph: &Graph) -> Result<ParameterValue> {
        Ok(ParameterValue {
            parameter: self,
            value: self.evaluate(graph)?,
        })
    }
}

impl fmt::Display for ParameterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownParameter;

impl fmt::Display for UnknownParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown parameter tag")
    }
}

impl core::error::Error for UnknownParameter {}

impl FromStr for ParameterId {
    type Err = UnknownParameter;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        ParameterId::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or(UnknownParameter)
    }
}

/// `f_k(n) = p(K_{n|k})` in closed form.
pub fn f_k(param: ParameterId, k: usize, n: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::InvalidArgument("f_k is defined for k >= 2"));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "f_k is defined for part sizes n >= 1",
        ));
    }
    Ok(match param {
        ParameterId::Order => k * n,
        ParameterId::Size => k * (k - 1) / 2 * n * n,
        ParameterId::MinDegree
        | ParameterId::MaxDegree
        | ParameterId::VertexConnectivity
        | ParameterId::EdgeConnectivity
        | ParameterId::Treewidth
        | ParameterId::Pathwidth => (k - 1) * n,
        ParameterId::IndependenceNumber => n,
        ParameterId::ChromaticIndex if (k * n).is_multiple_of(2) => (k - 1) * n,
        ParameterId::ChromaticIndex => (k - 1) * n + 1,
    })
}

/// The `f_k` column for a fixed `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FkTable {
    k: usize,
}

impl FkTable {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument("f_k is defined for k >= 2"));
        }
        Ok(FkTable { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn value(&self, param: ParameterId, n: usize) -> Result<usize> {
        f_k(param, self.k, n)
    }

    pub fn is_strictly_increasing(&self, param: ParameterId, n_max: usize) -> bool {
        (1..n_max).all(|n| {
            let (a, b) = (self.value(param, n), self.value(param, n + 1));
            matches!((a, b), (Ok(a), Ok(b)) if a < b)
        })
    }
}

/// `p(G, k)` and a vertex set inducing a k-partite subgraph that attains
/// it (the first such set in increasing mask order).
///
/// Subsets on which the parameter is undefined are skipped, as are subsets
/// whose cheap upper bound cannot beat the best value found so far.
pub fn p_of_g_k(graph: &Graph, param: ParameterId, k: usize) -> Result<(usize, VertexSet)> {
    if k < 2 {
        return Err(Error::InvalidArgument("p(G, k) needs k >= 2"));
    }
    Error::ceiling("p(G, k) graph order", P_OF_G_K_MAX_VERTICES, graph.order())?;
    let colorable = colorable_subsets(graph, k)?;
    let mut best: Option<(usize, u64)> = None;
    for mask in 0..=full(graph.order()) {
        if !colorable[mask as usize] {
            continue;
        }
        let sub = graph.induced_by_mask(mask);
        if let (Some((b, _)), Some(ub)) = (best, upper_bound(param, &sub)?) {
            if ub <= b {
                continue;
            }
        }
        match param.evaluate(&sub) {
            Ok(v) if best.is_none_or(|(b, _)| v > b) => best = Some((v, mask)),
            Ok(_) | Err(Error::Undefined { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    best.map(|(v, mask)| (v, VertexSet::from_mask(mask)))
        .ok_or(Error::Undefined {
            what: param.tag(),
            n: graph.order(),
        })
}

/// A quick bound `p(H) ≤ ub`, or `None` when `p(H)` is undefined.
fn upper_bound(param: ParameterId, graph: &Graph) -> Result<Option<usize>> {
    let n = graph.order();
    if n == 0 {
        return Ok(None);
    }
    let min_deg = graph.min_degree().unwrap_or(0);
    let max_deg = graph.max_degree().unwrap_or(0);
    Ok(Some(match param {
        ParameterId::Order => n,
        ParameterId::Size => graph.size(),
        ParameterId::MinDegree
        | ParameterId::VertexConnectivity
        | ParameterId::EdgeConnectivity => min_deg,
        ParameterId::MaxDegree => max_deg,
        ParameterId::IndependenceNumber => n,
        ParameterId::ChromaticIndex if graph.size() == 0 => 0,
        ParameterId::ChromaticIndex => max_deg + 1,
        // ordering a maximum stable set last keeps every prefix boundary
        // outside it, so the vertex separation is at most n - α
        ParameterId::Treewidth | ParameterId::Pathwidth => {
            n - parameters::independence_number(graph)?.0
        }
    }))
}

/// Checks on `K_{n|k}` that every induced subgraph has parameter at most
/// `f_k(n)`. All subsets are checked when `kn ≤ 12`; in addition `trials`
/// uniformly random subsets are drawn from `rng`.
pub fn check_subgraph_bound<R: RngCore>(
    param: ParameterId,
    n: usize,
    k: usize,
    trials: usize,
    rng: &mut R,
) -> Result<bool> {
    let bound = f_k(param, k, n)?;
    let (graph, _) = complete_multipartite(n, k)?;
    let order = graph.order();
    Error::ceiling("subgraph bound graph order", 64, order)?;
    let within = |mask: u64| -> Result<bool> {
        match param.evaluate(&graph.induced_by_mask(mask)) {
            Ok(v) => Ok(v <= bound),
            Err(Error::Undefined { .. }) => Ok(true),
            Err(e) => Err(e),
        }
    };
    if order <= 12 {
        for mask in 0..=full(order) {
            if !within(mask)? {
                return Ok(false);
            }
        }
    }
    for _ in 0..trials {
        if !within(rng.next_u64() & full(order))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks for `k` that `f_k` is strictly increasing on `1..=n_max`, and the
/// computed parameter of each constructed `K_{n|k}` equals `f_k(n)`.
/// Graphs beyond a parameter's size ceiling are skipped.
pub fn check_closed_form(param: ParameterId, k: usize, n_max: usize) -> Result<bool> {
    let table = FkTable::new(k)?;
    if !table.is_strictly_increasing(param, n_max) {
        return Ok(false);
    }
    for n in 1..=n_max {
        let (graph, _) = complete_multipartite(n, k)?;
        match param.evaluate(&graph) {
            Ok(v) if v == table.value(param, n)? => {}
            Ok(_) => return Ok(false),
            Err(Error::CeilingExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}
