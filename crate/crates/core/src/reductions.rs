//! Constructions behind the two hardness results.
//!
//! [`mss_to_ikpsp`] maps a Maximum Stable Set instance `(G, m)` to the
//! instance `(K_k·G, p, k, f_k(m))` of the first problem; the two answers
//! agree because `p(K_k·G, k) = f_k(α(G))` and `f_k` is strictly
//! increasing. [`tmd4_to_large`] maps a graph of maximum degree at most 4
//! to an instance of the second problem with `k = 3` and `m = 0` whose
//! answer is yes exactly when the graph is tripartite.

use crate::graph::lex_product_with_complete;
use crate::imgp::{f_k, p_of_g_k, ParameterId};
use crate::parameters::independence_number;
use crate::solvers::ProblemInstance;
use crate::{Error, Graph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    /// Maximum Stable Set to the first problem via `K_k·G`.
    LexProduct,
    /// Tripartiteness at maximum degree 4 to the second problem.
    TripartiteMaxDegree4,
}

impl ReductionKind {
    pub fn tag(self) -> &'static str {
        match self {
            ReductionKind::LexProduct => "lex",
            ReductionKind::TripartiteMaxDegree4 => "tmd4",
        }
    }
}

/// Where a reduced instance came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub reduction: ReductionKind,
    pub source_order: usize,
    pub source_size: usize,
    pub param: ParameterId,
    pub k: usize,
    /// The stable-set bound `m` of the source instance (lex only).
    pub source_m: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub produced: Graph,
    pub instance: ProblemInstance,
    /// The bound `ℓ` placed on the parameter.
    pub threshold: usize,
    pub provenance: Provenance,
}

/// `(G, m) ↦ (K_k·G, p, k, f_k(m))`.
///
/// `f_k(0)` is not defined, so `m = 0` is rejected; `α(G) ≤ 0` only holds
/// for the graph without vertices.
pub fn mss_to_ikpsp(
    graph: &Graph,
    m: usize,
    k: usize,
    param: ParameterId,
) -> Result<ReductionOutput> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "stable-set bound m must be at least 1 for the lex reduction",
        ));
    }
    let threshold = f_k(param, k, m)?;
    let (produced, _) = lex_product_with_complete(graph, k)?;
    let instance = ProblemInstance::ikpsp(produced.clone(), param, k, threshold)?;
    Ok(ReductionOutput {
        produced,
        instance,
        threshold,
        provenance: Provenance {
            reduction: ReductionKind::LexProduct,
            source_order: graph.order(),
            source_size: graph.size(),
            param,
            k,
            source_m: Some(m),
        },
    })
}

/// Both sides of `p(K_k·G, k) = f_k(α(G))`, computed independently: the
/// left by subset enumeration on the product, the right from `α(G)`.
///
/// The graph without vertices is rejected since neither side is defined.
pub fn identity_sides(graph: &Graph, k: usize, param: ParameterId) -> Result<(usize, usize)> {
    if graph.order() == 0 {
        return Err(Error::Undefined {
            what: "stable-set identity",
            n: 0,
        });
    }
    let (product, _) = lex_product_with_complete(graph, k)?;
    let (lhs, _) = p_of_g_k(&product, param, k)?;
    let (alpha, _) = independence_number(graph)?;
    Ok((lhs, f_k(param, k, alpha)?))
}

pub fn verify_stable_set_identity(graph: &Graph, k: usize, param: ParameterId) -> Result<bool> {
    identity_sides(graph, k, param).map(|(lhs, rhs)| lhs == rhs)
}

/// The parameter bound `ℓ` used for each supported parameter.
pub fn tmd4_threshold(param: ParameterId) -> Result<usize> {
    match param {
        ParameterId::MinDegree
        | ParameterId::MaxDegree
        | ParameterId::VertexConnectivity
        | ParameterId::EdgeConnectivity => Ok(4),
        ParameterId::ChromaticIndex => Ok(5),
        other => Err(Error::UnsupportedParameter(other.tag())),
    }
}

/// `G ↦ (G, p, 3, ℓ, 0)` for `Δ(G) ≤ 4`.
///
/// Every induced subgraph of `G` has degrees, connectivities at most 4 and
/// chromatic index at most 5, so the parameter bound never binds and the
/// answer is yes exactly when `G` is 3-colourable.
pub fn tmd4_to_large(graph: &Graph, param: ParameterId) -> Result<ReductionOutput> {
    let threshold = tmd4_threshold(param)?;
    let max_deg = graph.max_degree().unwrap_or(0);
    if max_deg > 4 {
        return Err(Error::MaxDegreeExceeded {
            limit: 4,
            found: max_deg,
        });
    }
    let instance = ProblemInstance::large(graph.clone(), param, 3, threshold, 0)?;
    Ok(ReductionOutput {
        produced: graph.clone(),
        instance,
        threshold,
        provenance: Provenance {
            reduction: ReductionKind::TripartiteMaxDegree4,
            source_order: graph.order(),
            source_size: graph.size(),
            param,
            k: 3,
            source_m: None,
        },
    })
}
