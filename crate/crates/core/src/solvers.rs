//! Decision procedures for the two problems on induced k-partite
//! subgraphs.
//!
//! * *Induced k-partite subgraph parameter*: is `p(G, k) ≤ ℓ`?
//!   ([`ikpsp_decide`], exact and exponential).
//! * *Large induced k-partite subgraph parameter*: is there a set `S` of at
//!   most `m` vertices such that `G \ S` is k-partite with `p(G \ S) ≤ ℓ`?
//!   [`large_ikpsp_oracle`] answers this for any parameter by enumeration;
//!   the `large_fpt_*` routines are the bounded-search algorithms for
//!   independence number, treewidth, pathwidth, order and size.
//!
//! Every routine enumerates deletion sets by size, then lexicographically,
//! and reports the first one accepted.

use alloc::vec::Vec;

use itertools::Itertools;

use crate::imgp::{p_of_g_k, ParameterId};
use crate::parameters::{
    find_stable_set, independence_number, pathwidth, treewidth, TreeDecomposition,
};
use crate::partiteness::{is_k_colorable, is_k_partite_via_decomposition};
use crate::{Error, Graph, Result, VertexSet};

/// Most deletion sets the brute-force oracle will enumerate.
pub const ORACLE_MAX_CANDIDATES: u64 = 1 << 24;

/// `(G, p, k, ℓ)` for the first problem, `(G, p, k, ℓ, m)` for the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    pub graph: Graph,
    pub param: ParameterId,
    pub k: usize,
    pub ell: usize,
    /// Deletion budget; `None` for the first problem.
    pub m: Option<usize>,
}

impl ProblemInstance {
    pub fn ikpsp(graph: Graph, param: ParameterId, k: usize, ell: usize) -> Result<Self> {
        check_k(k)?;
        Ok(ProblemInstance {
            graph,
            param,
            k,
            ell,
            m: None,
        })
    }

    pub fn large(graph: Graph, param: ParameterId, k: usize, ell: usize, m: usize) -> Result<Self> {
        check_k(k)?;
        Ok(ProblemInstance {
            graph,
            param,
            k,
            ell,
            m: Some(m),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EarlyExit {
    /// `|G| > kℓ + m` (independence) or `|G| > ℓ + m` (order).
    TooManyVertices,
    /// More than `m` vertices of degree above `ℓ + m`.
    TooManyHighDegree,
    /// `‖Ĝ‖ > t` after removing the high-degree vertices.
    TooManyEdges,
    /// Treewidth or pathwidth of `G` exceeds `ℓ + m`.
    WidthExceeded,
}

impl EarlyExit {
    pub fn tag(self) -> &'static str {
        match self {
            EarlyExit::TooManyVertices => "too_many_vertices",
            EarlyExit::TooManyHighDegree => "too_many_high_degree",
            EarlyExit::TooManyEdges => "too_many_edges",
            EarlyExit::WidthExceeded => "width_exceeded",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverTrace {
    pub early_exit: Option<EarlyExit>,
    /// `s`: vertices of degree greater than `ℓ + m` (edges routine).
    pub high_degree: Option<usize>,
    /// `t = (ℓ + m)(m − s) + ℓ` (edges routine).
    pub edge_budget: Option<usize>,
    /// The largest bag whose subsets were tried (width routines).
    pub bag: Option<VertexSet>,
    /// Vertices isolated after the high-degree deletion; they stay in the
    /// returned subgraph (edges routine).
    pub isolated: Option<VertexSet>,
    pub candidates_examined: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Answer {
    pub verdict: bool,
    /// Deleted vertices `S`; the certified subgraph is `G \ S`.
    pub witness: Option<VertexSet>,
    /// `p(G, k)` for the first problem.
    pub value: Option<usize>,
    pub trace: SolverTrace,
}

impl Answer {
    fn no(trace: SolverTrace) -> Self {
        Answer {
            verdict: false,
            witness: None,
            value: None,
            trace,
        }
    }

    fn from_search(found: Option<VertexSet>, trace: SolverTrace) -> Self {
        Answer {
            verdict: found.is_some(),
            witness: found,
            value: None,
            trace,
        }
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2"));
    }
    Ok(())
}

/// Number of subsets of at most `max` elements from `pool` elements,
/// saturating.
pub fn deletion_set_count(pool: usize, max: usize) -> u64 {
    let mut total = 0u64;
    let mut binom = 1u64;
    for i in 0..=max.min(pool) {
        total = total.saturating_add(binom);
        binom = binom.saturating_mul((pool - i) as u64) / (i as u64 + 1);
    }
    total
}

/// Tries subsets of `pool` with at most `max` members, by size then
/// lexicographically, returning the first accepted one.
fn first_deletion_set(
    pool: &[usize],
    max: usize,
    trace: &mut SolverTrace,
    mut accept: impl FnMut(&VertexSet) -> Result<bool>,
) -> Result<Option<VertexSet>> {
    for size in 0..=max.min(pool.len()) {
        for combo in pool.iter().copied().combinations(size) {
            let set = VertexSet::new(combo);
            trace.candidates_examined += 1;
            if accept(&set)? {
                return Ok(Some(set));
            }
        }
    }
    Ok(None)
}

fn bounded_by(param: ParameterId, graph: &Graph, ell: usize) -> Result<bool> {
    match param.evaluate(graph) {
        Ok(v) => Ok(v <= ell),
        Err(Error::Undefined { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Exact decision of `p(G, k) ≤ ℓ` by subset enumeration.
pub fn ikpsp_decide(graph: &Graph, param: ParameterId, k: usize, ell: usize) -> Result<Answer> {
    check_k(k)?;
    let (value, _) = p_of_g_k(graph, param, k)?;
    Ok(Answer {
        verdict: value <= ell,
        witness: None,
        value: Some(value),
        trace: SolverTrace {
            candidates_examined: 1u64 << graph.order(),
            ..SolverTrace::default()
        },
    })
}

/// Reference solver: every deletion set of at most `m` vertices.
pub fn large_ikpsp_oracle(
    graph: &Graph,
    param: ParameterId,
    k: usize,
    ell: usize,
    m: usize,
) -> Result<Answer> {
    check_k(k)?;
    let n = graph.order();
    let count = deletion_set_count(n, m);
    if count > ORACLE_MAX_CANDIDATES {
        return Err(Error::CeilingExceeded {
            what: "oracle deletion sets",
            limit: ORACLE_MAX_CANDIDATES as usize,
            found: usize::try_from(count).unwrap_or(usize::MAX),
        });
    }
    let pool: Vec<usize> = (0..n).collect();
    let mut trace = SolverTrace::default();
    let found = first_deletion_set(&pool, m, &mut trace, |s| {
        let rest = graph.delete_vertices(s)?;
        Ok(is_k_colorable(&rest, k)? && bounded_by(param, &rest, ell)?)
    })?;
    Ok(Answer::from_search(found, trace))
}

/// Bounded search for independence number.
///
/// A k-partite graph with `α ≤ ℓ` has at most `kℓ` vertices, so larger
/// inputs are rejected at once. Otherwise each deletion set is tested for
/// a stable set of order `ℓ + 1`, then for k-partiteness.
pub fn large_fpt_independence(graph: &Graph, k: usize, ell: usize, m: usize) -> Result<Answer> {
    check_k(k)?;
    let mut trace = SolverTrace::default();
    if graph.order() > k * ell + m {
        trace.early_exit = Some(EarlyExit::TooManyVertices);
        return Ok(Answer::no(trace));
    }
    let pool: Vec<usize> = (0..graph.order()).collect();
    let found = first_deletion_set(&pool, m, &mut trace, |s| {
        let rest = graph.delete_vertices(s)?;
        Ok(find_stable_set(&rest, ell + 1)?.is_none() && is_k_colorable(&rest, k)?)
    })?;
    Ok(Answer::from_search(found, trace))
}

/// Bounded search for the number of vertices: `|G| > ℓ + m` is a no.
pub fn large_fpt_vertices(graph: &Graph, k: usize, ell: usize, m: usize) -> Result<Answer> {
    check_k(k)?;
    let mut trace = SolverTrace::default();
    if graph.order() > ell + m {
        trace.early_exit = Some(EarlyExit::TooManyVertices);
        return Ok(Answer::no(trace));
    }
    let pool: Vec<usize> = (0..graph.order()).collect();
    let found = first_deletion_set(&pool, m, &mut trace, |s| {
        let rest = graph.delete_vertices(s)?;
        Ok(rest.order() <= ell && is_k_colorable(&rest, k)?)
    })?;
    Ok(Answer::from_search(found, trace))
}

/// Bounded search for the number of edges.
///
/// Every vertex of degree above `ℓ + m` must be deleted; with `s` such
/// vertices the remaining graph `Ĝ` may lose at most `(ℓ + m)(m − s)`
/// edges, so `‖Ĝ‖ > t = (ℓ + m)(m − s) + ℓ` is a no. Isolated vertices of
/// `Ĝ` are left out of the search and kept in the answer.
pub fn large_fpt_edges(graph: &Graph, k: usize, ell: usize, m: usize) -> Result<Answer> {
    check_k(k)?;
    let mut trace = SolverTrace::default();
    let cap = ell + m;
    let high = VertexSet::new((0..graph.order()).filter(|&v| graph.degree(v) > cap));
    let s = high.len();
    trace.high_degree = Some(s);
    if s > m {
        trace.early_exit = Some(EarlyExit::TooManyHighDegree);
        return Ok(Answer::no(trace));
    }
    let kept = VertexSet::new((0..graph.order()).filter(|&v| !high.contains(v)));
    let reduced = graph.induced_subgraph(&kept)?;
    let budget = cap * (m - s) + ell;
    trace.edge_budget = Some(budget);
    if reduced.size() > budget {
        trace.early_exit = Some(EarlyExit::TooManyEdges);
        return Ok(Answer::no(trace));
    }
    let (active, isolated): (Vec<usize>, Vec<usize>) =
        (0..reduced.order()).partition(|&v| reduced.degree(v) > 0);
    trace.isolated = Some(VertexSet::new(isolated).lift(&kept));
    let active = VertexSet::new(active);
    let core = reduced.induced_subgraph(&active)?;
    let pool: Vec<usize> = (0..core.order()).collect();
    let found = first_deletion_set(&pool, m - s, &mut trace, |del| {
        let rest = core.delete_vertices(del)?;
        Ok(rest.size() <= ell && is_k_colorable(&rest, k)?)
    })?;
    let witness = found.map(|del| {
        let lifted = del.lift(&active).lift(&kept);
        VertexSet::new(high.iter().copied().chain(lifted.into_vec()))
    });
    Ok(Answer::from_search(witness, trace))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Width {
    Tree,
    Path,
}

impl Width {
    fn decompose(self, graph: &Graph) -> Result<(usize, TreeDecomposition)> {
        match self {
            Width::Tree => treewidth(graph),
            Width::Path => pathwidth(graph).map(|(w, pd)| (w, pd.to_tree_decomposition())),
        }
    }
}

fn large_fpt_width(
    graph: &Graph,
    decomposition: &TreeDecomposition,
    width: Width,
    k: usize,
    ell: usize,
    m: usize,
) -> Result<Answer> {
    check_k(k)?;
    if !decomposition.validate(graph) {
        return Err(Error::InvalidDecomposition(
            "supplied decomposition is not valid for the graph",
        ));
    }
    if decomposition.width() > ell + m {
        return Err(Error::InvalidDecomposition(
            "supplied decomposition is wider than ell + m",
        ));
    }
    let bag = decomposition
        .largest_bag()
        .cloned()
        .expect("valid decomposition has a bag");
    let mut trace = SolverTrace {
        bag: Some(bag.clone()),
        ..SolverTrace::default()
    };
    let found = first_deletion_set(bag.as_slice(), m, &mut trace, |s| {
        let rest = graph.delete_vertices(s)?;
        let (w, td) = width.decompose(&rest)?;
        Ok(w <= ell && is_k_partite_via_decomposition(&rest, &td, k)?.is_some())
    })?;
    Ok(Answer::from_search(found, trace))
}

/// Bounded search for treewidth: computes an optimal tree decomposition,
/// rejects if its width exceeds `ℓ + m`, and otherwise only tries deletion
/// sets inside one largest bag.
///
/// The restriction to a single bag can miss solutions (two disjoint
/// triangles with `k = 2, ℓ = 1, m = 2` is a no here but a yes for the
/// oracle); yes answers are always sound.
pub fn large_fpt_treewidth(graph: &Graph, k: usize, ell: usize, m: usize) -> Result<Answer> {
    check_k(k)?;
    let (w, td) = treewidth(graph)?;
    if w > ell + m {
        return Ok(Answer::no(SolverTrace {
            early_exit: Some(EarlyExit::WidthExceeded),
            ..SolverTrace::default()
        }));
    }
    large_fpt_width(graph, &td, Width::Tree, k, ell, m)
}

/// [`large_fpt_treewidth`] with a caller-supplied decomposition of width
/// at most `ℓ + m`.
pub fn large_fpt_treewidth_with(
    graph: &Graph,
    decomposition: &TreeDecomposition,
    k: usize,
    ell: usize,
    m: usize,
) -> Result<Answer> {
    large_fpt_width(graph, decomposition, Width::Tree, k, ell, m)
}

/// The pathwidth counterpart of [`large_fpt_treewidth`].
pub fn large_fpt_pathwidth(graph: &Graph, k: usize, ell: usize, m: usize) -> Result<Answer> {
    check_k(k)?;
    let (w, pd) = pathwidth(graph)?;
    if w > ell + m {
        return Ok(Answer::no(SolverTrace {
            early_exit: Some(EarlyExit::WidthExceeded),
            ..SolverTrace::default()
        }));
    }
    large_fpt_width(graph, &pd.to_tree_decomposition(), Width::Path, k, ell, m)
}

/// Dispatches to the bounded-search routine for `param`, if there is one.
pub fn large_fpt(
    graph: &Graph,
    param: ParameterId,
    k: usize,
    ell: usize,
    m: usize,
) -> Result<Answer> {
    match param {
        ParameterId::IndependenceNumber => large_fpt_independence(graph, k, ell, m),
        ParameterId::Treewidth => large_fpt_treewidth(graph, k, ell, m),
        ParameterId::Pathwidth => large_fpt_pathwidth(graph, k, ell, m),
        ParameterId::Order => large_fpt_vertices(graph, k, ell, m),
        ParameterId::Size => large_fpt_edges(graph, k, ell, m),
        other => Err(Error::UnsupportedParameter(other.tag())),
    }
}

/// Is `α(G) ≤ m`?
pub fn max_stable_set_decide(graph: &Graph, m: usize) -> Result<bool> {
    Ok(independence_number(graph)?.0 <= m)
}

/// Re-checks a yes answer to the second problem: `S ⊆ V(G)`, `|S| ≤ m`,
/// `G \ S` is k-partite, and `p(G \ S) ≤ ℓ`.
pub fn verify_answer(instance: &ProblemInstance, answer: &Answer) -> bool {
    let (Some(m), Some(del)) = (instance.m, answer.witness.as_ref()) else {
        return false;
    };
    if del.len() > m || del.check_within(instance.graph.order()).is_err() {
        return false;
    }
    let Ok(rest) = instance.graph.delete_vertices(del) else {
        return false;
    };
    matches!(is_k_colorable(&rest, instance.k), Ok(true))
        && matches!(bounded_by(instance.param, &rest, instance.ell), Ok(true))
}
