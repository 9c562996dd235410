//! Exact computation of the ten graph parameters, plus tree and path
//! decompositions.
//!
//! Conventions where the textbook definitions leave a gap: vertex and edge
//! connectivity of a disconnected graph are 0, `κ(K_n) = n - 1`, and the
//! one-vertex graph has every parameter except its order equal to 0
//! (`α = 1`). Minimum/maximum degree and the connectivities are undefined
//! on the graph with no vertices.

mod connectivity;
mod decomposition;
mod edge_coloring;
mod independence;
mod pathwidth;
mod treewidth;

pub use connectivity::{edge_connectivity, vertex_connectivity};
pub use decomposition::{PathDecomposition, TreeDecomposition};
pub use edge_coloring::{chromatic_index, edge_coloring, CHROMATIC_INDEX_MAX_EDGES};
pub use independence::{find_stable_set, independence_number, INDEPENDENCE_MAX_VERTICES};
pub use pathwidth::{pathwidth, PATHWIDTH_MAX_VERTICES};
pub use treewidth::{treewidth, TREEWIDTH_MAX_VERTICES};

use crate::imgp::ParameterId;
use crate::{Error, Graph, Result};

/// A computed parameter value tagged with its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParameterValue {
    pub parameter: ParameterId,
    pub value: usize,
}

pub fn order(graph: &Graph) -> usize {
    graph.order()
}

pub fn size(graph: &Graph) -> usize {
    graph.size()
}

pub fn min_degree(graph: &Graph) -> Result<usize> {
    graph.min_degree().ok_or(Error::Undefined {
        what: "minimum degree",
        n: 0,
    })
}

pub fn max_degree(graph: &Graph) -> Result<usize> {
    graph.max_degree().ok_or(Error::Undefined {
        what: "maximum degree",
        n: 0,
    })
}

/// Graph with the same parameters as `K_{n|k}` under relabelling; used by
/// the tests of the submodules.
#[cfg(test)]
pub(crate) fn kn(n: usize, k: usize) -> Graph {
    crate::graph::complete_multipartite(n, k).unwrap().0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_size() {
        let g = kn(3, 2);
        assert_eq!((order(&g), size(&g)), (6, 9));
        let e = Graph::empty(0);
        assert_eq!((order(&e), size(&e)), (0, 0));
        let g = kn(2, 3);
        assert_eq!((order(&g), size(&g)), (6, 12));
    }

    #[test]
    fn degrees() {
        let g = kn(3, 2);
        assert_eq!((min_degree(&g).unwrap(), max_degree(&g).unwrap()), (3, 3));
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            (min_degree(&star).unwrap(), max_degree(&star).unwrap()),
            (1, 3)
        );
        let p3_plus = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            (min_degree(&p3_plus).unwrap(), max_degree(&p3_plus).unwrap()),
            (0, 2)
        );
        assert!(matches!(
            min_degree(&Graph::empty(0)),
            Err(Error::Undefined { .. })
        ));
        assert!(matches!(
            max_degree(&Graph::empty(0)),
            Err(Error::Undefined { .. })
        ));
    }

    #[test]
    fn single_vertex_conventions() {
        let g = Graph::empty(1);
        assert_eq!(min_degree(&g).unwrap(), 0);
        assert_eq!(max_degree(&g).unwrap(), 0);
        assert_eq!(vertex_connectivity(&g).unwrap(), 0);
        assert_eq!(edge_connectivity(&g).unwrap(), 0);
        assert_eq!(independence_number(&g).unwrap().0, 1);
        assert_eq!(chromatic_index(&g).unwrap(), 0);
        assert_eq!(treewidth(&g).unwrap().0, 0);
        assert_eq!(pathwidth(&g).unwrap().0, 0);
    }
}
