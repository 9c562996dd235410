use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    /// The parameter is not defined on graphs this small (e.g. minimum
    /// degree of the empty graph).
    #[error("{what} is undefined on a graph with {n} vertices")]
    Undefined { what: &'static str, n: usize },

    #[error("{what} supports at most {limit}, got {found}")]
    CeilingExceeded {
        what: &'static str,
        limit: usize,
        found: usize,
    },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(&'static str),

    #[error("parameter {0} is not supported here")]
    UnsupportedParameter(&'static str),

    #[error("maximum degree {found} exceeds {limit}")]
    MaxDegreeExceeded { limit: usize, found: usize },
}

impl Error {
    pub(crate) fn ceiling(what: &'static str, limit: usize, found: usize) -> Result<()> {
        if found > limit {
            Err(Error::CeilingExceeded { what, limit, found })
        } else {
            Ok(())
        }
    }
}
