use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {{{u},{v}}} is not present in the graph")]
    MissingEdge { u: usize, v: usize },

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("operation requires a simple graph")]
    NotSimple,

    #[error("reduced Laplacian of a one-vertex graph is empty")]
    EmptyMatrix,

    #[error("marked determinant is not linear in x: det(0)={at0}, det(1)={at1}, det(2)={at2}")]
    NonlinearMarkedPattern { at0: String, at1: String, at2: String },

    #[error("oracle would examine {needed} edge subsets, budget is {budget}")]
    OracleTooLarge { needed: String, budget: u64 },

    #[error("invalid Prüfer sequence: {0}")]
    InvalidSequence(String),

    #[error("root has no children")]
    NoChildren,

    #[error("closed form evaluated to {value}, which is not a nonnegative integer")]
    FormulaDomain { value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
