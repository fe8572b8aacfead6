use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, at most {max} supported here")]
    TooLarge { n: usize, max: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("budget of {budget} exceeded while {what}")]
    BudgetExceeded { what: &'static str, budget: usize },

    #[error("graph is not in class C (long hole or extended C5 present)")]
    NotInClassC,

    #[error("graph contains a hole of length at least 5")]
    NotLongHoleFree,

    #[error("graph contains an induced P5")]
    NotP5Free,

    #[error("minimal dominating set {z:?} is not a clique; input violates the class promise")]
    NotAClique { z: VertexSet },

    #[error("vertex {v} has no private neighbor in the separator; input violates the class promise")]
    NoPrivateVertex { v: usize },

    #[error("separator {s:?} is primitive; use the F0 family")]
    PrimitiveSeparator { s: VertexSet },

    #[error("class promise violated: {0}")]
    ClassViolation(String),

    #[error("{omega:?} is not a potential maximal clique")]
    NotAPmc { omega: VertexSet },

    #[error("set {j:?} is not independent")]
    JNotIndependent { j: VertexSet },

    #[error("no component of G - omega sees all of {j:?}")]
    NoCoveringComponent { j: VertexSet },

    #[error("vertex {v} has no neighbor outside omega")]
    VNotCovered { v: usize },

    #[error("no pair of components covers omega minus N({v})")]
    NoSuchPair { v: usize },

    #[error("every adhesion lies in the separator family")]
    PurePmc,

    #[error("no anticomplete vertices found in separator {s:?}")]
    NoZVertices { s: VertexSet },

    #[error("lifting failed when reinserting vertex {vertex}")]
    LiftFailed { vertex: usize },

    #[error("gave up after {attempts} rejected samples")]
    GiveUp { attempts: usize },
}

impl Error {
    /// True for errors that mean the input is outside the promised graph class.
    pub fn is_class_violation(&self) -> bool {
        matches!(
            self,
            Error::NotInClassC
                | Error::NotLongHoleFree
                | Error::NotP5Free
                | Error::NotAClique { .. }
                | Error::NoPrivateVertex { .. }
                | Error::ClassViolation(_)
                | Error::NoCoveringComponent { .. }
                | Error::NoSuchPair { .. }
                | Error::NoZVertices { .. }
        )
    }
}
