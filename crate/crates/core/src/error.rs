use std::fmt;

use thiserror::Error;

/// One violated graph invariant, with the vertex or minor that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    Empty,
    DuplicateVertex(String),
    DuplicateEdge(String, String),
    SelfLoop(String),
    UnknownEndpoint { edge: (String, String), id: String },
    NonzeroGenus { vertex: String, genus: i64 },
    Disconnected { unreached: String },
    NotATree { edges: usize, vertices: usize },
    /// The leading principal minor of order `order` has the wrong sign for
    /// a negative definite form (it must have sign `(-1)^order`).
    NotNegativeDefinite { order: usize, last_vertex: String, minor: String },
    ZeroDeterminant,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Empty => write!(f, "graph has no vertices"),
            Diagnostic::DuplicateVertex(v) => write!(f, "vertex `{v}` declared twice"),
            Diagnostic::DuplicateEdge(a, b) => write!(f, "edge `{a}`-`{b}` declared twice"),
            Diagnostic::SelfLoop(v) => write!(f, "self loop at `{v}`"),
            Diagnostic::UnknownEndpoint { edge, id } => {
                write!(f, "edge `{}`-`{}` uses unknown vertex `{id}`", edge.0, edge.1)
            }
            Diagnostic::NonzeroGenus { vertex, genus } => {
                write!(f, "vertex `{vertex}` has genus {genus}, only genus 0 is supported")
            }
            Diagnostic::Disconnected { unreached } => {
                write!(f, "not a tree: graph is disconnected (`{unreached}` unreachable)")
            }
            Diagnostic::NotATree { edges, vertices } => {
                write!(f, "not a tree: {edges} edges on {vertices} vertices")
            }
            Diagnostic::NotNegativeDefinite { order, last_vertex, minor } => write!(
                f,
                "not negative definite: leading minor of order {order} (through `{last_vertex}`) is {minor}"
            ),
            Diagnostic::ZeroDeterminant => write!(f, "determinant zero / not negative definite"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {}", join_diagnostics(.0))]
    Validation(Vec<Diagnostic>),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("cycle has {got} coordinates, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("class is not in the dual lattice L'")]
    NotInDualLattice,
    #[error("search too large: {points} box points exceed the limit {limit}")]
    SearchTooLarge { points: u128, limit: u128 },
    #[error("empty cycle")]
    EmptyCycle,
    #[error("cycle has negative coefficients")]
    NegativeCoefficient,
    #[error("formula not applicable: {0}")]
    FormulaNotApplicable(String),
    #[error("not defined for rational graphs")]
    RationalGraph,
    #[error("`{0}`-`{1}` is not an edge")]
    NotAnEdge(String, String),
    #[error("invalid box: lower bound exceeds upper bound at `{0}`")]
    InvalidBox(String),
    #[error("non-unique minimal cohomological cycle: {first:?} and {second:?}")]
    NonUniqueCohomologicalCycle { first: Vec<i64>, second: Vec<i64> },
    #[error("step cap {0} reached without the criterion failing")]
    StepCapReached(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("no maximal element: {first:?} and {second:?} are incomparable maximal elements")]
    NoMaximum { first: Vec<i64>, second: Vec<i64> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_diagnostics(d: &[Diagnostic]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
