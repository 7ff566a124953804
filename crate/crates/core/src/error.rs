use thiserror::Error;

/// Everything that can go wrong between reading an embedding and emitting a drawing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("edge {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("rotation is not a permutation of the incident edges at vertex {0}")]
    BadRotation(usize),
    #[error("edge {0} occurs in more than one crossing pair")]
    DuplicateCrossing(usize),
    #[error("crossing pair ({0}, {1}) is invalid: {2}")]
    BadCrossing(usize, usize, String),
    #[error("rotation system is not planar: V - E + F = {euler}, expected 2")]
    EulerViolation { euler: i64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2-connected (cut vertex {0})")]
    NotTwoConnected(usize),
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("too many edges for a 1-planar graph: {edges} > 4n - 8 = {bound}")]
    TooManyEdges { edges: usize, bound: usize },
    #[error("edge {{{0}, {1}}} is not on the outer face")]
    EdgeNotOnOuterFace(usize, usize),
    #[error("face {face} has {size} sides; only triangles and quadrangles are supported")]
    BadFaceSize { face: usize, size: usize },
    #[error("embedding is not IC-planar: {0}")]
    NotICPlanar(String),
    #[error("a W-configuration is present at separation pair [{0}, {1}]")]
    WConfigurationPresent(usize, usize),
    #[error("face {0} cannot be classified; the ordering is inconsistent")]
    UnclassifiableFace(usize),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("compaction broke visibility")]
    CompactionBrokeVisibility,
    #[error("shape of vertex {0} is not allowed in this mode")]
    ShapeOutOfMode(usize),
    #[error("no pylon position for vertex {0} sees all its quadrangles")]
    NoPylonPosition(usize),
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
