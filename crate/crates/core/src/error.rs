use thiserror::Error;

/// Errors from parsing or validating planar diagram codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdError {
    #[error("malformed crossing token #{index} `{token}`: {reason}")]
    Malformed {
        index: usize,
        token: String,
        reason: &'static str,
    },
    #[error("edge label {label} occurs {count} times (at most 2 allowed)")]
    LabelOverused { label: u32, count: usize },
    #[error("edge label must be >= 1")]
    ZeroLabel,
    #[error("arc endpoint {label} is also used elsewhere in the diagram")]
    ArcConflict { label: u32 },
    #[error("diagram is open (boundary labels {0:?}); a closed diagram is required")]
    NotClosed(Vec<u32>),
    #[error(
        "inconsistent strand orientation through edge {label}: under-strand direction conflicts"
    )]
    Inconsistent { label: u32 },
}

/// Errors from tangle construction, stitching, closure, and cutting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("label {0} is not an open end of the tangle")]
    NotAnEnd(u32),
    #[error("label {0} appears in more than one stitching")]
    ReusedEnd(u32),
    #[error("stitching joins label {0} to itself")]
    SelfStitch(u32),
    #[error("closure needs an even number of {side} ends, found {count}")]
    OddEnds { side: &'static str, count: usize },
    #[error("full closure needs |tops| = |bottoms| = 2n with n >= 1, found {tops} tops and {bottoms} bottoms")]
    FullClosureShape { tops: usize, bottoms: usize },
    #[error("tops and bottoms must be disjoint and cover the diagram boundary exactly")]
    EndMismatch,
    #[error("untangle needs at least one strand")]
    NoStrands,
    #[error("cut needs exactly 4 edge labels, got {0}")]
    CutArity(usize),
    #[error("edge {0} is not an edge of the diagram")]
    UnknownEdge(u32),
    #[error("degenerate cut set: edge {0} is listed more than once")]
    DegenerateCut(u32),
    #[error("cut requires a 1-component diagram, found {0} components")]
    NotAKnot(usize),
    #[error(transparent)]
    Pd(#[from] PdError),
}

/// Errors from invariant computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("the empty diagram has no bracket")]
    EmptyDiagram,
    #[error("expected a knot, found {0} components")]
    NotAKnot(usize),
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error(transparent)]
    Pd(#[from] PdError),
}

/// Errors from loading the embedded table or a reference file.
#[derive(Debug, Error)]
pub enum DatabaseError {
    #[error("i/o error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema `{0}`")]
    Schema(String),
    #[error("reference file has no entry for knot {0}")]
    MissingKnot(String),
    #[error("reference file names unknown knot {0}")]
    UnknownKnot(String),
    #[error("reference file lists knot {0} twice")]
    DuplicateKnot(String),
    #[error("reference Alexander polynomial of {0} is not symmetric")]
    AsymmetricAlexander(String),
    #[error("reference determinant of {name} is {stored}, but |alexander(-1)| = {computed}")]
    DeterminantMismatch {
        name: String,
        stored: u64,
        computed: u64,
    },
    #[error("bad polynomial term in {0}")]
    BadTerm(String),
}
