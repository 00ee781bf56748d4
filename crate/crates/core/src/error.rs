use thiserror::Error;

/// Errors raised by space, graph, network and quantum operations.
///
/// Every variant carries a stable machine-readable code, exposed through
/// [`Error::code`], so callers (the CLI in particular) can map failures to
/// structured output without string-matching the display text.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("point `{point}` is not a member of its own minimal open set")]
    PointNotInOwnMinOpen { point: String },
    #[error("minimal opens violate the Alexandrov condition at `{point}`: min_open({inner}) is not contained in min_open({point})")]
    NotAlexandrov { point: String, inner: String },
    #[error("open family exceeds limit of {limit} sets")]
    OpenFamilyLimit { limit: usize },
    #[error("set {0:?} is not open")]
    NotOpen(Vec<String>),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate graph id `{0}`")]
    DuplicateGraphId(String),
    #[error("map is missing an assignment for domain point `{0}`")]
    MissingAssignment(String),
    #[error("map targets unknown codomain point `{0}`")]
    UnknownTarget(String),

    #[error("link label `{0}` collides with an existing point or label")]
    LabelCollision(String),
    #[error("no link labelled `{0}`")]
    UnknownLink(String),
    #[error("links `{0}` and `{1}` do not share a common middle site")]
    NoCommonSite(String, String),

    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("node `{node}` has no port {port}")]
    UnknownPort { node: String, port: usize },
    #[error("port {port} of node `{node}` is wired more than once")]
    PortConflict { node: String, port: usize },
    #[error("port {port} of node `{node}` is neither contracted nor listed as external")]
    DanglingPort { node: String, port: usize },
    #[error("internal edge joins axes of unequal size ({0} vs {1})")]
    EdgeSizeMismatch(usize, usize),
    #[error("tensor data length {got} does not match shape product {expected}")]
    DataLengthMismatch { got: usize, expected: usize },
    #[error("tensor axis of size zero is not allowed")]
    ZeroAxis,
    #[error("missing index for external port ({node}, {port})")]
    MissingIndex { node: String, port: usize },
    #[error("index {index} out of range for axis of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("contraction plan is invalid: {0}")]
    InvalidPlan(String),
    #[error("node `{0}` does not carry a square matrix")]
    NotSquare(String),
    #[error("node `{node}` is not a projector: max |PP - P| entry is {deviation:e}")]
    NotProjector { node: String, deviation: f64 },
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("expected a state on {expected} qubits, got {got}")]
    WrongQubitCount { expected: usize, got: usize },
    #[error("amplitude vector of length {got} is not a power of two matching {qubits} qubits")]
    BadAmplitudeLength { got: usize, qubits: usize },
    #[error("zero state or matrix cannot be normalized")]
    ZeroVector,
    #[error("invalid qubit partition: {0}")]
    InvalidCut(String),
    #[error("qubit index {index} out of range for {qubits}-qubit state")]
    QubitOutOfRange { index: usize, qubits: usize },
    #[error("measurement outcome has probability {probability:e}, below the impossible-branch threshold")]
    ImpossibleBranch { probability: f64 },
    #[error("at least {min} qubits required, got {got}")]
    TooFewQubits { min: usize, got: usize },

    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownPoint(_) => "unknown_point",
            Error::DuplicatePoint(_) => "duplicate_point",
            Error::PointNotInOwnMinOpen { .. } => "point_not_in_own_min_open",
            Error::NotAlexandrov { .. } => "not_alexandrov",
            Error::OpenFamilyLimit { .. } => "open_family_limit",
            Error::NotOpen(_) => "not_open",
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::DuplicateGraphId(_) => "duplicate_graph_id",
            Error::MissingAssignment(_) => "missing_assignment",
            Error::UnknownTarget(_) => "unknown_target",
            Error::LabelCollision(_) => "label_collision",
            Error::UnknownLink(_) => "unknown_link",
            Error::NoCommonSite(_, _) => "no_common_site",
            Error::UnknownNode(_) => "unknown_node",
            Error::UnknownPort { .. } => "unknown_port",
            Error::PortConflict { .. } => "port_conflict",
            Error::DanglingPort { .. } => "dangling_port",
            Error::EdgeSizeMismatch(_, _) => "edge_size_mismatch",
            Error::DataLengthMismatch { .. } => "data_length_mismatch",
            Error::ZeroAxis => "zero_axis",
            Error::MissingIndex { .. } => "missing_index",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::InvalidPlan(_) => "invalid_plan",
            Error::NotSquare(_) => "not_square",
            Error::NotProjector { .. } => "not_projector",
            Error::ShapeMismatch { .. } => "shape_mismatch",
            Error::WrongQubitCount { .. } => "wrong_qubit_count",
            Error::BadAmplitudeLength { .. } => "bad_amplitude_length",
            Error::ZeroVector => "zero_vector",
            Error::InvalidCut(_) => "invalid_cut",
            Error::QubitOutOfRange { .. } => "qubit_out_of_range",
            Error::ImpossibleBranch { .. } => "impossible_branch",
            Error::TooFewQubits { .. } => "too_few_qubits",
            Error::Schema(_) => "schema",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
