use thiserror::Error;

/// Errors raised while building or validating graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("odd number of darts ({0}); every edge has two ends")]
    OddDartCount(usize),
    #[error("dart {dart} out of range (graph has {darts} darts)")]
    DartOutOfRange { dart: usize, darts: usize },
    #[error("vertex {0} does not exist")]
    VertexOutOfRange(usize),
    #[error("slot {slot} of vertex {vertex} is used by more than one edge end")]
    SlotCollision { vertex: usize, slot: usize },
    #[error("slot {slot} of vertex {vertex} is not used by any edge end")]
    SlotUnused { vertex: usize, slot: usize },
    #[error("slot {slot} is out of range at vertex {vertex}")]
    SlotOutOfRange { vertex: usize, slot: usize },
    #[error("edge {edge}: end label {edge_label} disagrees with label {vertex_label} at vertex {vertex} slot {slot}")]
    LabelMismatch {
        edge: usize,
        vertex: usize,
        slot: usize,
        edge_label: u32,
        vertex_label: u32,
    },
    #[error("label {label} at vertex {vertex} slot {slot} is outside 1..={modulus}")]
    LabelOutOfRange {
        vertex: usize,
        slot: usize,
        label: u32,
        modulus: u32,
    },
    #[error("vertex {vertex}: label cycle is not {delta} consecutive runs of 1..={modulus}")]
    LabelBlockViolation {
        vertex: usize,
        delta: u32,
        modulus: u32,
    },
    #[error("vertex {vertex} has degree {found}, expected {expected}")]
    DegreeMismatch {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {edge}: declared sign contradicts the parities of its endpoints")]
    ParityContradiction { edge: usize },
    #[error("derived surface has genus {genus} over {components} component(s); a cellular torus is required")]
    NotCellular { genus: i64, components: usize },
    #[error("bad edge word: {0}")]
    BadWord(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("family of size {size} is smaller than the modulus {modulus}")]
    FamilyTooSmall { size: u32, modulus: u32 },
    #[error("family labels do not follow an affine rule mod {modulus}")]
    NotAffine { modulus: u32 },
    #[error("family has no label data")]
    MissingLabels,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("class is in frame {found}, expected {expected}")]
    WrongFrame {
        expected: String,
        found: String,
    },
    #[error("class ({mu}, {lambda}) is not primitive")]
    NonPrimitive { mu: i64, lambda: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("jumping number one applies only when delta = 6 (got {0})")]
    WrongDelta(u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("{which} = {value} exceeds the configured cap {cap}")]
    ScaleLimit {
        which: &'static str,
        value: u32,
        cap: u32,
    },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
