use thiserror::Error;

/// Errors raised while building or simulating operators, schedules and walks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("register of {0} qubits exceeds the dense limit of {max} qubits", max = crate::MAX_QUBITS)]
    RegisterTooLarge(usize),
    #[error("register must hold at least one qubit")]
    EmptyRegister,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not Hermitian: |M[{row}][{col}] - conj(M[{col}][{row}])| = {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },
    #[error("matrix is not unitary: ||M^dag M - I||_F = {deviation:e}")]
    NotUnitary { deviation: f64 },
    #[error("state is not normalized: norm = {norm}")]
    NotNormalized { norm: f64 },
    #[error("qubit {qubit} is outside the register 1..={n}")]
    InvalidQubit { qubit: usize, n: usize },
    #[error("basis index {index} is outside 0..{dim}")]
    InvalidBasisIndex { index: usize, dim: usize },
    #[error("control equals target (qubit {0})")]
    ControlEqualsTarget(usize),
    #[error("edge ({0}, {1}) joins a vertex to itself")]
    SelfPair(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {w}) is not a hypercube edge: endpoints differ in {differing_bits} bits")]
    NotHypercubeEdge { u: usize, w: usize, differing_bits: u32 },
    #[error("vertex {vertex} is outside 0..{num_vertices}")]
    InvalidVertex { vertex: usize, num_vertices: usize },
    #[error("weight {0} must be positive and finite")]
    InvalidWeight(f64),
    #[error("angle {0} must be finite")]
    InvalidAngle(f64),
    #[error("propagation time {0} must be positive and finite")]
    InvalidTime(f64),
    #[error("the empty qubit set selects no direction")]
    EmptyQubitSet,
    #[error("walk on a graph with zero adjacency matrix has undefined normalization")]
    ZeroAdjacency,
    #[error("a schedule needs at least one layer")]
    EmptySchedule,
    #[error("Pauli string {0} is not a summand of the mixer for {1} qubits")]
    UnknownSummand(String, usize),
    #[error("invalid Pauli letter {0:?}")]
    InvalidPauliLetter(char),
    #[error("mixer matrix has a nonzero diagonal entry at {0}")]
    DiagonalMixer(usize),
    #[error("walk step {step} mixes self-loops and edges, which no single ma-QAOA half-layer can express")]
    MixedStep { step: usize },
    #[error("walk step {step} has edge ({u}, {w}) whose endpoints differ in {differing_bits} bits")]
    OutsideRestriction { step: usize, u: usize, w: usize, differing_bits: u32 },
    #[error("walk step {0} has an empty graph")]
    EmptyStep(usize),
    #[error("edge ({u}, {w}) shares a vertex with another edge and has negative angle {angle}")]
    NegativeCoupledAngle { u: usize, w: usize, angle: f64 },
    #[error("schedule uses {pairs} layers but the bound for {gates} gates is {bound}")]
    LayerBoundExceeded { pairs: usize, bound: usize, gates: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
