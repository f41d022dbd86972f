use alloc::string::String;

/// Errors raised by the algebraic engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix shape mismatch: expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("wiring references block {index} but the space has {len} blocks")]
    BlockIndex { index: usize, len: usize },

    #[error("iso wiring needs matching twists: {left} + {right} != {target}")]
    IsoTwist { left: i64, right: i64, target: i64 },

    #[error("mu entry ({i}, {j}) -> {target} marked iso but twists do not match")]
    InvalidProfile { i: usize, j: usize, target: String },

    #[error("levels differ: {0} vs {1}")]
    LevelMismatch(u32, u32),

    #[error("no split bundle fits the dimensions; first failure at k = {0}")]
    Inconsistent(i64),

    #[error("twist window must be contiguous and start where the dimension is 0")]
    Window,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("product falls outside the target basis (stratum {stratum}, degree {degree})")]
    OutsideBasis { stratum: usize, degree: usize },

    #[error("multiplication does not stabilize: codimension {codim} at level {level}")]
    NotStabilized { level: u32, codim: usize },

    #[error("closed form {closed} disagrees with block calculus {computed}")]
    LiftMismatch { closed: String, computed: String },

    #[error("divisor classes live on different surfaces")]
    SurfaceMismatch,

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;
