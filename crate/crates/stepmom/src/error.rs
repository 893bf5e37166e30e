use crate::core::Mode;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every solver operation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Step height outside the valid domain for the given mode.
    #[error("invalid step height mu0 = {mu0} for {mode:?} mode: {reason}")]
    InvalidMu0 {
        mode: Mode,
        mu0: f64,
        reason: &'static str,
    },

    /// A dimensionless root argument must be positive and finite.
    #[error("eta = {eta} is outside the domain (must be finite and > 0)")]
    EtaOutOfDomain { eta: f64 },

    /// Input that must be finite was NaN or infinite.
    #[error("non-finite input: {name} = {value}")]
    NonFinite { name: &'static str, value: f64 },

    /// Input that must be strictly positive was not.
    #[error("{name} = {value} must be > 0")]
    NonPositive { name: &'static str, value: f64 },

    /// Segment list does not partition the well, or carries a zero factor.
    #[error("invalid step profile: {0}")]
    InvalidProfile(String),

    /// Root-scan configuration violates its invariants.
    #[error("invalid root configuration: {0}")]
    InvalidRootConfig(String),

    /// A bracket handed to the refiner does not straddle a sign change.
    #[error("bracket [{a}, {b}] does not straddle a sign change")]
    InvalidBracket { a: f64, b: f64 },

    /// Brent refinement did not converge within the iteration budget.
    #[error("root refinement exceeded {max_iters} iterations in [{a}, {b}]")]
    IterationBudget { a: f64, b: f64, max_iters: u32 },

    /// Both coefficient representations are degenerate at this point.
    #[error("singular coefficient representation at eta = {eta}: |cos| = {cos_abs:.3e}, |sin| = {sin_abs:.3e}; sample the closed two-branch form instead")]
    SingularRepresentation { eta: f64, cos_abs: f64, sin_abs: f64 },

    /// The trivial root eta = 0 produces the null eigenfunction.
    #[error("null eigenfunction: pre-normalization amplitude {amplitude:.3e} below threshold")]
    NullEigenfunction { amplitude: f64 },

    /// Operation defined only for the Hermitian step.
    #[error("{op} is only defined for Hermitian mode")]
    HermitianOnly { op: &'static str },

    /// Sample grid must be strictly increasing.
    #[error("sample grid is not strictly increasing at index {index}")]
    GridNotIncreasing { index: usize },

    /// Grid and value arrays must have equal lengths.
    #[error("grid length {grid_len} != value length {values_len}")]
    LengthMismatch { grid_len: usize, values_len: usize },

    /// Requested bound state does not exist (finite PT spectrum).
    #[error("state n = {requested} does not exist: only {available} real-energy bound state(s) at mu0 = {mu0}")]
    StateUnavailable {
        requested: u32,
        available: usize,
        mu0: f64,
    },
}
