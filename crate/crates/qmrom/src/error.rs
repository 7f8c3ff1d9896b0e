//! Crate-wide error type.

/// Errors reported by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input matrix violated a symmetry precondition.
    #[error("{name} is not symmetric within tolerance (relative asymmetry {asymmetry:.3e})")]
    NotSymmetric { name: &'static str, asymmetry: f64 },

    /// Cholesky factorization failed on a matrix that must be SPD.
    #[error("{name} is not positive definite (Cholesky failed)")]
    NotPositiveDefinite { name: &'static str },

    /// The iterative eigensolver did not converge.
    #[error("symmetric eigensolver failed to converge")]
    EigenNonConvergence,

    /// More eigenpairs were requested than the system provides.
    #[error("requested {requested} modes but the system has only {available} free DOFs")]
    TooManyModes { requested: usize, available: usize },

    /// Bordered system matrix is singular.
    #[error("bordered system is singular (relative residual {residual:.3e})")]
    SingularBordered { residual: f64 },

    /// A modal derivative was requested at a repeated eigenvalue.
    #[error(
        "eigenvalue {index} (omega^2 = {omega_sq:.6e}) has multiplicity {multiplicity}; \
         the bordered modal-derivative system is singular for repeated eigenvalues"
    )]
    RepeatedEigenvalue {
        index: usize,
        omega_sq: f64,
        multiplicity: usize,
    },

    /// Basis deflation was asked to orthonormalize a rank-zero matrix.
    #[error("basis deflation removed every column (input has rank 0)")]
    EmptyBasis,

    /// Requested POD order exceeds the numerical rank of the snapshots.
    #[error("requested {requested} POD vectors but the snapshot matrix has rank {rank}")]
    RankDeficient { requested: usize, rank: usize },

    /// A model specification failed validation.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// The model is under-constrained and has a singular stiffness at equilibrium.
    #[error("model is under-constrained: singular tangent stiffness at the equilibrium")]
    UnderConstrained,

    /// Load evaluation at a negative time.
    #[error("load evaluated at negative time t = {t}")]
    NegativeTime { t: f64 },

    /// Invalid integrator parameters.
    #[error("invalid integrator parameters: {0}")]
    InvalidIntegratorParams(String),

    /// Newton-Raphson failed to converge within the iteration budget.
    #[error(
        "Newton iteration diverged at step {step} (t = {time:.6e}): \
         residual {residual:.3e} after {iterations} iterations"
    )]
    NewtonDivergence {
        step: usize,
        time: f64,
        residual: f64,
        iterations: usize,
    },

    /// The iteration matrix became singular during time integration.
    #[error("singular iteration matrix at step {step}")]
    SingularSystem { step: usize },

    /// Reduced mass matrix was singular at the initial-acceleration solve.
    #[error("singular reduced mass matrix at the initial-acceleration solve")]
    SingularReducedMass,

    /// Mismatched or invalid selection of derivative pairs.
    #[error("invalid derivative selection: {0}")]
    InvalidSelection(String),

    /// Error metric undefined because the reference trajectory is zero.
    #[error("global relative error undefined: reference trajectory is zero on the sample set")]
    ZeroReference,

    /// Trajectories are incompatible (different grids or dimensions).
    #[error("trajectory mismatch: {0}")]
    TrajectoryMismatch(String),

    /// Experiment configuration is invalid.
    #[error("configuration error: {0}")]
    Config(String),

    /// A numerical sub-step of the experiment failed.
    #[error("calibration failed: {0}")]
    Calibration(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True when the error stems from user-provided configuration rather than
    /// a numerical failure. Drives the CLI exit code (2 vs 3).
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::Config(_)
                | Error::InvalidModel(_)
                | Error::InvalidIntegratorParams(_)
                | Error::InvalidSelection(_)
                | Error::TooManyModes { .. }
                | Error::Io(_)
                | Error::Json(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
