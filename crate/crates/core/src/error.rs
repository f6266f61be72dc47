//! Error types shared across the toolkit.

use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the numerical operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Complex evaluation requested on a profile that is not analytic.
    #[error("profile '{label}' does not support complex evaluation")]
    UnsupportedComplexEval { label: String },

    /// Heat evolution asked for a negative time.
    #[error("heat evolution requires t >= 0, got t = {t}")]
    NegativeTime { t: f64 },

    /// A root iteration did not converge.
    #[error("root search did not converge after {iters} iterations (last iterate {last}, |f| = {residual:.3e})")]
    RootNotFound {
        last: Complex64,
        residual: f64,
        iters: usize,
    },

    /// Rayleigh integration attempted with c on the real axis.
    #[error("Rayleigh integration is singular for Im c = 0 (critical layer on the real axis)")]
    SingularIntegration,

    /// Adaptive integrator drove the step below the representable floor.
    #[error("step size underflow at y = {y:.6e} (stiff blow-up)")]
    StepSizeUnderflow { y: f64 },

    /// Compound-matrix integration failed despite log rescaling.
    #[error("dispersion integration failed near y = {y:.6e}: {reason}")]
    IntegrationFailure { y: f64, reason: String },

    /// Airy evaluation outside the supported range.
    #[error("|z| = {abs:.3e} exceeds the Airy overflow guard; use the log-scaled variant")]
    AiryOverflow { abs: f64 },

    /// Langer path crosses a turning point of U - c.
    #[error("integration path crosses a turning point of U - c near segment parameter {at:.3}")]
    TurningPointOnPath { at: f64 },

    /// Fast-mode normalization impossible: Ai_a(0) = 0.
    #[error("fast-mode normalization failed: Ai_a(0) = 0 (eigenrelation degeneracy)")]
    NormalizationFailure,

    /// Neutral-curve continuation lost its bracket.
    #[error("neutral-curve continuation lost the bracket at nu = {nu:.3e} ({branch} branch)")]
    ContinuationFailure { nu: f64, branch: &'static str },

    /// Eigenmode extraction found a nullspace of dimension != 1.
    #[error("degenerate eigenvalue: numerical nullspace dimension is not 1 (ratio {ratio:.3e})")]
    DegenerateEigenvalue { ratio: f64 },

    /// Resolvent solve requested at (or too close to) the eigenvalue.
    #[error("resolvent solve at |c - c(alpha,nu)| = {distance:.3e} is near-singular; project onto kernel/range instead")]
    NearSingularSolve { distance: f64 },

    /// Kernel/range projection with vanishing direct-adjoint pairing.
    #[error("degenerate pairing: |(v_ns, v_ns^t)| = {pairing:.3e}")]
    DegeneratePairing { pairing: f64 },

    /// Wave-packet carrier outside the unstable band.
    #[error("carrier alpha0 = {alpha0} is outside the unstable band ({lo:.4}, {hi:.4})")]
    InvalidCarrier { alpha0: f64, lo: f64, hi: f64 },

    /// Parabolic rescaling would make the flow super-viscous.
    #[error("rescale exponent {s} exceeds current viscosity exponent {nu_exponent}")]
    SuperViscousRescale { s: String, nu_exponent: String },

    /// Cascade step attached to a scale absent from the ledger.
    #[error("scenario step attaches to scale {scale} which is not in the ledger")]
    InconsistentScenario { scale: String },

    /// Rayleigh-to-viscous expansion failed at a given order.
    #[error("viscous expansion truncated at order {order}: {reason}")]
    ExpansionTruncation { order: usize, reason: String },

    /// Instability-time equation has no positive solution.
    #[error("instability time infeasible: amplitude target nu^{target:.4} is not reachable from seed nu^{seed:.4}")]
    InfeasibleTime { target: f64, seed: f64 },

    /// Generic precondition violation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Viscosity below the desk-scale floor.
    #[error("nu = {nu:.3e} is below the desk-scale floor 1e-8")]
    NuFloor { nu: f64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
