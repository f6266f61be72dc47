//! The viscous Orr-Sommerfeld solver: dispersion function, eigenvalue
//! hunting, neutral curves, eigenmodes, adjoints, spectral projections,
//! resolvent solves, and three-scale diagnostics.

pub mod dispersion;
pub mod modes;
pub mod spectrum;
pub mod xnorm;

pub use dispersion::{Dispersion, IM_C_DEAD_ZONE, NU_FLOOR};
pub use modes::{
    adjoint_eigenmode, eigenmode, pairing, project_kernel_range, resolvent_solve, Eigenmode,
    ModeWorkspace, ThreeScaleFit,
};
pub use spectrum::{
    find_eigenvalue, find_unstable, locate_eigenvalue, most_unstable, neutral_curves,
    NeutralCurve, NeutralSample, SpectralPoint,
};
pub use xnorm::{xnorm_fit, xnorm_omega_fit};
