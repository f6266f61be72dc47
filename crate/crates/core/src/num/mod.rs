//! Shared numerical kernels: adaptive Runge-Kutta integration, Muller root
//! search, quadrature rules, finite-difference stencils on arbitrary nodes,
//! banded complex linear algebra, and small fitting/optimization helpers.

pub mod banded;
pub mod fit;
pub mod muller;
pub mod optim;
pub mod quad;
pub mod rk45;
pub mod scaled;
pub mod stencil;
pub mod winding;

pub use banded::{Banded, BandedLu};
pub use muller::{muller, MullerOptions, MullerOutcome};
pub use rk45::{Rk45Options, StepRecorder};
pub use scaled::ScaledComplex;
