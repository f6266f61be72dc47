//! Numerical hydrodynamic stability of half-plane shear flows.
//!
//! The crate computes the viscous (Orr-Sommerfeld) and inviscid (Rayleigh)
//! spectra of shear profiles U(y) on y > 0, reconstructs unstable modes and
//! their localized wave packets, integrates the weakly nonlinear Landau
//! amplitude dynamics, and tracks the exact-rational scale ledgers of
//! multi-scale instability cascades.
//!
//! Organization:
//! - [`profile`]: base flows, heat evolution, critical layers
//! - [`rayleigh`]: the inviscid eigenvalue problem
//! - [`airy`] and [`langer`]: complex Airy evaluation and the Langer frame
//! - [`orrsommerfeld`]: dispersion function, spectra, modes, resolvent
//! - [`wavepacket`]: localized instabilities and group velocity
//! - [`amplitude`]: Landau dynamics, saturation, instability times
//! - [`cascade`]: parabolic rescaling ledgers and the inviscid-to-viscous
//!   mode expansion
//! - [`acceptance`]: the end-to-end verification suite behind `verify`

pub mod acceptance;
pub mod airy;
pub mod amplitude;
pub mod cascade;
pub mod error;
pub mod grid;
pub mod langer;
pub mod num;
pub mod orrsommerfeld;
pub mod osm1;
pub mod profile;
pub mod rayleigh;
pub mod wavepacket;

pub use error::{Error, Result};
pub use profile::{CriticalLayer, ShearProfile};
