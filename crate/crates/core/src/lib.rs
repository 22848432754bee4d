//! Single-photon linear-optics simulation of geometric phases.
//!
//! The library models a four-mode photonic interferometer in which an
//! orbital-angular-momentum eigenstate of a 3-D harmonic oscillator (the
//! `m = +1` "donut" state, carried by one photon spread over modes `x, y, z`)
//! is dragged around a closed loop of magnetic-field directions by a
//! Trotterised product of beam splitters and phase shifts, while a reference
//! amplitude idles on mode `w`. Recombining the `x` and `w` rails converts the
//! accumulated phase into the usual Mach-Zehnder fringe, from which the
//! geometric (Berry / Aharonov-Anandan) part is separated by running the loop
//! with both field polarities and averaging.
//!
//! Module map:
//!
//! * [`photonics`] — gates, amplitude propagation, detector statistics and
//!   seeded shot sampling.
//! * [`evolution`] — the three-segment field loop and its compilation into
//!   first-order or Strang-split passive circuits.
//! * [`experiment`] — state preparation, the interferometric readout and the
//!   phase estimators.
//! * [`theory`] — closed-form reference values (energies, Berry phases,
//!   adiabaticity measure, Wigner functions, polarisation vector).
//! * [`oracle`] — direct integration of the time-dependent Schrödinger
//!   equation, used as an independent reference for every circuit result.
//! * [`phase`] — branch-cut bookkeeping shared by the estimators.
//!
//! All values are in natural units (`ħ = ω = m = 1`); angles are radians.
//! Every type is an immutable value and every operation is a pure function,
//! so states, circuits and results can be shared freely across threads.

pub mod error;
pub mod evolution;
pub mod experiment;
pub mod oracle;
pub mod phase;
pub mod photonics;
pub mod theory;

pub use error::{Error, Result};
