//! Normalized non-resonant vibrational Hamiltonians built on the Hilbert
//! basis `σ_k = z_k z_k*`.
//!
//! - [`algebra`]: exact polynomial ring in `z, z*`, Poisson bracket, the
//!   adjoint of `H0`, time reversal and the harmonic flow.
//! - [`counting`]: enumeration and closed-form counting of the independent
//!   monomials of the normal form up to order `N`.
//! - [`spectrum`]: Dunham-type term energies in number operators, with a
//!   built-in ClOH model.
//! - [`check`]: the seeded property suite behind `vibnorm check`.
//! - [`cli`]: the command-line front end.

pub mod algebra;
pub mod check;
pub mod cli;
pub mod counting;
pub mod spectrum;
