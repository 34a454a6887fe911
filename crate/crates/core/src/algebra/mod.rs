//! Exact algebra on the complex polynomial ring in `z_k, z_k*`.
//!
//! Polynomials carry exact complex-rational coefficients. The Poisson
//! structure uses `{z_j, z_k*} = -i δ_jk`, so the harmonic part reads
//! `H0 = -i Σ ω_k σ_k` with `σ_k = z_k z_k*`. Floating point only appears
//! at the numeric boundary ([`evaluate`], [`flow_apply`], [`find_resonance`]).

mod adjoint;
mod bracket;
mod flow;
mod monomial;
mod parse;
mod polynomial;
mod resonance;
mod scalar;

pub use adjoint::{adjoint_apply, adjoint_eigencoefficient, kernel_test};
pub use bracket::poisson_bracket;
pub use flow::{flow_apply, FrequencyVector, PhasePoint};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::{evaluate, hilbert_basis, time_reversal, Polynomial};
pub use resonance::{find_resonance, ResonanceVector, MAX_RESONANCE_CANDIDATES};
pub use scalar::{parse_rational, ExactComplex};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("mode count mismatch: {left} vs {right}")]
    ModeMismatch { left: usize, right: usize },
    #[error("mode count must be at least 1")]
    NoModes,
    #[error("invalid frequencies: {0}")]
    InvalidFrequencies(String),
    #[error("resonance search over {candidates} candidates exceeds the limit of {limit}")]
    SearchTooLarge { candidates: u128, limit: u128 },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
}

pub(crate) fn check_modes(left: usize, right: usize) -> Result<(), AlgebraError> {
    if left == right {
        Ok(())
    } else {
        Err(AlgebraError::ModeMismatch { left, right })
    }
}
