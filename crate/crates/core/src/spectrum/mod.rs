//! Vibrational term energies from a normal form written in number operators.
//!
//! Quantizing `σ_k -> N̂_k` turns the normal form into a Dunham-type
//! polynomial in the quantum numbers: with `x_k = n_k + delta`,
//! `E(n) = Σ ω_k x_k + Σ_sig α_sig Π x_k^r_k`, reported relative to `E(0)`.

mod cloh;
mod io;
mod levels;
mod model;

pub use cloh::builtin_cloh;
pub use io::{parse_model, write_levels_csv, write_model};
pub use levels::{enumerate_levels, term_energy, MAX_BOX_STATES};
pub use model::{validate_model, EnergyLevel, Finding, FockState, MoleculeModel, Severity};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("state has {got} quantum numbers, model has {expected} modes")]
    ModeMismatch { expected: usize, got: usize },
    #[error("cutoff must be a finite non-negative energy, got {0}")]
    InvalidCutoff(f64),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error(
        "search box holds {states} states (limit {limit}); pass an explicit box with smaller bounds"
    )]
    BoxTooLarge { states: u128, limit: u128 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
