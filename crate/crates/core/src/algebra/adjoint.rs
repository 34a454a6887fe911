use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::scalar::real;
use super::{check_modes, AlgebraError, FrequencyVector, Monomial, Polynomial};

/// Integer weights `β_k − α_k`; the eigenvalue of `ad_H0` on `mono` is their
/// dot product with the frequencies.
pub fn adjoint_eigencoefficient(mono: &Monomial) -> Vec<i64> {
    mono.alpha()
        .iter()
        .zip(mono.beta())
        .map(|(&a, &b)| i64::from(b) - i64::from(a))
        .collect()
}

fn eigenvalue(freqs: &FrequencyVector, mono: &Monomial) -> BigRational {
    adjoint_eigencoefficient(mono)
        .into_iter()
        .zip(freqs.exact())
        .filter(|(w, _)| *w != 0)
        .map(|(w, omega)| omega * BigRational::from_integer(BigInt::from(w)))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// `ad_H0 = Σ_k ω_k (z_k* ∂/∂z_k* − z_k ∂/∂z_k)`, applied exactly.
pub fn adjoint_apply(freqs: &FrequencyVector, p: &Polynomial) -> Result<Polynomial, AlgebraError> {
    check_modes(freqs.n(), p.n())?;
    Ok(p.map_coefficients(|m, c| c.clone() * real(eigenvalue(freqs, m))))
}

/// Whether `mono` lies in the kernel of `ad_H0` up to `tol` (cm⁻¹).
///
/// A zero weight vector is accepted without consulting the frequencies.
pub fn kernel_test(
    mono: &Monomial,
    freqs: &FrequencyVector,
    tol: f64,
) -> Result<bool, AlgebraError> {
    check_modes(freqs.n(), mono.n())?;
    if adjoint_eigencoefficient(mono).iter().all(|&w| w == 0) {
        return Ok(true);
    }
    let Some(tol) = BigRational::from_float(tol.abs()) else {
        return Ok(false);
    };
    Ok(eigenvalue(freqs, mono).abs() <= tol)
}
