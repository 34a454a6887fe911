use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;

use super::scalar::{imag, parse_rational, to_f64};
use super::{check_modes, AlgebraError, Monomial, Polynomial};

/// Harmonic frequencies `ω_k` in cm⁻¹, held exactly.
///
/// Entries are strictly positive and pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyVector {
    omega: Vec<BigRational>,
}

impl FrequencyVector {
    pub fn new(omega: Vec<BigRational>) -> Result<Self, AlgebraError> {
        if omega.is_empty() {
            return Err(AlgebraError::NoModes);
        }
        if let Some(k) = omega.iter().position(|w| !w.is_positive()) {
            return Err(AlgebraError::InvalidFrequencies(format!(
                "omega{} is not strictly positive",
                k + 1
            )));
        }
        for i in 0..omega.len() {
            for j in i + 1..omega.len() {
                if omega[i] == omega[j] {
                    return Err(AlgebraError::InvalidFrequencies(format!(
                        "omega{} and omega{} are equal",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { omega })
    }

    /// Reads decimal or fractional literals exactly.
    pub fn parse<S: AsRef<str>>(values: &[S]) -> Result<Self, AlgebraError> {
        let omega = values
            .iter()
            .map(|v| parse_rational(v.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(omega)
    }

    /// Converts doubles without rounding (each `f64` is a dyadic rational).
    pub fn from_f64(values: &[f64]) -> Result<Self, AlgebraError> {
        let omega = values
            .iter()
            .map(|&v| {
                BigRational::from_float(v)
                    .ok_or_else(|| AlgebraError::InvalidFrequencies(format!("{v} is not finite")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(omega)
    }

    pub fn n(&self) -> usize {
        self.omega.len()
    }

    pub fn exact(&self) -> &[BigRational] {
        &self.omega
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.omega.iter().map(to_f64).collect()
    }

    /// `H0 = -i Σ ω_k σ_k`.
    pub fn h0(&self) -> Polynomial {
        let n = self.n();
        let mut h = Polynomial::zero(n);
        for (k, w) in self.omega.iter().enumerate() {
            h.add_term(Monomial::sigma(n, k), imag(-w.clone()));
        }
        h
    }
}

/// A point `(z_1, ..., z_n)` of complex phase space.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePoint {
    z: Vec<Complex64>,
}

impl PhasePoint {
    pub fn new(z: Vec<Complex64>) -> Self {
        Self { z }
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.z
    }

    pub fn is_finite(&self) -> bool {
        self.z.iter().all(|c| c.is_finite())
    }
}

/// Harmonic flow `z_k(t) = exp(-i ω_k t) z_k(0)`.
pub fn flow_apply(
    z0: &PhasePoint,
    t: f64,
    freqs: &FrequencyVector,
) -> Result<PhasePoint, AlgebraError> {
    check_modes(freqs.n(), z0.n())?;
    let z =
        z0.z.iter()
            .zip(freqs.to_f64())
            .map(|(zk, w)| zk * Complex64::from_polar(1.0, -w * t))
            .collect();
    Ok(PhasePoint { z })
}
