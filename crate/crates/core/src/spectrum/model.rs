use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{find_resonance, FrequencyVector};
use crate::counting::MonomialSignature;

/// A molecule's normal form in number operators.
///
/// `omega` holds the harmonic (linear) part; `coefficients` holds the
/// anharmonic terms keyed by generator powers, all in cm⁻¹.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeModel {
    pub name: String,
    pub n: usize,
    pub omega: Vec<f64>,
    pub coefficients: BTreeMap<MonomialSignature, f64>,
    pub order: u32,
    /// Quantum-number offset: terms are evaluated at `n_k + delta`.
    pub delta: f64,
    /// Ground-state energy above the potential minimum. Informational only.
    pub reference_energy: f64,
}

impl MoleculeModel {
    pub fn with_delta(&self, delta: f64) -> Self {
        Self {
            delta,
            ..self.clone()
        }
    }

    /// Coefficient count per degree `2 Σ r_k`.
    pub fn coefficients_by_degree(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for sig in self.coefficients.keys() {
            *out.entry(sig.degree()).or_insert(0) += 1;
        }
        out
    }
}

/// Occupation numbers `|n_1, ..., n_n>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FockState(pub Vec<u32>);

impl FockState {
    pub fn ground(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn quanta(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str(">")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyLevel {
    pub state: FockState,
    /// cm⁻¹ above the ground state.
    pub energy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub severity: Severity,
    pub message: String,
}

impl Finding {
    fn error(message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Error,
            message: message.into(),
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

const RESONANCE_BOUND: u32 = 5;
const RESONANCE_TOL: f64 = 1.0;

/// Checks the model invariants. An empty list means the model is clean.
///
/// Low-order resonances among the frequencies (`|λ_k| <= 5`, within
/// 1 cm⁻¹) are reported as warnings.
pub fn validate_model(model: &MoleculeModel) -> Vec<Finding> {
    let mut findings = Vec::new();
    if model.n == 0 {
        findings.push(Finding::error("mode count must be at least 1"));
    }
    if model.omega.len() != model.n {
        findings.push(Finding::error(format!(
            "{} frequencies given for {} modes",
            model.omega.len(),
            model.n
        )));
    }
    let positive = model.omega.iter().all(|w| w.is_finite() && *w > 0.0);
    if !positive {
        findings.push(Finding::error(
            "frequencies must be finite and strictly positive",
        ));
    }
    let distinct = model
        .omega
        .iter()
        .enumerate()
        .all(|(i, a)| model.omega[i + 1..].iter().all(|b| a != b));
    if !distinct {
        findings.push(Finding::error("frequencies not pairwise distinct"));
    }
    if model.order < 2 || !model.order.is_multiple_of(2) {
        findings.push(Finding::error(format!(
            "order {} must be even and at least 2",
            model.order
        )));
    }
    if model.delta != 0.0 && model.delta != 0.5 {
        findings.push(Finding::error(format!(
            "delta {} must be 0 or 0.5",
            model.delta
        )));
    }
    for (sig, value) in &model.coefficients {
        if sig.n() != model.n {
            findings.push(Finding::error(format!(
                "signature {sig} has {} powers for {} modes",
                sig.n(),
                model.n
            )));
        }
        if sig.total_power() < 2 {
            findings.push(Finding::error(format!(
                "signature {sig} is linear or constant; linear terms belong in omega"
            )));
        }
        if sig.degree() > model.order {
            findings.push(Finding::error(format!(
                "signature {sig} exceeds order {} (degree {})",
                model.order,
                sig.degree()
            )));
        }
        if !value.is_finite() {
            findings.push(Finding::error(format!(
                "coefficient of {sig} is not finite"
            )));
        }
    }
    if positive && distinct && !model.omega.is_empty() {
        if let Ok(freqs) = FrequencyVector::from_f64(&model.omega) {
            match find_resonance(&freqs, RESONANCE_BOUND, RESONANCE_TOL) {
                Ok(Some(hit)) => findings.push(Finding {
                    severity: Severity::Warning,
                    message: format!(
                        "near resonance lambda={:?}: |sum lambda_k omega_k| = {:.4} cm-1",
                        hit.lambda, hit.defect
                    ),
                }),
                Ok(None) => {}
                Err(err) => findings.push(Finding {
                    severity: Severity::Warning,
                    message: format!("resonance scan skipped: {err}"),
                }),
            }
        }
    }
    findings
}
