use super::{EnergyLevel, FockState, MoleculeModel, SpectrumError};

/// Largest search box `enumerate_levels` will scan.
pub const MAX_BOX_STATES: u128 = 10_000_000;

fn raw_energy(model: &MoleculeModel, quanta: &[u32]) -> f64 {
    let x: Vec<f64> = quanta.iter().map(|&q| f64::from(q) + model.delta).collect();
    let harmonic: f64 = model.omega.iter().zip(&x).map(|(w, xk)| w * xk).sum();
    let anharmonic: f64 = model
        .coefficients
        .iter()
        .map(|(sig, alpha)| {
            sig.powers()
                .iter()
                .zip(&x)
                .fold(*alpha, |acc, (&r, xk)| acc * xk.powi(r as i32))
        })
        .sum();
    harmonic + anharmonic
}

/// Term energy of `state` in cm⁻¹ relative to the ground state.
pub fn term_energy(model: &MoleculeModel, state: &FockState) -> Result<f64, SpectrumError> {
    if state.0.len() != model.n {
        return Err(SpectrumError::ModeMismatch {
            expected: model.n,
            got: state.0.len(),
        });
    }
    let ground = vec![0; model.n];
    Ok(raw_energy(model, &state.0) - raw_energy(model, &ground))
}

/// All states in the search box with `0 <= E <= cutoff`, sorted by energy
/// and then by quanta.
///
/// The default box allows `ceil(cutoff / ω_k) + 2` quanta per mode. The
/// polynomial is not monotone in the quanta, so callers that care about
/// truncation should compare against an enlarged box.
pub fn enumerate_levels(
    model: &MoleculeModel,
    cutoff: f64,
    bounds: Option<&[u32]>,
) -> Result<Vec<EnergyLevel>, SpectrumError> {
    if !cutoff.is_finite() || cutoff < 0.0 {
        return Err(SpectrumError::InvalidCutoff(cutoff));
    }
    let bounds = match bounds {
        Some(b) if b.len() != model.n => {
            return Err(SpectrumError::ModeMismatch {
                expected: model.n,
                got: b.len(),
            })
        }
        Some(b) => b.to_vec(),
        None => default_box(model, cutoff)?,
    };
    let states = bounds
        .iter()
        .try_fold(1u128, |acc, &b| acc.checked_mul(u128::from(b) + 1))
        .unwrap_or(u128::MAX);
    if states > MAX_BOX_STATES {
        return Err(SpectrumError::BoxTooLarge {
            states,
            limit: MAX_BOX_STATES,
        });
    }

    let ground = raw_energy(model, &vec![0; model.n]);
    let mut levels = Vec::new();
    let mut quanta = vec![0u32; model.n];
    loop {
        let energy = raw_energy(model, &quanta) - ground;
        if (0.0..=cutoff).contains(&energy) {
            levels.push(EnergyLevel {
                state: FockState(quanta.clone()),
                energy,
            });
        }
        let Some(k) = (0..model.n).rev().find(|&k| quanta[k] < bounds[k]) else {
            break;
        };
        quanta[k] += 1;
        quanta[k + 1..].iter_mut().for_each(|q| *q = 0);
    }
    levels.sort_by(|a, b| {
        a.energy
            .total_cmp(&b.energy)
            .then_with(|| a.state.cmp(&b.state))
    });
    Ok(levels)
}

fn default_box(model: &MoleculeModel, cutoff: f64) -> Result<Vec<u32>, SpectrumError> {
    model
        .omega
        .iter()
        .map(|&w| {
            if !(w.is_finite() && w > 0.0) {
                return Err(SpectrumError::InvalidModel(format!(
                    "frequency {w} is not strictly positive"
                )));
            }
            let quanta = (cutoff / w).ceil() + 2.0;
            if quanta > f64::from(u32::MAX) {
                return Err(SpectrumError::BoxTooLarge {
                    states: u128::MAX,
                    limit: MAX_BOX_STATES,
                });
            }
            Ok(quanta as u32)
        })
        .collect()
}
