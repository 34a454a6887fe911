use std::collections::BTreeMap;

use crate::counting::MonomialSignature;

use super::MoleculeModel;

/// Harmonic frequencies of ClOH in cm⁻¹: Cl–O stretch, bend, O–H stretch.
const CLOH_OMEGA: [f64; 3] = [739.685, 1245.09, 3748.47];

/// Anharmonic coefficients (cm⁻¹) keyed by powers of `(σ1, σ2, σ3)`.
/// The two explicit zeros are kept so the operator count stays 34.
const CLOH_COEFFICIENTS: [([u32; 3], f64); 31] = [
    // order 4
    ([2, 0, 0], -3.517),
    ([0, 2, 0], 2.181),
    ([0, 0, 2], -84.540),
    ([1, 1, 0], -7.049),
    ([1, 0, 1], -0.490),
    ([0, 1, 1], -16.291),
    // order 6
    ([3, 0, 0], -0.259),
    ([0, 3, 0], -0.778),
    ([0, 0, 3], -0.173),
    ([1, 2, 0], -0.131),
    ([1, 0, 2], -0.122),
    ([0, 1, 2], -3.965),
    ([2, 1, 0], -0.428),
    ([2, 0, 1], -0.508),
    ([0, 2, 1], -0.154),
    ([1, 1, 1], -0.767),
    // order 8
    ([4, 0, 0], 0.0098),
    ([0, 4, 0], 0.0111),
    ([0, 0, 4], 0.0153),
    ([3, 1, 0], 0.0),
    ([3, 0, 1], 0.0),
    ([0, 3, 1], 0.0793),
    ([2, 2, 0], -0.0079),
    ([2, 0, 2], -0.0174),
    ([0, 2, 2], -0.0426),
    ([1, 3, 0], 0.0021),
    ([1, 0, 3], -0.0007),
    ([0, 1, 3], 0.2885),
    ([1, 1, 2], 0.1553),
    ([1, 2, 1], 0.1003),
    ([2, 1, 1], 0.0854),
];

/// The eighth-order ClOH local-mode model (three modes, 34 operators
/// including the harmonic terms), with `delta = 0`.
pub fn builtin_cloh() -> MoleculeModel {
    let coefficients: BTreeMap<_, _> = CLOH_COEFFICIENTS
        .iter()
        .map(|(powers, value)| (MonomialSignature::new(powers.to_vec()), *value))
        .collect();
    MoleculeModel {
        name: "ClOH".to_string(),
        n: 3,
        omega: CLOH_OMEGA.to_vec(),
        coefficients,
        order: 8,
        delta: 0.0,
        reference_energy: 2867.0,
    }
}
