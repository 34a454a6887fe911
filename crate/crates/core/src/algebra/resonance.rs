use super::{AlgebraError, FrequencyVector};

/// Upper limit on the number of integer vectors `find_resonance` will scan.
pub const MAX_RESONANCE_CANDIDATES: u128 = 100_000_000;

/// A nonzero integer vector `λ` with `Σ λ_k ω_k ≈ 0`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ResonanceVector {
    pub lambda: Vec<i64>,
    /// `|Σ λ_k ω_k|` in cm⁻¹.
    #[serde(skip)]
    pub defect: f64,
}

impl ResonanceVector {
    pub fn max_norm(&self) -> i64 {
        self.lambda.iter().map(|l| l.abs()).max().unwrap_or(0)
    }
}

/// Exhaustive search for `λ ∈ [-bound, bound]^n \ {0}` with
/// `|Σ λ_k ω_k| <= tol`.
///
/// Among all hits the one with the smallest max-norm is returned, ties
/// broken by the lexicographically smallest vector.
pub fn find_resonance(
    freqs: &FrequencyVector,
    bound: u32,
    tol: f64,
) -> Result<Option<ResonanceVector>, AlgebraError> {
    let n = freqs.n();
    let side = 2 * u128::from(bound) + 1;
    let candidates = side
        .checked_pow(n as u32)
        .map(|c| c - 1)
        .unwrap_or(u128::MAX);
    if candidates > MAX_RESONANCE_CANDIDATES {
        return Err(AlgebraError::SearchTooLarge {
            candidates,
            limit: MAX_RESONANCE_CANDIDATES,
        });
    }
    let omega = freqs.to_f64();
    let bound = i64::from(bound);
    let mut lambda = vec![-bound; n];
    let mut best: Option<ResonanceVector> = None;
    // Odometer over the cube in ascending lexicographic order, so the first
    // hit at any max-norm is the lexicographically smallest one.
    loop {
        let norm = lambda.iter().map(|l| l.abs()).max().unwrap_or(0);
        let improves = best.as_ref().is_none_or(|b| norm < b.max_norm());
        if norm > 0 && improves {
            let defect = lambda
                .iter()
                .zip(&omega)
                .map(|(&l, &w)| l as f64 * w)
                .sum::<f64>()
                .abs();
            if defect <= tol {
                best = Some(ResonanceVector {
                    lambda: lambda.clone(),
                    defect,
                });
                if norm == 1 {
                    break;
                }
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(best);
            }
            k -= 1;
            if lambda[k] < bound {
                lambda[k] += 1;
                break;
            }
            lambda[k] = -bound;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_to_two_resonance() {
        let f = FrequencyVector::parse(&["1", "2"]).unwrap();
        let hit = find_resonance(&f, 2, 1e-9).unwrap().unwrap();
        assert_eq!(hit.lambda, vec![-2, 1]);
        assert_eq!(hit.defect, 0.0);
    }

    #[test]
    fn prefers_small_norm() {
        // 3ω1 = ω2 and 6ω1 = 2ω2; the norm-3 vector must win.
        let f = FrequencyVector::parse(&["1", "3"]).unwrap();
        let hit = find_resonance(&f, 6, 1e-9).unwrap().unwrap();
        assert_eq!(hit.lambda, vec![-3, 1]);
    }

    #[test]
    fn cloh_frequencies_are_clear() {
        let f = FrequencyVector::parse(&["739.685", "1245.09", "3748.47"]).unwrap();
        assert_eq!(find_resonance(&f, 3, 0.5).unwrap(), None);
    }

    #[test]
    fn irrational_ratio() {
        let f = FrequencyVector::from_f64(&[1.0, std::f64::consts::SQRT_2]).unwrap();
        assert_eq!(find_resonance(&f, 5, 1e-9).unwrap(), None);
    }

    #[test]
    fn refuses_huge_searches() {
        let f = FrequencyVector::parse(&["1", "2", "3", "5", "7", "11"]).unwrap();
        assert!(matches!(
            find_resonance(&f, 100, 1e-9),
            Err(AlgebraError::SearchTooLarge { .. })
        ));
    }
}
