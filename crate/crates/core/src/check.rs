//! Seeded property suite over the exact algebra and the counting formulas.
//!
//! Every property is checked exactly except flow invariance, which is a
//! floating-point statement about the harmonic flow.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{
    adjoint_apply, adjoint_eigencoefficient, evaluate, find_resonance, flow_apply, hilbert_basis,
    kernel_test, poisson_bracket, time_reversal, AlgebraError, ExactComplex, FrequencyVector,
    Monomial, PhasePoint, Polynomial,
};
use crate::counting::{
    additional_operators_by_order, binomial, count_closed, count_closed_n2, count_closed_n3,
    count_closed_n3_by_support, enumerate_signatures, CountError, CountSpec,
};

/// Relative tolerance of the flow-invariance check.
pub const FLOW_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub n: usize,
    pub order: u32,
    pub seed: u64,
    /// Random `(P, Q, R)` triples for the bracket identities.
    pub triples: usize,
    /// Random `(z0, t)` samples for flow invariance.
    pub flow_samples: usize,
    /// Largest monomial degree for the exhaustive adjoint checks.
    pub max_exhaustive_degree: u32,
}

impl CheckConfig {
    pub fn new(n: usize, order: u32, seed: u64) -> Self {
        Self {
            n,
            order,
            seed,
            triples: 200,
            flow_samples: 100,
            max_exhaustive_degree: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn outcome(name: &'static str, failures: usize, total: usize, what: &str) -> PropertyResult {
    PropertyResult {
        name,
        passed: failures == 0,
        detail: if failures == 0 {
            format!("{total} {what} checked")
        } else {
            format!("{failures} of {total} {what} failed")
        },
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn random_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(-6i64..=6)),
        BigInt::from(rng.random_range(1i64..=4)),
    )
}

/// A random polynomial with up to `max_terms` terms of degree `<= max_degree`
/// and small complex-rational coefficients.
pub fn random_polynomial(
    rng: &mut impl Rng,
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    let mut p = Polynomial::zero(n);
    let terms = rng.random_range(1..=max_terms);
    for _ in 0..terms {
        let degree = rng.random_range(0..=max_degree);
        let mut alpha = vec![0u32; n];
        let mut beta = vec![0u32; n];
        for _ in 0..degree {
            let k = rng.random_range(0..n);
            if rng.random_bool(0.5) {
                alpha[k] += 1;
            } else {
                beta[k] += 1;
            }
        }
        let c = ExactComplex::new(random_rational(rng), random_rational(rng));
        p.add_term(Monomial::new(alpha, beta).expect("n >= 1"), c);
    }
    p
}

/// Random distinct positive frequencies with three decimals, like
/// spectroscopic constants.
pub fn random_frequencies(rng: &mut impl Rng, n: usize) -> FrequencyVector {
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert(rng.random_range(100_000i64..=4_000_000));
    }
    let mut omega: Vec<BigRational> = seen
        .into_iter()
        .map(|v| BigRational::new(BigInt::from(v), BigInt::from(1000)))
        .collect();
    // Shuffle so the modes are not sorted by frequency.
    for i in (1..omega.len()).rev() {
        let j = rng.random_range(0..=i);
        omega.swap(i, j);
    }
    FrequencyVector::new(omega).expect("distinct positive by construction")
}

/// Frequencies `c · B^π(k)` with `B = 2·bound + 1`. Any relation
/// `Σ λ_k ω_k = 0` with `|λ_k| <= bound` is then trivial, by uniqueness of
/// balanced base-`B` digits.
pub fn nonresonant_frequencies(rng: &mut impl Rng, n: usize, bound: u32) -> FrequencyVector {
    let base = i64::from(2 * bound + 1);
    let scale = BigRational::new(
        BigInt::from(rng.random_range(1i64..=997)),
        BigInt::from(rng.random_range(1i64..=97)),
    );
    let mut exponents: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        exponents.swap(i, j);
    }
    let omega = exponents
        .into_iter()
        .map(|e| scale.clone() * BigRational::from_integer(num_traits::pow(BigInt::from(base), e)))
        .collect();
    FrequencyVector::new(omega).expect("distinct positive by construction")
}

/// Every monomial over `n` modes with total degree `<= max_degree`.
pub fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Monomial> {
    fn rec(exps: &mut Vec<u32>, slots: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if exps.len() == slots {
            out.push(exps.clone());
            return;
        }
        for e in 0..=budget {
            exps.push(e);
            rec(exps, slots, budget - e, out);
            exps.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::with_capacity(2 * n), 2 * n, max_degree, &mut raw);
    raw.into_iter()
        .map(|e| Monomial::new(e[..n].to_vec(), e[n..].to_vec()).expect("n >= 1"))
        .collect()
}

/// `Σ ω_k (z_k* ∂/∂z_k* − z_k ∂/∂z_k) P`, applied literally through
/// partial derivatives.
fn adjoint_by_derivatives(freqs: &FrequencyVector, p: &Polynomial) -> Polynomial {
    let n = p.n();
    let mut out = Polynomial::zero(n);
    for (k, w) in freqs.exact().iter().enumerate() {
        let zs = Polynomial::monomial(Monomial::z_star(n, k));
        let z = Polynomial::monomial(Monomial::z(n, k));
        let term = &(&zs * &p.partial_z_star(k)) - &(&z * &p.partial_z(k));
        out = &out + &term.scale(&ExactComplex::new(w.clone(), int(0)));
    }
    out
}

fn bracket(p: &Polynomial, q: &Polynomial) -> Polynomial {
    poisson_bracket(p, q).expect("operands share the mode count")
}

/// Runs the whole suite. Output order and content depend only on `config`.
pub fn run_checks(config: &CheckConfig) -> Result<Vec<PropertyResult>, CountError> {
    let spec = CountSpec::new(config.n, config.order)?;
    let n = config.n;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut results = Vec::new();

    // Generator brackets and the canonical pair.
    let basis: Vec<Polynomial> = hilbert_basis(n)
        .into_iter()
        .map(Polynomial::monomial)
        .collect();
    let failures = basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| (a, b)))
        .filter(|(a, b)| !bracket(a, b).is_zero())
        .count();
    results.push(outcome("generator-brackets", failures, n * n, "pairs"));

    let mut failures = 0;
    for j in 0..n {
        for k in 0..n {
            let got = bracket(
                &Polynomial::monomial(Monomial::z(n, j)),
                &Polynomial::monomial(Monomial::z_star(n, k)),
            );
            let expected = if j == k {
                Polynomial::constant(n, ExactComplex::new(int(0), int(-1)))
            } else {
                Polynomial::zero(n)
            };
            failures += usize::from(got != expected);
        }
    }
    results.push(outcome("canonical-brackets", failures, n * n, "pairs"));

    // Adjoint eigenrelation, exhaustively on low-degree monomials.
    let degree = config.order.min(config.max_exhaustive_degree);
    let monomials = monomials_up_to(n, degree);
    let freqs = random_frequencies(&mut rng, n);
    let h0 = freqs.h0();
    let mut failures = 0;
    for m in &monomials {
        let p = Polynomial::monomial(m.clone());
        let direct = adjoint_apply(&freqs, &p).expect("modes match");
        let weight: BigRational = adjoint_eigencoefficient(m)
            .into_iter()
            .zip(freqs.exact())
            .map(|(w, omega)| omega * int(w))
            .sum();
        let scaled = p.scale(&ExactComplex::new(weight, int(0)));
        let ok = direct == scaled
            && direct == adjoint_by_derivatives(&freqs, &p)
            && direct == bracket(&p, &h0);
        failures += usize::from(!ok);
    }
    results.push(outcome(
        "adjoint-eigenrelation",
        failures,
        monomials.len(),
        "monomials",
    ));

    // Kernel characterization under provably non-resonant frequencies.
    let bound = degree.max(1);
    let safe = nonresonant_frequencies(&mut rng, n, bound);
    let confirmed = match find_resonance(&safe, bound, 1e-9) {
        Ok(found) => found.is_none(),
        Err(AlgebraError::SearchTooLarge { .. }) => true,
        Err(_) => false,
    };
    let failures = monomials
        .iter()
        .filter(|m| kernel_test(m, &safe, 0.0).expect("modes match") != m.is_sigma_product())
        .count();
    results.push(PropertyResult {
        name: "kernel-characterization",
        passed: confirmed && failures == 0,
        detail: if confirmed {
            outcome("", failures, monomials.len(), "monomials").detail
        } else {
            "frequency vector is resonant".to_string()
        },
    });

    // Bracket identities on random triples.
    let poly_degree = config.order.min(6);
    let mut anti = 0;
    let mut jacobi = 0;
    let mut leibniz = 0;
    for _ in 0..config.triples {
        let p = random_polynomial(&mut rng, n, poly_degree, 3);
        let q = random_polynomial(&mut rng, n, poly_degree, 3);
        let r = random_polynomial(&mut rng, n, poly_degree, 3);
        let pq = bracket(&p, &q);
        anti += usize::from(!(&pq + &bracket(&q, &p)).is_zero() || !bracket(&p, &p).is_zero());
        let cyclic =
            &(&bracket(&p, &bracket(&q, &r)) + &bracket(&q, &bracket(&r, &p))) + &bracket(&r, &pq);
        jacobi += usize::from(!cyclic.is_zero());
        let lhs = bracket(&p, &(&q * &r));
        let rhs = &(&pq * &r) + &(&q * &bracket(&p, &r));
        leibniz += usize::from(lhs != rhs);
    }
    results.push(outcome("antisymmetry", anti, config.triples, "triples"));
    results.push(outcome("jacobi", jacobi, config.triples, "triples"));
    results.push(outcome("leibniz", leibniz, config.triples, "triples"));

    // Time reversal and the link between ad_H0 and the bracket.
    let mut involution = 0;
    let mut linked = 0;
    let samples = config.triples.min(50);
    for _ in 0..samples {
        let p = random_polynomial(&mut rng, n, poly_degree, 4);
        involution += usize::from(time_reversal(&time_reversal(&p)) != p);
        let ad = adjoint_apply(&freqs, &p).expect("modes match");
        linked += usize::from(ad != bracket(&p, &h0) || ad != -&bracket(&h0, &p));
    }
    let fixed = basis.iter().filter(|s| time_reversal(s) != **s).count();
    results.push(outcome(
        "time-reversal",
        involution + fixed,
        samples + n,
        "cases",
    ));
    results.push(outcome(
        "adjoint-is-bracket",
        linked,
        samples,
        "polynomials",
    ));

    // Noether: {σ_k, H0} = 0 exactly and σ_k conserved along the flow.
    let noether = basis.iter().filter(|s| !bracket(s, &h0).is_zero()).count();
    results.push(outcome(
        "generators-commute-with-h0",
        noether,
        n,
        "generators",
    ));

    let mut drift = 0;
    for _ in 0..config.flow_samples {
        let z0 = PhasePoint::new(
            (0..n)
                .map(|_| Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)))
                .collect(),
        );
        let t = rng.random_range(-10.0..10.0);
        let zt = flow_apply(&z0, t, &freqs).expect("modes match");
        for s in &basis {
            let before = evaluate(s, &z0).expect("modes match");
            let after = evaluate(s, &zt).expect("modes match");
            if (after - before).norm() > FLOW_TOLERANCE * (1.0 + before.norm()) {
                drift += 1;
                break;
            }
        }
    }
    results.push(outcome(
        "flow-invariance",
        drift,
        config.flow_samples,
        "samples",
    ));

    // Counting: closed form, enumeration and stars-and-bars agree.
    let signatures = enumerate_signatures(&spec)?;
    let closed = count_closed(&spec)?;
    let stars =
        binomial((n as u64) + u64::from(spec.q0()), n as u64).ok_or(CountError::Overflow)? - 1;
    let ledger: u128 = additional_operators_by_order(n, config.order)?
        .values()
        .sum();
    let mut agree = closed == signatures.len() as u128 && closed == stars && closed == ledger;
    let q0 = u64::from(spec.q0());
    if n == 2 {
        agree &= count_closed_n2(q0) == closed;
    }
    if n == 3 {
        agree &= count_closed_n3(q0) == closed && count_closed_n3_by_support(q0) == closed;
    }
    results.push(PropertyResult {
        name: "count-oracle",
        passed: agree,
        detail: format!(
            "closed {closed}, enumerated {}, C(n+Q0,n)-1 = {stars}",
            signatures.len()
        ),
    });

    let bounded = signatures
        .iter()
        .all(|s| s.degree() <= config.order && s.total_power() >= 1);
    let sorted = signatures.windows(2).all(|w| w[0] < w[1]);
    let smaller: BTreeSet<_> = if config.order > 2 {
        enumerate_signatures(&CountSpec::new(n, config.order - 2)?)?
            .into_iter()
            .collect()
    } else {
        BTreeSet::new()
    };
    let all: BTreeSet<_> = signatures.iter().cloned().collect();
    results.push(PropertyResult {
        name: "degree-bound",
        passed: bounded && sorted && smaller.is_subset(&all),
        detail: format!(
            "{} signatures within order {}",
            signatures.len(),
            config.order
        ),
    });

    // Every enumerated monomial commutes with every generator.
    let failures = signatures
        .iter()
        .filter(|sig| {
            let p = sig.to_polynomial();
            basis.iter().any(|s| !bracket(&p, s).is_zero())
        })
        .count();
    results.push(outcome(
        "independence",
        failures,
        signatures.len(),
        "signatures",
    ));

    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_oscillator_passes() {
        let results = run_checks(&CheckConfig::new(1, 2, 0)).unwrap();
        assert!(results.iter().all(|r| r.passed), "{results:#?}");
    }

    #[test]
    fn monomial_enumeration_size() {
        // C(2n + d, d) monomials of degree <= d in 2n variables.
        assert_eq!(monomials_up_to(2, 3).len(), 35);
        assert_eq!(monomials_up_to(1, 0).len(), 1);
    }

    #[test]
    fn base_frequencies_are_nonresonant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = nonresonant_frequencies(&mut rng, 3, 4);
        assert_eq!(find_resonance(&f, 4, 1e-9).unwrap(), None);
    }

    #[test]
    fn rejects_odd_order() {
        assert_eq!(
            run_checks(&CheckConfig::new(2, 5, 0)),
            Err(CountError::OddOrder(5))
        );
    }
}
