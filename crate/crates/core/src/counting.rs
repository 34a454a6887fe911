//! Counting and listing the independent σ-monomials of the normal form.
//!
//! At development order `N` (even) the normal form is a polynomial in the
//! generators `σ_1..σ_n` whose monomials `σ_1^r1 ... σ_n^rn` satisfy
//! `1 <= Σ r_k <= Q0 = N/2`. The count is
//! `Λ = Σ_{λ=1}^{min(n,Q0)} C(n,λ) C(Q0,λ)`, which equals `C(n+Q0, n) - 1`.
//!
//! The linear terms `σ_k` (the harmonic part) are included in `Λ`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("mode count must be at least 1")]
    NoModes,
    #[error("order {0} is odd; the non-resonant normal form has even order")]
    OddOrder(u32),
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("monomial count overflows 2^63-1")]
    Overflow,
}

/// Powers `(r_1, ..., r_n)` of the generators in `σ_1^r1 ... σ_n^rn`.
///
/// Ordered graded-lex: smaller `Σ r_k` first, then larger leading powers
/// first, so `σ1 < σ2 < σ3 < σ1^2 < σ1σ2 < ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MonomialSignature(Vec<u32>);

impl MonomialSignature {
    pub fn new(powers: Vec<u32>) -> Self {
        Self(powers)
    }

    pub fn powers(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `Σ r_k`, the total generator power.
    pub fn total_power(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree in the phase-space variables, `2 Σ r_k`.
    pub fn degree(&self) -> u32 {
        2 * self.total_power()
    }

    /// Number of generators present (the λ of a λ-monomial).
    pub fn support(&self) -> usize {
        self.0.iter().filter(|&&r| r > 0).count()
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::new(self.0.clone(), self.0.clone()).expect("signature over at least one mode")
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::monomial(self.to_monomial())
    }
}

impl Ord for MonomialSignature {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.total_power().cmp(&other.total_power()))
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MonomialSignature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialSignature {
    /// `s1^2*s3`; the constant signature prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &r) in self.0.iter().enumerate() {
            if r == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "s{}", k + 1)?;
            if r > 1 {
                write!(f, "^{r}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Mode count `n` and development order `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountSpec {
    n: usize,
    order: u32,
}

impl CountSpec {
    pub fn new(n: usize, order: u32) -> Result<Self, CountError> {
        if n == 0 {
            return Err(CountError::NoModes);
        }
        if order < 2 {
            return Err(CountError::OrderTooSmall(order));
        }
        if !order.is_multiple_of(2) {
            return Err(CountError::OddOrder(order));
        }
        Ok(Self { n, order })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `Q0 = floor(N/2)`, the largest total generator power.
    pub fn q0(&self) -> u32 {
        self.order / 2
    }
}

/// Binomial coefficient with overflow detection.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(acc)
}

/// `Λ = Σ_{λ=1}^{min(n,Q0)} C(n,λ) C(Q0,λ)`.
pub fn count_closed(spec: &CountSpec) -> Result<u128, CountError> {
    let n = spec.n as u64;
    let q0 = u64::from(spec.q0());
    (1..=n.min(q0)).try_fold(0u128, |acc, lambda| {
        let term = binomial(n, lambda)
            .zip(binomial(q0, lambda))
            .and_then(|(a, b)| a.checked_mul(b))
            .ok_or(CountError::Overflow)?;
        acc.checked_add(term).ok_or(CountError::Overflow)
    })
}

/// Two modes: `Q0 (Q0 + 3) / 2`.
pub fn count_closed_n2(q0: u64) -> u128 {
    let q = u128::from(q0);
    q * (q + 3) / 2
}

/// Three modes: `Q0 (Q0² + 6 Q0 + 11) / 6`.
///
/// The middle coefficient is 6; with `Q0` in its place the expression is
/// not even an integer (for `Q0 = 4` it gives 124/6), whereas `6 Q0`
/// matches the support-by-support sum [`count_closed_n3_by_support`] and
/// the general formula.
pub fn count_closed_n3(q0: u64) -> u128 {
    let q = u128::from(q0);
    q * (q * q + 6 * q + 11) / 6
}

/// Three modes, summed by support size:
/// `3 + 3(Q0-1) + 3 Q0(Q0-1)/2 + Q0(Q0-1)(Q0-2)/6`.
///
/// The first two terms count pure powers `σ_k^q`, the third the two-generator
/// products and the last the three-generator products.
pub fn count_closed_n3_by_support(q0: u64) -> u128 {
    if q0 == 0 {
        return 0;
    }
    let q = u128::from(q0);
    let pairs = 3 * q * (q - 1) / 2;
    let triples = if q >= 2 { q * (q - 1) * (q - 2) / 6 } else { 0 };
    3 + 3 * (q - 1) + pairs + triples
}

/// Compositions of `r` into `lambda` positive parts: `C(r-1, lambda-1)`.
pub fn count_compositions(r: u64, lambda: u64) -> u128 {
    if r == 0 || lambda == 0 {
        return u128::from(r == 0 && lambda == 0);
    }
    binomial(r - 1, lambda - 1).expect("composition count overflow")
}

/// For each even order `M <= N`, the number of signatures of degree exactly
/// `M`, i.e. those added when going from order `M - 2` to `M`.
pub fn additional_operators_by_order(
    n: usize,
    order: u32,
) -> Result<BTreeMap<u32, u128>, CountError> {
    let spec = CountSpec::new(n, order)?;
    let mut out = BTreeMap::new();
    for m in (2..=spec.order()).step_by(2) {
        let total = u64::from(m / 2);
        // Weak compositions of M/2 into n parts.
        let count = binomial(total + n as u64 - 1, n as u64 - 1).ok_or(CountError::Overflow)?;
        out.insert(m, count);
    }
    Ok(out)
}

/// All signatures with `1 <= Σ r_k <= Q0`, in graded-lex order.
pub fn enumerate_signatures(spec: &CountSpec) -> Result<Vec<MonomialSignature>, CountError> {
    let expected = count_closed(spec)?;
    if expected > i64::MAX as u128 {
        return Err(CountError::Overflow);
    }
    let capacity = usize::try_from(expected).map_err(|_| CountError::Overflow)?;
    let mut out = Vec::with_capacity(capacity);
    let mut powers = vec![0u32; spec.n];
    for total in 1..=spec.q0() {
        fill(&mut powers, 0, total, &mut out);
    }
    Ok(out)
}

// Writes every split of `remaining` over powers[k..] in descending lex order.
fn fill(powers: &mut [u32], k: usize, remaining: u32, out: &mut Vec<MonomialSignature>) {
    if k + 1 == powers.len() {
        powers[k] = remaining;
        out.push(MonomialSignature(powers.to_vec()));
        return;
    }
    for r in (0..=remaining).rev() {
        powers[k] = r;
        fill(powers, k + 1, remaining - r, out);
    }
    powers[k] = 0;
}
