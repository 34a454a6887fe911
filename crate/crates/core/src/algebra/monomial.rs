use std::cmp::Ordering;
use std::fmt;

use super::{check_modes, AlgebraError};

/// The monomial `z_1^α1 z_1*^β1 ... z_n^αn z_n*^βn`.
///
/// Ordering is graded lexicographic: lower total degree first, then the
/// concatenated exponent vector `(α, β)` with larger leading exponents first,
/// so `z1 < z2 < ... < zn < z1* < ... < zn*` within a degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl Monomial {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self, AlgebraError> {
        if alpha.is_empty() {
            return Err(AlgebraError::NoModes);
        }
        check_modes(alpha.len(), beta.len())?;
        Ok(Self { alpha, beta })
    }

    /// The constant monomial `1` over `n` modes.
    pub fn one(n: usize) -> Self {
        assert!(n >= 1, "mode count must be at least 1");
        Self {
            alpha: vec![0; n],
            beta: vec![0; n],
        }
    }

    /// `z_k` for a zero-based mode index.
    pub fn z(n: usize, k: usize) -> Self {
        let mut m = Self::one(n);
        m.alpha[k] = 1;
        m
    }

    /// `z_k*` for a zero-based mode index.
    pub fn z_star(n: usize, k: usize) -> Self {
        let mut m = Self::one(n);
        m.beta[k] = 1;
        m
    }

    /// The Hilbert-basis generator `σ_k = z_k z_k*`.
    pub fn sigma(n: usize, k: usize) -> Self {
        let mut m = Self::one(n);
        m.alpha[k] = 1;
        m.beta[k] = 1;
        m
    }

    /// `σ_1^r1 ... σ_n^rn`.
    pub fn sigma_power(powers: &[u32]) -> Result<Self, AlgebraError> {
        Self::new(powers.to_vec(), powers.to_vec())
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn degree(&self) -> u32 {
        self.alpha.iter().chain(&self.beta).sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    /// True when `α = β`, i.e. the monomial is a product of generators `σ_k`.
    pub fn is_sigma_product(&self) -> bool {
        self.alpha == self.beta
    }

    /// Exponent-wise product. Panics on mode-count mismatch.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n(), other.n(), "mode count mismatch");
        Monomial {
            alpha: add(&self.alpha, &other.alpha),
            beta: add(&self.beta, &other.beta),
        }
    }

    /// The image under `z_k <-> z_k*`.
    pub fn swapped(&self) -> Monomial {
        Monomial {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    pub(crate) fn with_alpha_lowered(&self, k: usize) -> Option<Monomial> {
        let mut m = self.clone();
        m.alpha[k] = m.alpha[k].checked_sub(1)?;
        Some(m)
    }

    pub(crate) fn with_beta_lowered(&self, k: usize) -> Option<Monomial> {
        let mut m = self.clone();
        m.beta[k] = m.beta[k].checked_sub(1)?;
        Some(m)
    }

    fn exponents(&self) -> impl Iterator<Item = &u32> {
        self.alpha.iter().chain(&self.beta)
    }
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| {
                for (a, b) in self.exponents().zip(other.exponents()) {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        unequal => return unequal,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut factor = |f: &mut fmt::Formatter<'_>, name: &str, k: usize, power: u32| {
            if power == 0 {
                return Ok(());
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{name}{}", k + 1)?;
            if power > 1 {
                write!(f, "^{power}")?;
            }
            Ok(())
        };
        for k in 0..self.n() {
            factor(f, "z", k, self.alpha[k])?;
            factor(f, "zs", k, self.beta[k])?;
        }
        Ok(())
    }
}
