use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::flow::PhasePoint;
use super::scalar::{fmt_coefficient, from_int, to_f64, ExactComplex};
use super::{check_modes, AlgebraError, Monomial};

/// Sparse polynomial in `z, z*` with exact complex-rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients are stored, so
/// structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, ExactComplex>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "mode count must be at least 1");
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: ExactComplex) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn term(mono: Monomial, c: ExactComplex) -> Self {
        let mut p = Self::zero(mono.n());
        p.add_term(mono, c);
        p
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::term(mono, ExactComplex::one())
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Monomial, ExactComplex)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            check_modes(n, m.n())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order of their monomials.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> ExactComplex {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(ExactComplex::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Adds `c * mono` in place. Panics on mode-count mismatch.
    pub fn add_term(&mut self, mono: Monomial, c: ExactComplex) {
        assert_eq!(self.n, mono.n(), "mode count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &ExactComplex) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a.clone() * c.clone());
        }
        out
    }

    /// Multiplies each coefficient by a function of its monomial.
    pub(crate) fn map_coefficients<F>(&self, mut f: F) -> Polynomial
    where
        F: FnMut(&Monomial, &ExactComplex) -> ExactComplex,
    {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(m, c));
        }
        out
    }

    /// `∂/∂z_k` for a zero-based mode index.
    pub fn partial_z(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            if let Some(lowered) = m.with_alpha_lowered(k) {
                out.add_term(lowered, c.clone() * from_int(m.alpha()[k] as i64));
            }
        }
        out
    }

    /// `∂/∂z_k*` for a zero-based mode index.
    pub fn partial_z_star(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            if let Some(lowered) = m.with_beta_lowered(k) {
                out.add_term(lowered, c.clone() * from_int(m.beta()[k] as i64));
            }
        }
        out
    }

    /// Polynomial power by repeated multiplication.
    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.n, ExactComplex::one());
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "mode count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "mode count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "mode count mismatch");
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-ExactComplex::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (negative, body, unit) = fmt_coefficient(c);
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&body)?;
            } else if unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{body} {m}")?;
            }
        }
        Ok(())
    }
}

/// Time reversal `τ`: swaps `z_k` and `z_k*` in every monomial.
pub fn time_reversal(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.n);
    for (m, c) in &p.terms {
        out.terms.insert(m.swapped(), c.clone());
    }
    out
}

/// The Hilbert basis `σ_1, ..., σ_n` of the non-resonant invariant algebra.
pub fn hilbert_basis(n: usize) -> Vec<Monomial> {
    (0..n).map(|k| Monomial::sigma(n, k)).collect()
}

/// Numeric value of `p` at the phase point `z`, with `z_k*` read as the
/// complex conjugate of `z_k`.
pub fn evaluate(p: &Polynomial, z: &PhasePoint) -> Result<Complex64, AlgebraError> {
    check_modes(p.n, z.n())?;
    let coords = z.coords();
    let mut total = Complex64::zero();
    for (m, c) in &p.terms {
        let mut value = Complex64::new(to_f64(&c.re), to_f64(&c.im));
        for (k, zk) in coords.iter().enumerate() {
            value *= zk.powu(m.alpha()[k]) * zk.conj().powu(m.beta()[k]);
        }
        total += value;
    }
    Ok(total)
}
