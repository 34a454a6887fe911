use num_traits::Zero;

use super::scalar::{from_int, imag, rational};
use super::{check_modes, AlgebraError, Monomial, Polynomial};

/// Poisson bracket `{P, Q} = i Σ_k (∂P/∂z_k* ∂Q/∂z_k − ∂P/∂z_k ∂Q/∂z_k*)`.
///
/// Works term by term: for monomials `a` and `b` every mode contributes to
/// the single monomial `a·b / σ_k` with weight `β_a,k α_b,k − α_a,k β_b,k`.
pub fn poisson_bracket(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, AlgebraError> {
    check_modes(p.n(), q.n())?;
    let n = p.n();
    let i = imag(rational(1, 1));
    let mut out = Polynomial::zero(n);
    for (a, ca) in p.terms() {
        for (b, cb) in q.terms() {
            let product = a.mul(b);
            let coefficient = i.clone() * ca.clone() * cb.clone();
            for k in 0..n {
                let weight = i64::from(a.beta()[k]) * i64::from(b.alpha()[k])
                    - i64::from(a.alpha()[k]) * i64::from(b.beta()[k]);
                if weight == 0 {
                    continue;
                }
                let reduced = lower_sigma(&product, k);
                let c = coefficient.clone() * from_int(weight);
                if !c.is_zero() {
                    out.add_term(reduced, c);
                }
            }
        }
    }
    Ok(out)
}

// A nonzero weight guarantees both exponents of mode k are at least one.
fn lower_sigma(m: &Monomial, k: usize) -> Monomial {
    m.with_alpha_lowered(k)
        .and_then(|m| m.with_beta_lowered(k))
        .expect("nonzero bracket weight implies z_k and z_k* present")
}
