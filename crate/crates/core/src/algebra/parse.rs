//! Recursive-descent parser for the polynomial text syntax:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ['*'] factor ('*' factor)* | coeff | factor ('*' factor)*
//! factor := var ['^' uint]
//! var    := 'z' uint | 'zs' uint | 's' uint
//! coeff  := rational ['i'] | 'i' | '(' ['-'] rational ('+'|'-') [rational] 'i' ')'
//! ```
//!
//! `s<k>` is shorthand for `z<k>*zs<k>`. Mode indices are 1-based and
//! whitespace is ignored.

use num_rational::BigRational;
use num_traits::One;

use super::scalar::{imag, parse_rational, real, ExactComplex};
use super::{AlgebraError, Monomial, Polynomial};

pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::NoModes);
    }
    let mut parser = Parser {
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        cols: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, _)| i + 1)
            .collect(),
        pos: 0,
        n,
    };
    parser.expr()
}

struct Parser {
    chars: Vec<char>,
    // Original 1-based column of each retained character.
    cols: Vec<usize>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, AlgebraError> {
        let column = self
            .cols
            .get(self.pos)
            .copied()
            .unwrap_or_else(|| self.cols.last().map_or(1, |c| c + 1));
        Err(AlgebraError::Parse {
            column,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial, AlgebraError> {
        if self.chars.is_empty() {
            return self.error("empty expression");
        }
        let mut out = Polynomial::zero(self.n);
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (mono, c) = self.term()?;
            out.add_term(mono, if negative { -c } else { c });
            match self.peek() {
                None => return Ok(out),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(other) => return self.error(format!("unexpected `{other}`")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, ExactComplex), AlgebraError> {
        let coefficient = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' || c == '(' || c == 'i' => {
                Some(self.coefficient()?)
            }
            _ => None,
        };
        let mut mono = Monomial::one(self.n);
        let starts_factor = |p: &Parser| matches!(p.peek(), Some('z') | Some('s'));
        match coefficient {
            Some(_) => {
                let star = self.eat('*');
                if star && !starts_factor(self) {
                    return self.error("expected a variable after `*`");
                }
                if !starts_factor(self) {
                    return Ok((mono, coefficient.unwrap()));
                }
            }
            None if !starts_factor(self) => {
                return self.error("expected a coefficient or variable");
            }
            None => {}
        }
        loop {
            mono = mono.mul(&self.factor()?);
            if !self.eat('*') {
                break;
            }
        }
        Ok((mono, coefficient.unwrap_or_else(ExactComplex::one)))
    }

    fn factor(&mut self) -> Result<Monomial, AlgebraError> {
        let kind = match (self.peek(), self.chars.get(self.pos + 1)) {
            (Some('z'), Some('s')) => {
                self.pos += 2;
                Var::ZStar
            }
            (Some('z'), _) => {
                self.pos += 1;
                Var::Z
            }
            (Some('s'), _) => {
                self.pos += 1;
                Var::Sigma
            }
            _ => return self.error("expected `z`, `zs` or `s`"),
        };
        let index = self.uint()?;
        if index == 0 || index as usize > self.n {
            self.pos -= 1;
            return self.error(format!("mode index {index} outside 1..={}", self.n));
        }
        let k = index as usize - 1;
        let power = if self.eat('^') { self.uint()? } else { 1 };
        let base = match kind {
            Var::Z => Monomial::z(self.n, k),
            Var::ZStar => Monomial::z_star(self.n, k),
            Var::Sigma => Monomial::sigma(self.n, k),
        };
        let mut out = Monomial::one(self.n);
        for _ in 0..power {
            out = out.mul(&base);
        }
        Ok(out)
    }

    fn uint(&mut self) -> Result<u32, AlgebraError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an unsigned integer");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.error("integer out of range")
            }
        }
    }

    fn rational(&mut self) -> Result<BigRational, AlgebraError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.' || c == '/') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let literal: String = self.chars[start..self.pos].iter().collect();
        parse_rational(&literal).or_else(|_| {
            self.pos = start;
            self.error(format!("malformed number `{literal}`"))
        })
    }

    fn coefficient(&mut self) -> Result<ExactComplex, AlgebraError> {
        if self.eat('i') {
            return Ok(imag(BigRational::one()));
        }
        if self.eat('(') {
            let re_negative = self.eat('-');
            let re = self.rational()?;
            let im_negative = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => return self.error("expected `+` or `-` inside complex coefficient"),
            };
            self.pos += 1;
            let im = if self.eat('i') {
                BigRational::one()
            } else {
                let im = self.rational()?;
                if !self.eat('i') {
                    return self.error("expected `i`");
                }
                im
            };
            if !self.eat(')') {
                return self.error("expected `)`");
            }
            let re = if re_negative { -re } else { re };
            let im = if im_negative { -im } else { im };
            return Ok(ExactComplex::new(re, im));
        }
        let value = self.rational()?;
        Ok(if self.eat('i') {
            imag(value)
        } else {
            real(value)
        })
    }
}

enum Var {
    Z,
    ZStar,
    Sigma,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{from_int, rational};

    #[test]
    fn sigma_shorthand() {
        let p = parse_polynomial("s1", 2).unwrap();
        assert_eq!(p, Polynomial::monomial(Monomial::sigma(2, 0)));
        assert_eq!(
            parse_polynomial("z2 * zs2", 2).unwrap(),
            parse_polynomial("s2", 2).unwrap()
        );
    }

    #[test]
    fn coefficients() {
        let p = parse_polynomial("3/2i z1^2 - (1/2-3i) zs2 + 4 - i*s1", 2).unwrap();
        assert_eq!(
            p.coefficient(&Monomial::new(vec![2, 0], vec![0, 0]).unwrap()),
            imag(rational(3, 2))
        );
        assert_eq!(
            p.coefficient(&Monomial::z_star(2, 1)),
            ExactComplex::new(rational(-1, 2), rational(3, 1))
        );
        assert_eq!(p.coefficient(&Monomial::one(2)), from_int(4));
        assert_eq!(p.coefficient(&Monomial::sigma(2, 0)), imag(rational(-1, 1)));
        let q = parse_polynomial("(1+i) z1 + (2-i)", 1).unwrap();
        assert_eq!(
            q.coefficient(&Monomial::z(1, 0)),
            ExactComplex::new(rational(1, 1), rational(1, 1))
        );
        assert_eq!(
            q.coefficient(&Monomial::one(1)),
            ExactComplex::new(rational(2, 1), rational(-1, 1))
        );
    }

    #[test]
    fn powers_and_decimals() {
        let p = parse_polynomial("-0.25 s1^2*z2", 2).unwrap();
        let m = Monomial::new(vec![2, 1], vec![2, 0]).unwrap();
        assert_eq!(p, Polynomial::term(m, real(rational(-1, 4))));
    }

    #[test]
    fn zero_and_cancellation() {
        assert!(parse_polynomial("0", 3).unwrap().is_zero());
        assert!(parse_polynomial("z1 - z1", 1).unwrap().is_zero());
    }

    #[test]
    fn errors_carry_columns() {
        let err = parse_polynomial("z1 + z3", 2).unwrap_err();
        assert!(
            matches!(err, AlgebraError::Parse { column: 7, .. }),
            "{err:?}"
        );
        assert!(parse_polynomial("", 2).is_err());
        assert!(parse_polynomial("z0", 2).is_err());
        assert!(parse_polynomial("z1 +", 2).is_err());
        assert!(parse_polynomial("z1 z2", 2).is_err());
        assert!(parse_polynomial("(1+2) z1", 2).is_err());
        assert!(parse_polynomial("1/0 z1", 2).is_err());
        assert!(parse_polynomial("x1", 2).is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["-2 + 3/2i z1 - z2*zs2", "(1/3-7i) z1^3*zs2", "0", "5i"] {
            let p = parse_polynomial(text, 2).unwrap();
            assert_eq!(p.to_string(), text);
        }
    }
}
