//! Canonical text form of polynomials.
//!
//! Terms appear in descending monomial order separated by single spaces. Each
//! term is a mandatory sign, the absolute coefficient, then `*name` or
//! `*name^e` (e >= 2) factors with variables in universe order:
//!
//! ```text
//! +3*a_1_2^2*b_2_3 -1*b_1_1
//! ```
//!
//! The zero polynomial is written `0`. The parser accepts exactly the strings the
//! printer can produce.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Monomial, PolyError, Polynomial, VariableUniverse, MAX_EXPONENT};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", c.abs())?;
            for (var, e) in m.iter() {
                write!(f, "*{}", self.universe().name(var))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Parses the canonical text form over `universe`.
    pub fn parse(universe: &Arc<VariableUniverse>, text: &str) -> Result<Polynomial, PolyError> {
        if text == "0" {
            return Ok(Polynomial::zero(universe));
        }
        let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
        for (i, token) in text.split(' ').enumerate() {
            let term = parse_term(universe, token).map_err(|reason| PolyError::Parse { term: i + 1, reason })?;
            if let Some((prev, _)) = terms.last() {
                if term.0 >= *prev {
                    return Err(PolyError::Parse {
                        term: i + 1,
                        reason: "terms not in strictly descending order".into(),
                    });
                }
            }
            terms.push(term);
        }
        Ok(Polynomial::from_sorted_terms(universe, terms))
    }
}

fn parse_term(universe: &VariableUniverse, token: &str) -> Result<(Monomial, BigInt), String> {
    let negative = match token.as_bytes().first() {
        Some(b'+') => false,
        Some(b'-') => true,
        _ => return Err(format!("expected sign in {token:?}")),
    };
    let mut factors = token[1..].split('*');
    let digits = factors.next().unwrap_or_default();
    let magnitude = parse_decimal(digits).ok_or_else(|| format!("bad coefficient {digits:?}"))?;
    if magnitude.is_zero() {
        return Err("zero coefficient".into());
    }
    let coeff = if negative { -magnitude } else { magnitude };

    let mut monomial = Monomial::one(universe.len());
    let mut last_var: Option<usize> = None;
    for factor in factors {
        let (name, exp) = match factor.split_once('^') {
            Some((name, e)) => {
                let e: u32 = parse_decimal(e)
                    .and_then(|v| u32::try_from(v).ok())
                    .ok_or_else(|| format!("bad exponent in {factor:?}"))?;
                if !(2..=MAX_EXPONENT).contains(&e) {
                    return Err(format!("exponent {e} out of range in {factor:?}"));
                }
                (name, e)
            }
            None => (factor, 1),
        };
        let var = universe
            .position(name)
            .ok_or_else(|| format!("unknown variable {name:?}"))?;
        if last_var.is_some_and(|prev| var <= prev) {
            return Err(format!("variable {name:?} out of canonical order"));
        }
        last_var = Some(var);
        monomial.set_exponent(var, exp);
    }
    Ok((monomial, coeff))
}

/// Unsigned decimal without leading zeros (a lone `0` is allowed).
fn parse_decimal(s: &str) -> Option<BigInt> {
    let well_formed = !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if well_formed {
        s.parse().ok()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe() -> Arc<VariableUniverse> {
        Arc::new(VariableUniverse::new(["a_1_1", "a_1_2", "b_1_1", "b_2_3"]).unwrap())
    }

    #[test]
    fn prints_canonical_form() {
        let u = universe();
        let a12 = Polynomial::var(&u, "a_1_2").unwrap();
        let b23 = Polynomial::var(&u, "b_2_3").unwrap();
        let b11 = Polynomial::var(&u, "b_1_1").unwrap();
        let p = &(&Polynomial::constant(&u, 3) * &(&(&a12 * &a12) * &b23)) - &b11;
        assert_eq!(p.to_string(), "+3*a_1_2^2*b_2_3 -1*b_1_1");
        assert_eq!(Polynomial::zero(&u).to_string(), "0");
        assert_eq!(Polynomial::constant(&u, -7).to_string(), "-7");
    }

    #[test]
    fn parses_what_it_prints() {
        let u = universe();
        for text in ["+3*a_1_2^2*b_2_3 -1*b_1_1", "0", "-7", "+1*a_1_1*b_1_1 +12"] {
            let p = Polynomial::parse(&u, text).unwrap();
            assert_eq!(p.to_string(), text);
        }
    }

    #[test]
    fn rejects_non_canonical_input() {
        let u = universe();
        for text in [
            "3*a_1_1",           // missing sign
            "+1*b_1_1 +1*a_1_1", // ascending terms
            "+1*a_1_1 +2*a_1_1", // repeated monomial
            "+1*b_1_1*a_1_1",    // variables out of order
            "+1*a_1_1^1",        // explicit unit exponent
            "+0*a_1_1",          // zero coefficient
            "+01*a_1_1",         // leading zero
            "+1*a_1_1  -1",      // double space
            "+1*x",              // unknown variable
            "",                  // empty
            "+1*a_1_1^0",
            "-0",
        ] {
            assert!(Polynomial::parse(&u, text).is_err(), "accepted {text:?}");
        }
    }
}
