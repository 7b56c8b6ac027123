use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::{Monomial, PolyError, VariableUniverse};

/// A polynomial with integer coefficients over a [`VariableUniverse`].
///
/// Terms are kept sorted strictly descending in the monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    universe: Arc<VariableUniverse>,
    terms: Vec<(Monomial, BigInt)>,
}

/// Size summary of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyStats {
    pub monomials: usize,
    /// Maximum total degree; absent for the zero polynomial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(serialize_with = "serialize_integer")]
    pub content: BigInt,
}

/// Writes integers as JSON numbers when they fit in 64 bits, else as decimal strings.
pub(crate) fn serialize_integer<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

impl Polynomial {
    pub fn zero(universe: &Arc<VariableUniverse>) -> Self {
        Polynomial {
            universe: Arc::clone(universe),
            terms: Vec::new(),
        }
    }

    pub fn one(universe: &Arc<VariableUniverse>) -> Self {
        Polynomial::constant(universe, BigInt::one())
    }

    pub fn constant(universe: &Arc<VariableUniverse>, c: impl Into<BigInt>) -> Self {
        Polynomial::from_terms(universe, [(Monomial::one(universe.len()), c.into())])
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(universe: &Arc<VariableUniverse>, name: &str) -> Result<Self, PolyError> {
        let pos = universe
            .position(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_owned()))?;
        Ok(Polynomial::var_at(universe, pos))
    }

    pub fn var_at(universe: &Arc<VariableUniverse>, var: usize) -> Self {
        Polynomial {
            universe: Arc::clone(universe),
            terms: vec![(Monomial::variable(universe.len(), var), BigInt::one())],
        }
    }

    /// Builds a polynomial from arbitrary terms, collecting duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(universe: &Arc<VariableUniverse>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Polynomial::from_accumulator(universe, acc)
    }

    fn from_accumulator(universe: &Arc<VariableUniverse>, acc: FxHashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            universe: Arc::clone(universe),
            terms,
        }
    }

    /// Wraps terms already in canonical form.
    pub(crate) fn from_sorted_terms(universe: &Arc<VariableUniverse>, terms: Vec<(Monomial, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            universe: Arc::clone(universe),
            terms,
        }
    }

    pub fn universe(&self) -> &Arc<VariableUniverse> {
        &self.universe
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    /// The constant value, if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn stats(&self) -> PolyStats {
        PolyStats {
            monomials: self.num_terms(),
            degree: self.total_degree(),
            content: self.content(),
        }
    }

    fn check_universe(&self, other: &Polynomial) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe {
            Ok(())
        } else {
            Err(PolyError::UniverseMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_universe(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_universe(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = other.terms.iter().peekable();
        let fix = |c: &BigInt| if negate_other { -c } else { c.clone() };
        loop {
            let ord = match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => a.0.cmp(&b.0),
            };
            match ord {
                Ordering::Greater => terms.push(lhs.next().unwrap().clone()),
                Ordering::Less => {
                    let (m, c) = rhs.next().unwrap();
                    terms.push((m.clone(), fix(c)));
                }
                Ordering::Equal => {
                    let (m, a) = lhs.next().unwrap();
                    let (_, b) = rhs.next().unwrap();
                    let c = if negate_other { a - b } else { a + b };
                    if !c.is_zero() {
                        terms.push((m.clone(), c));
                    }
                }
            }
        }
        Polynomial::from_sorted_terms(&self.universe, terms)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_universe(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.universe));
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return Ok(large.mul_term(m, c));
        }
        let mut acc: FxHashMap<Monomial, BigInt> =
            FxHashMap::with_capacity_and_hasher(large.terms.len() * 2, Default::default());
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                let m = ms.mul(ml);
                match acc.get_mut(&m) {
                    Some(slot) => *slot += cs * cl,
                    None => {
                        acc.insert(m, cs * cl);
                    }
                }
            }
        }
        Ok(Polynomial::from_accumulator(&self.universe, acc))
    }

    /// Multiplies by `c * m`; the term order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.universe);
        }
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect();
        Polynomial::from_sorted_terms(&self.universe, terms)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        self.mul_term(&Monomial::one(self.universe.len()), c)
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.universe);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Repeatedly cancels the leading term of the running remainder against the
    /// leading term of `divisor`. For a single divisor under a monomial order the
    /// loop finishes with a zero remainder exactly when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_universe(divisor)?;
        let Some((lead_m, lead_c)) = divisor.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        if divisor.terms.len() == 1 {
            return self.div_by_term(lead_m, lead_c);
        }
        let tail = &divisor.terms[1..];
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.checked_div(lead_m).ok_or(PolyError::NotDivisible)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (tm, tc) in tail {
                let key = tm.mul(&qm);
                let delta = &qc * tc;
                match rem.get_mut(&key) {
                    Some(slot) => {
                        *slot -= delta;
                        if slot.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(Polynomial::from_sorted_terms(&self.universe, quotient))
    }

    fn div_by_term(&self, m: &Monomial, c: &BigInt) -> Result<Polynomial, PolyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (tm, tc) in &self.terms {
            let qm = tm.checked_div(m).ok_or(PolyError::NotDivisible)?;
            let (qc, r) = tc.div_rem(c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            terms.push((qm, qc));
        }
        Ok(Polynomial::from_sorted_terms(&self.universe, terms))
    }

    /// Evaluates at an assignment by variable name. Only variables that occur in
    /// the polynomial need to be assigned.
    pub fn evaluate(&self, assignment: &HashMap<String, BigInt>) -> Result<BigInt, PolyError> {
        let mut values: Vec<Option<&BigInt>> = vec![None; self.universe.len()];
        for (name, v) in assignment {
            if let Some(pos) = self.universe.position(name) {
                values[pos] = Some(v);
            }
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (var, e) in m.iter() {
                let v = values[var].ok_or_else(|| PolyError::MissingVariable(self.universe.name(var).to_owned()))?;
                t *= v.pow(e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates with one value per universe variable, by position.
    pub fn evaluate_at(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.universe.len(), "one value per variable");
        self.terms
            .iter()
            .map(|(m, c)| m.iter().fold(c.clone(), |acc, (var, e)| acc * values[var].pow(e)))
            .sum()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.universe == *other.universe
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// # Panics
            ///
            /// If the operands live in different universes.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("polynomial operands over different universes")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted_terms(&self.universe, terms)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Arc<VariableUniverse>, Polynomial, Polynomial) {
        let u = Arc::new(VariableUniverse::new(["x", "y"]).unwrap());
        let x = Polynomial::var(&u, "x").unwrap();
        let y = Polynomial::var(&u, "y").unwrap();
        (u, x, y)
    }

    fn c(u: &Arc<VariableUniverse>, v: i64) -> Polynomial {
        Polynomial::constant(u, v)
    }

    #[test]
    fn add_cancels() {
        let (u, x, y) = xy();
        assert_eq!(&(&x + &y) + &(&x - &y), &c(&u, 2) * &x);
        assert_eq!(&x + &Polynomial::zero(&u), x);
        let p = &c(&u, 3) * &(&x * &x);
        let sum = &p + &(-&p);
        assert!(sum.is_zero());
        assert!(sum.terms().is_empty());
    }

    #[test]
    fn difference_of_squares() {
        let (u, x, y) = xy();
        let lhs = &(&x + &y) * &(&x - &y);
        assert_eq!(lhs, &(&x * &x) - &(&y * &y));
        assert_eq!(&lhs * &Polynomial::one(&u), lhs);
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy();
        let f = &(&x * &x) - &(&y * &y);
        assert_eq!(f.exact_div(&(&x - &y)).unwrap(), &x + &y);
        let g = &(&x * &x) + &(&y * &y);
        assert_eq!(g.exact_div(&(&x - &y)), Err(PolyError::NotDivisible));
    }

    #[test]
    fn division_by_zero() {
        let (u, x, _) = xy();
        assert_eq!(x.exact_div(&Polynomial::zero(&u)), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn division_requires_integral_coefficients() {
        let (u, x, _) = xy();
        assert_eq!(x.exact_div(&c(&u, 2)), Err(PolyError::NotDivisible));
        let two_x = &c(&u, 2) * &x;
        assert_eq!(two_x.exact_div(&(&two_x + &c(&u, 2))), Err(PolyError::NotDivisible));
        assert_eq!((&c(&u, 6) * &x).exact_div(&c(&u, -3)).unwrap(), &c(&u, -2) * &x);
    }

    #[test]
    fn zero_divided_is_zero() {
        let (u, x, y) = xy();
        assert!(Polynomial::zero(&u).exact_div(&(&x + &y)).unwrap().is_zero());
    }

    #[test]
    fn content_examples() {
        let (u, x, y) = xy();
        let p = &(&c(&u, 4) * &(&x * &x)) + &(&c(&u, 6) * &(&y * &y));
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(Polynomial::zero(&u).content(), BigInt::zero());
        assert_eq!((-&p).content(), BigInt::from(2));
    }

    #[test]
    fn stats_examples() {
        let (u, x, y) = xy();
        let p = &(&x * &x) - &(&y * &y);
        assert_eq!(
            p.stats(),
            PolyStats {
                monomials: 2,
                degree: Some(2),
                content: BigInt::one()
            }
        );
        assert_eq!(
            Polynomial::zero(&u).stats(),
            PolyStats {
                monomials: 0,
                degree: None,
                content: BigInt::zero()
            }
        );
    }

    #[test]
    fn evaluate_examples() {
        let (u, x, y) = xy();
        let p = &(&x * &x) - &(&y * &y);
        let at: HashMap<String, BigInt> = [("x".to_owned(), BigInt::from(3)), ("y".to_owned(), BigInt::from(2))].into();
        assert_eq!(p.evaluate(&at).unwrap(), BigInt::from(5));
        assert_eq!(c(&u, 7).evaluate(&HashMap::new()).unwrap(), BigInt::from(7));
        let partial: HashMap<String, BigInt> = [("x".to_owned(), BigInt::from(1))].into();
        assert_eq!(p.evaluate(&partial), Err(PolyError::MissingVariable("y".into())));
        assert_eq!(x.evaluate(&partial).unwrap(), BigInt::one());
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let (_, x, _) = xy();
        let other = Arc::new(VariableUniverse::new(["x", "z"]).unwrap());
        let z = Polynomial::var(&other, "z").unwrap();
        assert_eq!(x.checked_add(&z), Err(PolyError::UniverseMismatch));
        assert_eq!(x.checked_mul(&z), Err(PolyError::UniverseMismatch));
        assert_eq!(x.exact_div(&z), Err(PolyError::UniverseMismatch));
    }

    #[test]
    fn equal_universes_by_value_interoperate() {
        let (_, x, _) = xy();
        let twin = Arc::new(VariableUniverse::new(["x", "y"]).unwrap());
        let y = Polynomial::var(&twin, "y").unwrap();
        assert!(x.checked_add(&y).is_ok());
    }

    #[test]
    fn power() {
        let (u, x, y) = xy();
        let s = &x + &y;
        let cube = s.pow(3);
        assert_eq!(cube, &(&s * &s) * &s);
        assert!(s.pow(0).is_one());
        assert_eq!(cube.evaluate_at(&[BigInt::from(2), BigInt::from(1)]), BigInt::from(27));
        let _ = u;
    }
}
