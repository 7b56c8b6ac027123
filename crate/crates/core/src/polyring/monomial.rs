use smallvec::SmallVec;

/// Largest exponent a single variable may carry.
pub const MAX_EXPONENT: u32 = u8::MAX as u32;

const LANES: usize = 8;
const HIGH_BITS: u64 = 0x8080_8080_8080_8080;

/// A power product over a fixed number of variables.
///
/// Exponents are packed one byte per variable, eight variables per word, with
/// variable 0 in the most significant byte of word 0. Comparing the word
/// sequences numerically is then exactly the pure lexicographic order with
/// variable 0 ranked highest, so the derived `Ord` is the monomial order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    words: SmallVec<[u64; 7]>,
}

impl Monomial {
    /// The constant monomial 1 over `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            words: SmallVec::from_elem(0, nvars.div_ceil(LANES)),
        }
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.set_exponent(var, 1);
        m
    }

    pub fn from_exponents(exponents: &[u32]) -> Self {
        let mut m = Monomial::one(exponents.len());
        for (var, &e) in exponents.iter().enumerate() {
            m.set_exponent(var, e);
        }
        m
    }

    pub fn exponent(&self, var: usize) -> u32 {
        let shift = 8 * (LANES - 1 - var % LANES);
        ((self.words[var / LANES] >> shift) & 0xff) as u32
    }

    pub fn set_exponent(&mut self, var: usize, e: u32) {
        assert!(e <= MAX_EXPONENT, "exponent {e} exceeds {MAX_EXPONENT}");
        let shift = 8 * (LANES - 1 - var % LANES);
        let w = &mut self.words[var / LANES];
        *w = (*w & !(0xff << shift)) | ((e as u64) << shift);
    }

    pub fn is_one(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.words.iter().flat_map(|w| w.to_be_bytes()).map(u32::from).sum()
    }

    /// Nonzero exponents as `(variable, exponent)` pairs in variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(wi, w)| {
                w.to_be_bytes()
                    .into_iter()
                    .enumerate()
                    .map(move |(bi, e)| (wi * LANES + bi, u32::from(e)))
            })
            .filter(|&(_, e)| e > 0)
    }

    /// Product of two monomials.
    ///
    /// # Panics
    ///
    /// If some exponent would exceed [`MAX_EXPONENT`].
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.words.len(), other.words.len());
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| {
                let sum = a.wrapping_add(b);
                // A carry out of any lane's top bit means that lane overflowed; the
                // lowest overflowing lane has no carry-in, so it is always caught.
                let carries = ((a & b) | ((a | b) & !sum)) & HIGH_BITS;
                assert!(carries == 0, "monomial exponent overflow");
                sum
            })
            .collect();
        Monomial { words }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&d, &f)| d.to_be_bytes().iter().zip(f.to_be_bytes().iter()).all(|(x, y)| x <= y))
    }

    /// `self / divisor`, or `None` when `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        // No lane borrows once divisibility holds.
        let words = self.words.iter().zip(&divisor.words).map(|(&f, &d)| f - d).collect();
        Some(Monomial { words })
    }
}
