//! Vectors over the prime field `F_q`.
//!
//! A single type serves as group element, character index and parity-check row.
//! Digit 0 is written first and is the most significant digit when a vector is
//! read as a base-q number, so the derived ordering is lexicographic on digits.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqVector {
    q: u32,
    digits: Vec<u32>,
}

impl FqVector {
    pub fn new(q: u32, digits: Vec<u32>) -> Result<Self> {
        if let Some(pos) = digits.iter().position(|&x| x >= q) {
            return Err(Error::OutOfRange {
                what: "vector digit",
                value: digits[pos] as i64,
                lo: 0,
                hi: q as i64 - 1,
            });
        }
        Ok(Self { q, digits })
    }

    pub fn zero(q: u32, n: usize) -> Self {
        Self {
            q,
            digits: vec![0; n],
        }
    }

    /// The unit vector with a 1 at position `i` (0-based).
    pub fn unit(q: u32, n: usize, i: usize) -> Self {
        let mut v = Self::zero(q, n);
        v.digits[i] = 1;
        v
    }

    /// The indicator vector of a set of 0-based positions.
    pub fn indicator(q: u32, n: usize, positions: &[usize]) -> Self {
        let mut v = Self::zero(q, n);
        for &i in positions {
            v.digits[i] = 1;
        }
        v
    }

    /// Decodes `index` as an `n`-digit base-q number, most significant digit first.
    pub fn from_index(q: u32, n: usize, mut index: u64) -> Self {
        let mut digits = vec![0; n];
        for slot in digits.iter_mut().rev() {
            *slot = (index % q as u64) as u32;
            index /= q as u64;
        }
        Self { q, digits }
    }

    /// Inverse of [`FqVector::from_index`]; `None` on overflow.
    pub fn to_index(&self) -> Option<u64> {
        self.digits.iter().try_fold(0u64, |acc, &x| {
            acc.checked_mul(self.q as u64)?.checked_add(x as u64)
        })
    }

    /// Parses either a run of decimal digits (`q <= 10`) or `:`-separated digits.
    pub fn parse(q: u32, s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let digits: Vec<u32> = if s.contains(':') {
            s.split(':')
                .map(|t| t.trim().parse::<u32>().map_err(|e| bad(e.to_string())))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| bad(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(q, digits)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&x| x == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&x| x != 0).count()
    }

    /// Positions of the nonzero digits.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.digits[i] != 0).collect()
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.q != other.q || self.len() != other.len() {
            return Err(Error::SpaceMismatch(
                self.q,
                self.len(),
                other.q,
                other.len(),
            ));
        }
        Ok(())
    }

    /// `<u, v> = sum u_i v_i mod q`.
    pub fn dot(&self, other: &Self) -> Result<u32> {
        self.check_same_space(other)?;
        let q = self.q as u64;
        Ok(self
            .digits
            .iter()
            .zip(&other.digits)
            .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % q) as u32)
    }

    pub fn distance(&self, other: &Self) -> Result<usize> {
        self.check_same_space(other)?;
        Ok(self
            .digits
            .iter()
            .zip(&other.digits)
            .filter(|(a, b)| a != b)
            .count())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let q = self.q;
        Ok(Self {
            q,
            digits: self
                .digits
                .iter()
                .zip(&other.digits)
                .map(|(&a, &b)| ((a as u64 + b as u64) % q as u64) as u32)
                .collect(),
        })
    }

    pub fn scale(&self, c: u32) -> Self {
        let q = self.q as u64;
        Self {
            q: self.q,
            digits: self
                .digits
                .iter()
                .map(|&a| ((a as u64 * (c as u64 % q)) % q) as u32)
                .collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: u32) -> Result<Self> {
        self.add(&other.scale(c))
    }
}

/// `<u, v>` over `F_q`; fails if the vectors live in different spaces.
pub fn dot_product(u: &FqVector, v: &FqVector) -> Result<u32> {
    u.dot(v)
}

impl PartialOrd for FqVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q
            .cmp(&other.q)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.digits.cmp(&other.digits))
    }
}

impl fmt::Display for FqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 10 {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            f.write_str(&parts.join(":"))
        }
    }
}

/// Every vector of `F_q^n` in increasing base-q order.
pub fn all_vectors(q: u32, n: usize) -> impl Iterator<Item = FqVector> {
    let total = (q as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    (0..total).map(move |i| FqVector::from_index(q, n, i))
}

/// Modular inverse in `F_q` for prime `q`.
pub(crate) fn inverse_mod(a: u32, q: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(q));
    // a^(q-2) mod q
    let (mut base, mut exp, mut acc) = (a as u64 % q as u64, q as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        exp >>= 1;
    }
    acc as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(q: u32, s: &str) -> FqVector {
        FqVector::parse(q, s).unwrap()
    }

    #[test]
    fn dot_product_examples() {
        let a = v(2, "1101");
        assert_eq!(dot_product(&a, &FqVector::zero(2, 4)).unwrap(), 0);
        assert_eq!(dot_product(&v(2, "110"), &v(2, "111")).unwrap(), 0);
        assert_eq!(dot_product(&v(3, "12"), &v(3, "22")).unwrap(), 0);
        assert_eq!(dot_product(&v(3, "12"), &v(3, "21")).unwrap(), 1);
        assert!(matches!(
            dot_product(&v(3, "12"), &v(2, "11")),
            Err(Error::SpaceMismatch(..))
        ));
        assert!(dot_product(&v(3, "12"), &v(3, "121")).is_err());
    }

    #[test]
    fn digits_validated() {
        assert!(FqVector::new(3, vec![0, 3]).is_err());
        assert!(FqVector::parse(2, "0120").is_err());
        assert_eq!(FqVector::parse(11, "10:0:3").unwrap().digits(), &[10, 0, 3]);
        assert_eq!(FqVector::parse(11, "10:0:3").unwrap().to_string(), "10:0:3");
    }

    #[test]
    fn index_is_msb_first() {
        assert_eq!(FqVector::from_index(2, 7, 15).to_string(), "0001111");
        assert_eq!(FqVector::from_index(3, 3, 5).to_string(), "012");
        let all: Vec<_> = all_vectors(3, 2).collect();
        assert_eq!(all.len(), 9);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn weight_and_support() {
        let x = v(5, "04030");
        assert_eq!(x.weight(), 2);
        assert_eq!(x.support(), vec![1, 3]);
        assert_eq!(x.distance(&v(5, "04000")).unwrap(), 1);
    }

    #[test]
    fn inverses() {
        for q in [2u32, 3, 5, 7, 13] {
            for a in 1..q {
                assert_eq!(a * inverse_mod(a, q) % q, 1);
            }
        }
    }

    proptest! {
        #[test]
        fn index_round_trip(q in prop::sample::select(vec![2u32, 3, 5, 7]), n in 1usize..8, seed in any::<u64>()) {
            let total = (q as u64).pow(n as u32);
            let idx = seed % total;
            let x = FqVector::from_index(q, n, idx);
            prop_assert_eq!(x.to_index(), Some(idx));
            prop_assert_eq!(FqVector::parse(q, &x.to_string()).unwrap(), x);
        }

        #[test]
        fn dot_is_bilinear(q in prop::sample::select(vec![2u32, 3, 5]), a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), s in 0u32..5) {
            let n = 5;
            let total = (q as u64).pow(n as u32);
            let (x, y, z) = (
                FqVector::from_index(q, n, a % total),
                FqVector::from_index(q, n, b % total),
                FqVector::from_index(q, n, c % total),
            );
            let lhs = x.add_scaled(&y, s).unwrap().dot(&z).unwrap();
            let rhs = (x.dot(&z).unwrap() + (s % q) * y.dot(&z).unwrap()) % q;
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(x.dot(&y).unwrap(), y.dot(&x).unwrap());
        }
    }
}
