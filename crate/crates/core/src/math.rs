//! Exact combinatorial primitives: parameters of the Gilbert graph, binomials,
//! Krawtchouk polynomials and Hamming-ball volumes.
//!
//! Everything here is arbitrary precision. The ball volume `V_q(n, d-1)` already
//! reaches `q^n` and overflows machine words at modest sizes.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on the number of table entries (or enumerated vectors) an
/// operation may materialize.
pub const DEFAULT_BUDGET: u64 = 1 << 30;

/// Deterministic primality test by trial division.
pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    if q < 4 {
        return true;
    }
    if q.is_multiple_of(2) {
        return false;
    }
    let mut f = 3u32;
    while (f as u64) * (f as u64) <= q as u64 {
        if q.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// The triple `(q, n, d)` identifying the Gilbert graph `G_{q,n,d}`: vertices are
/// `F_q^n`, and two vectors are adjacent when their Hamming distance lies in `1..=d-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GraphParams {
    q: u32,
    n: usize,
    d: usize,
}

impl GraphParams {
    /// Validates `q` prime, `n >= 1` and `1 <= d <= n + 1`.
    pub fn new(q: u32, n: usize, d: usize) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        if d == 0 || d > n + 1 {
            return Err(Error::InvalidParams(format!(
                "d must satisfy 1 <= d <= n + 1 (got d = {d}, n = {n})"
            )));
        }
        Ok(Self { q, n, d })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `q^n`, the number of vertices.
    pub fn space_size(&self) -> BigUint {
        BigUint::from(self.q).pow(self.n as u32)
    }

    /// `V_q(n, d-1)`, the volume of the Hamming ball of radius `d-1`.
    pub fn ball(&self) -> BigInt {
        hamming_ball_volume(self.q, self.n, self.d - 1)
    }

    /// The regular degree `V_q(n, d-1) - 1`.
    pub fn degree(&self) -> BigInt {
        self.ball() - 1
    }

    /// `d = 1`: no pair of vectors is at distance `1..=0`.
    pub fn is_edgeless(&self) -> bool {
        self.d == 1
    }

    /// `d = n + 1`: every pair of distinct vectors is adjacent.
    pub fn is_complete(&self) -> bool {
        self.d == self.n + 1
    }
}

impl std::fmt::Display for GraphParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(q={}, n={}, d={})", self.q, self.n, self.d)
    }
}

/// Returns `entries` as a `usize` if it fits within `budget`.
pub fn check_budget(entries: &BigUint, budget: u64) -> Result<usize> {
    if *entries > BigUint::from(budget) {
        return Err(Error::Budget {
            required: entries.clone(),
            budget,
        });
    }
    usize::try_from(entries).map_err(|_| Error::Budget {
        required: entries.clone(),
        budget,
    })
}

/// `C(x, j) = x(x-1)...(x-j+1) / j!`, with `C(x, 0) = 1` and `C(x, j) = 0` for `j > x`.
pub fn binomial(x: u64, j: u64) -> BigInt {
    if j > x {
        return BigInt::zero();
    }
    let j = j.min(x - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc *= x - i;
        acc /= i + 1;
    }
    acc
}

/// Krawtchouk polynomial
/// `K_k(x; n, q) = sum_{j=0}^{k} (-1)^j C(x, j) C(n-x, k-j) (q-1)^{k-j}`.
///
/// `n = 0` is accepted since the closed-form spectrum evaluates `K` at `n - 1`.
pub fn krawtchouk(k: usize, x: usize, n: usize, q: u32) -> Result<BigInt> {
    if x > n {
        return Err(Error::OutOfRange {
            what: "krawtchouk argument x",
            value: x as i64,
            lo: 0,
            hi: n as i64,
        });
    }
    let qm1 = BigInt::from(q - 1);
    let mut sum = BigInt::zero();
    for j in 0..=k.min(x) {
        if k - j > n - x {
            continue;
        }
        let term = binomial(x as u64, j as u64)
            * binomial((n - x) as u64, (k - j) as u64)
            * num_traits::pow(qm1.clone(), k - j);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `sum_{i=0}^{radius} C(n, i) (q-1)^i`, the number of vectors of weight at most `radius`.
/// The radius is inclusive; every bound in this crate calls it with `d - 1`.
pub fn hamming_ball_volume(q: u32, n: usize, radius: usize) -> BigInt {
    let qm1 = BigInt::from(q - 1);
    let mut power = BigInt::one();
    let mut sum = BigInt::zero();
    for i in 0..=radius.min(n) {
        sum += binomial(n as u64, i as u64) * &power;
        power *= &qm1;
    }
    sum
}

/// Checked form of [`hamming_ball_volume`] that rejects radii outside `[0, n]`.
pub fn ball_volume(params: &GraphParams, radius: i64) -> Result<BigInt> {
    if radius < 0 || radius > params.n() as i64 {
        return Err(Error::OutOfRange {
            what: "ball radius",
            value: radius,
            lo: 0,
            hi: params.n() as i64,
        });
    }
    Ok(hamming_ball_volume(params.q(), params.n(), radius as usize))
}
