//! Linear codes given by a parity-check matrix, with exhaustive minimum-distance
//! verification.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::math::{check_budget, GraphParams, DEFAULT_BUDGET};
use crate::spectrum::QuotientBasis;
use crate::vector::FqVector;

/// Minimum distance of a code; the trivial code `{0}` has no pair of distinct words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MinDistance {
    Finite(usize),
    Infinite,
}

impl MinDistance {
    /// `true` when every pair of distinct codewords is at distance at least `d`.
    pub fn at_least(&self, d: usize) -> bool {
        match self {
            MinDistance::Finite(x) => *x >= d,
            MinDistance::Infinite => true,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Finite(x) => write!(f, "{x}"),
            MinDistance::Infinite => f.write_str("inf"),
        }
    }
}

/// The code `{u : <u, h> = 0 for every parity row h}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    q: u32,
    n: usize,
    parity_rows: Vec<FqVector>,
    verified_min_distance: Option<MinDistance>,
}

impl LinearCode {
    /// Fails unless the rows live in `F_q^n` and are linearly independent.
    pub fn new(q: u32, n: usize, parity_rows: Vec<FqVector>) -> Result<Self> {
        if !crate::math::is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        let mut basis = QuotientBasis::new(q, n);
        for (i, row) in parity_rows.iter().enumerate() {
            if row.q() != q || row.len() != n {
                return Err(Error::SpaceMismatch(row.q(), row.len(), q, n));
            }
            basis.insert(row.digits()).map_err(|_| {
                Error::Contract(format!(
                    "parity rows are linearly dependent (row {i} is in the span of the earlier rows)"
                ))
            })?;
        }
        Ok(Self {
            q,
            n,
            parity_rows,
            verified_min_distance: None,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.parity_rows.len()
    }

    pub fn dimension(&self) -> usize {
        self.n - self.s()
    }

    pub fn parity_rows(&self) -> &[FqVector] {
        &self.parity_rows
    }

    pub fn size(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.q), self.dimension())
    }

    pub fn verified_min_distance(&self) -> Option<MinDistance> {
        self.verified_min_distance
    }

    pub fn contains(&self, u: &FqVector) -> Result<bool> {
        for h in &self.parity_rows {
            if h.dot(u)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A generator matrix in systematic form: one row per information coordinate.
    fn generator(&self) -> Vec<Vec<u32>> {
        let mut basis = QuotientBasis::new(self.q, self.n);
        for row in &self.parity_rows {
            basis
                .insert(row.digits())
                .expect("rows checked independent");
        }
        // rows of the reduced check matrix are `e_lead + sum_f c_f e_f` over free columns f,
        // so the kernel is spanned by `e_f - sum_rows c_f e_lead`
        let q = self.q;
        let rows = basis.rows();
        basis
            .free_columns()
            .iter()
            .map(|&f| {
                let mut g = vec![0u32; self.n];
                g[f] = 1;
                for (row, &lead) in rows.iter().zip(basis.leads()) {
                    g[lead] = (q - row[f]) % q;
                }
                g
            })
            .collect()
    }

    /// All `q^(n-s)` codewords, refusing above `budget`.
    pub fn codewords(&self, budget: u64) -> Result<Vec<FqVector>> {
        let count = check_budget(&self.size(), budget)?;
        let gens = self.generator();
        Ok((0..count)
            .map(|i| self.combination(&gens, i as u64))
            .collect())
    }

    fn combination(&self, gens: &[Vec<u32>], mut index: u64) -> FqVector {
        let q = self.q as u64;
        let mut acc = vec![0u64; self.n];
        for g in gens.iter().rev() {
            let c = index % q;
            index /= q;
            if c != 0 {
                for (a, &x) in acc.iter_mut().zip(g) {
                    *a = (*a + c * x as u64) % q;
                }
            }
        }
        FqVector::new(self.q, acc.into_iter().map(|x| x as u32).collect())
            .expect("digits reduced mod q")
    }

    /// Exact minimum distance as the smallest nonzero codeword weight.
    pub fn min_distance(&self, budget: u64) -> Result<MinDistance> {
        let count = check_budget(&self.size(), budget)? as u64;
        if count == 1 {
            return Ok(MinDistance::Infinite);
        }
        let gens = self.generator();
        let best = (1..count)
            .into_par_iter()
            .map(|i| self.combination(&gens, i).weight())
            .min()
            .expect("at least one nonzero codeword");
        Ok(MinDistance::Finite(best))
    }

    /// Computes the minimum distance and records it on the code.
    pub fn verify(mut self, budget: u64) -> Result<Self> {
        self.verified_min_distance = Some(self.min_distance(budget)?);
        Ok(self)
    }
}

/// `true` iff every pair of the given (distinct) vectors is at distance at least `d`.
pub fn is_independent_set(params: &GraphParams, vectors: &[FqVector]) -> Result<bool> {
    for (i, u) in vectors.iter().enumerate() {
        if u.q() != params.q() || u.len() != params.n() {
            return Err(Error::SpaceMismatch(u.q(), u.len(), params.q(), params.n()));
        }
        for v in &vectors[i + 1..] {
            if u.distance(v)? < params.d() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The code built by running the descent on `params` and verifying it.
pub fn construct_and_verify(params: &GraphParams) -> Result<LinearCode> {
    crate::descent::run_algorithm1(params)?
        .code()?
        .verify(DEFAULT_BUDGET)
}
