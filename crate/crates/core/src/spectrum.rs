//! Spectra of Gilbert graphs and of the induced subgraphs visited by the descent.
//!
//! `G_{q,n,d}` is the Cayley graph on `(F_q^n, +)` with difference set
//! `S = {u : 1 <= w(u) <= d-1}`. Its eigenvectors are the characters
//! `u -> z^<u,v>`, and the eigenvalue of character `v` is
//! `K_{d-1}(w(v)-1; n-1, q) - 1` for `v != 0` and the degree `V_q(n,d-1) - 1` for `v = 0`.
//!
//! At level 0 the eigenvalue depends only on the weight, so [`WeightSpectrum`]
//! stores one entry per weight. The descent needs per-character values on a
//! quotient space; [`SpectrumTable`] holds those densely, keyed by canonical coset
//! representatives (see [`QuotientBasis`]).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::math::{binomial, check_budget, krawtchouk, GraphParams};
use crate::vector::{inverse_mod, FqVector};

/// Eigenvalue of any character of weight `weight` on `G_{q,n,d}`.
pub fn eigenvalue_level0(params: &GraphParams, weight: usize) -> Result<BigInt> {
    let n = params.n();
    if weight > n {
        return Err(Error::OutOfRange {
            what: "weight",
            value: weight as i64,
            lo: 0,
            hi: n as i64,
        });
    }
    if weight == 0 {
        return Ok(params.degree());
    }
    Ok(krawtchouk(params.d() - 1, weight - 1, n - 1, params.q())? - 1)
}

/// Level-0 spectrum stored by weight, with multiplicities `C(n,w)(q-1)^w`.
#[derive(Debug, Clone)]
pub struct WeightSpectrum {
    params: GraphParams,
    eigenvalues: Vec<BigInt>,
    multiplicities: Vec<BigInt>,
}

pub fn build_spectrum_level0(params: &GraphParams) -> WeightSpectrum {
    let n = params.n();
    let qm1 = BigInt::from(params.q() - 1);
    let eigenvalues = (0..=n)
        .map(|w| eigenvalue_level0(params, w).expect("weight in range"))
        .collect();
    let multiplicities = (0..=n)
        .map(|w| binomial(n as u64, w as u64) * num_traits::pow(qm1.clone(), w))
        .collect();
    WeightSpectrum {
        params: *params,
        eigenvalues,
        multiplicities,
    }
}

impl WeightSpectrum {
    pub fn params(&self) -> &GraphParams {
        &self.params
    }

    pub fn eigenvalue(&self, weight: usize) -> &BigInt {
        &self.eigenvalues[weight]
    }

    pub fn multiplicity(&self, weight: usize) -> &BigInt {
        &self.multiplicities[weight]
    }

    /// `(weight, eigenvalue, multiplicity)` for weights `0..=n`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &BigInt, &BigInt)> {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .enumerate()
            .map(|(w, (e, m))| (w, e, m))
    }

    pub fn degree(&self) -> &BigInt {
        &self.eigenvalues[0]
    }

    /// Sum of all eigenvalues with multiplicity (trace of the adjacency matrix).
    pub fn trace(&self) -> BigInt {
        self.rows().map(|(_, e, m)| e * m).sum()
    }

    /// Sum of squared eigenvalues with multiplicity (trace of `A^2`).
    pub fn trace_of_square(&self) -> BigInt {
        self.rows().map(|(_, e, m)| e * e * m).sum()
    }

    /// Minimum eigenvalue together with the smallest nonzero vector attaining it.
    ///
    /// The smallest vector of weight `w` has its `w` ones in the last positions,
    /// so the lightest minimizing weight wins.
    pub fn min_eigenvalue(&self) -> (BigInt, FqVector) {
        let n = self.params.n();
        let min = self.eigenvalues.iter().min().expect("nonempty").clone();
        let w = (1..=n)
            .find(|&w| self.eigenvalues[w] == min)
            .expect("zero character carries the maximum");
        let positions: Vec<usize> = (n - w..n).collect();
        (min, FqVector::indicator(self.params.q(), n, &positions))
    }

    /// Materializes the dense per-character table, subject to `budget` entries.
    pub fn expand(&self, budget: u64) -> Result<SpectrumTable> {
        let len = check_budget(&self.params.space_size(), budget)?;
        let by_weight: Vec<i64> = self
            .eigenvalues
            .iter()
            .map(|e| {
                e.to_i64().ok_or_else(|| {
                    Error::Contract(format!("eigenvalue {e} does not fit a machine word"))
                })
            })
            .collect::<Result<_>>()?;
        let q = self.params.q() as usize;
        let values: Vec<i64> = (0..len)
            .into_par_iter()
            .map(|mut i| {
                let mut w = 0;
                while i > 0 {
                    if i % q != 0 {
                        w += 1;
                    }
                    i /= q;
                }
                by_weight[w]
            })
            .collect();
        Ok(SpectrumTable {
            params: self.params,
            level: 0,
            basis: QuotientBasis::new(self.params.q(), self.params.n()),
            values,
        })
    }
}

/// Row-reduced basis of the span of the chosen pivots, used to index the
/// quotient `F_q^n / span(pivots)`.
///
/// Each row is monic at its leading column and zero at every other row's
/// leading column. Reducing a vector clears the leading columns; the result is
/// the smallest vector of its coset under the most-significant-first order, and
/// its digits on the remaining (free) columns give the table index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    q: u32,
    n: usize,
    rows: Vec<Vec<u32>>,
    leads: Vec<usize>,
    free: Vec<usize>,
}

impl QuotientBasis {
    pub fn new(q: u32, n: usize) -> Self {
        Self {
            q,
            n,
            rows: Vec::new(),
            leads: Vec::new(),
            free: (0..n).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduced rows; each is 1 at its own leading column and 0 at the others.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn leads(&self) -> &[usize] {
        &self.leads
    }

    /// Columns not used as leading positions, in increasing order.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Canonical (smallest) representative of the coset of `v`.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let q = self.q as u64;
        let mut out = v.to_vec();
        for (row, &lead) in self.rows.iter().zip(&self.leads) {
            let c = out[lead] as u64;
            if c == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = ((*o as u64 + (q - c) * r as u64) % q) as u32;
            }
        }
        out
    }

    /// Table index of a canonical representative.
    pub fn index_of(&self, canonical: &[u32]) -> usize {
        self.free.iter().fold(0usize, |acc, &c| {
            acc * self.q as usize + canonical[c] as usize
        })
    }

    /// Canonical representative with the given table index.
    pub fn representative(&self, mut index: usize) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for &c in self.free.iter().rev() {
            out[c] = (index % self.q as usize) as u32;
            index /= self.q as usize;
        }
        out
    }

    /// Adds a vector outside the current span. Returns its leading column.
    pub(crate) fn insert(&mut self, v: &[u32]) -> Result<usize> {
        let q = self.q as u64;
        let reduced = self.reduce(v);
        let lead = reduced
            .iter()
            .position(|&x| x != 0)
            .ok_or_else(|| Error::Contract("pivot lies in the span of earlier pivots".into()))?;
        let inv = inverse_mod(reduced[lead], self.q) as u64;
        let row: Vec<u32> = reduced
            .iter()
            .map(|&x| (x as u64 * inv % q) as u32)
            .collect();
        for existing in &mut self.rows {
            let c = existing[lead] as u64;
            if c == 0 {
                continue;
            }
            for (e, &r) in existing.iter_mut().zip(&row) {
                *e = ((*e as u64 + (q - c) * r as u64) % q) as u32;
            }
        }
        self.rows.push(row);
        self.leads.push(lead);
        self.free.retain(|&c| c != lead);
        Ok(lead)
    }
}

/// Exact eigenvalues of one descent-level graph `G_t`, indexed by canonical
/// coset representatives of `F_q^n / span(v^(0), ..., v^(t-1))` in increasing order.
///
/// Entry 0 (the zero character) is the degree of `G_t`.
#[derive(Debug, Clone)]
pub struct SpectrumTable {
    pub(crate) params: GraphParams,
    pub(crate) level: usize,
    pub(crate) basis: QuotientBasis,
    pub(crate) values: Vec<i64>,
}

impl SpectrumTable {
    pub fn params(&self) -> &GraphParams {
        &self.params
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn degree(&self) -> i64 {
        self.values[0]
    }

    pub fn representative(&self, index: usize) -> FqVector {
        FqVector::new(self.params.q(), self.basis.representative(index)).expect("digits below q")
    }

    /// Eigenvalue of the character `v`, which may be any member of its coset.
    pub fn eigenvalue_of(&self, v: &FqVector) -> Result<i64> {
        if v.q() != self.params.q() || v.len() != self.params.n() {
            return Err(Error::SpaceMismatch(
                v.q(),
                v.len(),
                self.params.q(),
                self.params.n(),
            ));
        }
        let rep = self.basis.reduce(v.digits());
        Ok(self.values[self.basis.index_of(&rep)])
    }

    /// `(canonical representative, eigenvalue)` in increasing representative order.
    pub fn entries(&self) -> impl Iterator<Item = (FqVector, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &x)| (self.representative(i), x))
    }

    pub fn trace(&self) -> BigInt {
        BigInt::from(self.values.par_iter().map(|&x| x as i128).sum::<i128>())
    }

    pub fn trace_of_square(&self) -> BigInt {
        self.values
            .par_iter()
            .map(|&x| BigInt::from(x as i128 * x as i128))
            .reduce(BigInt::zero, |a, b| a + b)
    }

    /// Minimum eigenvalue and the smallest nonzero character attaining it.
    /// A single-entry table returns the zero character.
    pub fn min_eigenvalue(&self) -> (i64, FqVector) {
        let min = *self.values.iter().min().expect("nonempty table");
        let index = if self.values.len() == 1 {
            0
        } else {
            1 + self.values[1..]
                .iter()
                .position(|&x| x == min)
                .expect("zero character carries the maximum")
        };
        (min, self.representative(index))
    }
}

/// Free-function form of [`SpectrumTable::min_eigenvalue`].
pub fn min_eigenvalue(table: &SpectrumTable) -> (i64, FqVector) {
    table.min_eigenvalue()
}

/// Evaluates `sum_{u in S} z^<u,v>` for `z = exp(2 pi i / q)` without complex arithmetic.
///
/// For `S` closed under multiplication by nonzero scalars, the residue counts
/// `c_r = |{u in S : <u,v> = r}|` agree for every `r != 0`, and the sum equals
/// `c_0 - c_1`. Unequal counts are reported as a contract violation.
pub fn character_sum_oracle<'a, I>(difference_set: I, v: &FqVector) -> Result<BigInt>
where
    I: IntoIterator<Item = &'a FqVector>,
{
    let q = v.q() as usize;
    let mut counts = vec![0u64; q];
    for u in difference_set {
        counts[u.dot(v)? as usize] += 1;
    }
    if q > 1 && counts[1..].iter().any(|&c| c != counts[1]) {
        return Err(Error::Contract(format!(
            "residue counts {:?} are not constant on nonzero residues; difference set is not closed under scaling",
            counts
        )));
    }
    let off = if q > 1 { counts[1] } else { 0 };
    Ok(BigInt::from(counts[0]) - BigInt::from(off))
}

/// The real eigenvector `b_A = sum_{j=1}^{q-1} a_{j 1_A}`: entry `q-1` where
/// `<u, 1_A> = 0` and `-1` elsewhere. Its eigenvalue is that of weight `|A|`.
#[derive(Debug, Clone)]
pub struct RealEigenvector {
    params: GraphParams,
    support: Vec<usize>,
    indicator: FqVector,
    eigenvalue: BigInt,
}

/// Builds `b_A` for a nonempty set of 0-based positions `support`.
pub fn real_eigenvector(params: &GraphParams, support: &[usize]) -> Result<RealEigenvector> {
    if support.is_empty() {
        return Err(Error::InvalidParams("support set must be nonempty".into()));
    }
    let mut support = support.to_vec();
    support.sort_unstable();
    support.dedup();
    if let Some(&bad) = support.iter().find(|&&i| i >= params.n()) {
        return Err(Error::OutOfRange {
            what: "support position",
            value: bad as i64,
            lo: 0,
            hi: params.n() as i64 - 1,
        });
    }
    let indicator = FqVector::indicator(params.q(), params.n(), &support);
    let eigenvalue = eigenvalue_level0(params, support.len())?;
    Ok(RealEigenvector {
        params: *params,
        support,
        indicator,
        eigenvalue,
    })
}

impl RealEigenvector {
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn eigenvalue(&self) -> &BigInt {
        &self.eigenvalue
    }

    pub fn entry(&self, u: &FqVector) -> Result<i64> {
        Ok(if self.indicator.dot(u)? == 0 {
            self.params.q() as i64 - 1
        } else {
            -1
        })
    }

    /// All `q^n` entries in increasing vertex order.
    pub fn entries(&self, budget: u64) -> Result<Vec<i64>> {
        let len = check_budget(&self.params.space_size(), budget)?;
        let (q, n) = (self.params.q(), self.params.n());
        (0..len as u64)
            .map(|i| self.entry(&FqVector::from_index(q, n, i)))
            .collect()
    }

    /// `q^n (q-1)`, the squared Euclidean norm.
    pub fn squared_norm(&self) -> BigInt {
        BigInt::from(self.params.space_size()) * (self.params.q() - 1)
    }

    /// `M = max(M_+^2, M_-^2)` for the normalized vector, which equals the squared norm.
    pub fn wilf_m(&self) -> BigInt {
        let sq = self.squared_norm();
        let qm1 = BigInt::from(self.params.q() - 1);
        // M_+ = ||b|| / (q-1), M_- = ||b||, so max of squares is ||b||^2
        let plus = &sq / (&qm1 * &qm1);
        if plus > sq {
            plus
        } else {
            sq
        }
    }
}

/// `true` when a weight spectrum satisfies `sum m_w = q^n`.
pub fn multiplicities_partition_space(spectrum: &WeightSpectrum) -> bool {
    let total: BigInt = spectrum.multiplicities.iter().sum();
    total == BigInt::from(spectrum.params.space_size())
}
