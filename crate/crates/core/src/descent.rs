//! Spectral descent: the chain `G_0 ⊃ G_1 ⊃ ... ⊃ G_s` of induced subgraphs on
//! subspaces of `F_q^n`, ending in an edgeless graph whose vertex set is a linear
//! code of minimum distance at least `d`.
//!
//! Level `t+1` keeps the vertices of `G_t` orthogonal to the pivot `v^(t)`, the
//! smallest character attaining the minimum eigenvalue of `G_t`. The spectrum of
//! the new level is the average of `q` parent eigenvalues,
//! `lambda^(t+1)_v = (1/q) sum_r lambda^(t)_{v + r v^(t)}`, and its degree obeys
//! `D^(t+1) = (D^(t) + (q-1) lambda_min^(t)) / q`. Both divisions are exact and are
//! checked at every step.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{descent_bound, divides};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::math::{GraphParams, DEFAULT_BUDGET};
use crate::spectrum::{build_spectrum_level0, SpectrumTable};
use crate::vector::FqVector;

/// Builds the level-`t` table from the level-`t-1` table and the chosen pivot.
pub fn spectrum_descend(spectrum: &SpectrumTable, pivot: &FqVector) -> Result<SpectrumTable> {
    let params = *spectrum.params();
    let level = spectrum.level() + 1;
    if pivot.q() != params.q() || pivot.len() != params.n() {
        return Err(Error::SpaceMismatch(
            pivot.q(),
            pivot.len(),
            params.q(),
            params.n(),
        ));
    }
    let old = spectrum.basis();
    let p = old.reduce(pivot.digits());
    let mut basis = old.clone();
    basis.insert(&p).map_err(|_| Error::Invariant {
        level,
        detail: format!("pivot {pivot} lies in the span of earlier pivots"),
    })?;

    let q = params.q() as usize;
    let old_free = old.free_columns();
    // pivot digits on the old free columns; the old leading columns are already zero
    let p_free: Vec<usize> = old_free.iter().map(|&c| p[c] as usize).collect();
    let new_len = spectrum.len() / q;
    let parent = spectrum.values();

    let values: Vec<Result<i64>> = (0..new_len)
        .into_par_iter()
        .map(|j| {
            let rep = basis.representative(j);
            let base: Vec<usize> = old_free.iter().map(|&c| rep[c] as usize).collect();
            let mut sum: i64 = 0;
            for r in 0..q {
                let idx = base
                    .iter()
                    .zip(&p_free)
                    .fold(0usize, |acc, (&x, &y)| acc * q + (x + r * y) % q);
                sum += parent[idx];
            }
            if sum % q as i64 != 0 {
                return Err(Error::Invariant {
                    level,
                    detail: format!(
                        "sum {sum} of parent eigenvalues over the coset of index {j} is not divisible by {q}"
                    ),
                });
            }
            Ok(sum / q as i64)
        })
        .collect();
    let values = values.into_iter().collect::<Result<Vec<i64>>>()?;

    Ok(SpectrumTable {
        params,
        level,
        basis,
        values,
    })
}

/// The smallest character attaining the minimum eigenvalue. Fails once the level
/// is edgeless.
pub fn select_pivot(spectrum: &SpectrumTable) -> Result<FqVector> {
    let (min, v) = spectrum.min_eigenvalue();
    if min >= 0 {
        return Err(Error::Contract(format!(
            "level {} is edgeless (minimum eigenvalue {min}); the descent has terminated",
            spectrum.level()
        )));
    }
    Ok(v)
}

/// One completed level of the descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRecord {
    pub t: usize,
    pub pivot: FqVector,
    pub lambda_min: i64,
    /// `D^(t)`, the degree of `G_t`.
    pub degree: BigInt,
    /// Descent bound using `lambda_min^(0..=t)`.
    pub bound: BigRational,
}

/// Mutable state between levels.
#[derive(Debug, Clone)]
pub struct DescentState {
    params: GraphParams,
    chosen: Vec<FqVector>,
    spectrum: SpectrumTable,
    degree: BigInt,
    lambda_min_history: Vec<i64>,
    orthogonal: bool,
}

impl DescentState {
    /// Level 0; refuses when `q^n` exceeds `budget` table entries.
    pub fn new(params: &GraphParams, budget: u64) -> Result<Self> {
        let spectrum = build_spectrum_level0(params).expand(budget)?;
        Ok(Self {
            params: *params,
            chosen: Vec::new(),
            degree: BigInt::from(spectrum.degree()),
            spectrum,
            lambda_min_history: Vec::new(),
            orthogonal: true,
        })
    }

    pub fn t(&self) -> usize {
        self.chosen.len()
    }

    pub fn spectrum(&self) -> &SpectrumTable {
        &self.spectrum
    }

    pub fn degree(&self) -> &BigInt {
        &self.degree
    }

    pub fn chosen(&self) -> &[FqVector] {
        &self.chosen
    }

    pub fn is_terminated(&self) -> bool {
        self.degree.is_zero()
    }

    /// Picks the pivot at the current level and moves to the next one.
    pub fn step(&mut self) -> Result<LevelRecord> {
        let t = self.t();
        let q = self.params.q();
        let (lambda, _) = self.spectrum.min_eigenvalue();
        let pivot = select_pivot(&self.spectrum).map_err(|e| Error::Invariant {
            level: t,
            detail: e.to_string(),
        })?;
        for earlier in &self.chosen {
            if pivot.dot(earlier)? != 0 {
                self.orthogonal = false;
            }
        }
        let next = spectrum_descend(&self.spectrum, &pivot)?;

        let expected_len = self.spectrum.len() / q as usize;
        if next.len() != expected_len {
            return Err(Error::Invariant {
                level: t + 1,
                detail: format!("table has {} entries, expected {expected_len}", next.len()),
            });
        }
        let numerator = &self.degree + BigInt::from(lambda) * (q - 1);
        if !divides(&BigInt::from(q), &numerator) {
            return Err(Error::Invariant {
                level: t + 1,
                detail: format!("D + (q-1) lambda_min = {numerator} is not divisible by {q}"),
            });
        }
        let next_degree = numerator / q;
        if BigInt::from(next.degree()) != next_degree {
            return Err(Error::Invariant {
                level: t + 1,
                detail: format!(
                    "zero character has eigenvalue {} but the degree recursion gives {next_degree}",
                    next.degree()
                ),
            });
        }

        self.lambda_min_history.push(lambda);
        let record = LevelRecord {
            t,
            pivot: pivot.clone(),
            lambda_min: lambda,
            degree: self.degree.clone(),
            bound: descent_bound(&self.params, &self.lambda_min_history)?,
        };
        self.chosen.push(pivot);
        self.spectrum = next;
        self.degree = next_degree;
        Ok(record)
    }
}

/// Complete history of one descent run.
#[derive(Debug, Clone)]
pub struct DescentTrace {
    params: GraphParams,
    levels: Vec<LevelRecord>,
    pivots_orthogonal: bool,
}

impl DescentTrace {
    pub fn params(&self) -> &GraphParams {
        &self.params
    }

    pub fn levels(&self) -> &[LevelRecord] {
        &self.levels
    }

    /// Number of levels until the graph became edgeless.
    pub fn s(&self) -> usize {
        self.levels.len()
    }

    pub fn parity_rows(&self) -> Vec<FqVector> {
        self.levels.iter().map(|l| l.pivot.clone()).collect()
    }

    pub fn lambda_mins(&self) -> Vec<i64> {
        self.levels.iter().map(|l| l.lambda_min).collect()
    }

    /// `D^(0), ..., D^(s)`; the last entry is 0.
    pub fn degrees(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self.levels.iter().map(|l| l.degree.clone()).collect();
        out.push(BigInt::zero());
        out
    }

    /// Whether every pair of pivots happened to be orthogonal. Not required for
    /// correctness: any representative of the pivot's coset cuts out the same subspace.
    pub fn pivots_orthogonal(&self) -> bool {
        self.pivots_orthogonal
    }

    /// `sum_{t<s} (q-1) q^t lambda_min^(t)`.
    pub fn weighted_lambda_sum(&self) -> BigInt {
        let q = self.params.q();
        let mut qt = BigInt::from(1);
        let mut sum = BigInt::zero();
        for l in &self.levels {
            sum += BigInt::from(l.lambda_min) * (q - 1) * &qt;
            qt *= q;
        }
        sum
    }

    /// `V_q(n,d-1) + sum_{t<s} (q-1) q^t lambda_min^(t)`.
    pub fn ball_residual(&self) -> BigInt {
        self.params.ball() + self.weighted_lambda_sum()
    }

    /// `D^(0) + sum_{t<s} (q-1) q^t lambda_min^(t)`, which equals `q^s D^(s) = 0`.
    pub fn degree_residual(&self) -> BigInt {
        self.params.degree() + self.weighted_lambda_sum()
    }

    /// `q^(n-s)`.
    pub fn code_size(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.params.q()), self.params.n() - self.s())
    }

    /// Last descent bound, if any level was taken.
    pub fn final_bound(&self) -> Option<&BigRational> {
        self.levels.last().map(|l| &l.bound)
    }

    pub fn code(&self) -> Result<LinearCode> {
        LinearCode::new(self.params.q(), self.params.n(), self.parity_rows())
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row {
            t: usize,
            pivot: String,
            lambda_min: i64,
            degree: String,
            bound_numerator: String,
            bound_denominator: String,
        }
        let rows: Vec<Row> = self
            .levels
            .iter()
            .map(|l| Row {
                t: l.t,
                pivot: l.pivot.to_string(),
                lambda_min: l.lambda_min,
                degree: l.degree.to_string(),
                bound_numerator: l.bound.numer().to_string(),
                bound_denominator: l.bound.denom().to_string(),
            })
            .collect();
        serde_json::to_value(rows).expect("plain rows serialize")
    }
}

/// Runs the descent with the default table budget.
pub fn run_algorithm1(params: &GraphParams) -> Result<DescentTrace> {
    run_algorithm1_with_budget(params, DEFAULT_BUDGET)
}

/// Runs the descent until the level graph is edgeless. At most `n` levels are taken:
/// each one removes a dimension and the single-vertex level has degree 0.
pub fn run_algorithm1_with_budget(params: &GraphParams, budget: u64) -> Result<DescentTrace> {
    let mut state = DescentState::new(params, budget)?;
    let mut levels = Vec::new();
    while !state.is_terminated() {
        if state.t() >= params.n() {
            return Err(Error::Invariant {
                level: state.t(),
                detail: "descent did not terminate within n levels".into(),
            });
        }
        levels.push(state.step()?);
        log::debug!("{params} level {} degree {}", state.t(), state.degree());
    }
    let (min, _) = state.spectrum().min_eigenvalue();
    if min != 0 {
        return Err(Error::Invariant {
            level: state.t(),
            detail: format!("degree is 0 but minimum eigenvalue is {min}"),
        });
    }
    let trace = DescentTrace {
        params: *params,
        levels,
        pivots_orthogonal: state.orthogonal,
    };
    if !trace.degree_residual().is_zero() {
        return Err(Error::Invariant {
            level: trace.s(),
            detail: format!(
                "D^(0) + sum (q-1) q^t lambda_min^(t) = {} at termination",
                trace.degree_residual()
            ),
        });
    }
    Ok(trace)
}

/// Descends `level` steps (or until termination, whichever comes first) and
/// returns the spectrum there. Levels past the stopping level are rejected.
pub fn spectrum_at_level(params: &GraphParams, level: usize, budget: u64) -> Result<SpectrumTable> {
    let mut state = DescentState::new(params, budget)?;
    while state.t() < level {
        if state.is_terminated() {
            return Err(Error::InvalidParams(format!(
                "level {level} is past termination: the descent for {params} stops at level {}",
                state.t()
            )));
        }
        state.step()?;
    }
    Ok(state.spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::character_sum_oracle;
    use crate::vector::all_vectors;

    fn p(q: u32, n: usize, d: usize) -> GraphParams {
        GraphParams::new(q, n, d).unwrap()
    }

    #[test]
    fn hamming_first_level() {
        let g = p(2, 7, 3);
        let t0 = build_spectrum_level0(&g).expand(DEFAULT_BUDGET).unwrap();
        let pivot = select_pivot(&t0).unwrap();
        assert_eq!(pivot.to_string(), "0001111");
        let t1 = spectrum_descend(&t0, &pivot).unwrap();
        assert_eq!(t1.len(), 64);
        assert_eq!(t1.degree(), 12);
        assert_eq!(t1.level(), 1);
    }

    #[test]
    fn edgeless_graph_takes_no_steps() {
        let trace = run_algorithm1(&p(3, 4, 1)).unwrap();
        assert_eq!(trace.s(), 0);
        assert!(trace.parity_rows().is_empty());
        assert_eq!(trace.code_size(), BigInt::from(81));
        let t0 = build_spectrum_level0(&p(3, 4, 1))
            .expand(DEFAULT_BUDGET)
            .unwrap();
        assert!(select_pivot(&t0).is_err());
        let zero_parent = spectrum_descend(&t0, &FqVector::unit(3, 4, 3)).unwrap();
        assert!(zero_parent.values().iter().all(|&x| x == 0));
    }

    #[test]
    fn complete_graph_pivots_are_units() {
        let g = p(3, 3, 4);
        let t0 = build_spectrum_level0(&g).expand(DEFAULT_BUDGET).unwrap();
        assert_eq!(select_pivot(&t0).unwrap().to_string(), "001");
        let trace = run_algorithm1(&g).unwrap();
        assert_eq!(trace.s(), 3);
        assert!(trace.lambda_mins().iter().all(|&l| l == -1));
        assert_eq!(trace.code_size(), BigInt::from(1));
    }

    #[test]
    fn degree_recursion_and_terminal_identity() {
        for (q, n, d) in [(2, 7, 3), (2, 9, 4), (3, 5, 3), (5, 3, 2)] {
            let g = p(q, n, d);
            let trace = run_algorithm1(&g).unwrap();
            let degrees = trace.degrees();
            assert_eq!(degrees[0], g.degree());
            for (l, next) in trace.levels().iter().zip(&degrees[1..]) {
                assert_eq!(
                    BigInt::from(q) * next,
                    &l.degree + BigInt::from(l.lambda_min) * (q - 1)
                );
            }
            assert!(trace.degree_residual().is_zero());
            assert_eq!(trace.ball_residual(), BigInt::from(1));
            let bounds: Vec<_> = trace.levels().iter().map(|l| l.bound.clone()).collect();
            assert!(bounds.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn level_tables_match_character_sums() {
        let g = p(3, 4, 3);
        let mut state = DescentState::new(&g, DEFAULT_BUDGET).unwrap();
        while !state.is_terminated() {
            state.step().unwrap();
            let kernel: Vec<FqVector> = all_vectors(3, 4)
                .filter(|u| state.chosen().iter().all(|v| u.dot(v).unwrap() == 0))
                .collect();
            let diff: Vec<FqVector> = kernel
                .iter()
                .filter(|u| (1..=2).contains(&u.weight()))
                .cloned()
                .collect();
            for (v, x) in state.spectrum().entries() {
                assert_eq!(character_sum_oracle(&diff, &v).unwrap(), BigInt::from(x));
            }
        }
    }

    #[test]
    fn spectrum_at_level_limits() {
        let g = p(2, 7, 3);
        let s = run_algorithm1(&g).unwrap().s();
        assert_eq!(
            spectrum_at_level(&g, 1, DEFAULT_BUDGET).unwrap().degree(),
            12
        );
        assert!(spectrum_at_level(&g, s, DEFAULT_BUDGET).is_ok());
        assert!(spectrum_at_level(&g, s + 1, DEFAULT_BUDGET).is_err());
        assert!(matches!(
            spectrum_at_level(&g, 0, 100),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn pivot_in_span_is_rejected() {
        let g = p(2, 4, 3);
        let t0 = build_spectrum_level0(&g).expand(DEFAULT_BUDGET).unwrap();
        let v = FqVector::parse(2, "0011").unwrap();
        let t1 = spectrum_descend(&t0, &v).unwrap();
        assert!(matches!(
            spectrum_descend(&t1, &v),
            Err(Error::Invariant { level: 2, .. })
        ));
    }
}
