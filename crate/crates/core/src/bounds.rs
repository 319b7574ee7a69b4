//! Closed-form bounds on `A_q(n,d)`, the largest size of a q-ary length-n code
//! with minimum distance `d`.
//!
//! All values are exact rationals. Lower bounds are quoted as code sizes by
//! rounding up, upper bounds by rounding down.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::descent::{run_algorithm1_with_budget, DescentTrace};
use crate::entropy::{asymptotic_gv, HighPrecision};
use crate::error::{Error, Result};
use crate::math::GraphParams;
use crate::spectrum::build_spectrum_level0;

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn q_pow(q: u32, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(q), e)
}

/// `q^n / V_q(n, d-1)`.
pub fn gv_bound(params: &GraphParams) -> BigRational {
    ratio(params.space_size().into(), params.ball())
}

/// Hoffman's ratio bound `q^n (-lambda_min) / (D - lambda_min)` with `D = V_q(n,d-1) - 1`.
pub fn hoffman_bound(params: &GraphParams, lambda_min: &BigInt) -> Result<BigRational> {
    if !lambda_min.is_negative() {
        return Err(Error::Degenerate(format!(
            "Hoffman bound needs a negative minimum eigenvalue (got {lambda_min}); {params} has no edges"
        )));
    }
    let n_vertices: BigInt = params.space_size().into();
    Ok(ratio(
        n_vertices * -lambda_min,
        params.degree() - lambda_min,
    ))
}

/// The ratio expression with denominator `D + lambda_min` in place of `D - lambda_min`,
/// reported alongside the real bound. `None` when that denominator is not positive.
pub fn hoffman_plus_form(params: &GraphParams, lambda_min: &BigInt) -> Option<BigRational> {
    let den = params.degree() + lambda_min;
    if !den.is_positive() {
        return None;
    }
    let n_vertices: BigInt = params.space_size().into();
    Some(ratio(-(n_vertices * lambda_min), den))
}

/// Wilf's lower bound `N / (D + 1 + M (lambda_min + 1) / N)` for a `D`-regular graph on
/// `N` vertices, where `M` comes from a normalized real eigenvector of `lambda_min`.
pub fn wilf_bound(
    vertices: &BigInt,
    degree: &BigInt,
    lambda_min: &BigInt,
    m: &BigInt,
) -> Result<BigRational> {
    let den = BigRational::from_integer(degree + 1) + ratio(m * (lambda_min + 1), vertices.clone());
    if !den.is_positive() {
        return Err(Error::Degenerate(format!(
            "Wilf denominator {den} is not positive"
        )));
    }
    Ok(BigRational::from_integer(vertices.clone()) / den)
}

/// `q^n / (V_q(n,d-1) + (q-1) lambda_min + q)`.
pub fn wilf_cor27_bound(params: &GraphParams, lambda_min: &BigInt) -> Result<BigRational> {
    let q = params.q();
    let den = params.ball() + lambda_min * (q - 1) + q;
    if !den.is_positive() {
        return Err(Error::Degenerate(format!(
            "denominator {den} is not positive for {params}"
        )));
    }
    Ok(ratio(params.space_size().into(), den))
}

/// `q^n / (V_q(n,d-1) + sum_{i=0}^{t} (q-1) q^i lambda_min^(i) + q^{t+1})` for the
/// minimum eigenvalues of descent levels `0..=t`. At `t = 0` this is
/// [`wilf_cor27_bound`].
pub fn descent_bound(params: &GraphParams, lambda_mins: &[i64]) -> Result<BigRational> {
    if lambda_mins.is_empty() {
        return Err(Error::InvalidParams(
            "descent bound needs at least one minimum eigenvalue".into(),
        ));
    }
    let q = params.q();
    let mut den = params.ball();
    for (i, &l) in lambda_mins.iter().enumerate() {
        den += BigInt::from(l) * (q - 1) * q_pow(q, i);
    }
    den += q_pow(q, lambda_mins.len());
    if !den.is_positive() {
        return Err(Error::Degenerate(format!(
            "denominator {den} is not positive for {params}"
        )));
    }
    Ok(ratio(params.space_size().into(), den))
}

/// Largest dimension `k` certified by a sequence `b_t >= lambda_min^(t)`.
///
/// With `D^(0) = V_q(n,d-1) - 1`, the descent degrees satisfy
/// `q^m D^(m) <= D^(0) + sum_{t<m} (q-1) q^t b_t`. Whenever
/// `V_q(n,d-1) + sum_{t<m} (q-1) q^t b_t <= q^m` the right side is below `q^m`,
/// so the integer `D^(m)` is zero and the level-m subspace is an `[n, n-m, d]_q`
/// code. Returns `n - m` for the smallest such `m <= b.len()`, or `None` if the
/// sequence is too short to certify any dimension. Terms past the stopping level
/// must be `>= 0`, the minimum eigenvalue of an edgeless level.
pub fn sufficient_dimension(params: &GraphParams, b: &[BigInt]) -> Option<usize> {
    let q = params.q();
    let mut lhs = params.ball();
    let mut qm = BigInt::one();
    for m in 0..=b.len().min(params.n()) {
        if lhs <= qm {
            return Some(params.n() - m);
        }
        if m < b.len() {
            lhs += &b[m] * (q - 1) * &qm;
            qm *= q;
        }
    }
    None
}

/// Smallest integer `>= x`.
pub fn ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// Largest integer `<= x`.
pub fn floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// Which degenerate family, if any, a parameter triple belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// `d = 1`: no edges.
    Edgeless,
    /// `d = n + 1`: every pair adjacent.
    Complete,
}

impl Degeneracy {
    pub fn of(params: &GraphParams) -> Option<Self> {
        if params.is_edgeless() {
            Some(Self::Edgeless)
        } else if params.is_complete() {
            Some(Self::Complete)
        } else {
            None
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Edgeless => "edgeless",
            Self::Complete => "complete",
        }
    }
}

/// Every bound for one parameter triple.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub params: GraphParams,
    pub degeneracy: Option<Degeneracy>,
    pub lambda_min: BigInt,
    pub gv: BigRational,
    /// Hoffman's ratio bound; the trivial `q^n` for an edgeless graph.
    pub hoffman_upper: BigRational,
    pub hoffman_plus_form: Option<BigRational>,
    pub wilf_cor27: BigRational,
    /// Descent bound after each level `t = 0..s-1`; empty when the descent did not run
    /// or `s = 0`.
    pub descent_bounds: Vec<BigRational>,
    /// `q^(n-s)` when the descent ran.
    pub constructed_code_size: Option<BigInt>,
    pub s: Option<usize>,
    /// `1 - h_q(d/n)` when `d/n < 1 - 1/q`.
    pub asymptotic_rate: Option<HighPrecision>,
    pub trace: Option<DescentTrace>,
}

impl BoundReport {
    /// Computes the closed-form bounds and, if `q^n` fits in `budget`, runs the descent.
    pub fn compute(params: &GraphParams, budget: u64) -> Result<Self> {
        let trace = match run_algorithm1_with_budget(params, budget) {
            Ok(t) => Some(t),
            Err(Error::Budget { .. }) => None,
            Err(e) => return Err(e),
        };
        Self::assemble(params, trace)
    }

    /// Builds a report from an already completed descent run (or none).
    pub fn assemble(params: &GraphParams, trace: Option<DescentTrace>) -> Result<Self> {
        let spectrum = build_spectrum_level0(params);
        let (lambda_min, _) = spectrum.min_eigenvalue();
        let gv = gv_bound(params);
        let hoffman_upper = if lambda_min.is_negative() {
            hoffman_bound(params, &lambda_min)?
        } else {
            BigRational::from_integer(params.space_size().into())
        };
        let delta = ratio(BigInt::from(params.d()), BigInt::from(params.n()));
        let asymptotic_rate = asymptotic_gv(params.q(), &delta).ok();
        let (descent_bounds, constructed_code_size, s) = match &trace {
            Some(t) => (
                t.levels().iter().map(|l| l.bound.clone()).collect(),
                Some(t.code_size()),
                Some(t.s()),
            ),
            None => (Vec::new(), None, None),
        };
        Ok(Self {
            params: *params,
            degeneracy: Degeneracy::of(params),
            hoffman_plus_form: hoffman_plus_form(params, &lambda_min),
            wilf_cor27: wilf_cor27_bound(params, &lambda_min)?,
            lambda_min,
            gv,
            hoffman_upper,
            descent_bounds,
            constructed_code_size,
            s,
            asymptotic_rate,
            trace,
        })
    }

    /// The best lower bound available: the last descent bound, else the Wilf-type bound.
    pub fn best_lower(&self) -> &BigRational {
        self.descent_bounds.last().unwrap_or(&self.wilf_cor27)
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |msg: String| Error::Parse { line: 0, msg };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| bad(format!("bad numerator {num:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| bad(format!("bad denominator {den:?}")))?;
    if den.is_zero() {
        return Err(bad("zero denominator".into()));
    }
    Ok(ratio(num, den))
}

/// Always `"p/q"`, even for integers.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// `true` when `a` divides `b`; used for the exact degree recursion.
pub(crate) fn divides(a: &BigInt, b: &BigInt) -> bool {
    b.is_multiple_of(a)
}
