//! The q-ary entropy function and the asymptotic Gilbert-Varshamov rate.
//!
//! This is the only inexact computation in the crate. It is evaluated in
//! binary floating point with a precision derived from the requested number of
//! significant decimal digits (default 50) plus guard bits, and it never feeds
//! any of the exact bounds.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::math::is_prime;

/// Significant decimal digits reported by default.
pub const DEFAULT_DIGITS: usize = 50;

const GUARD_BITS: usize = 64;
const RM: RoundingMode = RoundingMode::ToEven;

/// A real number carried at a fixed decimal precision.
#[derive(Debug, Clone)]
pub struct HighPrecision {
    value: BigFloat,
    digits: usize,
}

impl HighPrecision {
    /// Significant decimal digits this value is accurate to.
    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.value
    }

    pub fn to_f64(&self) -> f64 {
        self.to_decimal_string().parse().unwrap_or(f64::NAN)
    }

    /// Plain decimal notation rounded to `digits` significant digits.
    pub fn to_decimal_string(&self) -> String {
        if self.value.is_zero() {
            return "0".to_string();
        }
        let mut cc = Consts::new().expect("constants cache");
        let raw = self
            .value
            .format(Radix::Dec, RM, &mut cc)
            .expect("decimal formatting");
        format_significant(&raw, self.digits)
    }
}

impl std::fmt::Display for HighPrecision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

// `raw` looks like "-1.234567e-3" (astro-float scientific output).
fn format_significant(raw: &str, digits: usize) -> String {
    let (negative, body) = match raw.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, raw),
    };
    let (mantissa, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().expect("exponent")),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let mut all: Vec<u8> = int_part
        .bytes()
        .chain(frac_part.bytes())
        .map(|b| b - b'0')
        .collect();
    // decimal point sits after `point` digits of `all`
    let mut point = int_part.len() as i64 + exp;
    while all.len() > 1 && all[0] == 0 {
        all.remove(0);
        point -= 1;
    }
    if all.len() > digits {
        let round_up = all[digits] >= 5;
        all.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    all.insert(0, 1);
                    all.pop();
                    point += 1;
                    break;
                }
                i -= 1;
                if all[i] == 9 {
                    all[i] = 0;
                } else {
                    all[i] += 1;
                    break;
                }
            }
        }
    }
    while all.len() > 1 && *all.last().unwrap() == 0 && (all.len() as i64) > point {
        all.pop();
    }
    let digits_str: String = all.iter().map(|d| (d + b'0') as char).collect();
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits_str)
    } else if point as usize >= digits_str.len() {
        format!(
            "{}{}",
            digits_str,
            "0".repeat(point as usize - digits_str.len())
        )
    } else {
        let (a, b) = digits_str.split_at(point as usize);
        format!("{a}.{b}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn precision_bits(digits: usize) -> usize {
    // log2(10) < 3.33
    digits * 333 / 100 + 1 + GUARD_BITS
}

fn big_int_to_float(x: &BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&x.to_string(), Radix::Dec, p, RM, cc)
}

fn rational_to_float(x: &BigRational, p: usize, cc: &mut Consts) -> BigFloat {
    big_int_to_float(x.numer(), p, cc).div(&big_int_to_float(x.denom(), p, cc), p, RM)
}

fn check_field(q: u32) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(Error::NotPrime(q))
    }
}

/// `h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x)` with the default precision.
///
/// Defined on `0 <= x <= 1 - 1/q`; `h_q(0) = 0` by continuity.
pub fn entropy_q(q: u32, x: &BigRational) -> Result<HighPrecision> {
    entropy_q_with_digits(q, x, DEFAULT_DIGITS)
}

pub fn entropy_q_with_digits(q: u32, x: &BigRational, digits: usize) -> Result<HighPrecision> {
    check_field(q)?;
    let upper = BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(q));
    if x.is_negative() || *x > upper {
        return Err(Error::InvalidParams(format!(
            "entropy argument {x} outside [0, 1 - 1/{q}]"
        )));
    }
    let p = precision_bits(digits);
    let mut cc = Consts::new().expect("constants cache");
    if x.is_zero() {
        return Ok(HighPrecision {
            value: BigFloat::from_u8(0, p),
            digits,
        });
    }
    let xf = rational_to_float(x, p, &mut cc);
    let one_minus = rational_to_float(&(BigRational::one() - x), p, &mut cc);
    let ln_q = BigFloat::from_u32(q, p).ln(p, RM, &mut cc);
    let ln_qm1 = BigFloat::from_u32(q - 1, p).ln(p, RM, &mut cc);

    // x ln(q-1) - x ln x - (1-x) ln(1-x), all over ln q
    let mut acc = xf.mul(&ln_qm1, p, RM);
    acc = acc.sub(&xf.mul(&xf.ln(p, RM, &mut cc), p, RM), p, RM);
    acc = acc.sub(&one_minus.mul(&one_minus.ln(p, RM, &mut cc), p, RM), p, RM);
    Ok(HighPrecision {
        value: acc.div(&ln_q, p, RM),
        digits,
    })
}

/// `1 - h_q(delta)`, the asymptotic rate guaranteed by the Gilbert-Varshamov bound.
/// Requires `0 <= delta < 1 - 1/q`.
pub fn asymptotic_gv(q: u32, delta: &BigRational) -> Result<HighPrecision> {
    asymptotic_gv_with_digits(q, delta, DEFAULT_DIGITS)
}

pub fn asymptotic_gv_with_digits(
    q: u32,
    delta: &BigRational,
    digits: usize,
) -> Result<HighPrecision> {
    check_field(q)?;
    let upper = BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(q));
    if delta.is_negative() || *delta >= upper {
        return Err(Error::InvalidParams(format!(
            "relative distance {delta} outside [0, 1 - 1/{q})"
        )));
    }
    let h = entropy_q_with_digits(q, delta, digits)?;
    let p = precision_bits(digits);
    Ok(HighPrecision {
        value: BigFloat::from_u8(1, p).sub(&h.value, p, RM),
        digits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn binary_entropy_at_half_is_one() {
        let h = entropy_q(2, &r(1, 2)).unwrap();
        assert_eq!(h.to_decimal_string(), "1");
    }

    #[test]
    fn entropy_at_zero() {
        for q in [2, 3, 5, 7] {
            assert_eq!(entropy_q(q, &r(0, 1)).unwrap().to_decimal_string(), "0");
        }
    }

    #[test]
    fn entropy_quarter_matches_reference() {
        // h_2(1/4) = 2 - (3/4) log2 3, reference digits from mpmath at 80 digits
        let h = entropy_q(2, &r(1, 4)).unwrap();
        assert_eq!(
            h.to_decimal_string(),
            "0.81127812445913286390969579203913761843013919423064"
        );
    }

    #[test]
    fn entropy_domain() {
        assert!(entropy_q(2, &r(-1, 4)).is_err());
        assert!(entropy_q(3, &r(3, 4)).is_err());
        assert!(entropy_q(3, &r(2, 3)).is_ok());
        assert!(entropy_q(4, &r(1, 4)).is_err());
    }

    #[test]
    fn entropy_at_max_is_one() {
        for q in [3u32, 5, 7] {
            let x = r(q as i64 - 1, q as i64);
            let h = entropy_q(q, &x).unwrap();
            assert_eq!(h.to_decimal_string(), "1");
        }
    }

    #[test]
    fn asymptotic_rate() {
        assert_eq!(asymptotic_gv(2, &r(0, 1)).unwrap().to_decimal_string(), "1");
        let a = asymptotic_gv(2, &r(1, 4)).unwrap();
        assert_eq!(
            a.to_decimal_string(),
            "0.18872187554086713609030420796086238156986080576936"
        );
        assert!(asymptotic_gv(2, &r(1, 2)).is_err());
        let near = asymptotic_gv(2, &r(499_999, 1_000_000)).unwrap().to_f64();
        assert!(near > 0.0 && near < 1e-9);
    }

    #[test]
    fn significant_formatting() {
        assert_eq!(format_significant("1.2345e-2", 3), "0.0123");
        assert_eq!(format_significant("9.9996e0", 4), "10");
        assert_eq!(format_significant("-2.5e1", 5), "-25");
        assert_eq!(format_significant("1.0e3", 5), "1000");
    }
}
