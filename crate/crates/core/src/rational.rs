//! Exact rational scalars and their text encoding.
//!
//! Every spectral quantity in this crate is a [`Rational`]. The text form is
//! `p/q` in lowest terms with `q > 0`, or just `p` when `q = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `p/q` or `p`. The result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = BigInt::from_str(den).map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Decimal approximation of `sqrt(q)` rounded to `digits` fractional digits.
///
/// Returns `None` for negative input.
pub fn sqrt_decimal(q: &Rational, digits: usize) -> Option<String> {
    if q.is_negative() {
        return None;
    }
    // floor(sqrt(q * 10^(2(d+1)))) then round the last digit away
    let scale = BigInt::from(10u32).pow(2 * (digits as u32 + 1));
    let scaled = (q.numer() * scale).div_floor(q.denom());
    let root = scaled.magnitude().sqrt();
    let ten = BigUint::from(10u32);
    let (mut head, last) = root.div_rem(&ten);
    if last >= BigUint::from(5u32) {
        head += BigUint::one();
    }
    Some(DecimalFixed { value: head, digits }.to_string())
}

struct DecimalFixed {
    value: BigUint,
    digits: usize,
}

impl fmt::Display for DecimalFixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.value.to_string();
        if self.digits == 0 {
            return f.write_str(&s);
        }
        let padded = format!("{s:0>width$}", width = self.digits + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - self.digits);
        write!(f, "{int_part}.{frac_part}")
    }
}
