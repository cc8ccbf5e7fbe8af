//! JSON helpers for exact integers and rationals.
//!
//! Integers that fit in `i64` are written as JSON numbers, larger ones as
//! decimal strings. Readers accept either form.

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::Rational;

pub fn int_to_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => Value::from(small),
        Err(_) => Value::String(v.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| Error::Parse(format!("{n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("{s:?} is not an integer"))),
        other => Err(Error::Parse(format!("expected an integer, got {other}"))),
    }
}

/// `"num/den"`, or just `"num"` for integers.
pub fn rational_string(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Accepts `"num/den"`, an integer, or a terminating decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad rational {s:?}")));
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad rational {s:?}")));
        }
        let negative = int.starts_with('-');
        let whole = if int.is_empty() || int == "-" { BigInt::from(0) } else { parse(int)? };
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let mut frac_part = Rational::new(parse(frac)?, scale);
        if negative {
            frac_part = -frac_part;
        }
        return Ok(Rational::from_integer(whole) + frac_part);
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse(n)?, d))
        }
        None => Ok(Rational::from_integer(parse(s)?)),
    }
}
