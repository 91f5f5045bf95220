//! Thin helpers around `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^k` for a possibly negative exponent.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Returns the value as an integer when the denominator is one.
pub fn to_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(s) = v.as_str() {
        return s
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")));
    }
    Err(Error::Parse(format!("expected integer, got {v}")))
}

/// Integers that fit in `i64` are written as JSON numbers, larger ones as
/// decimal strings.
pub fn integer_json(n: &BigInt) -> Value {
    bigint_json(n)
}

pub fn integer_from_json(v: &Value) -> Result<BigInt> {
    bigint_from_json(v)
}

/// `{"num": .., "den": ..}` with a positive denominator.
pub fn rational_json(q: &Rational) -> Value {
    json!({ "num": bigint_json(q.numer()), "den": bigint_json(q.denom()) })
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let num = v.get("num").ok_or_else(|| Error::Parse(format!("missing num in {v}")))?;
    let den = v.get("den").ok_or_else(|| Error::Parse(format!("missing den in {v}")))?;
    let den = bigint_from_json(den)?;
    if den.is_zero() || den.is_negative() {
        return Err(Error::Parse(format!("denominator must be positive in {v}")));
    }
    Ok(BigRational::new(bigint_from_json(num)?, den))
}

/// Compact rendering used in text tables: `3`, `-1/2`.
pub fn render(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(6, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(20, 10), BigInt::from(184756));
    }

    #[test]
    fn signs() {
        assert_eq!(sign(0), 1);
        assert_eq!(sign(3), -1);
        assert_eq!(sign(-3), -1);
        assert_eq!(sign(-2), 1);
    }

    #[test]
    fn json_round_trip() {
        let q = frac(-6, 4);
        let v = rational_json(&q);
        assert_eq!(v, json!({"num": -3, "den": 2}));
        assert_eq!(rational_from_json(&v).unwrap(), q);
        let big = BigRational::from_integer(BigInt::from(10).pow(30));
        assert_eq!(rational_from_json(&rational_json(&big)).unwrap(), big);
        assert!(rational_from_json(&json!({"num": 1, "den": 0})).is_err());
    }
}
