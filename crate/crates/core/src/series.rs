//! Truncated formal power series `c_0 + c_1 z + … + c_N z^N` over a
//! commutative coefficient ring.
//!
//! Arithmetic is exact modulo `z^{N+1}`. `exp` and `log` need division by
//! integers, which every [`Ring`] here provides through [`Ring::scale`].

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{int, rational_from_json, rational_json, render, Rational};
use crate::symfunc::PowerPoly;

/// Commutative ring that is also a `Q`-vector space.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: &Rational) -> Self;
    /// Multiplicative inverse, when one exists.
    fn inverse(&self) -> Option<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Human-readable form used by `Debug` on series.
    fn render(&self) -> String;

    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Rational) -> Self {
        self * s
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn render(&self) -> String {
        render(self)
    }
    fn to_json(&self) -> Value {
        rational_json(self)
    }
    fn from_json(value: &Value) -> Result<Self> {
        rational_from_json(value)
    }
}

impl Ring for PowerPoly {
    fn zero() -> Self {
        PowerPoly::zero()
    }
    fn one() -> Self {
        PowerPoly::one()
    }
    fn is_zero(&self) -> bool {
        PowerPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        PowerPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        PowerPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        PowerPoly::mul(self, other)
    }
    fn scale(&self, s: &Rational) -> Self {
        PowerPoly::scale(self, s)
    }
    fn inverse(&self) -> Option<Self> {
        // only nonzero constants are units in a polynomial ring
        if self.len() == 1 && self.degree() == Some(0) {
            Some(PowerPoly::constant(self.constant_term().recip()))
        } else {
            None
        }
    }
    fn render(&self) -> String {
        format!("{self:?}")
    }
    fn to_json(&self) -> Value {
        PowerPoly::to_json(self)
    }
    fn from_json(value: &Value) -> Result<Self> {
        PowerPoly::from_json(value)
    }
}

/// A power series known modulo `z^{order+1}`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads with zeros or drops coefficients beyond `order`.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    /// `c_k = f(k)` for `k = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Re-truncates to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect() }
    }

    /// Multiplies every coefficient by the same ring element.
    pub fn scale_by(&self, r: &R) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c.mul(r)).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// `f(z) ↦ f(c z)` for a rational `c`; `c = -1` gives `f(-z)`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        let mut power = <Rational as One>::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&power));
            power *= c;
        }
        TruncatedSeries { coeffs }
    }

    /// `f(z) ↦ f(z^k)`, kept at the same order.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if i * k > n {
                break;
            }
            out.coeffs[i * k] = a.clone();
        }
        out
    }

    /// Formal derivative; the result has order `N - 1`.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            coeffs: (1..=n).map(|k| self.coeffs[k].scale(&int(k as i64))).collect(),
        }
    }

    /// Formal antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&(<Rational as One>::one() / int(k as i64 + 1)))),
        );
        TruncatedSeries { coeffs }
    }

    /// Formal exponential; requires `c_0 = 0`.
    ///
    /// Uses `n b_n = Σ_{k=1}^n k a_k b_{n-k}`, which follows from `b' = a' b`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp requires a zero constant term".into()));
        }
        let n = self.order();
        let mut b = vec![R::one()];
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&b[m - k]).scale(&int(k as i64)));
            }
            b.push(acc.scale(&(<Rational as One>::one() / int(m as i64))));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Formal logarithm; requires `c_0 = 1`.
    ///
    /// Uses `n l_n = n a_n - Σ_{k=1}^{n-1} k l_k a_{n-k}`, from `a l' = a'`.
    #[allow(clippy::needless_range_loop)]
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != R::one() {
            return Err(Error::Precondition("log requires constant term 1".into()));
        }
        let n = self.order();
        let mut l = vec![R::zero()];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&int(m as i64));
            for k in 1..m {
                if l[k].is_zero() || self.coeffs[m - k].is_zero() {
                    continue;
                }
                acc = acc.sub(&l[k].mul(&self.coeffs[m - k]).scale(&int(k as i64)));
            }
            l.push(acc.scale(&(<Rational as One>::one() / int(m as i64))));
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut b = vec![inv0.clone()];
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&b[m - k]));
                }
            }
            b.push(acc.mul(&inv0).neg());
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn int_pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(R::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let order = value
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("series without order header".into()))? as usize;
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("series without coeffs".into()))?;
        if coeffs.len() != order + 1 {
            return Err(Error::Parse(format!(
                "order {order} needs {} coefficients, found {}",
                order + 1,
                coeffs.len()
            )));
        }
        Ok(TruncatedSeries { coeffs: coeffs.iter().map(R::from_json).collect::<Result<_>>()? })
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})z^{k}", c.render())?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// `Σ_{n≥1} (sign)^{n-1} p_n z^n / n`, the exponent producing `H(z)` when
/// `alternating` is false and `E(z)` when it is true.
pub fn newton_exponent(order: usize, alternating: bool) -> TruncatedSeries<PowerPoly> {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            return PowerPoly::zero();
        }
        let sign = if alternating && n % 2 == 0 { -1 } else { 1 };
        PowerPoly::generator(n as u32).scale(&(int(sign) / int(n as i64)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn q(coeffs: &[i64], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    #[test]
    fn difference_of_squares() {
        let a = q(&[1, 1], 4);
        let b = q(&[1, -1], 4);
        assert_eq!(a.mul(&b).unwrap(), q(&[1, 0, -1], 4));
        assert!(a.mul(&TruncatedSeries::zero(4)).unwrap().is_zero());
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = q(&[1], 3);
        let b = q(&[1], 4);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch { left: 3, right: 4 }));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn exp_of_log_one_plus_z() {
        let a = q(&[1, 1], 20);
        let back = a.log().unwrap().exp().unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn log_of_one_plus_z_coefficients() {
        let l = q(&[1, 1], 6).log().unwrap();
        let want: Vec<Rational> = (0..=6)
            .map(|n| if n == 0 { int(0) } else { frac(if n % 2 == 1 { 1 } else { -1 }, n) })
            .collect();
        assert_eq!(l.coeffs(), &want[..]);
    }

    #[test]
    fn preconditions() {
        assert!(q(&[1, 1], 3).exp().is_err());
        assert!(q(&[2, 1], 3).log().is_err());
        assert_eq!(q(&[0, 1], 3).inverse(), Err(Error::NotInvertible));
        assert_eq!(q(&[0, 1], 3).int_pow(-1), Err(Error::NotInvertible));
    }

    #[test]
    fn powers() {
        // (1 - z^2)^2 = 1 - 2z^2 + z^4
        assert_eq!(q(&[1, 0, -1], 6).int_pow(2).unwrap(), q(&[1, 0, -2, 0, 1], 6));
        // (1 + z^2)^{-1} = 1 - z^2 + z^4 - z^6
        let inv = q(&[1, 0, 1], 7).int_pow(-1).unwrap();
        assert_eq!(inv, q(&[1, 0, -1, 0, 1, 0, -1], 7));
        assert_eq!(inv.mul(&q(&[1, 0, 1], 7)).unwrap(), q(&[1], 7));
        assert_eq!(q(&[3, 5], 4).int_pow(0).unwrap(), q(&[1], 4));
    }

    #[test]
    fn derivative_drops_order() {
        let d = q(&[1, 2, 3], 2).derivative();
        assert_eq!(d.order(), 1);
        assert_eq!(d, q(&[2, 6], 1));
        assert_eq!(q(&[2, 6], 1).integral(), q(&[0, 2, 3], 2));
    }

    #[test]
    fn variable_substitutions() {
        let a = q(&[1, 1, 1, 1], 3);
        assert_eq!(a.rescale_variable(&int(-1)), q(&[1, -1, 1, -1], 3));
        assert_eq!(a.substitute_power(2), q(&[1, 0, 1], 3));
    }

    #[test]
    fn json_round_trip() {
        let a = TruncatedSeries::from_coeffs(vec![int(1), frac(-1, 2)], 2);
        let v = a.to_json();
        assert_eq!(v["order"], 2);
        assert_eq!(TruncatedSeries::<Rational>::from_json(&v).unwrap(), a);
        let bad = json!({"order": 3, "coeffs": []});
        assert!(TruncatedSeries::<Rational>::from_json(&bad).is_err());
    }

    #[test]
    fn power_poly_units() {
        assert_eq!(Ring::inverse(&PowerPoly::constant(int(2))), Some(PowerPoly::constant(frac(1, 2))));
        assert_eq!(Ring::inverse(&PowerPoly::generator(1)), None);
    }
}
