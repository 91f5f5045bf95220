//! The ring Λ of symmetric functions over the rationals.
//!
//! Elements carry one of five bases (monomial, elementary, complete,
//! power-sum, Schur). Changes of basis route through the power-sum basis,
//! where Λ is a free polynomial algebra; the per-degree transition tables are
//! built on first use and held by a [`SymContext`].

mod lr;
mod oracle;
mod pieri;
mod power;
mod transition;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{rational_from_json, rational_json, render, Rational};

pub use lr::{lr_coefficient, lr_product};
pub use oracle::{oracle_basis_element, oracle_expand, Poly};
pub use pieri::{multiply_p, pieri_targets};
pub use power::PowerPoly;
pub use transition::Transition;

/// Default cap on the degree handled by change-of-basis routines.
pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Elementary,
    Complete,
    Power,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::Complete,
        Basis::Power,
        Basis::Schur,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Complete => "h",
            Basis::Power => "p",
            Basis::Schur => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::Monomial),
            "e" => Ok(Basis::Elementary),
            "h" => Ok(Basis::Complete),
            "p" => Ok(Basis::Power),
            "s" => Ok(Basis::Schur),
            other => Err(Error::Parse(format!("unknown basis tag {other:?}"))),
        }
    }
}

/// A finite rational combination of basis elements `b_λ`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, Rational::one());
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(basis: Basis, terms: I) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    /// `e_n`, `h_n`, `p_n` or `s_(n)` as single basis elements.
    pub fn single(basis: Basis, n: u32) -> Self {
        Self::basis_element(basis, Partition::row(n))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Rational> {
        self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut weights = self.terms.keys().map(Partition::weight);
        match weights.next() {
            None => true,
            Some(w) => weights.all(|v| v == w),
        }
    }

    pub fn homogeneous_part(&self, n: usize) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms
                .iter()
                .filter(|(l, _)| l.weight() == n)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch { left: self.basis.tag(), right: basis.tag() })
        }
    }

    /// Sum of two elements written in the same basis.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        other.expect_basis(self.basis)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, c)| (l.clone(), c * s)))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let mut obj = rational_json(c);
                obj["partition"] = l.to_json();
                obj
            })
            .collect();
        json!({ "basis": self.basis.tag(), "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<SymFunc> {
        let basis: Basis = value
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing basis tag".into()))?
            .parse()?;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing terms array".into()))?;
        let mut f = SymFunc::zero(basis);
        for t in terms {
            let lambda = Partition::from_json(
                t.get("partition").ok_or_else(|| Error::Parse(format!("term without partition: {t}")))?,
            )?;
            f.add_term(lambda, rational_from_json(t)?);
        }
        Ok(f)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if l.is_empty() {
                f.write_str(&render(c))?;
            } else {
                write!(f, "{}·{}{}", render(c), self.basis.tag(), l)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree cap plus lazily built change-of-basis tables.
///
/// Tables are computed at most once per degree and are never mutated
/// afterwards, so a context can be shared across threads.
pub struct SymContext {
    cap: usize,
    tables: Vec<OnceLock<Transition>>,
}

impl Default for SymContext {
    fn default() -> Self {
        Self::new(DEFAULT_DEGREE_CAP)
    }
}

impl fmt::Debug for SymContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymContext").field("cap", &self.cap).finish()
    }
}

impl SymContext {
    pub fn new(cap: usize) -> Self {
        SymContext { cap, tables: (0..=cap).map(|_| OnceLock::new()).collect() }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.cap {
            Err(Error::DegreeCapExceeded { degree, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Transition tables for the graded piece of degree `n`.
    pub fn transition(&self, n: usize) -> Result<&Transition> {
        self.check_degree(n)?;
        Ok(self.tables[n].get_or_init(|| Transition::build(n)))
    }

    /// Expands `f` in the power-sum basis.
    pub fn to_power(&self, f: &SymFunc) -> Result<PowerPoly> {
        if let Some(d) = f.degree() {
            self.check_degree(d)?;
        }
        if f.basis == Basis::Power {
            return Ok(PowerPoly::from_terms(f.terms.clone()));
        }
        let mut out = PowerPoly::zero();
        for (lambda, c) in &f.terms {
            let row = self.transition(lambda.weight())?.to_power(f.basis, lambda);
            for (mu, d) in row.terms() {
                out.add_term(mu.clone(), c * d);
            }
        }
        Ok(out)
    }

    /// Rewrites a power-sum expansion in `target`.
    pub fn from_power(&self, f: &PowerPoly, target: Basis) -> Result<SymFunc> {
        if let Some(d) = f.degree() {
            self.check_degree(d)?;
        }
        if target == Basis::Power {
            return Ok(f.to_symfunc());
        }
        let mut out = SymFunc::zero(target);
        for (mu, c) in f.terms() {
            let row = self.transition(mu.weight())?.from_power(target, mu);
            for (lambda, d) in row.terms() {
                out.add_term(lambda.clone(), c * d);
            }
        }
        Ok(out)
    }

    /// Exact change of basis.
    pub fn convert(&self, f: &SymFunc, target: Basis) -> Result<SymFunc> {
        if f.basis == target {
            if let Some(d) = f.degree() {
                self.check_degree(d)?;
            }
            return Ok(f.clone());
        }
        let p = self.to_power(f)?;
        self.from_power(&p, target)
    }

    /// Product computed in the power-sum basis; the result is written in the
    /// basis of `f`.
    pub fn multiply(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
        if f.is_zero() || g.is_zero() {
            return Ok(SymFunc::zero(f.basis));
        }
        self.check_degree(df + dg)?;
        let prod = self.to_power(f)?.mul(&self.to_power(g)?);
        self.from_power(&prod, f.basis)
    }

    /// The basis element `b_λ` of `basis`, expanded in `target`.
    pub fn expand_basis_element(&self, basis: Basis, lambda: &Partition, target: Basis) -> Result<SymFunc> {
        self.convert(&SymFunc::basis_element(basis, lambda.clone()), target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use crate::rational::int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sf(basis: Basis, terms: &[(&[u32], i64)]) -> SymFunc {
        SymFunc::from_terms(basis, terms.iter().map(|(l, c)| (p(l), int(*c))))
    }

    #[test]
    fn e2_and_h2_in_monomials() {
        let ctx = SymContext::default();
        let e2 = ctx.convert(&SymFunc::single(Basis::Elementary, 2), Basis::Monomial).unwrap();
        assert_eq!(e2, sf(Basis::Monomial, &[(&[1, 1], 1)]));
        let h2 = ctx.convert(&SymFunc::single(Basis::Complete, 2), Basis::Monomial).unwrap();
        assert_eq!(h2, sf(Basis::Monomial, &[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn newton_identity_p2() {
        let ctx = SymContext::default();
        let p2 = ctx.convert(&SymFunc::single(Basis::Power, 2), Basis::Elementary).unwrap();
        assert_eq!(p2, sf(Basis::Elementary, &[(&[1, 1], 1), (&[2], -2)]));
    }

    #[test]
    fn e_n_is_m_of_column_and_h_n_sums_monomials() {
        let ctx = SymContext::default();
        for n in 0..=8u32 {
            let e = ctx.convert(&SymFunc::single(Basis::Elementary, n), Basis::Monomial).unwrap();
            assert_eq!(e, SymFunc::basis_element(Basis::Monomial, Partition::column(n)));
            let h = ctx.convert(&SymFunc::single(Basis::Complete, n), Basis::Monomial).unwrap();
            let all = SymFunc::from_terms(
                Basis::Monomial,
                enumerate_partitions(n as usize).into_iter().map(|l| (l, int(1))),
            );
            assert_eq!(h, all);
        }
    }

    #[test]
    fn schur_special_cases() {
        let ctx = SymContext::default();
        for n in 1..=7u32 {
            let s_row = ctx.convert(&SymFunc::single(Basis::Schur, n), Basis::Complete).unwrap();
            assert_eq!(s_row, SymFunc::single(Basis::Complete, n));
            let s_col = SymFunc::basis_element(Basis::Schur, Partition::column(n));
            assert_eq!(ctx.convert(&s_col, Basis::Elementary).unwrap(), SymFunc::single(Basis::Elementary, n));
        }
        // s_(2,1) = m_(2,1) + 2 m_(1,1,1)
        let s21 = ctx.convert(&sf(Basis::Schur, &[(&[2, 1], 1)]), Basis::Monomial).unwrap();
        assert_eq!(s21, sf(Basis::Monomial, &[(&[2, 1], 1), (&[1, 1, 1], 2)]));
    }

    #[test]
    fn products() {
        let ctx = SymContext::default();
        let m1 = SymFunc::single(Basis::Monomial, 1);
        assert_eq!(ctx.multiply(&m1, &m1).unwrap(), sf(Basis::Monomial, &[(&[2], 1), (&[1, 1], 2)]));
        let e1 = SymFunc::single(Basis::Elementary, 1);
        assert_eq!(ctx.multiply(&e1, &e1).unwrap(), sf(Basis::Elementary, &[(&[1, 1], 1)]));
        let s1 = SymFunc::single(Basis::Schur, 1);
        assert_eq!(ctx.multiply(&s1, &s1).unwrap(), sf(Basis::Schur, &[(&[2], 1), (&[1, 1], 1)]));
        let zero = SymFunc::zero(Basis::Schur);
        assert!(ctx.multiply(&s1, &zero).unwrap().is_zero());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let ctx = SymContext::new(4);
        let e5 = SymFunc::single(Basis::Elementary, 5);
        assert_eq!(
            ctx.convert(&e5, Basis::Monomial),
            Err(Error::DegreeCapExceeded { degree: 5, cap: 4 })
        );
        let e3 = SymFunc::single(Basis::Elementary, 3);
        assert!(matches!(ctx.multiply(&e3, &e3), Err(Error::DegreeCapExceeded { degree: 6, .. })));
    }

    #[test]
    fn mixed_basis_addition_is_rejected() {
        let a = SymFunc::single(Basis::Elementary, 1);
        let b = SymFunc::single(Basis::Complete, 1);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn json_shape() {
        let f = SymFunc::from_terms(Basis::Schur, [(p(&[2, 1]), crate::rational::frac(-1, 2))]);
        let v = f.to_json();
        assert_eq!(
            v,
            json!({"basis": "s", "terms": [{"partition": [2, 1], "num": -1, "den": 2}]})
        );
        assert_eq!(SymFunc::from_json(&v).unwrap(), f);
        assert!(SymFunc::from_json(&json!({"basis": "q", "terms": []})).is_err());
    }
}
