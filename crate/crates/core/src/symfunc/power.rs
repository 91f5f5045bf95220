use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::Result;
use crate::partition::Partition;
use crate::rational::Rational;

use super::{Basis, SymFunc};

/// An element of Λ expanded in the power-sum products `p_μ = p_{μ1} p_{μ2} ⋯`.
///
/// Λ is the free commutative algebra on `p_1, p_2, …`, so multiplication is
/// concatenation of partitions and needs no change-of-basis tables. The same
/// type serves as the state space of the Fock module.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PowerPoly {
    terms: BTreeMap<Partition, Rational>,
}

impl PowerPoly {
    pub fn zero() -> Self {
        PowerPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(mu: Partition) -> Self {
        Self::term(mu, Rational::one())
    }

    pub fn term(mu: Partition, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(mu, coeff);
        out
    }

    /// The constant `c·1`.
    pub fn constant(coeff: Rational) -> Self {
        Self::term(Partition::empty(), coeff)
    }

    /// Single generator `p_i`.
    pub fn generator(i: u32) -> Self {
        Self::basis(Partition::row(i))
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (mu, c) in terms {
            out.add_term(mu, c);
        }
        out
    }

    pub fn add_term(&mut self, mu: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
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

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Rational> {
        self.terms
    }

    pub fn coefficient(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest weight present; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Partition::empty())
    }

    pub fn homogeneous_part(&self, n: usize) -> PowerPoly {
        PowerPoly {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.weight() == n)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &PowerPoly) -> PowerPoly {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PowerPoly) -> PowerPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PowerPoly {
        PowerPoly {
            terms: self.terms.iter().map(|(mu, c)| (mu.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> PowerPoly {
        if s.is_zero() {
            return Self::zero();
        }
        PowerPoly {
            terms: self.terms.iter().map(|(mu, c)| (mu.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &PowerPoly) -> PowerPoly {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    /// Multiplication by the generator `p_i`.
    pub fn mul_generator(&self, i: u32) -> PowerPoly {
        PowerPoly {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu.with_part(i), c.clone()))
                .collect(),
        }
    }

    /// `∂/∂p_i`: removes one part `i` and multiplies by its multiplicity.
    pub fn derivative(&self, i: u32) -> PowerPoly {
        let mut out = Self::zero();
        for (mu, c) in &self.terms {
            let mult = mu.multiplicity(i);
            if mult > 0 {
                let nu = mu.without_part(i).expect("part present");
                out.add_term(nu, c * Rational::from_integer((mult as i64).into()));
            }
        }
        out
    }

    pub fn to_symfunc(&self) -> SymFunc {
        SymFunc::from_terms(Basis::Power, self.terms.clone())
    }

    pub fn to_json(&self) -> Value {
        self.to_symfunc().to_json()
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let f = SymFunc::from_json(value)?;
        f.expect_basis(Basis::Power)?;
        Ok(PowerPoly::from_terms(f.into_terms()))
    }
}

impl fmt::Debug for PowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_symfunc(), f)
    }
}

impl fmt::Display for PowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_symfunc(), f)
    }
}
