//! The Heisenberg algebra acting on the polynomial ring in `p_1, p_2, …`.
//!
//! `B_{-i}` multiplies by `p_i` and `B_i` acts as `c_{r,i} q ∂/∂p_i`, so that
//! `[B_i, B_{-i}] = c_{r,i} q` and every other pair commutes.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};
use crate::rational::{factorial, int, sign, Rational};
use crate::series::TruncatedSeries;
use crate::symfunc::PowerPoly;

/// A vector of the Fock space, written in the `p_μ` basis.
pub type FockVector = PowerPoly;

/// The vacuum vector `1`.
pub fn vacuum() -> FockVector {
    PowerPoly::one()
}

/// `(-1)^{ri-1} r i`, valid for negative `i` as well (it is odd in `i`).
pub fn closed_form_constant(r: u32, i: i64) -> Rational {
    let ri = r as i64 * i;
    int(sign(ri - 1) * ri)
}

/// How a model knows its structure constants `c_{r,i}`.
#[derive(Debug, Clone, PartialEq)]
pub enum Constants {
    /// Not yet determined; annihilation operators are unavailable.
    Unknown,
    /// `c_{r,i} = (-1)^{ri-1} r i`.
    ClosedForm,
    /// `c_{r,1}, c_{r,2}, …` as solved; indices beyond the table are unknown.
    Table(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeisenbergModel {
    rank: u32,
    pairing: i64,
    constants: Constants,
}

impl HeisenbergModel {
    /// A model using the closed-form constants.
    pub fn new(rank: u32, pairing: i64) -> Self {
        assert!(rank >= 1, "rank must be positive");
        HeisenbergModel { rank, pairing, constants: Constants::ClosedForm }
    }

    pub fn with_constants(rank: u32, pairing: i64, constants: Constants) -> Self {
        assert!(rank >= 1, "rank must be positive");
        HeisenbergModel { rank, pairing, constants }
    }

    /// A model whose constants come from [`solve_constants`] up to index `n`.
    pub fn solved(rank: u32, pairing: i64, n: usize) -> Result<Self> {
        let table = solve_constants(rank, pairing, n)?;
        Ok(Self::with_constants(rank, pairing, Constants::Table(table)))
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn pairing(&self) -> i64 {
        self.pairing
    }

    pub fn constants(&self) -> &Constants {
        &self.constants
    }

    /// `c_{r,i}` for `i ≥ 1`.
    pub fn constant(&self, i: u32) -> Result<Rational> {
        assert!(i >= 1);
        match &self.constants {
            Constants::Unknown => Err(Error::UnknownConstants),
            Constants::ClosedForm => Ok(closed_form_constant(self.rank, i as i64)),
            Constants::Table(t) => t.get(i as usize - 1).cloned().ok_or(Error::UnknownConstants),
        }
    }

    /// The scalar `s` with `[B_i, B_j] = s · id`.
    pub fn bracket(&self, i: i64, j: i64) -> Result<Rational> {
        if i + j != 0 || i == 0 {
            return Ok(Rational::zero());
        }
        let c = self.constant(i.unsigned_abs() as u32)? * int(self.pairing);
        Ok(if i > 0 { c } else { -c })
    }

    /// Applies the generator `B_g`; negative `g` creates, positive annihilates.
    pub fn apply(&self, g: i64, v: &FockVector) -> Result<FockVector> {
        match g {
            0 => Err(Error::Precondition("generator index must be nonzero".into())),
            g if g < 0 => Ok(create(v, (-g) as u32)),
            g => annihilate(v, g as u32, self),
        }
    }
}

/// Multiplication by `p_i`.
pub fn create(v: &FockVector, i: u32) -> FockVector {
    assert!(i >= 1, "the Newton index must be positive");
    v.mul_generator(i)
}

/// `c_{r,i} q ∂/∂p_i`.
pub fn annihilate(v: &FockVector, i: u32, model: &HeisenbergModel) -> Result<FockVector> {
    assert!(i >= 1, "the Newton index must be positive");
    let c = model.constant(i)?;
    Ok(v.derivative(i).scale(&(c * int(model.pairing))))
}

/// A scalar multiple of a product of generators, composed right to left.
#[derive(Clone, PartialEq)]
pub struct OperatorWord {
    weight: Rational,
    generators: Vec<i64>,
}

impl OperatorWord {
    pub fn new(weight: Rational, generators: Vec<i64>) -> Self {
        assert!(generators.iter().all(|&g| g != 0), "generator index must be nonzero");
        OperatorWord { weight, generators }
    }

    pub fn generator(g: i64) -> Self {
        Self::new(Rational::one(), vec![g])
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &OperatorWord) -> OperatorWord {
        let mut generators = self.generators.clone();
        generators.extend_from_slice(&other.generators);
        OperatorWord { weight: &self.weight * &other.weight, generators }
    }

    pub fn apply(&self, model: &HeisenbergModel, v: &FockVector) -> Result<FockVector> {
        let mut out = v.clone();
        for &g in self.generators.iter().rev() {
            if out.is_zero() {
                break;
            }
            out = model.apply(g, &out)?;
        }
        Ok(out.scale(&self.weight))
    }
}

impl fmt::Debug for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight)?;
        for g in &self.generators {
            write!(f, "·B[{g}]")?;
        }
        Ok(())
    }
}

/// Outcome of checking `[B_i, B_j]` on every basis vector up to a degree.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub i: i64,
    pub j: i64,
    pub degree_cap: usize,
    pub expected: Rational,
    /// For each degree, the scalar by which the commutator acted on all of
    /// that degree's basis vectors, or `None` if it was not a single scalar.
    pub scalars: Vec<(usize, Option<Rational>)>,
    pub vectors_checked: usize,
    pub pass: bool,
}

/// Applies `[B_i, B_j]` to every `p_μ` with `|μ| ≤ degree_cap` and compares
/// with the expected multiple of the identity.
///
/// `degree_cap` must be at least `max(|i|, |j|)`, otherwise the annihilating
/// half of the commutator is never exercised.
pub fn commutator_check(i: i64, j: i64, model: &HeisenbergModel, degree_cap: usize) -> Result<CommutatorReport> {
    if i == 0 || j == 0 {
        return Err(Error::Precondition("generator index must be nonzero".into()));
    }
    let reach = i.unsigned_abs().max(j.unsigned_abs()) as usize;
    if degree_cap < reach {
        return Err(Error::Precondition(format!(
            "degree cap {degree_cap} is below the generator index {reach}"
        )));
    }
    let expected = model.bracket(i, j)?;
    let ij = OperatorWord::new(Rational::one(), vec![i, j]);
    let ji = OperatorWord::new(Rational::one(), vec![j, i]);

    let mut by_degree: BTreeMap<usize, Option<Rational>> = BTreeMap::new();
    let mut pass = true;
    let mut checked = 0;
    for mu in partitions_up_to(degree_cap) {
        let v = PowerPoly::basis(mu.clone());
        let w = ij.apply(model, &v)?.sub(&ji.apply(model, &v)?);
        checked += 1;
        let scalar = if w.is_zero() {
            Some(Rational::zero())
        } else if w.len() == 1 && w.terms().contains_key(&mu) {
            Some(w.coefficient(&mu))
        } else {
            None
        };
        if scalar.as_ref() != Some(&expected) {
            pass = false;
        }
        let slot = by_degree.entry(mu.weight()).or_insert_with(|| scalar.clone());
        if *slot != scalar {
            *slot = None;
        }
    }
    Ok(CommutatorReport {
        i,
        j,
        degree_cap,
        expected,
        scalars: by_degree.into_iter().collect(),
        vectors_checked: checked,
        pass,
    })
}

/// Which half of the vertex operator: `C_-` creates, `C_+` annihilates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Minus,
    Plus,
}

/// `C_±(z) = Σ_{i≥1} B_{±i} z^i / ((-1)^{i-1} i)`, truncated at `z^order`.
///
/// Coefficients are operators and are only ever applied, never stored as
/// matrices.
#[derive(Debug, Clone)]
pub struct VertexSeries<'a> {
    side: Side,
    model: &'a HeisenbergModel,
    order: usize,
}

impl<'a> VertexSeries<'a> {
    pub fn new(side: Side, model: &'a HeisenbergModel, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Precondition("order must be at least 1".into()));
        }
        Ok(VertexSeries { side, model, order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The operator multiplying `z^k`; `None` for `k = 0`.
    pub fn coefficient(&self, k: usize) -> Option<OperatorWord> {
        if k == 0 || k > self.order {
            return None;
        }
        let g = match self.side {
            Side::Minus => -(k as i64),
            Side::Plus => k as i64,
        };
        let weight = int(sign(k as i64 - 1)) / int(k as i64);
        Some(OperatorWord::new(weight, vec![g]))
    }

    /// `C(z) v` for a fixed vector.
    pub fn apply(&self, v: &FockVector) -> Result<TruncatedSeries<PowerPoly>> {
        self.apply_series(&TruncatedSeries::constant(v.clone(), self.order))
    }

    /// `C(z) s(z)` for a vector-valued series of the same order.
    pub fn apply_series(&self, s: &TruncatedSeries<PowerPoly>) -> Result<TruncatedSeries<PowerPoly>> {
        if s.order() != self.order {
            return Err(Error::OrderMismatch { left: self.order, right: s.order() });
        }
        let mut coeffs = vec![PowerPoly::zero(); self.order + 1];
        for k in 1..=self.order {
            let op = self.coefficient(k).expect("k in range");
            for (a, v) in s.coeffs()[..=self.order - k].iter().enumerate() {
                if !v.is_zero() {
                    coeffs[a + k] = coeffs[a + k].add(&op.apply(self.model, v)?);
                }
            }
        }
        Ok(TruncatedSeries::from_coeffs(coeffs, self.order))
    }

    /// `exp(C(z)) s(z) = Σ_k C(z)^k s(z) / k!`; the sum stops because `C(z)`
    /// raises the `z`-order by at least one.
    pub fn exp_apply_series(&self, s: &TruncatedSeries<PowerPoly>) -> Result<TruncatedSeries<PowerPoly>> {
        let mut total = s.clone();
        let mut term = s.clone();
        for k in 1..=self.order {
            term = self.apply_series(&term)?;
            if term.is_zero() {
                break;
            }
            let inv = Rational::one() / Rational::from_integer(factorial(k as u64));
            total = total.add(&term.scale(&inv))?;
        }
        Ok(total)
    }

    pub fn exp_apply(&self, v: &FockVector) -> Result<TruncatedSeries<PowerPoly>> {
        self.exp_apply_series(&TruncatedSeries::constant(v.clone(), self.order))
    }
}

/// `Φ(z) = Σ_{n≥1} c_{r,n} q z^{2n} / n²` truncated at `z^order`.
pub fn phi_series(model: &HeisenbergModel, order: usize) -> Result<TruncatedSeries<Rational>> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in 1..=order / 2 {
        coeffs[2 * n] = model.constant(n as u32)? * int(model.pairing) / int((n * n) as i64);
    }
    Ok(TruncatedSeries::from_coeffs(coeffs, order))
}

/// Outcome of comparing `[C_-(z), exp C_+(z)]` with `-Φ(z) exp C_+(z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiReport {
    pub order: usize,
    pub phi: TruncatedSeries<Rational>,
    pub vectors_checked: usize,
    /// Basis vectors on which the two sides differed.
    pub failures: Vec<Partition>,
    /// True when the pairing is zero and both sides vanish identically.
    pub degenerate: bool,
    pub pass: bool,
}

/// Checks the vertex-operator identity on every `p_μ` with `|μ| ≤ order/2`.
pub fn phi_identity_check(model: &HeisenbergModel, order: usize) -> Result<PhiReport> {
    if order < 4 || order % 2 == 1 {
        return Err(Error::Precondition(format!("order must be even and at least 4, got {order}")));
    }
    let minus = VertexSeries::new(Side::Minus, model, order)?;
    let plus = VertexSeries::new(Side::Plus, model, order)?;
    let phi = phi_series(model, order)?;
    let phi_lifted = TruncatedSeries::from_fn(order, |k| PowerPoly::constant(phi.coeff(k).clone()));

    let mut failures = Vec::new();
    let mut checked = 0;
    for mu in partitions_up_to(order / 2) {
        let v = PowerPoly::basis(mu.clone());
        let e_plus_v = plus.exp_apply(&v)?;
        let lhs = minus
            .apply_series(&e_plus_v)?
            .sub(&plus.exp_apply_series(&minus.apply(&v)?)?)?;
        let rhs = phi_lifted.mul(&e_plus_v)?.neg();
        checked += 1;
        if lhs != rhs {
            failures.push(mu);
        }
    }
    Ok(PhiReport {
        order,
        degenerate: model.pairing == 0,
        pass: failures.is_empty(),
        phi,
        vectors_checked: checked,
        failures,
    })
}

/// `(1 - (-1)^r z^2)^{rq}` truncated at `z^order`.
pub fn pairing_target(r: u32, q: i64, order: usize) -> Result<TruncatedSeries<Rational>> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    if order >= 2 {
        coeffs[2] = int(-sign(r as i64));
    }
    TruncatedSeries::from_coeffs(coeffs, order).int_pow(r as i64 * q)
}

/// Reads `c_{r,1}, …, c_{r,n}` off the logarithm of the pairing target:
/// `log (1 - (-1)^r z^2)^{rq} = Σ c_{r,k} q z^{2k} / k²`.
pub fn solve_constants(r: u32, q: i64, n: usize) -> Result<Vec<Rational>> {
    if q == 0 {
        return Err(Error::ZeroPairing);
    }
    if r == 0 || n == 0 {
        return Err(Error::Precondition("rank and length must be positive".into()));
    }
    let log = pairing_target(r, q, 2 * n)?.log()?;
    if let Some(k) = (1..=2 * n).step_by(2).find(|&k| !log.coeff(k).is_zero()) {
        return Err(Error::Precondition(format!("odd coefficient z^{k} of the logarithm is nonzero")));
    }
    Ok((1..=n)
        .map(|k| log.coeff(2 * k) * int((k * k) as i64) / int(q))
        .collect())
}

/// The bilinear form determined by `⟨p_i u, v⟩ = ⟨u, B_i v⟩` and
/// `⟨1, v⟩ = ` the constant term of `v`.
pub fn pairing(u: &FockVector, v: &FockVector, model: &HeisenbergModel) -> Result<Rational> {
    let mut total = Rational::zero();
    for (mu, c) in u.terms() {
        let mut w = v.clone();
        for &i in mu.parts() {
            if w.is_zero() {
                break;
            }
            w = annihilate(&w, i, model)?;
        }
        total += c * w.constant_term();
    }
    Ok(total)
}

/// `⟨E(z), E(z)⟩` where `E(z) = exp(C_-(z)) 1`, truncated at `z^order`.
///
/// Vectors of different degree pair to zero, so only the diagonal terms
/// `⟨E_a, E_a⟩ z^{2a}` are computed.
pub fn exp_vector_pairing(model: &HeisenbergModel, order: usize) -> Result<TruncatedSeries<Rational>> {
    let half = order / 2;
    let e = VertexSeries::new(Side::Minus, model, half.max(1))?.exp_apply(&vacuum())?;
    let mut coeffs = vec![Rational::zero(); order + 1];
    for a in 0..=half {
        coeffs[2 * a] = pairing(e.coeff(a), e.coeff(a), model)?;
    }
    Ok(TruncatedSeries::from_coeffs(coeffs, order))
}
