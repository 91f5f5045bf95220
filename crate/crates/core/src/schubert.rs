//! Cohomology of the Grassmannian of `n`-dimensional quotients of an
//! `r`-dimensional space, in the basis of Schur classes `s_λ` with `λ` inside
//! the `n × (r-n)` rectangle.
//!
//! `Q` is the rank `n` universal quotient with Chern roots `x_1..x_n`, so
//! `c_i(Q) = e_i(x) = s_{(1^i)}`, and `S` is the rank `m = r-n` subbundle.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::{enumerate_compositions, Partition};
use crate::rational::{binomial, int, sign, to_integer, Rational};
use crate::series::TruncatedSeries;
use crate::symfunc::{lr_product, Basis, Poly, SymContext, SymFunc};

/// Degree cap for the symmetric-function context used in eliminations.
const CONTEXT_CAP: usize = 12;

fn context() -> &'static SymContext {
    static CTX: OnceLock<SymContext> = OnceLock::new();
    CTX.get_or_init(|| SymContext::new(CONTEXT_CAP))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassRing {
    total: u32,
    quot_rank: u32,
}

impl GrassRing {
    pub fn new(total: u32, quot_rank: u32) -> Result<Self> {
        if quot_rank > total {
            return Err(Error::Precondition(format!(
                "quotient rank {quot_rank} exceeds the ambient dimension {total}"
            )));
        }
        Ok(GrassRing { total, quot_rank })
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn quot_rank(&self) -> u32 {
        self.quot_rank
    }

    pub fn sub_rank(&self) -> u32 {
        self.total - self.quot_rank
    }

    /// Complex dimension `n m`, the degree of the point class.
    pub fn dim(&self) -> usize {
        (self.quot_rank * self.sub_rank()) as usize
    }

    pub fn fits(&self, lambda: &Partition) -> bool {
        lambda.fits_in(self.quot_rank as usize, self.sub_rank())
    }

    /// The point class `s_{(m^n)}`.
    pub fn point(&self) -> Partition {
        Partition::rectangle(self.quot_rank as usize, self.sub_rank())
    }
}

impl fmt::Display for GrassRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({} of {})", self.quot_rank, self.total)
    }
}

/// An integral cohomology class.
#[derive(Clone, PartialEq, Eq)]
pub struct CohomClass {
    ring: GrassRing,
    terms: BTreeMap<Partition, i64>,
}

impl CohomClass {
    pub fn zero(ring: GrassRing) -> Self {
        CohomClass { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: GrassRing) -> Self {
        Self::schur(ring, Partition::empty())
    }

    /// `s_λ`, which is zero when `λ` does not fit the rectangle.
    pub fn schur(ring: GrassRing, lambda: Partition) -> Self {
        let mut c = Self::zero(ring);
        c.add_term(lambda, 1);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(ring: GrassRing, terms: I) -> Self {
        let mut c = Self::zero(ring);
        for (lambda, k) in terms {
            c.add_term(lambda, k);
        }
        c
    }

    pub fn ring(&self) -> GrassRing {
        self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `k s_λ`, silently dropping `λ` outside the rectangle.
    pub fn add_term(&mut self, lambda: Partition, k: i64) {
        if k == 0 || !self.ring.fits(&lambda) {
            return;
        }
        let slot = self.terms.entry(lambda).or_insert(0);
        *slot += k;
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "classes live in different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = self.clone();
        for (lambda, k) in &other.terms {
            out.add_term(lambda.clone(), *k);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.ring, self.terms.iter().map(|(l, v)| (l.clone(), v * k)))
    }

    /// Littlewood–Richardson product inside the rectangle.
    pub fn multiply(&self, other: &Self) -> Self {
        self.check_ring(other);
        let bound = Some((self.ring.quot_rank as usize, self.ring.sub_rank()));
        let mut out = Self::zero(self.ring);
        for (a, ka) in &self.terms {
            for (b, kb) in &other.terms {
                for (nu, c) in lr_product(a, b, bound) {
                    out.add_term(nu, ka * kb * c as i64);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Inverse of a class with constant term `±1`; positive-degree classes
    /// are nilpotent, so the geometric series terminates.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coefficient(&Partition::empty());
        if c0 != 1 && c0 != -1 {
            return Err(Error::NotInvertible);
        }
        // a = c0 (1 + x), a^{-1} = c0 Σ (-x)^k
        let x = self.scale(c0).sub(&Self::one(self.ring));
        let minus_x = x.neg();
        let mut term = Self::one(self.ring);
        let mut acc = Self::one(self.ring);
        for _ in 0..self.ring.dim() {
            term = term.multiply(&minus_x);
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        Ok(acc.scale(c0))
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        Self::from_terms(
            self.ring,
            self.terms
                .iter()
                .filter(|(l, _)| l.weight() == degree)
                .map(|(l, k)| (l.clone(), *k)),
        )
    }

    /// Homogeneous components in degrees `0..=dim`.
    pub fn graded(&self) -> Vec<CohomClass> {
        (0..=self.ring.dim()).map(|d| self.homogeneous_part(d)).collect()
    }

    /// Coefficient of the point class.
    pub fn integrate(&self) -> i64 {
        self.coefficient(&self.ring.point())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.ring.total,
            "n": self.ring.quot_rank,
            "terms": self.terms.iter().map(|(l, k)| json!({
                "partition": l.to_json(),
                "coeff": k,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |k: &str| {
            value
                .get(k)
                .and_then(Value::as_u64)
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| Error::Parse(format!("class without integer field {k}")))
        };
        let ring = GrassRing::new(field("r")?, field("n")?)?;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("class without terms".into()))?;
        let mut out = Self::zero(ring);
        for t in terms {
            let lambda = Partition::from_json(&t["partition"])?;
            if !ring.fits(&lambda) {
                return Err(Error::Parse(format!("{lambda} does not fit {ring}")));
            }
            let k = t["coeff"].as_i64().ok_or_else(|| Error::Parse("coefficient is not an integer".into()))?;
            out.add_term(lambda, k);
        }
        Ok(out)
    }
}

impl fmt::Debug for CohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (l, k) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{k}·s{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bundle {
    Q,
    QDual,
    S,
    SDual,
}

/// Total Chern class of a tautological bundle.
pub fn total_chern(bundle: Bundle, ring: GrassRing) -> CohomClass {
    let n = ring.quot_rank;
    let m = ring.sub_rank();
    match bundle {
        Bundle::Q | Bundle::QDual => CohomClass::from_terms(
            ring,
            (0..=n).map(|i| {
                let s = if bundle == Bundle::QDual { sign(i as i64) } else { 1 };
                (Partition::column(i), s)
            }),
        ),
        // c(S) c(Q) = 1 and 1 / Σ e_i = Σ (-1)^k h_k
        Bundle::S | Bundle::SDual => CohomClass::from_terms(
            ring,
            (0..=m).map(|k| {
                let s = if bundle == Bundle::S { sign(k as i64) } else { 1 };
                (Partition::row(k), s)
            }),
        ),
    }
}

/// `[c_0, c_1, …, c_dim]` of a tautological bundle.
pub fn chern(bundle: Bundle, ring: GrassRing) -> Vec<CohomClass> {
    total_chern(bundle, ring).graded()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorVariant {
    /// `S ⊗ Q^∨`, roots `y_i - x_j`.
    STensorQDual,
    /// `S^∨ ⊗ Q`, the tangent bundle, roots `x_j - y_i`.
    SDualTensorQ,
    /// `Q^∨ ⊗ Q`, roots `x_j - x_i`.
    QDualTensorQ,
}

/// Total Chern class of a tensor construction, by expanding over Chern roots
/// and eliminating the `S` roots through `e(y) = 1 / e(x)`.
pub fn chern_tensor(ring: GrassRing, variant: TensorVariant) -> Result<CohomClass> {
    let n = ring.quot_rank as usize;
    let m = ring.sub_rank() as usize;
    let top = ring.dim();
    let ctx = context();
    ctx.check_degree(top)?;

    // variables: x_1..x_n, then y_1..y_m (absent for Q^∨ ⊗ Q)
    let (nvars, blocks) = match variant {
        TensorVariant::QDualTensorQ => (n, vec![n]),
        _ => (n + m, vec![n, m]),
    };
    let root = |plus: usize, minus: usize| -> Poly {
        let mut f = Poly::one(nvars);
        let mut e = vec![0; nvars];
        e[plus] = 1;
        f.add_term(e, Rational::one());
        let mut e = vec![0; nvars];
        e[minus] = 1;
        f.add_term(e, -Rational::one());
        f
    };
    let mut product = Poly::one(nvars);
    match variant {
        TensorVariant::STensorQDual | TensorVariant::SDualTensorQ => {
            for i in 0..m {
                for j in 0..n {
                    let (y, x) = (n + i, j);
                    let factor = if variant == TensorVariant::STensorQDual { root(y, x) } else { root(x, y) };
                    product = product.mul_truncated(&factor, top);
                }
            }
        }
        TensorVariant::QDualTensorQ => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        product = product.mul_truncated(&root(j, i), top);
                    }
                }
            }
        }
    }

    let mut in_x = SymFunc::zero(Basis::Schur);
    for (parts, c) in product.dominant_terms(&blocks) {
        let m_x = SymFunc::basis_element(Basis::Monomial, parts[0].clone());
        let mut f = ctx.convert(&m_x, Basis::Power)?;
        if let Some(kappa) = parts.get(1).filter(|k| !k.is_empty()) {
            let y_in_e = ctx.convert(&SymFunc::basis_element(Basis::Monomial, kappa.clone()), Basis::Elementary)?;
            // e_ν(y) ↦ (-1)^{|ν|} h_ν(x)
            let h_x = SymFunc::from_terms(
                Basis::Complete,
                y_in_e.terms().iter().map(|(nu, d)| (nu.clone(), d * int(sign(nu.weight() as i64)))),
            );
            f = ctx.multiply(&f, &h_x)?;
        }
        let s = ctx.convert(&f, Basis::Schur)?.scale(&c);
        in_x = in_x.add(&s)?;
    }

    let mut out = CohomClass::zero(ring);
    for (lambda, c) in in_x.terms() {
        if !ring.fits(lambda) {
            continue;
        }
        let k = to_integer(c)
            .and_then(|k| k.to_i64())
            .ok_or_else(|| Error::InexactDivision(format!("coefficient {c} of s{lambda} in {ring}")))?;
        out.add_term(lambda.clone(), k);
    }
    Ok(out)
}

/// Outcome of recomputing `c(V)` from the excess-intersection formula.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcessReport {
    pub ring: GrassRing,
    /// `c(V) = (c(Q)c(Q^∨))^r c(S^∨⊗Q) / (c(Q)^r)^2`.
    pub excess: CohomClass,
    /// `c(S⊗Q^∨)` from Chern roots.
    pub target: CohomClass,
    /// Degrees where the two disagree.
    pub mismatched_degrees: Vec<usize>,
    /// `c(Q)^r = c(S^∨⊗Q) c(Q^∨⊗Q)`.
    pub quotient_identity: bool,
    /// `c(Q^∨)^r = c(S⊗Q^∨) c(Q⊗Q^∨)`.
    pub dual_identity: bool,
    /// `∫ c_top(V)`.
    pub top_integral: i64,
    pub pass: bool,
}

pub fn excess_check(ring: GrassRing) -> Result<ExcessReport> {
    let r = ring.total;
    let c_q = total_chern(Bundle::Q, ring);
    let c_qd = total_chern(Bundle::QDual, ring);
    let tangent = chern_tensor(ring, TensorVariant::SDualTensorQ)?;
    let endo = chern_tensor(ring, TensorVariant::QDualTensorQ)?;
    let target = chern_tensor(ring, TensorVariant::STensorQDual)?;

    let c_q_r = c_q.pow(r);
    let inv = c_q_r.inverse()?;
    let excess = c_q.multiply(&c_qd).pow(r).multiply(&tangent).multiply(&inv).multiply(&inv);

    let mismatched_degrees: Vec<usize> = (0..=ring.dim())
        .filter(|&d| excess.homogeneous_part(d) != target.homogeneous_part(d))
        .collect();
    let quotient_identity = c_q_r == tangent.multiply(&endo);
    let dual_identity = c_qd.pow(r) == target.multiply(&endo);
    let top_integral = excess.integrate();
    Ok(ExcessReport {
        ring,
        pass: mismatched_degrees.is_empty() && quotient_identity && dual_identity,
        excess,
        target,
        mismatched_degrees,
        quotient_identity,
        dual_identity,
        top_integral,
    })
}

/// `∫ c_top(S^∨⊗Q)`, the Euler characteristic of the Grassmannian.
pub fn euler_characteristic(ring: GrassRing) -> Result<i64> {
    Ok(chern_tensor(ring, TensorVariant::SDualTensorQ)?.integrate())
}

/// `∫ c_top(S⊗Q^∨)` over `Gr(n of r)`, and `0` when `n > r` because the
/// two cycles do not meet.
pub fn intersection_number(r: u32, n: u32) -> Result<i64> {
    if n > r {
        return Ok(0);
    }
    let ring = GrassRing::new(r, n)?;
    Ok(chern_tensor(ring, TensorVariant::STensorQDual)?.integrate())
}

/// `(-1)^{(r-1)n} C(r,n)`.
pub fn intersection_closed_form(r: u32, n: u32) -> BigInt {
    binomial(r as u64, n as u64) * sign((r as i64 - 1) * n as i64)
}

/// `a_i = (-1)^{(r-1)i} C(r,i)`, the intersection number of a length-`i`
/// piece.
pub fn local_factor(r: u32, i: u32) -> BigInt {
    intersection_closed_form(r, i)
}

/// `Σ_ν a_{ν_1} ⋯ a_{ν_q}` over compositions of `n` into `q` non-negative parts.
pub fn pairing_coefficient(r: u32, q: u32, n: u32) -> BigInt {
    assert!(q >= 1, "pairing must be positive");
    let factors: Vec<BigInt> = (0..=n).map(|i| local_factor(r, i)).collect();
    enumerate_compositions(n as usize, q as usize)
        .iter()
        .map(|nu| nu.entries().iter().map(|&i| factors[i as usize].clone()).product::<BigInt>())
        .sum()
}

/// `Σ_ν ∏ C(r, ν_i)`, which Vandermonde's identity says is `C(rq, n)`.
pub fn unsigned_subdivision_sum(r: u32, q: u32, n: u32) -> BigInt {
    enumerate_compositions(n as usize, q as usize)
        .iter()
        .map(|nu| nu.entries().iter().map(|&i| binomial(r as u64, i as u64)).product::<BigInt>())
        .sum()
}

/// `(1 + (-1)^{r-1} z^2)^{rq}` truncated at `z^order`.
pub fn pairing_target(r: u32, q: u32, order: usize) -> Result<TruncatedSeries<Rational>> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    if order >= 2 {
        coeffs[2] = int(sign(r as i64 - 1));
    }
    TruncatedSeries::from_coeffs(coeffs, order).int_pow((r * q) as i64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairingReport {
    pub r: u32,
    pub q: u32,
    /// `(n, subdivision sum, z^{2n} coefficient of the target)`.
    pub rows: Vec<(u32, BigInt, BigInt)>,
    pub pass: bool,
}

pub fn pairing_gf_check(r: u32, q: u32, max_n: u32) -> Result<PairingReport> {
    if q == 0 {
        return Err(Error::ZeroPairing);
    }
    let target = pairing_target(r, q, 2 * max_n as usize)?;
    let rows: Vec<(u32, BigInt, BigInt)> = (0..=max_n)
        .map(|n| {
            let want = to_integer(target.coeff(2 * n as usize)).expect("binomial coefficients are integers");
            (n, pairing_coefficient(r, q, n), want)
        })
        .collect();
    let pass = rows.iter().all(|(_, a, b)| a == b);
    Ok(PairingReport { r, q, rows, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn gr(r: u32, n: u32) -> GrassRing {
        GrassRing::new(r, n).unwrap()
    }

    #[test]
    fn projective_line() {
        let g = gr(2, 1);
        let cq = chern(Bundle::Q, g);
        assert_eq!(cq[1], CohomClass::schur(g, p(&[1])));
        let cs = chern(Bundle::S, g);
        assert_eq!(cs[1], CohomClass::schur(g, p(&[1])).neg());
        assert_eq!(cq[1].integrate(), 1);
    }

    #[test]
    fn sub_bundle_in_gr_2_4() {
        let g = gr(4, 2);
        let cs = chern(Bundle::S, g);
        // inverting 1 + s1 + s11: -s1 then s1^2 - s11 = s2
        assert_eq!(cs[1], CohomClass::schur(g, p(&[1])).neg());
        assert_eq!(cs[2], CohomClass::schur(g, p(&[2])));
        let via_inverse = total_chern(Bundle::Q, g).inverse().unwrap();
        assert_eq!(via_inverse, total_chern(Bundle::S, g));
    }

    #[test]
    fn quotient_classes_vanish_above_rank() {
        let g = gr(5, 2);
        let cq = chern(Bundle::Q, g);
        assert!(cq[3..].iter().all(CohomClass::is_zero));
    }

    #[test]
    fn products() {
        let g = gr(4, 2);
        let s1 = CohomClass::schur(g, p(&[1]));
        let want = CohomClass::from_terms(g, [(p(&[2]), 1), (p(&[1, 1]), 1)]);
        assert_eq!(s1.multiply(&s1), want);
        let g = gr(3, 1);
        let s2 = CohomClass::schur(g, p(&[2]));
        assert!(s2.multiply(&s2).is_zero());
        assert_eq!(CohomClass::one(g).multiply(&s2), s2);
        // the point class squared vanishes, the class itself integrates to one
        let pt = CohomClass::schur(gr(4, 2), p(&[2, 2]));
        assert_eq!(pt.integrate(), 1);
        assert!(pt.multiply(&pt).is_zero());
    }

    #[test]
    fn tensor_classes_on_the_line() {
        let g = gr(2, 1);
        let s1 = CohomClass::schur(g, p(&[1]));
        let one = CohomClass::one(g);
        assert_eq!(chern_tensor(g, TensorVariant::STensorQDual).unwrap(), one.sub(&s1.scale(2)));
        assert_eq!(chern_tensor(g, TensorVariant::SDualTensorQ).unwrap(), one.add(&s1.scale(2)));
        assert_eq!(chern_tensor(g, TensorVariant::QDualTensorQ).unwrap(), one);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(gr(2, 1)).unwrap(), 2);
        assert_eq!(euler_characteristic(gr(4, 2)).unwrap(), 6);
        assert_eq!(euler_characteristic(gr(5, 2)).unwrap(), 10);
    }

    #[test]
    fn intersection_numbers() {
        assert_eq!(intersection_number(2, 1).unwrap(), -2);
        assert_eq!(intersection_number(4, 2).unwrap(), 6);
        assert_eq!(intersection_number(2, 3).unwrap(), 0);
        assert_eq!(intersection_number(3, 0).unwrap(), 1);
        assert_eq!(intersection_number(0, 0).unwrap(), 1);
    }

    #[test]
    fn excess_small() {
        for (r, n) in [(2, 1), (4, 2), (3, 0), (3, 3), (3, 1)] {
            let rep = excess_check(gr(r, n)).unwrap();
            assert!(rep.pass, "{:?}", rep);
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing_coefficient(1, 3, 2), BigInt::from(3));
        assert_eq!(pairing_coefficient(2, 1, 1), BigInt::from(-2));
        assert_eq!(pairing_coefficient(3, 2, 0), BigInt::from(1));
        assert!(pairing_gf_check(2, 2, 6).unwrap().pass);
        assert_eq!(unsigned_subdivision_sum(3, 2, 4), binomial(6, 4));
    }

    #[test]
    fn json_round_trip() {
        let g = gr(4, 2);
        let c = total_chern(Bundle::S, g);
        let v = c.to_json();
        assert_eq!(v["r"], 4);
        assert_eq!(CohomClass::from_json(&v).unwrap(), c);
        let bad = json!({"r": 3, "n": 1, "terms": [{"partition": [1, 1], "coeff": 1}]});
        assert!(CohomClass::from_json(&bad).is_err());
    }

    #[test]
    fn inverse_needs_unit() {
        let g = gr(4, 2);
        assert_eq!(CohomClass::schur(g, p(&[1])).inverse(), Err(Error::NotInvertible));
        let a = total_chern(Bundle::QDual, g).neg();
        assert_eq!(a.multiply(&a.inverse().unwrap()), CohomClass::one(g));
    }
}
