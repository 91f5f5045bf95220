//! Dimension and degree bookkeeping for the moduli spaces `M(n)` of framed
//! sheaves of rank `r` and the operators between them.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuliParams {
    pub r: u32,
    pub c_squared: i64,
    pub n: i64,
}

impl ModuliParams {
    pub fn new(r: u32, c_squared: i64, n: i64) -> Result<Self> {
        if r == 0 {
            return Err(Error::Precondition("rank must be positive".into()));
        }
        Ok(ModuliParams { r, c_squared, n })
    }

    /// `b = -(r-1) ∫ c²`.
    pub fn b(&self) -> i64 {
        -(self.r as i64 - 1) * self.c_squared
    }

    pub fn with_n(&self, n: i64) -> Self {
        ModuliParams { n, ..*self }
    }
}

/// `dim M(n) = 2rn + b`.
pub fn moduli_dim(p: &ModuliParams) -> i64 {
    2 * p.r as i64 * p.n + p.b()
}

/// Dimension of the fiber of the Quot scheme over a point of the symmetric
/// product with multiplicities `m_j`: `Σ (r m_j - 1)`.
pub fn quot_fiber_dim(r: u32, multiplicities: &[u32]) -> Result<i64> {
    if r == 0 || multiplicities.contains(&0) {
        return Err(Error::Precondition("rank and multiplicities must be positive".into()));
    }
    let per_point: i64 = multiplicities.iter().map(|&m| r as i64 * m as i64 - 1).sum();
    assert_eq!(
        Ok(per_point),
        quot_fiber_dim_collected(r, multiplicities),
        "the two fiber-dimension expressions must agree"
    );
    Ok(per_point)
}

/// The same dimension collected as `r Σ m_j - l` for `l` points.
pub fn quot_fiber_dim_collected(r: u32, multiplicities: &[u32]) -> Result<i64> {
    if r == 0 || multiplicities.contains(&0) {
        return Err(Error::Precondition("rank and multiplicities must be positive".into()));
    }
    let total: i64 = multiplicities.iter().map(|&m| m as i64).sum();
    Ok(r as i64 * total - multiplicities.len() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleMode {
    /// Cycles varying with `s` free points: `2rs + rk`.
    Family,
    /// Cycles with every point fixed: `rk`.
    Fixed,
}

pub fn cycle_dims(r: u32, s: u32, k: u32, mode: CycleMode) -> i64 {
    let (r, s, k) = (r as i64, s as i64, k as i64);
    match mode {
        CycleMode::Family => 2 * r * s + r * k,
        CycleMode::Fixed => r * k,
    }
}

/// `a n + c`, a quantity depending affinely on the instanton number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub slope: i64,
    pub offset: i64,
}

impl Affine {
    pub fn eval(&self, n: i64) -> i64 {
        self.slope * n + self.offset
    }

    pub fn shift(&self, by: i64) -> Affine {
        Affine { offset: self.offset + by, ..*self }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.offset {
            0 => write!(f, "{}n", self.slope),
            o if o > 0 => write!(f, "{}n+{o}", self.slope),
            o => write!(f, "{}n{o}", self.slope),
        }
    }
}

/// The operator with index `i` sends `H_j(M(n+i))` to
/// `H_{j + deg α - 2ri - 2}(M(n))`; for negative `i` this reads as raising
/// `n - |i|` to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeShiftReport {
    pub r: u32,
    pub i: i64,
    pub alpha_deg: u32,
    /// `deg α - 2ri - 2`.
    pub shift: i64,
    /// Middle degree `2r(n+i)` of the source.
    pub source_middle: Affine,
    /// Where the source middle degree lands.
    pub image: Affine,
    /// Middle degree `2rn` of the target.
    pub target_middle: Affine,
    pub preserved: bool,
}

pub fn degree_shift_check(r: u32, i: i64, alpha_deg: u32) -> Result<DegreeShiftReport> {
    if i == 0 {
        return Err(Error::Precondition("operator index must be nonzero".into()));
    }
    if alpha_deg % 2 == 1 {
        return Err(Error::Precondition("only even classes are supported".into()));
    }
    let two_r = 2 * r as i64;
    let shift = alpha_deg as i64 - two_r * i - 2;
    let source_middle = Affine { slope: two_r, offset: two_r * i };
    let image = source_middle.shift(shift);
    let target_middle = Affine { slope: two_r, offset: 0 };
    Ok(DegreeShiftReport {
        r,
        i,
        alpha_deg,
        shift,
        source_middle,
        image,
        target_middle,
        preserved: image == target_middle,
    })
}

/// Dimension of the correspondence that the degree shift forces: a cycle in
/// `M(n+i) × X × M(n)` acting with shift `deg α - 2ri - 2` must have
/// dimension `dim M(n+i) + 1 - ri = 2rn + b + ri + 1`.
pub fn correspondence_dim_from_shift(p: &ModuliParams, i: i64) -> i64 {
    moduli_dim(&p.with_n(p.n + i)) + 1 - p.r as i64 * i
}

/// The dimension formula as commonly quoted: `2rn + b + r + 1` for positive
/// `i` and `2rn + b - r|i| + 1` for negative `i`.
pub fn correspondence_dim_quoted(p: &ModuliParams, i: i64) -> i64 {
    let base = moduli_dim(p) + 1;
    if i > 0 {
        base + p.r as i64
    } else {
        base - p.r as i64 * i.abs()
    }
}

/// Whether the quoted correspondence dimension agrees with the one forced by
/// the degree shift. They differ for positive `i ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionComparison {
    pub params: ModuliParams,
    pub i: i64,
    pub from_shift: i64,
    pub quoted: i64,
    pub agree: bool,
}

pub fn compare_correspondence_dims(p: &ModuliParams, i: i64) -> DimensionComparison {
    let from_shift = correspondence_dim_from_shift(p, i);
    let quoted = correspondence_dim_quoted(p, i);
    DimensionComparison { params: *p, i, from_shift, quoted, agree: from_shift == quoted }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: u32, c2: i64, n: i64) -> ModuliParams {
        ModuliParams::new(r, c2, n).unwrap()
    }

    #[test]
    fn moduli_dimensions() {
        assert_eq!(moduli_dim(&params(1, 0, 5)), 10);
        assert_eq!(moduli_dim(&params(2, 0, 3)), 12);
        assert_eq!(moduli_dim(&params(3, -2, 1)), 10);
        assert!(ModuliParams::new(0, 0, 1).is_err());
    }

    #[test]
    fn fiber_dimensions() {
        assert_eq!(quot_fiber_dim(1, &[1, 1, 1]).unwrap(), 0);
        assert_eq!(quot_fiber_dim(2, &[1, 1]).unwrap(), 2);
        assert_eq!(quot_fiber_dim(3, &[2]).unwrap(), 5);
        assert!(quot_fiber_dim(2, &[1, 0]).is_err());
    }

    #[test]
    fn cycle_dimensions() {
        assert_eq!(cycle_dims(1, 0, 4, CycleMode::Fixed), 4);
        assert_eq!(cycle_dims(2, 1, 3, CycleMode::Family), 10);
        assert_eq!(cycle_dims(5, 2, 0, CycleMode::Fixed), 0);
    }

    #[test]
    fn middle_degree() {
        let rep = degree_shift_check(2, 1, 2).unwrap();
        assert!(rep.preserved);
        assert!(degree_shift_check(1, 3, 2).unwrap().preserved);
        assert!(degree_shift_check(3, -2, 2).unwrap().preserved);
        let rep = degree_shift_check(2, 3, 0).unwrap();
        assert!(!rep.preserved);
        assert_eq!(rep.shift, -2 * 2 * 3 - 2);
        assert!(degree_shift_check(2, 0, 2).is_err());
    }

    #[test]
    fn affine_rendering() {
        assert_eq!(Affine { slope: 4, offset: 0 }.to_string(), "4n");
        assert_eq!(Affine { slope: 4, offset: -2 }.to_string(), "4n-2");
        assert_eq!(Affine { slope: 2, offset: 6 }.eval(1), 8);
    }

    #[test]
    fn correspondence_dimensions() {
        let p = params(2, 1, 3);
        assert!(compare_correspondence_dims(&p, 1).agree);
        assert!(compare_correspondence_dims(&p, -1).agree);
        assert!(compare_correspondence_dims(&p, -3).agree);
        let c = compare_correspondence_dims(&p, 2);
        assert!(!c.agree);
        assert_eq!(c.from_shift - c.quoted, 2);
    }
}
