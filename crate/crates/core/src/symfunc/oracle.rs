//! Ground truth in finitely many variables.
//!
//! Everything here works on explicit polynomials in `x_1, …, x_N` built
//! straight from the definitions of the bases, without going through any of
//! the transition tables, so it can arbitrate the algebraic routines.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::rational::Rational;

use super::{Basis, SymFunc};

/// A polynomial in `nvars` commuting variables, keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], Rational::one())
    }

    pub fn monomial(exponents: Vec<u32>, coeff: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    /// The single variable `x_k` (0-based).
    pub fn variable(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: Rational) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
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

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product keeping only monomials of total degree `<= max_degree`.
    pub fn mul_truncated(&self, other: &Poly, max_degree: usize) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = Poly::zero(self.nvars);
        for (a, ca) in &self.terms {
            let da: u32 = a.iter().sum();
            for (b, cb) in &other.terms {
                let db: u32 = b.iter().sum();
                if (da + db) as usize > max_degree {
                    continue;
                }
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Terms whose exponent vector is weakly decreasing on each of the given
    /// consecutive variable blocks. For a polynomial symmetric within each
    /// block these determine it completely.
    pub fn dominant_terms(&self, blocks: &[usize]) -> Vec<(Vec<Partition>, Rational)> {
        assert_eq!(blocks.iter().sum::<usize>(), self.nvars);
        let mut out = Vec::new();
        'terms: for (e, c) in &self.terms {
            let mut start = 0;
            let mut parts = Vec::with_capacity(blocks.len());
            for &len in blocks {
                let block = &e[start..start + len];
                if block.windows(2).any(|w| w[0] < w[1]) {
                    continue 'terms;
                }
                parts.push(Partition::from_unsorted(block.to_vec()));
                start += len;
            }
            out.push((parts, c.clone()));
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(e, c)| (e, c.to_string()))).finish()
    }
}

/// Distinct rearrangements of `values`, in lexicographic order.
fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation
    loop {
        let n = sorted.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| sorted[j] > sorted[i]).expect("successor exists");
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

fn monomial_symmetric(lambda: &Partition, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    if lambda.len() > n {
        return out;
    }
    let mut padded = lambda.parts().to_vec();
    padded.resize(n, 0);
    for e in distinct_permutations(&padded) {
        out.add_term(e, Rational::one());
    }
    out
}

/// Sum of all monomials of total degree `k` with every exponent at most `max_exp`.
fn degree_sum(k: u32, n: usize, max_exp: u32) -> Poly {
    fn go(k: u32, slot: usize, max_exp: u32, cur: &mut Vec<u32>, out: &mut Poly) {
        let n = cur.len();
        if slot == n {
            if k == 0 {
                out.add_term(cur.clone(), Rational::one());
            }
            return;
        }
        for e in 0..=k.min(max_exp) {
            cur[slot] = e;
            go(k - e, slot + 1, max_exp, cur, out);
        }
        cur[slot] = 0;
    }
    let mut out = Poly::zero(n);
    go(k, 0, max_exp, &mut vec![0; n], &mut out);
    out
}

fn power_sum(k: u32, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    for v in 0..n {
        let mut e = vec![0; n];
        e[v] = k;
        out.add_term(e, Rational::one());
    }
    out
}

/// `s_λ(x_1..x_N)` as the sum over semistandard tableaux of shape `λ` with
/// entries in `1..=N`.
fn schur_by_tableaux(lambda: &Partition, n: usize) -> Poly {
    let shape = lambda.parts();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = Poly::zero(n);

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut Poly,
    ) {
        if k == cells.len() {
            let mut e = vec![0u32; n];
            for row in grid.iter() {
                for &v in row {
                    e[v - 1] += 1;
                }
            }
            out.add_term(e, Rational::one());
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            fill(k + 1, cells, grid, n, out);
        }
        grid[r][c] = 0;
    }

    fill(0, &cells, &mut grid, n, &mut out);
    out
}

/// Image of a single basis element `b_λ` in `n` variables, from definitions.
pub fn oracle_basis_element(basis: Basis, lambda: &Partition, n: usize) -> Poly {
    let product = |single: &dyn Fn(u32) -> Poly| {
        lambda
            .parts()
            .iter()
            .fold(Poly::one(n), |acc, &k| acc.mul(&single(k)))
    };
    match basis {
        Basis::Monomial => monomial_symmetric(lambda, n),
        Basis::Elementary => product(&|k| degree_sum(k, n, 1)),
        Basis::Complete => product(&|k| degree_sum(k, n, k)),
        Basis::Power => product(&|k| power_sum(k, n)),
        Basis::Schur => schur_by_tableaux(lambda, n),
    }
}

/// The image of `f` in `n` variables as an explicit polynomial.
pub fn oracle_expand(f: &SymFunc, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    for (lambda, c) in f.terms() {
        out = out.add(&oracle_basis_element(f.basis(), lambda, n).scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mono(e: &[u32]) -> Poly {
        Poly::monomial(e.to_vec(), int(1))
    }

    fn sum(ps: &[Poly]) -> Poly {
        ps.iter().fold(Poly::zero(ps[0].nvars()), |a, b| a.add(b))
    }

    #[test]
    fn m21_in_two_variables() {
        let f = SymFunc::basis_element(Basis::Monomial, Partition::new(vec![2, 1]).unwrap());
        assert_eq!(oracle_expand(&f, 2), sum(&[mono(&[2, 1]), mono(&[1, 2])]));
    }

    #[test]
    fn p2_and_e2_in_three_variables() {
        let p2 = SymFunc::single(Basis::Power, 2);
        assert_eq!(oracle_expand(&p2, 3), sum(&[mono(&[2, 0, 0]), mono(&[0, 2, 0]), mono(&[0, 0, 2])]));
        let e2 = SymFunc::single(Basis::Elementary, 2);
        assert_eq!(oracle_expand(&e2, 3), sum(&[mono(&[1, 1, 0]), mono(&[1, 0, 1]), mono(&[0, 1, 1])]));
    }

    #[test]
    fn too_long_monomial_vanishes() {
        let f = SymFunc::basis_element(Basis::Monomial, Partition::column(3));
        assert!(oracle_expand(&f, 2).is_zero());
    }

    #[test]
    fn schur_tableaux_count() {
        // s_(2,1)(1,1,1) = number of SSYT of shape (2,1) with entries <= 3 = 8
        let s = oracle_basis_element(Basis::Schur, &Partition::new(vec![2, 1]).unwrap(), 3);
        let total: Rational = s.terms().values().cloned().sum();
        assert_eq!(total, int(8));
    }

    #[test]
    fn complete_h2_in_two_variables() {
        let h2 = oracle_basis_element(Basis::Complete, &Partition::row(2), 2);
        assert_eq!(h2, sum(&[mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]));
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }
}
