use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{int, Rational};

use super::{multiply_p, Basis, PowerPoly, SymFunc};

/// Change-of-basis data for one graded piece Λ^n.
///
/// For every non-power basis `B` this holds `b_λ` expanded in power sums and
/// `p_μ` expanded in `B`.
#[derive(Debug)]
pub struct Transition {
    degree: usize,
    index: BTreeMap<Partition, usize>,
    to_power: BTreeMap<Basis, Vec<PowerPoly>>,
    from_power: BTreeMap<Basis, Vec<SymFunc>>,
}

impl Transition {
    pub fn build(n: usize) -> Transition {
        let parts = enumerate_partitions(n);
        let index: BTreeMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();

        let e = elementary_generators(n);
        let h = complete_generators(n);

        let mut to_power = BTreeMap::new();
        let mut from_power = BTreeMap::new();

        // p_μ in the monomial basis comes straight from the Pieri rule.
        let p_in_m: Vec<SymFunc> = parts
            .iter()
            .map(|mu| {
                mu.parts()
                    .iter()
                    .fold(SymFunc::one(Basis::Monomial), |acc, &i| multiply_p(&acc, i))
            })
            .collect();
        let m_in_p = invert_columns(&parts, &index, Basis::Power, &p_in_m)
            .into_iter()
            .map(|f| PowerPoly::from_terms(f.into_terms()))
            .collect();
        to_power.insert(Basis::Monomial, m_in_p);
        from_power.insert(Basis::Monomial, p_in_m);

        let products = |gens: &[PowerPoly]| -> Vec<PowerPoly> {
            parts
                .iter()
                .map(|l| l.parts().iter().fold(PowerPoly::one(), |acc, &k| acc.mul(&gens[k as usize])))
                .collect()
        };
        let schur: Vec<PowerPoly> = parts
            .iter()
            .map(|l| {
                let conj = l.conjugate();
                if conj.len() < l.len() {
                    jacobi_trudi(conj.parts(), &e)
                } else {
                    jacobi_trudi(l.parts(), &h)
                }
            })
            .collect();

        for (basis, cols) in [
            (Basis::Elementary, products(&e)),
            (Basis::Complete, products(&h)),
            (Basis::Schur, schur),
        ] {
            let as_sym: Vec<SymFunc> = cols.iter().map(PowerPoly::to_symfunc).collect();
            from_power.insert(basis, invert_columns(&parts, &index, basis, &as_sym));
            to_power.insert(basis, cols);
        }

        Transition { degree: n, index, to_power, from_power }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `b_λ` written in power sums.
    pub fn to_power(&self, basis: Basis, lambda: &Partition) -> PowerPoly {
        if basis == Basis::Power {
            return PowerPoly::basis(lambda.clone());
        }
        self.to_power[&basis][self.index[lambda]].clone()
    }

    /// `p_μ` written in `basis`.
    pub fn from_power(&self, basis: Basis, mu: &Partition) -> SymFunc {
        if basis == Basis::Power {
            return SymFunc::basis_element(Basis::Power, mu.clone());
        }
        self.from_power[&basis][self.index[mu]].clone()
    }
}

/// `e_0, …, e_n` in power sums via `k e_k = Σ_{i=1}^k (-1)^{i-1} e_{k-i} p_i`.
fn elementary_generators(n: usize) -> Vec<PowerPoly> {
    let mut e = vec![PowerPoly::one()];
    for k in 1..=n {
        let mut acc = PowerPoly::zero();
        for i in 1..=k {
            let term = e[k - i].mul_generator(i as u32);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        e.push(acc.scale(&(Rational::one() / int(k as i64))));
    }
    e
}

/// `h_0, …, h_n` in power sums via `k h_k = Σ_{i=1}^k h_{k-i} p_i`.
fn complete_generators(n: usize) -> Vec<PowerPoly> {
    let mut h = vec![PowerPoly::one()];
    for k in 1..=n {
        let mut acc = PowerPoly::zero();
        for i in 1..=k {
            acc = acc.add(&h[k - i].mul_generator(i as u32));
        }
        h.push(acc.scale(&(Rational::one() / int(k as i64))));
    }
    h
}

/// `det(g_{λ_i - i + j})` by Laplace expansion along rows, memoised on the
/// set of columns already used.
fn jacobi_trudi(lambda: &[u32], gens: &[PowerPoly]) -> PowerPoly {
    let len = lambda.len();
    let mut memo: Vec<Option<PowerPoly>> = vec![None; 1 << len];

    fn minor(
        mask: usize,
        lambda: &[u32],
        gens: &[PowerPoly],
        memo: &mut Vec<Option<PowerPoly>>,
    ) -> PowerPoly {
        let len = lambda.len();
        let row = mask.count_ones() as usize;
        if row == len {
            return PowerPoly::one();
        }
        if let Some(done) = &memo[mask] {
            return done.clone();
        }
        let mut acc = PowerPoly::zero();
        let mut rank = 0;
        for col in 0..len {
            if mask & (1 << col) != 0 {
                continue;
            }
            let k = lambda[row] as i64 - row as i64 + col as i64;
            if k >= 0 && (k as usize) < gens.len() {
                let rest = minor(mask | (1 << col), lambda, gens, memo);
                if !rest.is_zero() {
                    let term = gens[k as usize].mul(&rest);
                    acc = if rank % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            rank += 1;
        }
        memo[mask] = Some(acc.clone());
        acc
    }

    minor(0, lambda, gens, &mut memo)
}

/// Given the columns `b_λ = Σ_μ A[μ][λ] p_μ`, returns `p_μ` in the `b` basis
/// by exact Gauss-Jordan inversion of `A`. Also used with the roles of the
/// two bases swapped.
fn invert_columns(
    parts: &[Partition],
    index: &BTreeMap<Partition, usize>,
    target: Basis,
    columns: &[SymFunc],
) -> Vec<SymFunc> {
    let size = parts.len();
    let mut a = vec![vec![Rational::zero(); size]; size];
    for (j, col) in columns.iter().enumerate() {
        for (mu, c) in col.terms() {
            a[index[mu]][j] = c.clone();
        }
    }
    let mut inv: Vec<Vec<Rational>> = (0..size)
        .map(|i| (0..size).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();

    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = Rational::one() / &a[col][col];
        for k in 0..size {
            a[col][k] *= &scale;
            inv[col][k] *= &scale;
        }
        for r in 0..size {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for k in 0..size {
                if !a[col][k].is_zero() {
                    let d = &factor * &a[col][k];
                    a[r][k] -= d;
                }
                if !inv[col][k].is_zero() {
                    let d = &factor * &inv[col][k];
                    inv[r][k] -= d;
                }
            }
        }
    }

    // column μ of the inverse expresses p_μ (or the swapped basis) in `target`
    (0..size)
        .map(|j| {
            SymFunc::from_terms(
                target,
                (0..size).map(|i| (parts[i].clone(), inv[i][j].clone())),
            )
        })
        .collect()
}
