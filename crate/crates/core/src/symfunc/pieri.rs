use num_traits::Zero;

use crate::partition::Partition;
use crate::rational::int;

use super::{Basis, SymFunc};

/// Expansion of `p_i · m_μ` in the monomial basis.
///
/// Each target `ν` arises by adding `i` to exactly one part of `μ` (a zero
/// part included, which appends a new part `i`) and re-sorting. Its
/// coefficient is the number of parts of `ν` equal to the enlarged part.
/// Targets are returned in canonical partition order.
pub fn pieri_targets(mu: &Partition, i: u32) -> Vec<(Partition, u64)> {
    assert!(i >= 1, "the Newton index must be positive");
    let mut sources = mu.distinct_parts();
    sources.push(0);
    let mut out: Vec<(Partition, u64)> = sources
        .into_iter()
        .map(|v| {
            let nu = if v == 0 {
                mu.with_part(i)
            } else {
                mu.without_part(v).expect("v is a part of mu").with_part(v + i)
            };
            let a = nu.multiplicity(v + i) as u64;
            (nu, a)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// `p_i · f` for `f` in the monomial basis, by linear extension of
/// [`pieri_targets`].
///
/// Panics if `f` is not written in the monomial basis.
pub fn multiply_p(f: &SymFunc, i: u32) -> SymFunc {
    assert_eq!(f.basis(), Basis::Monomial, "multiply_p expects the monomial basis");
    let mut out = SymFunc::zero(Basis::Monomial);
    for (mu, c) in f.terms() {
        if c.is_zero() {
            continue;
        }
        for (nu, a) in pieri_targets(mu, i) {
            out.add_term(nu, c * int(a as i64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_box() {
        assert_eq!(pieri_targets(&p(&[1]), 1), vec![(p(&[2]), 1), (p(&[1, 1]), 2)]);
    }

    #[test]
    fn column_of_two() {
        assert_eq!(pieri_targets(&p(&[1, 1]), 1), vec![(p(&[2, 1]), 1), (p(&[1, 1, 1]), 3)]);
    }

    #[test]
    fn empty_partition_gives_newton_sum() {
        for k in 1..6 {
            assert_eq!(pieri_targets(&Partition::empty(), k), vec![(Partition::row(k), 1)]);
        }
    }

    #[test]
    fn collision_with_existing_part() {
        // adding 1 to the 1 in (2,1) produces a second 2
        let got = pieri_targets(&p(&[2, 1]), 1);
        assert_eq!(got, vec![(p(&[3, 1]), 1), (p(&[2, 2]), 2), (p(&[2, 1, 1]), 2)]);
    }

    #[test]
    fn multiply_examples() {
        let m1 = SymFunc::single(Basis::Monomial, 1);
        let want = SymFunc::from_terms(Basis::Monomial, [(p(&[2]), int(1)), (p(&[1, 1]), int(2))]);
        assert_eq!(multiply_p(&m1, 1), want);
        let want = SymFunc::from_terms(Basis::Monomial, [(p(&[3]), int(1)), (p(&[2, 1]), int(1))]);
        assert_eq!(multiply_p(&m1, 2), want);
        assert!(multiply_p(&SymFunc::zero(Basis::Monomial), 3).is_zero());
    }
}
