//! Littlewood–Richardson coefficients by enumerating LR tableaux.
//!
//! The boxes of `μ` are added to `λ` one label at a time: label `k` forms a
//! horizontal strip of `μ_k` boxes, and the reverse reading word must stay a
//! lattice word, i.e. through every row the number of `k`s placed so far
//! never exceeds the number of `k-1`s placed in the rows strictly above.

use std::collections::BTreeMap;

use crate::partition::Partition;

/// `s_λ · s_μ = Σ_ν c^ν_{λμ} s_ν`, keeping only `ν` that fit in
/// `bound = (rows, cols)` when a bound is given.
pub fn lr_product(lambda: &Partition, mu: &Partition, bound: Option<(usize, u32)>) -> BTreeMap<Partition, u64> {
    let (max_rows, max_cols) = bound.unwrap_or((lambda.len() + mu.len(), lambda.part(0) + mu.part(0)));
    let mut out = BTreeMap::new();
    if !lambda.fits_in(max_rows, max_cols) {
        return out;
    }
    let mut shape: Vec<u32> = lambda.parts().to_vec();
    shape.resize(max_rows, 0);
    let prev_counts = vec![0u32; max_rows];
    place_label(0, mu.parts(), &mut shape, &prev_counts, max_cols, &mut out);
    out
}

/// A single coefficient `c^ν_{λμ}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() + mu.weight() != nu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    lr_product(lambda, mu, Some((nu.len(), nu.part(0))))
        .get(nu)
        .copied()
        .unwrap_or(0)
}

fn place_label(
    label: usize,
    mu: &[u32],
    shape: &mut Vec<u32>,
    prev_counts: &[u32],
    max_cols: u32,
    out: &mut BTreeMap<Partition, u64>,
) {
    if label == mu.len() {
        *out.entry(Partition::from_unsorted(shape.clone())).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let mut counts = vec![0u32; shape.len()];
    fill_rows(0, mu[label], label, &old, prev_counts, 0, 0, max_cols, &mut counts, shape, mu, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_rows(
    row: usize,
    remaining: u32,
    label: usize,
    old: &[u32],
    prev_counts: &[u32],
    placed_through_prev_row: u32,
    prev_label_above: u32,
    max_cols: u32,
    counts: &mut Vec<u32>,
    shape: &mut Vec<u32>,
    mu: &[u32],
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let next_prev = counts.clone();
        place_label(label + 1, mu, shape, &next_prev, max_cols, out);
        return;
    }
    if row == old.len() {
        return;
    }
    // horizontal strip: the new row end may not pass the old end of the row above
    let ceiling = if row == 0 { max_cols } else { old[row - 1] };
    let room = ceiling.saturating_sub(old[row]);
    // lattice condition against the previous label in rows strictly above
    let lattice = if label == 0 {
        u32::MAX
    } else {
        prev_label_above.saturating_sub(placed_through_prev_row)
    };
    let most = remaining.min(room).min(lattice);
    let above_next = prev_label_above + if label == 0 { 0 } else { prev_counts[row] };
    for a in (0..=most).rev() {
        counts[row] = a;
        shape[row] = old[row] + a;
        fill_rows(
            row + 1,
            remaining - a,
            label,
            old,
            prev_counts,
            placed_through_prev_row + a,
            above_next,
            max_cols,
            counts,
            shape,
            mu,
            out,
        );
    }
    counts[row] = 0;
    shape[row] = old[row];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn product(a: &[u32], b: &[u32]) -> Vec<(Partition, u64)> {
        lr_product(&p(a), &p(b), None).into_iter().collect()
    }

    #[test]
    fn box_times_box() {
        assert_eq!(product(&[1], &[1]), vec![(p(&[2]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn classic_coefficient_two() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        let full = lr_product(&p(&[2, 1]), &p(&[2, 1]), None);
        let total: u64 = full.values().sum();
        // s21*s21 expands into 8 terms counted with multiplicity
        assert_eq!(total, 8);
        assert_eq!(full.len(), 7);
    }

    #[test]
    fn unit_is_identity() {
        assert_eq!(product(&[3, 1], &[]), vec![(p(&[3, 1]), 1)]);
        assert_eq!(product(&[], &[2, 2]), vec![(p(&[2, 2]), 1)]);
    }

    #[test]
    fn rectangle_bound_truncates() {
        let got = lr_product(&p(&[2]), &p(&[2]), Some((1, 2)));
        assert!(got.is_empty());
        let got = lr_product(&p(&[1]), &p(&[1]), Some((2, 2)));
        assert_eq!(got.len(), 2);
    }
}
