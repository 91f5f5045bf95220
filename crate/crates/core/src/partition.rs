//! Integer partitions and compositions.
//!
//! Partitions are totally ordered first by weight and then reverse
//! lexicographically, so `enumerate_partitions(4)` yields
//! `[4], [3,1], [2,2], [2,1,1], [1,1,1,1]` and a `BTreeMap` keyed by
//! partitions iterates in the same canonical order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly
    /// decreasing or contain zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts descending and drops zero entries.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`; empty for `k == 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition { parts: vec![1; k as usize] }
    }

    /// The `rows × cols` rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![cols; rows] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Distinct part values in decreasing order.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out = self.parts.clone();
        out.dedup();
        out
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        self.distinct_parts()
            .into_iter()
            .map(|v| (v, self.multiplicity(v)))
            .collect()
    }

    /// Part `k` (0-based), treating missing parts as zero.
    pub fn part(&self, k: usize) -> u32 {
        self.parts.get(k).copied().unwrap_or(0)
    }

    /// Inserts a part, keeping the sequence sorted.
    pub fn with_part(&self, value: u32) -> Self {
        if value == 0 {
            return self.clone();
        }
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p < value).unwrap_or(parts.len());
        parts.insert(pos, value);
        Partition { parts }
    }

    /// Removes one part equal to `value`, if present.
    pub fn without_part(&self, value: u32) -> Option<Self> {
        let pos = self.parts.iter().position(|&p| p == value)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0) as usize;
        let parts = (1..=first as u32)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// True when the Young diagram fits in `rows` rows of length at most `cols`.
    pub fn fits_in(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|k| other.part(k) <= self.part(k))
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.parts.clone())
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse(format!("expected partition array, got {value}")))?;
        let parts = arr
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|p| u32::try_from(p).ok())
                    .ok_or_else(|| Error::Parse(format!("bad partition entry {v}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    partitions_in_box(n, n, n as u32)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order.
pub fn partitions_in_box(n: usize, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        let mut p = max_part.min(remaining);
        while p >= 1 {
            // the remaining slots must be able to absorb what is left
            if (p as usize) * slots < remaining as usize {
                break;
            }
            prefix.push(p);
            go(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    go(n as u32, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `max_weight`, in canonical order.
pub fn partitions_up_to(max_weight: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(enumerate_partitions).collect()
}

/// An ordered tuple of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    entries: Vec<u32>,
}

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().map(|&e| e as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Every composition of `n` into exactly `parts` non-negative entries, in
/// lexicographic order of the entry vectors.
pub fn enumerate_compositions(n: usize, parts: usize) -> Vec<Composition> {
    fn go(remaining: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(Composition::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in 0..=remaining {
            prefix.push(first);
            go(remaining - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Composition::new(Vec::new()));
        }
        return out;
    }
    go(n as u32, parts, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force partition count: p(n, k) = p(n, k-1) + p(n-k, k).
    fn count_oracle(n: usize) -> usize {
        let mut table = vec![vec![0usize; n + 1]; n + 1];
        table[0].fill(1);
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if m >= k { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn zero_has_only_the_empty_partition() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn four_in_reverse_lex_order() {
        let got = enumerate_partitions(4);
        let want = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(got, want);
    }

    #[test]
    fn counts_match_recurrence() {
        for n in 0..=15 {
            assert_eq!(enumerate_partitions(n).len(), count_oracle(n), "n = {n}");
        }
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let parts = partitions_up_to(9);
        assert!(parts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,2".parse::<Partition>().is_err());
        assert!("[3,x]".parse::<Partition>().is_err());
    }

    #[test]
    fn text_format() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [3, 2,1] ".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn conjugate_and_boxes() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert!(p(&[2, 1]).fits_in(2, 2));
        assert!(!p(&[3]).fits_in(2, 2));
        assert!(!p(&[1, 1, 1]).fits_in(2, 2));
        assert_eq!(Partition::rectangle(2, 3), p(&[3, 3]));
    }

    #[test]
    fn part_insertion_and_removal() {
        let mu = p(&[3, 1, 1]);
        assert_eq!(mu.with_part(2), p(&[3, 2, 1, 1]));
        assert_eq!(mu.with_part(1), p(&[3, 1, 1, 1]));
        assert_eq!(mu.without_part(1), Some(p(&[3, 1])));
        assert_eq!(mu.without_part(2), None);
        assert_eq!(mu.multiplicity(1), 2);
    }

    #[test]
    fn compositions_counted_by_stars_and_bars() {
        // C(n + q - 1, q - 1)
        assert_eq!(enumerate_compositions(2, 3).len(), 6);
        assert_eq!(enumerate_compositions(5, 4).len(), 56);
        assert_eq!(enumerate_compositions(0, 3), vec![Composition::new(vec![0, 0, 0])]);
        assert!(enumerate_compositions(3, 0).is_empty());
        assert!(enumerate_compositions(4, 3).iter().all(|c| c.weight() == 4 && c.len() == 3));
    }

    #[test]
    fn boxed_partitions() {
        let inside = partitions_in_box(4, 2, 2);
        assert_eq!(inside, vec![p(&[2, 2])]);
        assert_eq!(partitions_in_box(3, 2, 3), vec![p(&[3]), p(&[2, 1])]);
    }
}
