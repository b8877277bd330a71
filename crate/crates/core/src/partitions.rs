//! Integer partitions, Young diagrams, skew shapes and the box sets `B_n(t)`.
//!
//! Partitions are stored as weakly decreasing vectors of positive parts.
//! The canonical order used everywhere (enumeration, set iteration, JSON
//! output) is: smaller size first, then reverse-lexicographic, so `(n)`
//! comes first among the partitions of `n` and `(1^n)` last.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on `n` for full partition enumeration.
pub const ENUMERATION_BUDGET: u64 = 250;

/// A partition of a non-negative integer: weakly decreasing positive parts.
/// The empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero;
    /// use [`Partition::try_new`] for untrusted input.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("parts must be positive and weakly decreasing")
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    /// The hook partition `(m, 1^{n-m})`; requires `1 <= m <= n`.
    pub fn hook(n: u32, m: u32) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::InvalidArgument(format!("hook({n},{m}) requires 1 <= m <= n")));
        }
        let mut parts = vec![m];
        parts.extend(std::iter::repeat_n(1, (n - m) as usize));
        Ok(Partition { parts })
    }

    /// The two-row partition `(m, n-m)`; requires `n/2 <= m <= n`.
    pub fn two_row(n: u32, m: u32) -> Result<Self> {
        if 2 * m < n || m > n {
            return Err(Error::InvalidArgument(format!(
                "two_row({n},{m}) requires n/2 <= m <= n"
            )));
        }
        if n == m {
            Ok(Partition::row(m))
        } else {
            Ok(Partition { parts: vec![m, n - m] })
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Size `|λ|`.
    pub fn n(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// Number of parts `l(λ)`.
    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First part `λ_1`, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ_i` with 1-based `i`; 0 beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            panic!("part index is 1-based");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The conjugate partition `λ'` (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.len();
        if rows == 0 {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            let count = self.parts.iter().take_while(|&&p| p as usize >= j).count();
            parts.push(count as u32);
        }
        Partition { parts }
    }

    /// Containment of Young diagrams: `μ ⊆ λ` iff `μ_i <= λ_i` for all `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(&m, &l)| m <= l)
    }

    pub fn is_hook(&self) -> bool {
        self.parts.len() <= 1 || self.parts[1] <= 1
    }

    /// Thin partitions: hooks, at most two rows, or at most two columns.
    pub fn is_thin(&self) -> bool {
        self.is_hook() || self.parts.len() <= 2 || self.first() <= 2
    }

    /// Fits in a `t × t` box: `λ_1 <= t` and `l(λ) <= t`.
    pub fn fits_in_box(&self, t: u64) -> bool {
        self.first() as u64 <= t && self.len() as u64 <= t
    }

    /// Componentwise sum `λ + μ`.
    pub fn plus(&self, other: &Partition) -> Partition {
        let len = self.parts.len().max(other.parts.len());
        let parts = (1..=len)
            .map(|i| self.part(i) + other.part(i))
            .collect();
        Partition { parts }
    }

    /// All partitions obtained by removing one removable box (`λ⁻`).
    pub fn down_neighbours(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let removable = i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1];
            if removable {
                let mut parts = self.parts.clone();
                if parts[i] == 1 {
                    parts.pop();
                } else {
                    parts[i] -= 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// All partitions obtained by adding one addable box (`λ⁺`).
    pub fn up_neighbours(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let addable = i == 0 || self.parts[i - 1] > self.parts.get(i).copied().unwrap_or(0);
            if addable {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Prepends a first row of length `r`; requires `r >= λ_1`.
    pub fn with_first_row(&self, r: u32) -> Result<Partition> {
        if r < self.first() {
            return Err(Error::InvalidArgument(format!(
                "({r},{self}) is not a partition"
            )));
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(r);
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// Drops the first row.
    pub fn without_first_row(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// All `μ ⊆ λ` with `|λ| - |μ| = k`, i.e. the inner shapes of skew
    /// shapes of size `k` inside `λ`.
    pub fn sub_partitions_removing(&self, k: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = Vec::with_capacity(self.parts.len());
        fn rec(
            lambda: &[u32],
            i: usize,
            remaining: u32,
            prev: u32,
            current: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if i == lambda.len() {
                if remaining == 0 {
                    out.push(Partition {
                        parts: current.iter().copied().take_while(|&x| x > 0).collect(),
                    });
                }
                return;
            }
            // Row i keeps mu_i boxes: lambda_{i+1..} can shed at most their total.
            let tail: u32 = lambda[i + 1..].iter().sum();
            let lo = lambda[i].saturating_sub(remaining);
            let hi = prev.min(lambda[i]);
            for keep in lo..=hi {
                let shed = lambda[i] - keep;
                if shed > remaining || remaining - shed > tail {
                    continue;
                }
                current.push(keep);
                rec(lambda, i + 1, remaining - shed, keep, current, out);
                current.pop();
            }
        }
        rec(&self.parts, 0, k, u32::MAX, &mut current, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl Ord for Partition {
    /// Canonical order: by size, then reverse-lexicographic (so `(n)` is
    /// the least partition of `n` and `(1^n)` the greatest).
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
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
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Partition;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a weakly decreasing array of positive integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(x) = seq.next_element::<u32>()? {
                    parts.push(x);
                }
                Partition::try_new(parts).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// A finite set of partitions, all of the same size, iterated in canonical
/// order. Mixing sizes is a constructor error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionSet {
    n: u64,
    elems: BTreeSet<Partition>,
}

impl PartitionSet {
    pub fn new(n: u64, elems: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let elems: BTreeSet<Partition> = elems.into_iter().collect();
        if let Some(bad) = elems.iter().find(|p| p.n() != n) {
            return Err(Error::InvalidArgument(format!(
                "partition {bad} does not have size {n}"
            )));
        }
        Ok(PartitionSet { n, elems })
    }

    pub fn empty(n: u64) -> Self {
        PartitionSet { n, elems: BTreeSet::new() }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.elems.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.elems.iter()
    }

    pub fn insert(&mut self, p: Partition) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::InvalidArgument(format!(
                "partition {p} does not have size {}",
                self.n
            )));
        }
        self.elems.insert(p);
        Ok(())
    }

    /// `A° = A ∪ A'`: closure under conjugation.
    pub fn circ_closure(&self) -> PartitionSet {
        let mut elems = self.elems.clone();
        for p in &self.elems {
            elems.insert(p.conjugate());
        }
        PartitionSet { n: self.n, elems }
    }

    pub fn is_conjugation_closed(&self) -> bool {
        self.elems.iter().all(|p| self.elems.contains(&p.conjugate()))
    }

    pub fn union(&self, other: &PartitionSet) -> Result<PartitionSet> {
        if self.n != other.n && !self.is_empty() && !other.is_empty() {
            return Err(Error::InvalidArgument("union of sets of different sizes".into()));
        }
        let mut elems = self.elems.clone();
        elems.extend(other.elems.iter().cloned());
        Ok(PartitionSet { n: self.n.max(other.n), elems })
    }

    pub fn minus(&self, other: &PartitionSet) -> PartitionSet {
        let elems = self.elems.difference(&other.elems).cloned().collect();
        PartitionSet { n: self.n, elems }
    }

    pub fn intersection(&self, other: &PartitionSet) -> PartitionSet {
        let elems = self.elems.intersection(&other.elems).cloned().collect();
        PartitionSet { n: self.n, elems }
    }

    pub fn is_subset(&self, other: &PartitionSet) -> bool {
        self.elems.is_subset(&other.elems)
    }

    pub fn to_vec(&self) -> Vec<Partition> {
        self.elems.iter().cloned().collect()
    }
}

impl FromIterator<Partition> for PartitionSet {
    /// Collects partitions into a set; panics on mixed sizes (empty input
    /// yields the empty set of size 0).
    fn from_iter<T: IntoIterator<Item = Partition>>(iter: T) -> Self {
        let elems: BTreeSet<Partition> = iter.into_iter().collect();
        let n = elems.iter().next().map(|p| p.n()).unwrap_or(0);
        PartitionSet::new(n, elems).expect("mixed partition sizes in set")
    }
}

impl Serialize for PartitionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.elems.len()))?;
        for p in &self.elems {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

/// A skew shape `[λ∖μ]` given by an outer and an inner partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!(
                "inner shape {inner} not contained in outer shape {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes `|λ| - |μ|`.
    pub fn size(&self) -> u64 {
        self.outer.n() - self.inner.n()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}∖{}]", self.outer, self.inner)
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
/// Fails with a budget error above [`ENUMERATION_BUDGET`].
pub fn all_partitions(n: u64) -> Result<Vec<Partition>> {
    all_partitions_with_budget(n, ENUMERATION_BUDGET)
}

pub fn all_partitions_with_budget(n: u64, budget: u64) -> Result<Vec<Partition>> {
    if n > budget {
        return Err(Error::BudgetExceeded(format!(
            "partition enumeration of n={n} exceeds budget {budget}"
        )));
    }
    let n = n as u32;
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    let hi = remaining.min(max_part);
    for v in (1..=hi).rev() {
        current.push(v);
        descend(remaining - v, v, current, out);
        current.pop();
    }
}

/// The box set `B_n(t)`: partitions of `n` with `λ_1 <= t` and `l(λ) <= t`.
pub fn box_set(n: u64, t: u64) -> Result<PartitionSet> {
    if n > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "box set enumeration of n={n} exceeds budget {ENUMERATION_BUDGET}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend_bounded(n as u32, (t.min(n)) as u32, t, &mut current, &mut out);
    PartitionSet::new(n, out)
}

fn descend_bounded(
    remaining: u32,
    max_part: u32,
    max_len: u64,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if current.len() as u64 >= max_len {
        return;
    }
    let hi = remaining.min(max_part);
    for v in (1..=hi).rev() {
        // Even filling every remaining row with v must reach the target.
        let rows_left = (max_len - current.len() as u64) as u32;
        if (v as u64) * (rows_left as u64) < remaining as u64 {
            break;
        }
        current.push(v);
        descend_bounded(remaining - v, v, max_len, current, out);
        current.pop();
    }
}

/// `P'(n) = P(n) ∖ {(n-1,1)}°` as an explicit set (enumerated).
pub fn prime_set(n: u64) -> Result<PartitionSet> {
    let mut set = PartitionSet::new(n, all_partitions(n)?)?;
    if n >= 2 {
        let excluded = Partition::new(vec![(n - 1) as u32, 1]);
        let conj = excluded.conjugate();
        let elems: BTreeSet<Partition> =
            set.elems.into_iter().filter(|p| *p != excluded && *p != conj).collect();
        set = PartitionSet { n, elems };
    }
    Ok(set)
}

/// Partition numbers `p(0..=n)` by Euler's pentagonal number recurrence.
pub fn partition_counts(n: u64) -> Vec<BigUint> {
    let n = n as usize;
    let mut table: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    table[0] = BigUint::one();
    for i in 1..=n {
        let mut acc = num_bigint::BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += num_bigint::BigInt::from(table[i - g1].clone()) * sign;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                acc += num_bigint::BigInt::from(table[i - g2].clone()) * sign;
            }
            k += 1;
        }
        table[i] = acc.try_into().expect("partition numbers are non-negative");
    }
    table
}

/// `p(n)`.
pub fn partition_count(n: u64) -> BigUint {
    partition_counts(n).pop().unwrap()
}

/// `|B_n(t)|` by dynamic programming, without enumerating partitions.
pub fn box_count(n: u64, t: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    if t == 0 {
        return BigUint::zero();
    }
    let n = n as usize;
    let t = t.min(n as u64) as usize;
    // dp[l][s]: partitions of s into at most l parts, parts bounded by the
    // value loop below.
    let mut dp: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n + 1]; t + 1];
    for row in dp.iter_mut() {
        row[0] = BigUint::one();
    }
    for v in 1..=t {
        for l in 1..=t {
            for s in v..=n {
                let extra = dp[l - 1][s - v].clone();
                dp[l][s] += extra;
            }
        }
    }
    dp[t][n].clone()
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The p-adic expansion `n = Σ a_i p^{e_i}` with digits `a_i ∈ [1, p-1]`
/// and strictly increasing exponents; returned as `(exponent, digit)` pairs.
pub fn p_adic_expansion(n: u64, p: u64) -> Result<Vec<(u32, u32)>> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("p-adic expansion requires n >= 1".into()));
    }
    let mut out = Vec::new();
    let mut rest = n;
    let mut exp = 0u32;
    while rest > 0 {
        let digit = (rest % p) as u32;
        if digit != 0 {
            out.push((exp, digit));
        }
        rest /= p;
        exp += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(all_partitions(0).unwrap(), vec![Partition::empty()]);
        let p5 = all_partitions(5).unwrap();
        assert_eq!(p5.len(), 7);
        assert_eq!(p5[0], pt(&[5]));
        assert_eq!(p5[1], pt(&[4, 1]));
        assert_eq!(p5[2], pt(&[3, 2]));
        assert_eq!(p5.last().unwrap(), &pt(&[1, 1, 1, 1, 1]));
        assert_eq!(all_partitions(25).unwrap().len(), 1958);
        assert!(matches!(all_partitions(251), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn enumeration_matches_pentagonal_recurrence() {
        let counts = partition_counts(40);
        for n in 0..=40u64 {
            assert_eq!(
                BigUint::from(all_partitions(n).unwrap().len()),
                counts[n as usize],
                "p({n})"
            );
        }
    }

    #[test]
    fn pentagonal_known_values() {
        let c = partition_counts(200);
        assert_eq!(c[30], BigUint::from(5604u64));
        assert_eq!(c[100], BigUint::from(190_569_292u64));
        assert_eq!(c[200], BigUint::from(3_972_999_029_388u64));
    }

    #[test]
    fn conjugation() {
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(pt(&[4, 4]).conjugate(), pt(&[2, 2, 2, 2]));
        for n in 0..=30u64 {
            for p in all_partitions(n).unwrap() {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn box_sets() {
        // B_5(4) = P(5) minus {(5), (1^5)}.
        let b = box_set(5, 4).unwrap();
        assert_eq!(b.len(), 5);
        assert!(!b.contains(&pt(&[5])));
        assert!(!b.contains(&pt(&[1, 1, 1, 1, 1])));
        // Five boxes cannot fit in a 2x2 grid.
        assert!(box_set(5, 2).unwrap().is_empty());
        // Lemma input used downstream: B_9(8) minus {(3,3,3)}.
        let b98 = box_set(9, 8).unwrap();
        assert!(b98.contains(&pt(&[3, 3, 3])));
        assert_eq!(b98.len() as u64, 30 - 2); // p(9) = 30 minus (9), (1^9)
    }

    #[test]
    fn box_sets_conjugation_closed() {
        for n in 1..=30u64 {
            for t in 1..=n {
                let b = box_set(n, t).unwrap();
                assert!(b.is_conjugation_closed(), "B_{n}({t})");
            }
        }
    }

    #[test]
    fn box_count_matches_enumeration() {
        for n in 0..=20u64 {
            for t in 0..=n + 2 {
                let expected = if n <= ENUMERATION_BUDGET {
                    box_set(n, t).map(|s| s.len() as u64).unwrap_or(0)
                } else {
                    unreachable!()
                };
                assert_eq!(box_count(n, t), BigUint::from(expected), "B_{n}({t})");
            }
        }
    }

    #[test]
    fn thin_and_hooks() {
        assert!(pt(&[4, 2]).is_thin());
        assert!(!pt(&[3, 3, 3]).is_thin());
        assert!(pt(&[6, 1, 1, 1]).is_thin());
        assert_eq!(Partition::hook(25, 19).unwrap(), pt(&[19, 1, 1, 1, 1, 1, 1]));
        assert_eq!(Partition::two_row(25, 19).unwrap(), pt(&[19, 6]));
        assert_eq!(Partition::two_row(6, 3).unwrap(), pt(&[3, 3]));
        assert!(Partition::hook(5, 0).is_err());
        assert!(Partition::two_row(10, 4).is_err());
        for n in 1..=20u64 {
            for p in all_partitions(n).unwrap() {
                assert_eq!(p.is_thin(), p.conjugate().is_thin());
            }
        }
    }

    #[test]
    fn p_adic() {
        assert_eq!(p_adic_expansion(175, 5).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(p_adic_expansion(25, 5).unwrap(), vec![(2, 1)]);
        assert_eq!(p_adic_expansion(30, 5).unwrap(), vec![(1, 1), (2, 1)]);
        assert!(p_adic_expansion(10, 4).is_err());
        for (e, d) in p_adic_expansion(9_999_999, 7).unwrap() {
            assert!((1..7).contains(&d));
            assert!(e < 10);
        }
    }

    #[test]
    fn closures_and_neighbours() {
        let a = PartitionSet::new(4, [pt(&[3, 1])]).unwrap();
        let closed = a.circ_closure();
        assert_eq!(closed.len(), 2);
        assert!(closed.contains(&pt(&[2, 1, 1])));

        let down = pt(&[2, 1]).down_neighbours();
        assert_eq!(down.len(), 2);
        assert!(down.contains(&pt(&[1, 1])));
        assert!(down.contains(&pt(&[2])));

        assert_eq!(pt(&[3, 1]).plus(&pt(&[2, 2])), pt(&[5, 3]));

        for n in 1..=15u64 {
            for lam in all_partitions(n).unwrap() {
                for mu in lam.down_neighbours() {
                    assert!(mu.up_neighbours().contains(&lam));
                }
                for nu in lam.up_neighbours() {
                    assert!(nu.down_neighbours().contains(&lam));
                }
            }
        }
    }

    #[test]
    fn mixed_sizes_rejected() {
        assert!(PartitionSet::new(4, [pt(&[3, 1]), pt(&[3, 2])]).is_err());
        let mut s = PartitionSet::empty(4);
        assert!(s.insert(pt(&[5])).is_err());
    }

    #[test]
    fn skew_shapes() {
        let s = SkewShape::new(pt(&[4, 2]), pt(&[2, 1])).unwrap();
        assert_eq!(s.size(), 3);
        assert!(SkewShape::new(pt(&[2, 1]), pt(&[3])).is_err());
    }

    #[test]
    fn sub_partitions() {
        let lam = pt(&[3, 2]);
        let subs = lam.sub_partitions_removing(2);
        // (3,2) minus 2 boxes: (3), (2,1)
        assert_eq!(subs, vec![pt(&[3]), pt(&[2, 1])]);
        let subs0 = lam.sub_partitions_removing(0);
        assert_eq!(subs0, vec![lam.clone()]);
    }

    #[test]
    fn serde_roundtrip() {
        let p = Partition::hook(25, 19).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[19,1,1,1,1,1,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = all_partitions(6).unwrap();
        let sorted = {
            let mut s = v.clone();
            s.sort();
            s
        };
        assert_eq!(v, sorted);
        v.reverse();
        v.sort();
        assert_eq!(v, sorted);
    }

    #[test]
    fn prime_set_p5() {
        let s = prime_set(5).unwrap();
        assert_eq!(s.len(), 5);
        assert!(!s.contains(&pt(&[4, 1])));
        assert!(!s.contains(&pt(&[2, 1, 1, 1])));
        assert!(s.contains(&pt(&[5])));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_partition() -> impl Strategy<Value = Partition> {
            proptest::collection::vec(1u32..=9, 0..=9).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(v)
            })
        }

        proptest! {
            #[test]
            fn conjugation_involution(p in arb_partition()) {
                let c = p.conjugate();
                prop_assert_eq!(c.conjugate(), p.clone());
                prop_assert_eq!(c.n(), p.n());
                prop_assert_eq!(p.is_thin(), c.is_thin());
                prop_assert_eq!(p.first(), c.len());
            }

            #[test]
            fn neighbour_duality(p in arb_partition()) {
                for down in p.down_neighbours() {
                    prop_assert!(down.up_neighbours().contains(&p));
                    prop_assert!(p.contains(&down));
                }
            }

            #[test]
            fn p_adic_reconstruction(n in 1u64..1_000_000_000_000, pi in 0usize..4) {
                let p = [3u64, 5, 7, 11][pi];
                let digits = p_adic_expansion(n, p).unwrap();
                let mut total = 0u64;
                let mut last_exp = None;
                for (e, d) in digits {
                    prop_assert!(d >= 1 && (d as u64) < p);
                    if let Some(prev) = last_exp {
                        prop_assert!(e > prev);
                    }
                    last_exp = Some(e);
                    total += d as u64 * p.pow(e);
                }
                prop_assert_eq!(total, n);
            }
        }
    }
}
