//! Littlewood–Richardson coefficients by explicit filling enumeration,
//! iterated coefficients, the `⋆` operator on partition sets, and the
//! mixed-tuple restriction sets `D(q, m, B)`.
//!
//! A filling of a skew shape is admissible when rows weakly increase
//! left-to-right, columns strictly increase downward, and the word read
//! right-to-left, top-to-bottom is good: every entry `v > 1` must at each
//! point be preceded by strictly more `v-1`s than `v`s.

use std::collections::BTreeMap;

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::partitions::{Partition, PartitionSet, SkewShape};

/// Cap on `|λ|` for enumerative `⋆` / `D`-set computations.
#[derive(Clone, Copy, Debug)]
pub struct StarBudget {
    pub max_n: u64,
}

impl Default for StarBudget {
    fn default() -> Self {
        StarBudget { max_n: 64 }
    }
}

/// Whether every element of the sequence satisfies the prefix-count
/// condition (each `v > 1` preceded by more `v-1`s than `v`s).
pub fn is_good_sequence(seq: &[u32]) -> bool {
    let max = seq.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; max + 1];
    for &c in seq {
        if c == 0 {
            return false;
        }
        if c > 1 && counts[c as usize - 1] <= counts[c as usize] {
            return false;
        }
        counts[c as usize] += 1;
    }
    true
}

/// Cells of a skew shape in reading order: top to bottom, right to left.
/// Each entry is (row, column), 0-based in the outer diagram.
fn reading_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for r in 0..outer.len() as usize {
        let lo = inner.part(r + 1) as usize;
        let hi = outer.part(r + 1) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    cells
}

struct FillState<'a> {
    cells: &'a [(usize, usize)],
    /// entries[r][c] for placed cells (0 = unfilled)
    grid: Vec<Vec<u32>>,
    counts: Vec<u64>,
    target: Option<&'a [u32]>,
}

fn dfs_fill(state: &mut FillState, idx: usize, out: &mut BTreeMap<Vec<u64>, u64>) {
    if idx == state.cells.len() {
        let weight: Vec<u64> =
            state.counts.iter().copied().take_while(|&c| c > 0).collect();
        *out.entry(weight).or_insert(0) += 1;
        return;
    }
    let (r, c) = state.cells[idx];
    // Column strictness caps the entry by its row index; the good-word
    // condition never allows more.
    let max_v = (r + 1).min(state.counts.len()) as u32;
    for v in 1..=max_v {
        let vi = v as usize;
        if let Some(t) = state.target {
            if state.counts[vi - 1] >= t[vi - 1] as u64 {
                continue;
            }
        }
        // good word
        if v > 1 && state.counts[vi - 2] <= state.counts[vi - 1] {
            continue;
        }
        // row weakly increases to the right; the right neighbour was placed earlier
        if c + 1 < state.grid[r].len() && state.grid[r][c + 1] != 0 && v > state.grid[r][c + 1] {
            continue;
        }
        // column strictly increases downward
        if r > 0 && c < state.grid[r - 1].len() && state.grid[r - 1][c] != 0
            && v <= state.grid[r - 1][c]
        {
            continue;
        }
        state.grid[r][c] = v;
        state.counts[vi - 1] += 1;
        dfs_fill(state, idx + 1, out);
        state.counts[vi - 1] -= 1;
        state.grid[r][c] = 0;
    }
}

/// Counts of admissible fillings of the skew shape, grouped by weight.
/// Every weight that occurs is automatically a partition.
pub fn filling_weight_counts(shape: &SkewShape) -> BTreeMap<Partition, u64> {
    let cells = reading_cells(shape.outer(), shape.inner());
    let rows = shape.outer().len() as usize;
    let grid = (0..rows)
        .map(|r| vec![0u32; shape.outer().part(r + 1) as usize])
        .collect();
    let mut state = FillState {
        cells: &cells,
        grid,
        counts: vec![0; cells.len().max(1)],
        target: None,
    };
    let mut raw = BTreeMap::new();
    dfs_fill(&mut state, 0, &mut raw);
    raw.into_iter()
        .map(|(w, c)| {
            let parts: Vec<u32> = w.iter().map(|&x| x as u32).collect();
            (Partition::new(parts), c)
        })
        .collect()
}

fn filling_count_of_weight(outer: &Partition, inner: &Partition, weight: &Partition) -> u64 {
    let cells = reading_cells(outer, inner);
    if cells.len() as u64 != weight.n() {
        return 0;
    }
    if cells.is_empty() {
        return 1;
    }
    let rows = outer.len() as usize;
    let grid = (0..rows).map(|r| vec![0u32; outer.part(r + 1) as usize]).collect();
    let mut padded: Vec<u32> = weight.parts().to_vec();
    padded.resize(cells.len(), 0);
    let mut state = FillState {
        cells: &cells,
        grid,
        counts: vec![0; cells.len()],
        target: Some(&padded),
    };
    let mut raw = BTreeMap::new();
    dfs_fill(&mut state, 0, &mut raw);
    let key: Vec<u64> = weight.parts().iter().map(|&x| x as u64).collect();
    raw.get(&key).copied().unwrap_or(0)
}

static LR_CACHE: Lazy<DashMap<(Partition, Partition, Partition), u64>> =
    Lazy::new(DashMap::new);

/// The Littlewood–Richardson coefficient `c^λ_{μν}`; symmetric in `μ, ν`.
/// Requires `|λ| = |μ| + |ν|`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.n() != mu.n() + nu.n() {
        return Err(Error::InvalidArgument(format!(
            "|{lambda}| != |{mu}| + |{nu}|"
        )));
    }
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (lambda.clone(), a.clone(), b.clone());
    if let Some(v) = LR_CACHE.get(&key) {
        return Ok(*v);
    }
    // Fill the smaller skew: use the larger partition as the inner shape.
    let value = if !lambda.contains(b) {
        if !lambda.contains(a) {
            0
        } else {
            filling_count_of_weight(lambda, a, b)
        }
    } else {
        filling_count_of_weight(lambda, b, a)
    };
    LR_CACHE.insert(key, value);
    Ok(value)
}

/// The set of weights of admissible fillings of a skew shape; nonempty for
/// every nonempty shape.
pub fn lr_weights(shape: &SkewShape, budget: StarBudget) -> Result<PartitionSet> {
    if shape.size() > budget.max_n {
        return Err(Error::BudgetExceeded(format!(
            "skew shape with {} boxes exceeds budget {}",
            shape.size(),
            budget.max_n
        )));
    }
    PartitionSet::new(shape.size(), filling_weight_counts(shape).into_keys())
}

/// All `λ` with `c^λ_{γμ} > 0`, together with the coefficients.
pub fn expand_by(gamma: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let total = gamma.n() + mu.n();
    let max_first = gamma.first() as u64 + mu.first() as u64;
    let max_len = gamma.len() as u64 + mu.len() as u64;
    let mut out = Vec::new();
    for lambda in super_partitions(gamma, mu.n() as u32, max_first as u32, max_len as u32) {
        debug_assert_eq!(lambda.n(), total);
        let c = lr_coefficient(&lambda, gamma, mu).expect("sizes consistent by construction");
        if c > 0 {
            out.push((lambda, c));
        }
    }
    out
}

/// All partitions `λ ⊇ γ` with `|λ| = |γ| + k`, `λ_1 <= max_first`,
/// `l(λ) <= max_len`.
fn super_partitions(gamma: &Partition, k: u32, max_first: u32, max_len: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        gamma: &Partition,
        i: usize,
        remaining: u32,
        prev: u32,
        max_len: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 && i >= gamma.len() as usize {
            out.push(Partition::new(current.clone()));
            return;
        }
        if i >= max_len as usize {
            return;
        }
        let base = gamma.part(i + 1);
        let hi = prev.min(base + remaining);
        let lo = base.max(1);
        for v in lo..=hi {
            current.push(v);
            rec(gamma, i + 1, remaining - (v - base), v, max_len, current, out);
            current.pop();
        }
    }
    rec(gamma, 0, k, max_first, max_len, &mut current, &mut out);
    out
}

/// Iterated coefficient `c^λ_{μ^1,…,μ^r}`; invariant under permutation of
/// the factors. Requires `|λ| = Σ |μ^i|`.
pub fn iterated_lr(lambda: &Partition, factors: &[Partition]) -> Result<u64> {
    let total: u64 = factors.iter().map(|f| f.n()).sum();
    if lambda.n() != total {
        return Err(Error::InvalidArgument(format!(
            "|{lambda}| != total factor size {total}"
        )));
    }
    let mut order: Vec<&Partition> = factors.iter().collect();
    order.sort_by_key(|f| std::cmp::Reverse(f.n()));
    let mut states: BTreeMap<Partition, u64> = BTreeMap::new();
    states.insert(Partition::empty(), 1);
    for mu in order {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (gamma, mult) in &states {
            for (nu, c) in expand_by(gamma, mu) {
                if lambda.contains(&nu) {
                    *next.entry(nu).or_insert(0) += mult * c;
                }
            }
        }
        states = next;
    }
    Ok(states.get(lambda).copied().unwrap_or(0))
}

/// `A ⋆ B`: partitions of `n + m` admitting a positive coefficient with one
/// factor from each set.
pub fn star(a: &PartitionSet, b: &PartitionSet, budget: StarBudget) -> Result<PartitionSet> {
    let total = a.n() + b.n();
    if total > budget.max_n {
        return Err(Error::BudgetExceeded(format!(
            "star product of total size {total} exceeds budget {}",
            budget.max_n
        )));
    }
    let mut out = PartitionSet::empty(total);
    for mu in a.iter() {
        for nu in b.iter() {
            for (lambda, _) in expand_by(mu, nu) {
                out.insert(lambda)?;
            }
        }
    }
    Ok(out)
}

/// `D(q, m, B)`: partitions of `qm` admitting a positive iterated
/// coefficient with `q` factors from `B`, not all equal. Empty for a
/// singleton `B`.
pub fn d_set(q: u32, m: u64, b: &PartitionSet, budget: StarBudget) -> Result<PartitionSet> {
    if q < 2 {
        return Err(Error::InvalidArgument("d_set requires q >= 2".into()));
    }
    if b.n() != m {
        return Err(Error::InvalidArgument(format!(
            "set of partitions of {} passed for m = {m}",
            b.n()
        )));
    }
    let total = q as u64 * m;
    if total > budget.max_n {
        return Err(Error::BudgetExceeded(format!(
            "d_set of total size {total} exceeds budget {}",
            budget.max_n
        )));
    }
    let elems = b.to_vec();
    let mut out = PartitionSet::empty(total);
    let mut tuple: Vec<usize> = Vec::new();
    // Multisets of size q from B, skipping the constant ones.
    fn rec(
        elems: &[Partition],
        q: u32,
        start: usize,
        tuple: &mut Vec<usize>,
        out: &mut PartitionSet,
    ) -> Result<()> {
        if tuple.len() == q as usize {
            if tuple.iter().all(|&i| i == tuple[0]) {
                return Ok(());
            }
            let mut states: BTreeMap<Partition, u64> = BTreeMap::new();
            states.insert(Partition::empty(), 1);
            for &i in tuple.iter() {
                let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
                for (gamma, mult) in &states {
                    for (nu, c) in expand_by(gamma, &elems[i]) {
                        *next.entry(nu).or_insert(0) += mult * c;
                    }
                }
                states = next;
            }
            for lambda in states.keys() {
                out.insert(lambda.clone())?;
            }
            return Ok(());
        }
        for i in start..elems.len() {
            tuple.push(i);
            rec(elems, q, i, tuple, out)?;
            tuple.pop();
        }
        Ok(())
    }
    rec(&elems, q, 0, &mut tuple, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{all_partitions, box_set};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn good_sequences() {
        assert!(is_good_sequence(&[1, 1, 2, 2, 3]));
        assert!(!is_good_sequence(&[2, 1]));
        assert!(is_good_sequence(&[1, 2, 1, 2, 3]));
        assert!(is_good_sequence(&[]));
        assert!(!is_good_sequence(&[1, 2, 2]));
    }

    #[test]
    fn lr_basics() {
        assert_eq!(lr_coefficient(&pt(&[2, 1]), &pt(&[2]), &pt(&[1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&pt(&[4, 2]), &pt(&[2, 1]), &pt(&[2, 1])).unwrap(), 1);
        let lam = pt(&[3, 2, 1]);
        assert_eq!(lr_coefficient(&lam, &lam, &Partition::empty()).unwrap(), 1);
        assert!(lr_coefficient(&pt(&[3]), &pt(&[1]), &pt(&[1])).is_err());
        // classic multiplicity-2 case: s_{21}·s_{21} contains 2·s_{321}
        assert_eq!(
            lr_coefficient(&pt(&[3, 2, 1]), &pt(&[2, 1]), &pt(&[2, 1])).unwrap(),
            2
        );
    }

    #[test]
    fn lr_weights_examples() {
        let shape = SkewShape::new(pt(&[2, 1]), pt(&[1])).unwrap();
        let w = lr_weights(&shape, StarBudget::default()).unwrap();
        assert_eq!(w.to_vec(), vec![pt(&[2]), pt(&[1, 1])]);

        let row = SkewShape::new(pt(&[6]), Partition::empty()).unwrap();
        assert_eq!(lr_weights(&row, StarBudget::default()).unwrap().to_vec(), vec![pt(&[6])]);

        let col = SkewShape::new(pt(&[1, 1, 1]), Partition::empty()).unwrap();
        assert_eq!(
            lr_weights(&col, StarBudget::default()).unwrap().to_vec(),
            vec![pt(&[1, 1, 1])]
        );

        // every nonempty skew shape admits at least one filling
        for n in 1..=6u64 {
            for lam in all_partitions(n).unwrap() {
                for k in 1..=n.min(4) {
                    for mu in lam.sub_partitions_removing(k as u32) {
                        let s = SkewShape::new(lam.clone(), mu).unwrap();
                        assert!(!lr_weights(&s, StarBudget::default()).unwrap().is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn lr_symmetry_and_conjugation() {
        for n in 2..=8u64 {
            for lam in all_partitions(n).unwrap() {
                for m in 1..n {
                    for mu in all_partitions(m).unwrap() {
                        for nu in all_partitions(n - m).unwrap() {
                            let c = lr_coefficient(&lam, &mu, &nu).unwrap();
                            let c_sym = lr_coefficient(&lam, &nu, &mu).unwrap();
                            assert_eq!(c, c_sym);
                            let c_conj = lr_coefficient(
                                &lam.conjugate(),
                                &mu.conjugate(),
                                &nu.conjugate(),
                            )
                            .unwrap();
                            assert_eq!(c, c_conj);
                            if c > 0 {
                                assert!(lam.first() <= mu.first() + nu.first());
                                assert!(lam.len() <= mu.len() + nu.len());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn iterated_examples() {
        let lam = pt(&[3, 2]);
        assert_eq!(iterated_lr(&lam, std::slice::from_ref(&lam)).unwrap(), 1);
        assert_eq!(
            iterated_lr(&pt(&[4, 1, 1]), &[pt(&[2, 1]), pt(&[2, 1])]).unwrap(),
            1
        );
        // number of standard Young tableaux of shape (2,2)
        assert_eq!(
            iterated_lr(&pt(&[2, 2]), &[pt(&[1]), pt(&[1]), pt(&[1]), pt(&[1])]).unwrap(),
            2
        );
        assert!(iterated_lr(&pt(&[3]), &[pt(&[1])]).is_err());
    }

    #[test]
    fn iterated_permutation_invariance() {
        let factors = [pt(&[2, 1]), pt(&[2]), pt(&[1, 1])];
        for lam in all_partitions(7).unwrap() {
            let a = iterated_lr(&lam, &factors).unwrap();
            let b = iterated_lr(&lam, &[pt(&[1, 1]), pt(&[2, 1]), pt(&[2])]).unwrap();
            let c = iterated_lr(&lam, &[pt(&[2]), pt(&[1, 1]), pt(&[2, 1])]).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
    }

    #[test]
    fn lr_dimension_sum_identity() {
        // Σ_λ c^λ_{μν} f^λ = C(n, |μ|) f^μ f^ν, with degrees from the
        // hook length formula — an independent route.
        use crate::characters::character_degree;
        use num_bigint::BigUint;
        use num_traits::One;
        for n in 2..=8u64 {
            for m in 1..n {
                let mut binom = BigUint::one();
                for i in 0..m {
                    binom = binom * BigUint::from(n - i) / BigUint::from(i + 1);
                }
                for mu in all_partitions(m).unwrap() {
                    for nu in all_partitions(n - m).unwrap() {
                        let mut total = BigUint::default();
                        for (lam, c) in expand_by(&mu, &nu) {
                            total += BigUint::from(c) * character_degree(&lam);
                        }
                        let expected =
                            &binom * character_degree(&mu) * character_degree(&nu);
                        assert_eq!(total, expected, "μ={mu}, ν={nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let single = PartitionSet::new(1, [pt(&[1])]).unwrap();
        let s = star(&single, &single, StarBudget::default()).unwrap();
        assert_eq!(s.to_vec(), vec![pt(&[2]), pt(&[1, 1])]);

        let b32 = box_set(3, 2).unwrap();
        let prod = star(&b32, &b32, StarBudget::default()).unwrap();
        assert_eq!(prod, box_set(6, 4).unwrap());

        let b73 = box_set(7, 3).unwrap();
        let b11 = box_set(1, 1).unwrap();
        let prod = star(&b73, &b11, StarBudget::default()).unwrap();
        assert_ne!(prod, box_set(8, 4).unwrap());
        assert!(!prod.contains(&pt(&[4, 4])));
    }

    #[test]
    fn d_set_examples() {
        let p2 = PartitionSet::new(2, all_partitions(2).unwrap()).unwrap();
        let d = d_set(2, 2, &p2, StarBudget::default()).unwrap();
        assert_eq!(d.to_vec(), vec![pt(&[3, 1]), pt(&[2, 1, 1])]);

        let singleton = PartitionSet::new(3, [pt(&[2, 1])]).unwrap();
        assert!(d_set(3, 3, &singleton, StarBudget::default()).unwrap().is_empty());
    }

    #[test]
    fn budget_errors() {
        let p2 = PartitionSet::new(2, all_partitions(2).unwrap()).unwrap();
        let tight = StarBudget { max_n: 3 };
        assert!(matches!(star(&p2, &p2, tight), Err(Error::BudgetExceeded(_))));
        assert!(matches!(d_set(2, 2, &p2, tight), Err(Error::BudgetExceeded(_))));
    }
}
