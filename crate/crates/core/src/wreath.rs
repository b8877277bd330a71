//! The Sylow p-subgroups `P_n` of the symmetric group for odd `p`, built
//! as iterated wreath products of cyclic groups of order `p`, together
//! with their linear characters.
//!
//! `P_{p^k} = P_{p^{k-1}} ≀ P_p`; for general `n` with p-adic expansion
//! `n = Σ a_i p^{e_i}`, `P_n` is the direct product of `a_i` copies of
//! `P_{p^{e_i}}`. Linear characters of `P_{p^k}` are labelled by sequences
//! `s ∈ [0,p)^k` via the recursion `φ(s) = X(φ(s⁻); φ_{s_k})`; linear
//! characters of `P_n` by multisets of such sequences matching the p-adic
//! digits of `n`.
//!
//! Conventions (recorded once, arbitrary but fixed): the generator of each
//! top-level cyclic factor acts on blocks as the cycle `(1 2 … p)`, and an
//! element `(g_1,…,g_p; h)` sends the point `(block b, position x)` to
//! `(h(b), g_{h(b)}(x))`. All downstream quantities depend only on cycle
//! types and homomorphism values, so they are convention-independent; a
//! homomorphism test guards this.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::partitions::{is_prime, p_adic_expansion, Partition};

/// Default cap on the number of group elements walked per prime-power
/// factor. Overridable through the `SYLOW_BUDGET` environment variable in
/// the CLI.
pub const DEFAULT_GROUP_BUDGET: u64 = 10_000_000;

fn require_odd_prime(p: u32) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::InvalidArgument(format!("p = {p} must be an odd prime")));
    }
    Ok(())
}

/// Label `s ∈ [0,p)^k` for a linear character of `P_{p^k}`. The empty
/// sequence (`k = 0`) labels the trivial character of `P_1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceLabel {
    p: u32,
    entries: Vec<u32>,
}

impl SequenceLabel {
    pub fn new(p: u32, entries: Vec<u32>) -> Result<Self> {
        require_odd_prime(p)?;
        if let Some(&bad) = entries.iter().find(|&&e| e >= p) {
            return Err(Error::InvalidArgument(format!(
                "sequence entry {bad} out of range [0, {p})"
            )));
        }
        Ok(SequenceLabel { p, entries })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Degree of the permutation group: `p^k`.
    pub fn n(&self) -> u64 {
        (self.p as u64).pow(self.k())
    }

    pub fn is_all_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// 1-based positions of the nonzero entries.
    pub fn support(&self) -> Vec<u32> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// The suffix `(s_{j+1}, …, s_k)`.
    pub fn suffix_after(&self, j: u32) -> SequenceLabel {
        SequenceLabel { p: self.p, entries: self.entries[j as usize..].to_vec() }
    }
}

impl fmt::Display for SequenceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SequenceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Label for a linear character of `P_n`, `n` arbitrary: one sequence per
/// p-adic digit copy, with sequence lengths matching the expansion.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetLabel {
    p: u32,
    n: u64,
    seqs: Vec<SequenceLabel>,
}

impl MultisetLabel {
    pub fn new(p: u32, n: u64, mut seqs: Vec<SequenceLabel>) -> Result<Self> {
        require_odd_prime(p)?;
        if seqs.iter().any(|s| s.p != p) {
            return Err(Error::InvalidArgument("mixed primes in multiset label".into()));
        }
        let expansion = p_adic_expansion(n, p as u64)?;
        let mut expected: BTreeMap<u32, u32> = BTreeMap::new();
        for (e, a) in expansion {
            expected.insert(e, a);
        }
        let mut got: BTreeMap<u32, u32> = BTreeMap::new();
        for s in &seqs {
            *got.entry(s.k()).or_insert(0) += 1;
        }
        if got != expected {
            return Err(Error::InvalidArgument(format!(
                "sequence lengths do not match the p-adic expansion of {n} (expected {expected:?}, got {got:?})"
            )));
        }
        seqs.sort_by_key(|s| (s.k(), s.entries().to_vec()));
        Ok(MultisetLabel { p, n, seqs })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn seqs(&self) -> &[SequenceLabel] {
        &self.seqs
    }

    pub fn r(&self) -> u32 {
        self.seqs.len() as u32
    }

    pub fn is_trivial(&self) -> bool {
        self.seqs.iter().all(|s| s.is_all_zero())
    }
}

impl fmt::Display for MultisetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.seqs.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultisetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A parsed character label: either of a prime-power group or a composite
/// direct product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Label {
    PrimePower(SequenceLabel),
    Composite(MultisetLabel),
}

impl Label {
    pub fn p(&self) -> u32 {
        match self {
            Label::PrimePower(s) => s.p(),
            Label::Composite(m) => m.p(),
        }
    }

    pub fn n(&self) -> u64 {
        match self {
            Label::PrimePower(s) => s.n(),
            Label::Composite(m) => m.n(),
        }
    }

    /// Builds a label from `p`, `n` and the sequence text (entries of one
    /// sequence, or `|`/`,`-separated parenthesised groups).
    pub fn from_parts(p: u32, n: u64, text: &str) -> Result<Label> {
        let groups = parse_sequence_groups(text)?;
        let seqs: Vec<SequenceLabel> = groups
            .into_iter()
            .map(|g| SequenceLabel::new(p, g))
            .collect::<Result<_>>()?;
        if seqs.len() == 1 && seqs[0].n() == n {
            let expansion = p_adic_expansion(n, p as u64)?;
            if expansion.len() == 1 && expansion[0].1 == 1 {
                return Ok(Label::PrimePower(seqs.into_iter().next().unwrap()));
            }
        }
        Ok(Label::Composite(MultisetLabel::new(p, n, seqs)?))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::PrimePower(s) => write!(f, "{s}"),
            Label::Composite(m) => write!(f, "{m}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Prime-power form `"5:1,0"`; composite form `"5@30:(1,0)|(2)"`.
    fn from_str(text: &str) -> Result<Label> {
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("label `{text}` missing `:`")))?;
        let parse_num = |s: &str| -> Result<u64> {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad number `{s}` in label `{text}`")))
        };
        if let Some((p_str, n_str)) = head.split_once('@') {
            let p = parse_num(p_str)? as u32;
            let n = parse_num(n_str)?;
            Label::from_parts(p, n, body)
        } else {
            let p = parse_num(head)? as u32;
            let groups = parse_sequence_groups(body)?;
            if groups.len() != 1 {
                return Err(Error::Parse(format!(
                    "prime-power label `{text}` must contain a single sequence"
                )));
            }
            let seq = SequenceLabel::new(p, groups.into_iter().next().unwrap())?;
            Ok(Label::PrimePower(seq))
        }
    }
}

/// Splits `"(0,0,0)|(0,0),(1,0)"` or `"0,1,0"` into entry vectors. Group
/// separators between parenthesised groups may be `|` or `,`.
fn parse_sequence_groups(text: &str) -> Result<Vec<Vec<u32>>> {
    let text = text.trim();
    if !text.contains('(') {
        if text.is_empty() {
            return Ok(vec![Vec::new()]);
        }
        let entries = text
            .split(',')
            .map(|e| {
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad sequence entry `{e}`")))
            })
            .collect::<Result<Vec<u32>>>()?;
        return Ok(vec![entries]);
    }
    let mut groups = Vec::new();
    let mut rest = text;
    while let Some(start) = rest.find('(') {
        let end = rest[start..]
            .find(')')
            .map(|i| start + i)
            .ok_or_else(|| Error::Parse(format!("unbalanced parens in `{text}`")))?;
        let inner = rest[start + 1..end].trim();
        if inner.is_empty() {
            groups.push(Vec::new());
        } else {
            let entries = inner
                .split(',')
                .map(|e| {
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad sequence entry `{e}`")))
                })
                .collect::<Result<Vec<u32>>>()?;
            groups.push(entries);
        }
        rest = &rest[end + 1..];
    }
    Ok(groups)
}

/// An element of `P_{p^k}` as a labelled p-ary tree: a leaf is a power of
/// the generator of `P_p`; a node is `p` elements of `P_{p^{k-1}}` plus a
/// power of the top generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WreathElement {
    /// The unique element of `P_1` (k = 0).
    Trivial,
    /// `c^j` in `P_p`.
    Leaf(u32),
    /// `(g_1,…,g_p; c^j)`.
    Node { top: u32, children: Vec<WreathElement> },
}

impl WreathElement {
    pub fn depth(&self) -> u32 {
        match self {
            WreathElement::Trivial => 0,
            WreathElement::Leaf(_) => 1,
            WreathElement::Node { children, .. } => 1 + children[0].depth(),
        }
    }

    pub fn identity(p: u32, k: u32) -> WreathElement {
        match k {
            0 => WreathElement::Trivial,
            1 => WreathElement::Leaf(0),
            _ => WreathElement::Node {
                top: 0,
                children: vec![WreathElement::identity(p, k - 1); p as usize],
            },
        }
    }

    /// Group multiplication matching [`WreathElement::to_permutation`]:
    /// `(a·b).perm = a.perm ∘ b.perm` (apply `b` first).
    pub fn mul(&self, other: &WreathElement, p: u32) -> WreathElement {
        match (self, other) {
            (WreathElement::Trivial, WreathElement::Trivial) => WreathElement::Trivial,
            (WreathElement::Leaf(a), WreathElement::Leaf(b)) => {
                WreathElement::Leaf((a + b) % p)
            }
            (
                WreathElement::Node { top: j1, children: g },
                WreathElement::Node { top: j2, children: h },
            ) => {
                // (g; c^{j1})(g'; c^{j2}) = (g · (c^{j1}·g'); c^{j1+j2})
                // where (c^j · g')_b = g'_{b - j}.
                let children = (0..p as usize)
                    .map(|b| {
                        // h^{-1}(b) with h(b) = b + j1 mod p
                        let src = (b + (p - j1) as usize) % p as usize;
                        g[b].mul(&h[src], p)
                    })
                    .collect();
                WreathElement::Node { top: (j1 + j2) % p, children }
            }
            _ => panic!("mixed depths in wreath multiplication"),
        }
    }

    /// The permutation of `[p^k]` (0-based images). The point
    /// `b·p^{k-1} + x` goes to `h(b)·p^{k-1} + g_{h(b)}(x)` with
    /// `h(b) = b + j mod p`.
    pub fn to_permutation(&self, p: u32) -> Vec<u32> {
        match self {
            WreathElement::Trivial => vec![0],
            WreathElement::Leaf(j) => (0..p).map(|i| (i + j) % p).collect(),
            WreathElement::Node { top, children } => {
                let child_perms: Vec<Vec<u32>> =
                    children.iter().map(|c| c.to_permutation(p)).collect();
                let m = child_perms[0].len() as u32;
                let mut out = Vec::with_capacity((p * m) as usize);
                for b in 0..p {
                    let tb = (b + top) % p;
                    for x in 0..m {
                        out.push(tb * m + child_perms[tb as usize][x as usize]);
                    }
                }
                out
            }
        }
    }

    /// Cycle type of the permutation, as a partition of `p^k`.
    pub fn cycle_type(&self, p: u32) -> Partition {
        let perm = self.to_permutation(p);
        cycle_type_of(&perm)
    }

    /// Exponent `e` with `φ(s)(w) = ζ_p^e`.
    pub fn phi_exponent(&self, s: &SequenceLabel) -> u32 {
        fn rec(w: &WreathElement, entries: &[u32], p: u32) -> u32 {
            match w {
                WreathElement::Trivial => 0,
                WreathElement::Leaf(j) => {
                    debug_assert_eq!(entries.len(), 1);
                    (entries[0] * j) % p
                }
                WreathElement::Node { top, children } => {
                    let (head, last) = entries.split_at(entries.len() - 1);
                    let mut e = (last[0] as u64 * *top as u64) % p as u64;
                    for c in children {
                        e = (e + rec(c, head, p) as u64) % p as u64;
                    }
                    e as u32
                }
            }
        }
        assert_eq!(self.depth(), s.k(), "element depth must equal label length");
        rec(self, s.entries(), s.p)
    }

    /// Sums of generator exponents by level (level 1 innermost, level k the
    /// top), i.e. the image in the abelianisation `(C_p)^k`. The character
    /// value is `ζ^{s · κ}`.
    pub fn level_sums(&self, p: u32) -> Vec<u32> {
        match self {
            WreathElement::Trivial => Vec::new(),
            WreathElement::Leaf(j) => vec![*j],
            WreathElement::Node { top, children } => {
                let mut acc = vec![0u32; children[0].depth() as usize];
                for c in children {
                    for (a, v) in acc.iter_mut().zip(c.level_sums(p)) {
                        *a = (*a + v) % p;
                    }
                }
                acc.push(*top);
                acc
            }
        }
    }
}

fn cycle_type_of(perm: &[u32]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts: Vec<u32> = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// `φ(s)(w)` as a cyclotomic integer (always a p-th root of unity).
pub fn phi_value(s: &SequenceLabel, w: &WreathElement) -> Result<CycInt> {
    if w.depth() != s.k() {
        return Err(Error::InvalidArgument(format!(
            "element depth {} does not match label length {}",
            w.depth(),
            s.k()
        )));
    }
    Ok(CycInt::root_of_unity(s.p, w.phi_exponent(s) as i64))
}

/// Number of generator coordinates of `P_{p^k}`: `(p^k - 1)/(p - 1)`.
fn coordinate_count(p: u64, k: u32) -> u64 {
    let mut total = 0u64;
    let mut power = 1u64;
    for _ in 0..k {
        total += power;
        power *= p;
    }
    total
}

/// `|P_{p^k}| = p^{(p^k-1)/(p-1)}`, exactly.
pub fn group_order(p: u32, k: u32) -> BigUint {
    BigUint::from(p).pow(coordinate_count(p as u64, k) as u32)
}

fn group_order_checked(p: u32, k: u32, budget: u64) -> Result<u64> {
    let coords = coordinate_count(p as u64, k);
    let mut order: u64 = 1;
    for _ in 0..coords {
        order = order
            .checked_mul(p as u64)
            .filter(|&o| o <= budget)
            .ok_or_else(|| {
                Error::BudgetExceeded(format!(
                    "|P_{{{p}^{k}}}| = {p}^{coords} exceeds enumeration budget {budget}"
                ))
            })?;
    }
    Ok(order)
}

fn element_from_index(p: u32, k: u32, idx: u64) -> WreathElement {
    match k {
        0 => WreathElement::Trivial,
        1 => WreathElement::Leaf(idx as u32),
        _ => {
            let sub = coordinate_count(p as u64, k - 1);
            let m = (p as u64).pow(sub as u32);
            let mut rest = idx;
            let children = (0..p)
                .map(|_| {
                    let c = element_from_index(p, k - 1, rest % m);
                    rest /= m;
                    c
                })
                .collect();
            WreathElement::Node { top: rest as u32, children }
        }
    }
}

/// Streams every element of `P_{p^k}` exactly once, in a fixed order,
/// without materialising the group.
pub fn enumerate_elements(
    p: u32,
    k: u32,
    budget: u64,
) -> Result<impl Iterator<Item = WreathElement>> {
    require_odd_prime(p)?;
    let order = group_order_checked(p, k, budget)?;
    Ok((0..order).map(move |i| element_from_index(p, k, i)))
}

/// Tally of a prime-power group by (cycle type, abelianisation image):
/// enough to derive the class profile of every linear character without
/// re-walking the group.
pub struct GroupTally {
    counts: BTreeMap<(Partition, Vec<u32>), u64>,
}

static TALLY_CACHE: Lazy<DashMap<(u32, u32), Arc<GroupTally>>> = Lazy::new(DashMap::new);

/// Walks `P_{p^k}` once (in parallel, merged deterministically) and caches
/// the tally.
pub fn group_tally(p: u32, k: u32, budget: u64) -> Result<Arc<GroupTally>> {
    if let Some(t) = TALLY_CACHE.get(&(p, k)) {
        return Ok(t.clone());
    }
    require_odd_prime(p)?;
    let order = group_order_checked(p, k, budget)?;
    let chunk = 1u64 << 14;
    let n_chunks = order.div_ceil(chunk);
    let counts = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let mut local: BTreeMap<(Partition, Vec<u32>), u64> = BTreeMap::new();
            for i in c * chunk..((c + 1) * chunk).min(order) {
                let w = element_from_index(p, k, i);
                let key = (w.cycle_type(p), w.level_sums(p));
                *local.entry(key).or_insert(0) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_insert(0) += v;
            }
            a
        });
    let tally = Arc::new(GroupTally { counts });
    TALLY_CACHE.insert((p, k), tally.clone());
    Ok(tally)
}

/// Per-cycle-type data for one linear character: element count and the sum
/// of character values over the elements of that type.
#[derive(Clone, Debug)]
pub struct ClassProfile {
    p: u32,
    n: u64,
    order: BigUint,
    entries: BTreeMap<Partition, (BigUint, CycInt)>,
}

impl ClassProfile {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn entries(&self) -> &BTreeMap<Partition, (BigUint, CycInt)> {
        &self.entries
    }

    pub fn total_count(&self) -> BigUint {
        self.entries.values().map(|(c, _)| c).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(t, (count, phi))| {
                let key = t
                    .parts()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                (
                    key,
                    serde_json::json!({
                        "count": count.to_string(),
                        "phi_sum": serde_json::to_value(phi).unwrap(),
                    }),
                )
            })
            .collect();
        serde_json::json!({
            "schema": 1,
            "p": self.p,
            "n": self.n,
            "order": self.order.to_string(),
            "classes": classes,
        })
    }
}

/// Class profile of a prime-power label, derived from the cached tally.
pub fn class_profile(s: &SequenceLabel, budget: u64) -> Result<ClassProfile> {
    let tally = group_tally(s.p, s.k(), budget)?;
    let p = s.p;
    let mut entries: BTreeMap<Partition, (BigUint, CycInt)> = BTreeMap::new();
    for ((t, kappa), &count) in &tally.counts {
        let e: u64 = s
            .entries()
            .iter()
            .zip(kappa)
            .map(|(&si, &ki)| (si as u64 * ki as u64) % p as u64)
            .sum::<u64>()
            % p as u64;
        let contrib = CycInt::root_of_unity(p, e as i64).scale(&BigInt::from(count));
        let entry = entries
            .entry(t.clone())
            .or_insert_with(|| (BigUint::zero(), CycInt::zero(p)));
        entry.0 += count;
        entry.1 += &contrib;
    }
    Ok(ClassProfile {
        p,
        n: s.n(),
        order: group_order(p, s.k()),
        entries,
    })
}

fn concat_types(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts)
}

/// Class profile of a composite label: factor profiles combined by
/// convolution (cycle types concatenate, counts and character sums
/// multiply), exactly the direct-product structure of `P_n`.
pub fn class_profile_composite(ms: &MultisetLabel, budget: u64) -> Result<ClassProfile> {
    let p = ms.p();
    let mut acc = ClassProfile {
        p,
        n: 0,
        order: BigUint::one(),
        entries: BTreeMap::from([(
            Partition::empty(),
            (BigUint::one(), CycInt::one(p)),
        )]),
    };
    for s in ms.seqs() {
        let factor = class_profile(s, budget)?;
        let mut entries: BTreeMap<Partition, (BigUint, CycInt)> = BTreeMap::new();
        for (t1, (c1, f1)) in &acc.entries {
            for (t2, (c2, f2)) in &factor.entries {
                let t = concat_types(t1, t2);
                let entry = entries
                    .entry(t)
                    .or_insert_with(|| (BigUint::zero(), CycInt::zero(p)));
                entry.0 += c1 * c2;
                entry.1 += &(f1 * f2);
            }
        }
        acc = ClassProfile {
            p,
            n: acc.n + factor.n,
            order: &acc.order * &factor.order,
            entries,
        };
    }
    Ok(acc)
}

/// Class profile of a composite label by literally walking the direct
/// product, element by element. Cross-check for the convolution path.
pub fn class_profile_by_enumeration(ms: &MultisetLabel, budget: u64) -> Result<ClassProfile> {
    let p = ms.p();
    let mut total_order = BigUint::one();
    let mut factor_orders: Vec<u64> = Vec::new();
    for s in ms.seqs() {
        let o = group_order_checked(p, s.k(), budget)?;
        factor_orders.push(o);
        total_order *= BigUint::from(o);
    }
    let budget_big = BigUint::from(budget);
    if total_order > budget_big {
        return Err(Error::BudgetExceeded(format!(
            "|P_{}| = {total_order} exceeds enumeration budget {budget}",
            ms.n()
        )));
    }
    let mut entries: BTreeMap<Partition, (BigUint, CycInt)> = BTreeMap::new();
    let seqs = ms.seqs();
    let mut indices = vec![0u64; seqs.len()];
    loop {
        let mut t = Partition::empty();
        let mut e = 0u64;
        for (s, &i) in seqs.iter().zip(&indices) {
            let w = element_from_index(p, s.k(), i);
            t = concat_types(&t, &w.cycle_type(p));
            e = (e + w.phi_exponent(s) as u64) % p as u64;
        }
        let entry = entries
            .entry(t)
            .or_insert_with(|| (BigUint::zero(), CycInt::zero(p)));
        entry.0 += BigUint::one();
        entry.1 += &CycInt::root_of_unity(p, e as i64);
        // odometer
        let mut pos = 0;
        loop {
            if pos == indices.len() {
                return Ok(ClassProfile { p, n: ms.n(), order: total_order, entries });
            }
            indices[pos] += 1;
            if indices[pos] < factor_orders[pos] {
                break;
            }
            indices[pos] = 0;
            pos += 1;
        }
    }
}

/// The normaliser orbit relation on sequence labels: equivalent iff the
/// supports agree.
pub fn n_orbit_equivalent(a: &SequenceLabel, b: &SequenceLabel) -> bool {
    assert_eq!(a.p(), b.p(), "orbit comparison across different primes");
    assert_eq!(a.k(), b.k(), "orbit comparison across different lengths");
    a.support() == b.support()
}

/// Orbit representatives of `Lin(P_{p^k})`: exactly the 0/1 sequences.
pub fn orbit_representatives(p: u32, k: u32) -> Result<Vec<SequenceLabel>> {
    require_odd_prime(p)?;
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u64..(1 << k) {
        let entries = (0..k).map(|i| ((mask >> (k - 1 - i)) & 1) as u32).collect();
        out.push(SequenceLabel::new(p, entries)?);
    }
    Ok(out)
}

/// Orbit equivalence for composite labels: factor-wise up to reordering
/// within equal lengths.
pub fn n_orbit_equivalent_composite(a: &MultisetLabel, b: &MultisetLabel) -> bool {
    assert_eq!(a.p(), b.p());
    assert_eq!(a.n(), b.n());
    let key = |m: &MultisetLabel| {
        let mut v: Vec<(u32, Vec<u32>)> =
            m.seqs().iter().map(|s| (s.k(), s.support())).collect();
        v.sort();
        v
    };
    key(a) == key(b)
}

/// Orbit representatives of `Lin(P_n)`: per p-adic digit, a multiset of
/// 0/1 sequences of the digit's length.
pub fn multiset_orbit_representatives(p: u32, n: u64) -> Result<Vec<MultisetLabel>> {
    require_odd_prime(p)?;
    let expansion = p_adic_expansion(n, p as u64)?;
    let mut partial: Vec<Vec<SequenceLabel>> = vec![Vec::new()];
    for (e, a) in expansion {
        let reps = orbit_representatives(p, e)?;
        let mut multisets: Vec<Vec<SequenceLabel>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        fn rec(
            reps: &[SequenceLabel],
            a: u32,
            start: usize,
            stack: &mut Vec<usize>,
            out: &mut Vec<Vec<SequenceLabel>>,
        ) {
            if stack.len() == a as usize {
                out.push(stack.iter().map(|&i| reps[i].clone()).collect());
                return;
            }
            for i in start..reps.len() {
                stack.push(i);
                rec(reps, a, i, stack, out);
                stack.pop();
            }
        }
        rec(&reps, a, 0, &mut stack, &mut multisets);
        let mut next = Vec::with_capacity(partial.len() * multisets.len());
        for base in &partial {
            for ms in &multisets {
                let mut combined = base.clone();
                combined.extend(ms.iter().cloned());
                next.push(combined);
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|seqs| MultisetLabel::new(p, n, seqs))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_conventions() {
        let id = WreathElement::identity(5, 2);
        let perm = id.to_permutation(5);
        assert!(perm.iter().enumerate().all(|(i, &x)| i as u32 == x));

        let five_cycle = WreathElement::Leaf(1).to_permutation(5);
        assert_eq!(five_cycle, vec![1, 2, 3, 4, 0]);
        assert_eq!(WreathElement::Leaf(1).cycle_type(5), Partition::new(vec![5]));

        let node = WreathElement::Node {
            top: 1,
            children: vec![WreathElement::Leaf(0); 5],
        };
        assert_eq!(node.cycle_type(5), Partition::new(vec![5, 5, 5, 5, 5]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_elements(5, 0, 10).unwrap().count(), 1);
        assert_eq!(enumerate_elements(5, 1, 10).unwrap().count(), 5);
        assert_eq!(enumerate_elements(5, 2, 20_000).unwrap().count(), 15625);
        assert_eq!(enumerate_elements(3, 2, 100).unwrap().count(), 81);
        assert!(matches!(
            enumerate_elements(5, 2, 100),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(enumerate_elements(4, 1, 100).is_err());
    }

    #[test]
    fn multiplication_matches_permutation_composition() {
        // deterministic pseudo-random pairs
        let order = group_order_checked(3, 2, 1000).unwrap();
        let mut x = 1u64;
        for _ in 0..200 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = x % order;
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = x % order;
            let a = element_from_index(3, 2, i);
            let b = element_from_index(3, 2, j);
            let ab = a.mul(&b, 3);
            let pa = a.to_permutation(3);
            let pb = b.to_permutation(3);
            let composed: Vec<u32> = (0..pa.len()).map(|t| pa[pb[t] as usize]).collect();
            assert_eq!(ab.to_permutation(3), composed);

            // character is a homomorphism
            for s in orbit_representatives(3, 2).unwrap() {
                let e = (a.phi_exponent(&s) + b.phi_exponent(&s)) % 3;
                assert_eq!(ab.phi_exponent(&s), e);
            }
        }
    }

    #[test]
    fn phi_examples() {
        let s1 = SequenceLabel::new(5, vec![1]).unwrap();
        assert_eq!(
            phi_value(&s1, &WreathElement::Leaf(1)).unwrap(),
            CycInt::root_of_unity(5, 1)
        );
        let s00 = SequenceLabel::new(5, vec![0, 0]).unwrap();
        for w in enumerate_elements(5, 2, 20_000).unwrap().take(500) {
            assert_eq!(phi_value(&s00, &w).unwrap(), CycInt::one(5));
        }
        assert!(phi_value(&s1, &WreathElement::Trivial).is_err());
    }

    #[test]
    fn phi_exponent_matches_level_sums() {
        for idx in 0..15625u64 {
            if idx % 97 != 0 {
                continue;
            }
            let w = element_from_index(5, 2, idx);
            let kappa = w.level_sums(5);
            for s in orbit_representatives(5, 2).unwrap() {
                let dot: u32 = s
                    .entries()
                    .iter()
                    .zip(&kappa)
                    .map(|(&a, &b)| (a * b) % 5)
                    .sum::<u32>()
                    % 5;
                assert_eq!(w.phi_exponent(&s), dot);
            }
        }
    }

    #[test]
    fn profile_examples() {
        let s0 = SequenceLabel::new(5, vec![0]).unwrap();
        let prof = class_profile(&s0, 100).unwrap();
        let one_type = Partition::new(vec![1, 1, 1, 1, 1]);
        let five_type = Partition::new(vec![5]);
        assert_eq!(prof.entries()[&one_type].0, BigUint::one());
        assert_eq!(prof.entries()[&five_type].0, BigUint::from(4u32));
        assert_eq!(
            prof.entries()[&five_type].1,
            CycInt::from_integer(5, 4)
        );

        let s1 = SequenceLabel::new(5, vec![1]).unwrap();
        let prof1 = class_profile(&s1, 100).unwrap();
        assert_eq!(
            prof1.entries()[&five_type].1,
            CycInt::from_integer(5, -1)
        );
    }

    #[test]
    fn profile_counts_sum_to_group_order() {
        let s = SequenceLabel::new(5, vec![0, 0]).unwrap();
        let prof = class_profile(&s, 20_000).unwrap();
        assert_eq!(prof.total_count(), group_order(5, 2));
        assert_eq!(prof.entries().len(), 7);
        for t in prof.entries().keys() {
            for &part in t.parts() {
                assert!(part == 1 || part == 5 || part == 25);
            }
        }
        // trivial character: phi sums equal counts
        for (count, phi) in prof.entries().values() {
            assert_eq!(
                phi.as_integer().unwrap(),
                BigInt::from(count.clone())
            );
        }
    }

    #[test]
    fn composite_convolution_matches_enumeration() {
        let ms = MultisetLabel::new(
            5,
            30,
            vec![
                SequenceLabel::new(5, vec![1]).unwrap(),
                SequenceLabel::new(5, vec![0, 1]).unwrap(),
            ],
        )
        .unwrap();
        let conv = class_profile_composite(&ms, 1_000_000).unwrap();
        let walk = class_profile_by_enumeration(&ms, 1_000_000).unwrap();
        assert_eq!(conv.order(), walk.order());
        assert_eq!(conv.entries().len(), walk.entries().len());
        for (t, (c, f)) in conv.entries() {
            let (wc, wf) = &walk.entries()[t];
            assert_eq!(c, wc);
            assert_eq!(f, wf);
        }
        assert_eq!(conv.total_count(), BigUint::from(78125u64));
    }

    #[test]
    fn orbits() {
        let a = SequenceLabel::new(5, vec![1, 0]).unwrap();
        let b = SequenceLabel::new(5, vec![3, 0]).unwrap();
        let c = SequenceLabel::new(5, vec![0, 1]).unwrap();
        assert!(n_orbit_equivalent(&a, &b));
        assert!(!n_orbit_equivalent(&a, &c));
        let reps = orbit_representatives(5, 2).unwrap();
        let shown: Vec<String> = reps.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, vec!["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);

        assert_eq!(multiset_orbit_representatives(5, 30).unwrap().len(), 8);
        assert_eq!(multiset_orbit_representatives(5, 50).unwrap().len(), 10);
    }

    #[test]
    fn label_parsing() {
        let l: Label = "5:1,0".parse().unwrap();
        assert_eq!(l.to_string(), "(1,0)");
        assert_eq!(l.n(), 25);

        let l: Label = "5@30:(1,0)|(2)".parse().unwrap();
        assert_eq!(l.n(), 30);
        match &l {
            Label::Composite(ms) => {
                assert_eq!(ms.r(), 2);
                assert_eq!(ms.seqs()[0].k(), 1);
                assert_eq!(ms.seqs()[1].k(), 2);
            }
            _ => panic!("expected composite"),
        }

        let l = Label::from_parts(5, 175, "(0,0,0)|(0,0),(1,0)").unwrap();
        match &l {
            Label::Composite(ms) => assert_eq!(ms.r(), 3),
            _ => panic!("expected composite"),
        }

        assert!("5@30:(1,0)".parse::<Label>().is_err());
        assert!("5:7,0".parse::<Label>().is_err());
        assert!(Label::from_parts(5, 6, "()|(0)").is_ok());
    }

    #[test]
    fn multiset_validation() {
        assert!(MultisetLabel::new(
            5,
            30,
            vec![SequenceLabel::new(5, vec![0, 0]).unwrap()]
        )
        .is_err());
    }
}
