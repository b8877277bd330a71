//! Closed-form predictors for the branching sets `Ω(φ)`: sequence
//! statistics (positions of leading nonzeros, types), the bounds `m(φ)`,
//! `M(φ)`, `N(φ)`, symbolic descriptions of `Ω(φ)` with fast membership
//! tests, and box-counting ratio bounds for the intersection `Ω_n`.
//!
//! The closed forms hold for primes `p >= 5` (and for the small base cases
//! exercised in tests at `p = 3, k = 1`); the oracle in
//! [`crate::characters`] is the ground truth they are verified against.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{box_count, partition_count, Partition, PartitionSet};
use crate::wreath::{
    multiset_orbit_representatives, orbit_representatives, Label, MultisetLabel, SequenceLabel,
};

/// Type `τ(s)` of a sequence: governed by how many nonzero entries there
/// are and where the first one sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SequenceType {
    /// all entries zero (the trivial character)
    AllZero,
    /// one nonzero entry, not in the last position
    InteriorNonzero,
    /// one nonzero entry, in the last position
    FinalNonzero,
    /// at least two nonzero entries
    MultipleNonzero,
}

impl SequenceType {
    pub fn index(self) -> u8 {
        match self {
            SequenceType::AllZero => 1,
            SequenceType::InteriorNonzero => 2,
            SequenceType::FinalNonzero => 3,
            SequenceType::MultipleNonzero => 4,
        }
    }
}

/// Positions of the leftmost and second-leftmost nonzero entries (1-based),
/// the nonzero count, and the resulting type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LabelStats {
    pub first_nonzero: Option<u32>,
    pub second_nonzero: Option<u32>,
    pub nonzero_count: u32,
    pub tau: SequenceType,
}

pub fn label_stats(s: &SequenceLabel) -> LabelStats {
    let support = s.support();
    let f = support.first().copied();
    let g = support.get(1).copied();
    let z = support.len() as u32;
    let tau = match z {
        0 => SequenceType::AllZero,
        1 if f == Some(s.k()) => SequenceType::FinalNonzero,
        1 => SequenceType::InteriorNonzero,
        _ => SequenceType::MultipleNonzero,
    };
    LabelStats { first_nonzero: f, second_nonzero: g, nonzero_count: z, tau }
}

/// Counts of factor sequences of each type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TypeTuple(pub [u32; 4]);

impl TypeTuple {
    pub fn x(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// The exceptional shape `(R-1, 1, 0, 0)`: all factors trivial except
    /// a single interior-nonzero one.
    pub fn is_exceptional(&self) -> bool {
        self.0[1] == 1 && self.0[2] == 0 && self.0[3] == 0
    }
}

pub fn type_tuple(ms: &MultisetLabel) -> TypeTuple {
    let mut counts = [0u32; 4];
    for s in ms.seqs() {
        counts[label_stats(s).tau.index() as usize - 1] += 1;
    }
    TypeTuple(counts)
}

/// Quasi-trivial: nontrivial, with at most one nonzero entry per factor
/// sequence (no type-4 factor).
pub fn is_quasi_trivial(ms: &MultisetLabel) -> bool {
    !ms.is_trivial() && type_tuple(ms).0[3] == 0
}

fn pk(p: u32, e: u32) -> u64 {
    (p as u64).pow(e)
}

/// Least `t` with `Ω(s) ⊆ B(t)`: `p^k - p^{k-f}` for nonzero `s`, `p^k`
/// for the all-zero sequence.
pub fn big_m_value(s: &SequenceLabel) -> u64 {
    let k = s.k();
    let stats = label_stats(s);
    match stats.first_nonzero {
        None => pk(s.p(), k),
        Some(f) => pk(s.p(), k) - pk(s.p(), k - f),
    }
}

/// Greatest `t` with `B(t) ⊆ Ω(s)`.
pub fn m_value(s: &SequenceLabel) -> u64 {
    let p = s.p();
    let k = s.k();
    if k == 0 {
        return 1;
    }
    let stats = label_stats(s);
    match stats.tau {
        SequenceType::AllZero => pk(p, k) - 2,
        SequenceType::InteriorNonzero => pk(p, k) - pk(p, k - stats.first_nonzero.unwrap()) - 1,
        SequenceType::FinalNonzero => pk(p, k) - 1,
        SequenceType::MultipleNonzero => {
            pk(p, k)
                - pk(p, k - stats.first_nonzero.unwrap())
                - pk(p, k - stats.second_nonzero.unwrap())
        }
    }
}

/// The summand used by the composite lower bound: `p^k` for all-zero,
/// `m(s) + 1` for interior-nonzero, `m(s)` otherwise.
pub fn n_value(s: &SequenceLabel) -> u64 {
    if s.k() == 0 {
        return 1;
    }
    match label_stats(s).tau {
        SequenceType::AllZero => pk(s.p(), s.k()),
        SequenceType::InteriorNonzero => m_value(s) + 1,
        _ => m_value(s),
    }
}

pub fn n_value_composite(ms: &MultisetLabel) -> u64 {
    ms.seqs().iter().map(n_value).sum()
}

pub fn big_m_composite(ms: &MultisetLabel) -> u64 {
    ms.seqs().iter().map(big_m_value).sum()
}

/// `m(φ)` for a composite label: `N(φ)`, except one less in the
/// exceptional type `(R-1, 1, 0, 0)`. Single-factor labels delegate to
/// the prime-power formula.
pub fn m_composite(ms: &MultisetLabel) -> u64 {
    if ms.r() == 1 {
        return m_value(&ms.seqs()[0]);
    }
    let n = n_value_composite(ms);
    if type_tuple(ms).is_exceptional() {
        n - 1
    } else {
        n
    }
}

pub fn m_of_label(label: &Label) -> u64 {
    match label {
        Label::PrimePower(s) => m_value(s),
        Label::Composite(ms) => m_composite(ms),
    }
}

pub fn big_m_of_label(label: &Label) -> u64 {
    match label {
        Label::PrimePower(s) => big_m_value(s),
        Label::Composite(ms) => big_m_composite(ms),
    }
}

pub fn n_of_label(label: &Label) -> u64 {
    match label {
        Label::PrimePower(s) => n_value(s),
        Label::Composite(ms) => n_value_composite(ms),
    }
}

/// A symbolic set of partitions of some fixed `m`, used inside top slices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InnerSet {
    /// `P(n)`
    All { n: u64 },
    /// `B_n(t)`
    Box { n: u64, t: u64 },
    /// `P'(n) = P(n) ∖ {(n-1,1)}°`
    Pruned { n: u64 },
}

impl InnerSet {
    pub fn n(&self) -> u64 {
        match self {
            InnerSet::All { n } | InnerSet::Box { n, .. } | InnerSet::Pruned { n } => *n,
        }
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        if mu.n() != self.n() {
            return false;
        }
        match self {
            InnerSet::All { .. } => true,
            InnerSet::Box { t, .. } => mu.fits_in_box(*t),
            InnerSet::Pruned { n } => {
                if *n < 2 {
                    return true;
                }
                let excluded = Partition::new(vec![(*n - 1) as u32, 1]);
                *mu != excluded && *mu != excluded.conjugate()
            }
        }
    }
}

impl fmt::Display for InnerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InnerSet::All { n } => write!(f, "P({n})"),
            InnerSet::Box { n, t } => write!(f, "B({n},{t})"),
            InnerSet::Pruned { n } => write!(f, "P'({n})"),
        }
    }
}

/// `{(first_row, μ) : μ ∈ inner}°` — a conjugation-closed top slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopSlice {
    pub first_row: u64,
    pub inner: InnerSet,
}

impl TopSlice {
    pub fn contains(&self, lambda: &Partition) -> bool {
        let direct = lambda.first() as u64 == self.first_row
            && self.inner.contains(&lambda.without_first_row());
        if direct {
            return true;
        }
        let conj = lambda.conjugate();
        conj.first() as u64 == self.first_row && self.inner.contains(&conj.without_first_row())
    }
}

impl fmt::Display for TopSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.n() == 0 {
            write!(f, "{{({})}}°", self.first_row)
        } else {
            write!(f, "{{({},μ) : μ ∈ {}}}°", self.first_row, self.inner)
        }
    }
}

/// Symbolic description of `Ω(φ)`: either an exact box-plus-slices form
/// with O(l(λ)) membership, or a sandwich `B(m) ⊆ Ω ⊆ B(M)` with no thin
/// partitions outside `B(m)` and, when known, the exact `λ_1 = M` slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OmegaDescription {
    Exact {
        n: u64,
        box_t: u64,
        slices: Vec<TopSlice>,
    },
    Sandwich {
        n: u64,
        lower: u64,
        upper: u64,
        no_thin_outside_lower: bool,
        /// Description of the set `{μ : (upper, μ) ∈ Ω}` when the slice
        /// structure is known.
        top_slice: Option<Box<OmegaDescription>>,
    },
}

/// Three-valued membership: `Some(true/false)` when the description
/// decides, `None` inside an undetermined sandwich band.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    In,
    Out,
    Unknown,
}

impl OmegaDescription {
    pub fn n(&self) -> u64 {
        match self {
            OmegaDescription::Exact { n, .. } | OmegaDescription::Sandwich { n, .. } => *n,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, OmegaDescription::Exact { .. })
    }

    pub fn membership(&self, lambda: &Partition) -> Membership {
        if lambda.n() != self.n() {
            return Membership::Out;
        }
        match self {
            OmegaDescription::Exact { box_t, slices, .. } => {
                if lambda.fits_in_box(*box_t) || slices.iter().any(|s| s.contains(lambda)) {
                    Membership::In
                } else {
                    Membership::Out
                }
            }
            OmegaDescription::Sandwich { lower, upper, no_thin_outside_lower, top_slice, .. } => {
                if lambda.fits_in_box(*lower) {
                    return Membership::In;
                }
                if !lambda.fits_in_box(*upper) {
                    return Membership::Out;
                }
                if *no_thin_outside_lower && lambda.is_thin() {
                    return Membership::Out;
                }
                if let Some(slice) = top_slice {
                    if lambda.first() as u64 == *upper {
                        return slice.membership(&lambda.without_first_row());
                    }
                    let conj = lambda.conjugate();
                    if conj.first() as u64 == *upper {
                        return slice.membership(&conj.without_first_row());
                    }
                }
                Membership::Unknown
            }
        }
    }

    /// Materialises an exact description as an explicit set (small `n`).
    pub fn enumerate(&self) -> Result<PartitionSet> {
        match self {
            OmegaDescription::Exact { n, .. } => {
                let all = crate::partitions::all_partitions(*n)?;
                PartitionSet::new(
                    *n,
                    all.into_iter().filter(|l| self.membership(l) == Membership::In),
                )
            }
            OmegaDescription::Sandwich { .. } => Err(Error::InvalidArgument(
                "cannot enumerate a sandwich description exactly".into(),
            )),
        }
    }
}

impl fmt::Display for OmegaDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaDescription::Exact { n, box_t, slices } => {
                if *box_t >= *n && slices.is_empty() {
                    return write!(f, "P({n})");
                }
                write!(f, "B({n},{box_t})")?;
                for s in slices {
                    write!(f, " ⊔ {s}")?;
                }
                Ok(())
            }
            OmegaDescription::Sandwich { n, lower, upper, no_thin_outside_lower, top_slice } => {
                write!(f, "B({n},{lower}) ⊆ Ω ⊆ B({n},{upper})")?;
                if *no_thin_outside_lower {
                    write!(f, ", no thin partitions outside B({n},{lower})")?;
                }
                if let Some(slice) = top_slice {
                    write!(f, "; λ1={upper} slice inner: {slice}")?;
                }
                Ok(())
            }
        }
    }
}

/// Symbolic `Ω(φ(s))` for a prime-power label.
pub fn predict_omega_sequence(s: &SequenceLabel) -> OmegaDescription {
    let p = s.p();
    let k = s.k();
    let n = s.n();
    if k == 0 {
        return OmegaDescription::Exact { n: 1, box_t: 1, slices: vec![] };
    }
    let stats = label_stats(s);
    let m = m_value(s);
    match stats.tau {
        SequenceType::AllZero => OmegaDescription::Exact {
            n,
            box_t: m,
            slices: vec![TopSlice { first_row: n, inner: InnerSet::All { n: 0 } }],
        },
        SequenceType::InteriorNonzero => {
            let tail = pk(p, k - stats.first_nonzero.unwrap());
            OmegaDescription::Exact {
                n,
                box_t: m,
                slices: vec![TopSlice { first_row: m + 1, inner: InnerSet::Pruned { n: tail } }],
            }
        }
        SequenceType::FinalNonzero => OmegaDescription::Exact { n, box_t: m, slices: vec![] },
        SequenceType::MultipleNonzero => {
            let f = stats.first_nonzero.unwrap();
            let g = stats.second_nonzero.unwrap();
            let upper = big_m_value(s);
            if g == k {
                // M = m + 1: the sandwich plus its top slice is exact.
                // The suffix after f is all-zero-then-final, so its Ω is a
                // full box.
                let tail = pk(p, k - f);
                OmegaDescription::Exact {
                    n,
                    box_t: m,
                    slices: vec![TopSlice {
                        first_row: upper,
                        inner: InnerSet::Box { n: tail, t: tail - 1 },
                    }],
                }
            } else {
                let suffix = s.suffix_after(f);
                OmegaDescription::Sandwich {
                    n,
                    lower: m,
                    upper,
                    no_thin_outside_lower: true,
                    top_slice: Some(std::boxed::Box::new(predict_omega_sequence(&suffix))),
                }
            }
        }
    }
}

/// Symbolic `Ω(φ)` for a composite label.
pub fn predict_omega_multiset(ms: &MultisetLabel) -> OmegaDescription {
    if ms.r() == 1 {
        return predict_omega_sequence(&ms.seqs()[0]);
    }
    let n = ms.n();
    let t = type_tuple(ms);
    let nn = n_value_composite(ms);
    if t.0[3] == 0 {
        if t.is_exceptional() {
            let special = ms
                .seqs()
                .iter()
                .find(|s| label_stats(s).tau == SequenceType::InteriorNonzero)
                .expect("exceptional type has an interior-nonzero factor");
            let stats = label_stats(special);
            let tail = pk(ms.p(), special.k() - stats.first_nonzero.unwrap());
            OmegaDescription::Exact {
                n,
                box_t: nn - 1,
                slices: vec![TopSlice { first_row: nn, inner: InnerSet::Pruned { n: tail } }],
            }
        } else {
            OmegaDescription::Exact { n, box_t: nn, slices: vec![] }
        }
    } else {
        OmegaDescription::Sandwich {
            n,
            lower: nn,
            upper: big_m_composite(ms),
            no_thin_outside_lower: true,
            top_slice: None,
        }
    }
}

pub fn predict_omega(label: &Label) -> OmegaDescription {
    match label {
        Label::PrimePower(s) => predict_omega_sequence(s),
        Label::Composite(ms) => predict_omega_multiset(ms),
    }
}

/// Ratio bounds for `|Ω_n| / p(n)` where `Ω_n` is the intersection of all
/// `Ω(φ)` over linear `φ`.
#[derive(Clone, Debug)]
pub struct RatioBounds {
    pub p: u32,
    pub n: u64,
    /// Smallest `m(φ)` over orbit representatives.
    pub m_min: u64,
    /// Smallest `M(φ)` over orbit representatives.
    pub big_m_min: u64,
    /// `|B_n(m_min)| / p(n)` — a lower bound for the ratio.
    pub lower: BigRational,
    /// `|B_n(M_min)| / p(n)` — an upper bound for the ratio.
    pub upper: BigRational,
    /// Exact `|Ω_n| / p(n)` when the oracle intersection is feasible.
    pub exact: Option<BigRational>,
    pub exact_count: Option<u64>,
}

fn ratio(num: BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den.clone()))
}

/// All orbit-representative labels for `Lin(P_n)`.
pub fn orbit_labels(p: u32, n: u64) -> Result<Vec<Label>> {
    let expansion = crate::partitions::p_adic_expansion(n, p as u64)?;
    if expansion.len() == 1 && expansion[0].1 == 1 {
        Ok(orbit_representatives(p, expansion[0].0)?
            .into_iter()
            .map(Label::PrimePower)
            .collect())
    } else {
        Ok(multiset_orbit_representatives(p, n)?
            .into_iter()
            .map(Label::Composite)
            .collect())
    }
}

/// Box-counting bounds for `|Ω_n|/p(n)`; the exact value additionally
/// intersects the oracle sets when `exact` is requested.
pub fn omega_intersection_bounds(
    p: u32,
    n: u64,
    exact: bool,
    budget: u64,
) -> Result<RatioBounds> {
    let labels = orbit_labels(p, n)?;
    let m_min = labels.iter().map(m_of_label).min().expect("at least one orbit");
    let big_m_min = labels.iter().map(big_m_of_label).min().expect("at least one orbit");
    let total = partition_count(n);
    let lower = ratio(box_count(n, m_min), &total);
    let upper = ratio(box_count(n, big_m_min), &total);
    let (exact_ratio, exact_count) = if exact {
        let mut intersection: Option<PartitionSet> = None;
        for label in &labels {
            let omega = crate::characters::omega_oracle(label, budget)?;
            intersection = Some(match intersection {
                None => omega,
                Some(acc) => acc.intersection(&omega),
            });
        }
        let count = intersection.map(|s| s.len() as u64).unwrap_or(0);
        (Some(ratio(BigUint::from(count), &total)), Some(count))
    } else {
        (None, None)
    };
    Ok(RatioBounds {
        p,
        n,
        m_min,
        big_m_min,
        lower,
        upper,
        exact: exact_ratio,
        exact_count,
    })
}
