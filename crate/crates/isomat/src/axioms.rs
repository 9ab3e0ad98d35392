//! Brute-force verifiers for the matroid axioms: the Maximality Property
//! over admissible orderings of types C and D, the strong and symmetric
//! exchange axioms, parity, and the sign-pattern axiom for oriented even
//! Δ-matroids.
//!
//! Every verifier scans exhaustively and reports the first witness in the
//! fixed enumeration order, so failures are reproducible.

use std::fmt;

use thiserror::Error;

use crate::ground::{
    enumerate_admissible_orderings, max_basis, AdmissibleOrdering, AdmissibleSet, Element,
    OrderVariant,
};
use crate::orient::SignMap;
use crate::repr::{BasisCollection, ReprError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AxiomError {
    #[error("strong exchange applies to rank-n (Lagrangian) collections only")]
    NotLagrangian,
    #[error("the supported sets do not all have the same parity")]
    OddSupport,
    #[error(transparent)]
    Repr(#[from] ReprError),
}

/// Outcome of a brute-force check: either the axiom holds or a witness for
/// its failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// An ordering under which the collection has no unique Gale-maximal member,
/// together with two incomparable maximal members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalityFailure {
    pub ordering: AdmissibleOrdering,
    pub first: AdmissibleSet,
    pub second: AdmissibleSet,
}

impl fmt::Display for MaximalityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ordering {} has incomparable maxima {} | {}",
            self.ordering, self.first, self.second
        )
    }
}

fn check_maximality(b: &BasisCollection, variant: OrderVariant) -> Verdict<MaximalityFailure> {
    for ordering in enumerate_admissible_orderings(b.ground(), variant) {
        if let Err((first, second)) = max_basis(b.sets(), &ordering) {
            return Verdict::Fails(MaximalityFailure {
                ordering,
                first,
                second,
            });
        }
    }
    Verdict::Holds
}

/// Maximality Property over every C-admissible ordering.
pub fn is_symplectic_matroid(b: &BasisCollection) -> Verdict<MaximalityFailure> {
    check_maximality(b, OrderVariant::C)
}

/// Maximality Property over every D-admissible ordering. Strictly weaker
/// than the symplectic check: every symplectic matroid is orthogonal.
pub fn is_orthogonal_matroid(b: &BasisCollection) -> Verdict<MaximalityFailure> {
    check_maximality(b, OrderVariant::D)
}

/// A failed strong-exchange instance: bases `a`, `b` and a pivot in their
/// symmetric difference admitting no valid partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongExchangeFailure {
    pub first: AdmissibleSet,
    pub second: AdmissibleSet,
    pub pivot: Element,
}

impl fmt::Display for StrongExchangeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bases {} | {} admit no exchange partner for {}",
            self.first, self.second, self.pivot
        )
    }
}

/// Strong exchange: for every pair of bases `A`, `B` and every
/// `a ∈ A △ B` there is `b ∈ B \ A` with `b ≠ a*` such that both
/// `A △ {a,b,a*,b*}` and `B △ {a,b,a*,b*}` are bases. Characterizes
/// Lagrangian orthogonal matroids.
pub fn check_strong_exchange(
    b: &BasisCollection,
) -> Result<Verdict<StrongExchangeFailure>, AxiomError> {
    let n = b.ground();
    if b.rank() != n as usize {
        return Err(AxiomError::NotLagrangian);
    }
    for first in b.iter() {
        for second in b.iter() {
            let diff = first.symmetric_difference_mask(second);
            for a in elements_of_mask(n, diff) {
                let found = elements_of_mask(n, diff).any(|cand| {
                    // b ranges over B \ A with b ≠ a*.
                    if cand == a.star() || !second.contains(cand) || first.contains(cand) {
                        return false;
                    }
                    let quad = code_bit(n, a)
                        | code_bit(n, a.star())
                        | code_bit(n, cand)
                        | code_bit(n, cand.star());
                    let fx = first.toggled(quad);
                    let sx = second.toggled(quad);
                    matches!((fx, sx), (Some(f), Some(s)) if b.contains(&f) && b.contains(&s))
                });
                if !found {
                    return Ok(Verdict::Fails(StrongExchangeFailure {
                        first: *first,
                        second: *second,
                        pivot: a,
                    }));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

fn code_bit(n: u32, e: Element) -> u128 {
    1u128 << (e.code(n) - 1)
}

fn elements_of_mask(n: u32, mask: u128) -> impl Iterator<Item = Element> {
    (1..=2 * n).filter_map(move |code| {
        if mask & (1u128 << (code - 1)) != 0 {
            Some(Element::from_code(code, n))
        } else {
            None
        }
    })
}

/// A family of subsets of `[n]`, not necessarily equicardinal, stored as
/// bitmasks. The Δ-matroid side of the rank-n picture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCollection {
    n: u32,
    sets: Vec<u64>,
}

impl DeltaCollection {
    /// Builds a nonempty family; masks are deduplicated and sorted.
    pub fn new(n: u32, mut sets: Vec<u64>) -> Result<Self, ReprError> {
        if sets.is_empty() {
            return Err(ReprError::EmptyCollection);
        }
        assert!(n <= 63);
        assert!(sets.iter().all(|&s| s < (1u64 << n)));
        sets.sort_unstable();
        sets.dedup();
        Ok(DeltaCollection { n, sets })
    }

    pub fn ground(&self) -> u32 {
        self.n
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.sets.binary_search(&mask).is_ok()
    }
}

/// A failed symmetric-exchange instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricExchangeFailure {
    pub first: u64,
    pub second: u64,
    pub pivot: u32,
}

/// Bouchet's symmetric exchange axiom for set systems: for `A, B` in the
/// family and `i ∈ A △ B` there is `j ∈ A △ B` with `A △ {i,j}` in the
/// family. The case `j = i` is allowed, in which case `{i,j} = {i}`.
pub fn check_symmetric_exchange(d: &DeltaCollection) -> Verdict<SymmetricExchangeFailure> {
    for &first in d.sets() {
        for &second in d.sets() {
            let diff = first ^ second;
            let mut bits = diff;
            while bits != 0 {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                let mut found = false;
                let mut partners = diff;
                while partners != 0 {
                    let j = partners.trailing_zeros();
                    partners &= partners - 1;
                    if d.contains(first ^ (1 << i) ^ (1 << j) ^ if i == j { 1 << i } else { 0 }) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Verdict::Fails(SymmetricExchangeFailure {
                        first,
                        second,
                        pivot: i + 1,
                    });
                }
            }
        }
    }
    Verdict::Holds
}

/// Drops the starred elements of a rank-n collection: `B ↦ B ∩ [n]`.
/// Bijective onto its image; [`from_delta`] inverts it.
pub fn to_delta(b: &BasisCollection) -> Result<DeltaCollection, AxiomError> {
    if b.rank() != b.ground() as usize {
        return Err(AxiomError::NotLagrangian);
    }
    let sets = b.iter().map(|s| s.delta_mask()).collect();
    Ok(DeltaCollection::new(b.ground(), sets)?)
}

/// Completes each subset of `[n]` with the stars of the missing indices,
/// producing a rank-n collection.
pub fn from_delta(d: &DeltaCollection) -> BasisCollection {
    let sets = d
        .sets()
        .iter()
        .map(|&mask| AdmissibleSet::from_delta_mask(d.ground(), mask))
        .collect();
    BasisCollection::new(d.ground(), d.ground() as usize, sets).expect("nonempty by invariant")
}

/// Whether all bases have the same parity of unstarred-element count.
pub fn is_even(b: &BasisCollection) -> bool {
    let mut parities = b.iter().map(|s| s.unstarred_count() % 2);
    let first = parities.next().expect("collections are nonempty");
    parities.all(|p| p == first)
}

/// A pair of subsets violating the oriented even Δ-matroid sign pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDeltaFailure {
    pub first: u64,
    pub second: u64,
}

/// The sign-pattern axiom for oriented even Δ-matroids: for all
/// `A, B ⊆ [n]` with `A △ B = {i_1 < … < i_l}`, the nonzero values among
/// `κ_j = (-1)^j p(A △ {i_j}) p(B △ {i_j})` may not all share one sign.
///
/// Errors with [`AxiomError::OddSupport`] when the support mixes parities.
pub fn check_oriented_even_delta(p: &SignMap) -> Result<Verdict<OrientedDeltaFailure>, AxiomError> {
    if !p.support_parity_uniform() {
        return Err(AxiomError::OddSupport);
    }
    let n = p.ground();
    for first in 0u64..(1 << n) {
        for second in 0u64..(1 << n) {
            let diff = first ^ second;
            if diff == 0 {
                continue;
            }
            let mut positives = false;
            let mut negatives = false;
            let mut bits = diff;
            let mut odd_position = true; // j = 1 is odd
            while bits != 0 {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                let product = p.delta_sign(first ^ (1 << i)) * p.delta_sign(second ^ (1 << i));
                let kappa = if odd_position { -product } else { product };
                if kappa > 0 {
                    positives = true;
                } else if kappa < 0 {
                    negatives = true;
                }
                odd_position = !odd_position;
            }
            if (positives || negatives) && !(positives && negatives) {
                return Ok(Verdict::Fails(OrientedDeltaFailure { first, second }));
            }
        }
    }
    Ok(Verdict::Holds)
}
