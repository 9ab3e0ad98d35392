//! Ground-set combinatorics: the star involution on `J = [n] ∪ [n]*`,
//! admissible sets, admissible orderings of types C and D, and the Gale
//! order they induce on equicardinal admissible sets.
//!
//! Elements are encoded as integer codes `i ↦ i`, `i* ↦ n + i`, and sets as
//! fixed-width bitmasks, so that exhaustive enumeration stays cheap.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroundError {
    #[error("element index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("set is not admissible: contains both {0} and {1}")]
    NotAdmissible(Element, Element),
    #[error("ordering must list each index exactly once, got a repeat of index {0}")]
    RepeatedIndex(u32),
    #[error("expected {expected} elements, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("cannot parse element from {0:?}")]
    BadElement(String),
}

/// A member of `J = [n] ∪ [n]*`: a 1-based index together with a star flag.
///
/// Elements compare as `1 < 2 < … < n < 1* < 2* < … < n*`, which matches the
/// integer code order (`i ↦ i`, `i* ↦ n + i`) for any fixed `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    starred: bool,
    index: u32,
}

impl Element {
    pub fn new(index: u32, starred: bool) -> Self {
        assert!(index >= 1, "element indices are 1-based");
        Element { starred, index }
    }

    pub fn unstarred(index: u32) -> Self {
        Self::new(index, false)
    }

    pub fn starred(index: u32) -> Self {
        Self::new(index, true)
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_starred(self) -> bool {
        self.starred
    }

    /// The star involution: `i ↦ i*`, `i* ↦ i`.
    pub fn star(self) -> Self {
        Element {
            starred: !self.starred,
            index: self.index,
        }
    }

    /// Integer code for ground size `n`: `i ↦ i`, `i* ↦ n + i`.
    pub fn code(self, n: u32) -> u32 {
        debug_assert!(self.index <= n);
        if self.starred {
            n + self.index
        } else {
            self.index
        }
    }

    pub fn from_code(code: u32, n: u32) -> Self {
        assert!((1..=2 * n).contains(&code));
        if code > n {
            Element::starred(code - n)
        } else {
            Element::unstarred(code)
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "{}*", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl FromStr for Element {
    type Err = GroundError;

    fn from_str(s: &str) -> Result<Self, GroundError> {
        let (digits, starred) = match s.strip_suffix('*') {
            Some(prefix) => (prefix, true),
            None => (s, false),
        };
        let index: u32 = digits
            .parse()
            .map_err(|_| GroundError::BadElement(s.to_string()))?;
        if index == 0 {
            return Err(GroundError::BadElement(s.to_string()));
        }
        Ok(Element::new(index, starred))
    }
}

/// Returns true when no index occurs both starred and unstarred.
pub fn is_admissible<I: IntoIterator<Item = Element>>(elements: I) -> bool {
    let mut seen_plain: u64 = 0;
    let mut seen_star: u64 = 0;
    for e in elements {
        let bit = 1u64 << (e.index() - 1);
        if e.is_starred() {
            seen_star |= bit;
        } else {
            seen_plain |= bit;
        }
    }
    seen_plain & seen_star == 0
}

/// An admissible subset of `J`: `K ∩ K* = ∅`.
///
/// Stored as a bitmask over element codes, so `n` is bounded by 63.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdmissibleSet {
    n: u32,
    mask: u128,
}

impl AdmissibleSet {
    pub fn empty(n: u32) -> Self {
        assert!(
            (1..=63).contains(&n),
            "ground size must be between 1 and 63"
        );
        AdmissibleSet { n, mask: 0 }
    }

    pub fn from_elements<I>(n: u32, elements: I) -> Result<Self, GroundError>
    where
        I: IntoIterator<Item = Element>,
    {
        let mut mask: u128 = 0;
        let mut set = AdmissibleSet::empty(n);
        for e in elements {
            if e.index() > n {
                return Err(GroundError::IndexOutOfRange {
                    index: e.index(),
                    n,
                });
            }
            let star_bit = 1u128 << (e.star().code(n) - 1);
            if mask & star_bit != 0 {
                return Err(GroundError::NotAdmissible(e.star(), e));
            }
            mask |= 1u128 << (e.code(n) - 1);
        }
        set.mask = mask;
        Ok(set)
    }

    pub(crate) fn from_mask(n: u32, mask: u128) -> Self {
        let set = AdmissibleSet { n, mask };
        debug_assert!(is_admissible(set.elements()));
        set
    }

    /// Admissible set with unstarred part `delta` (a bitmask over `[n]`) and
    /// every other index starred. Always has size `n`.
    pub fn from_delta_mask(n: u32, delta: u64) -> Self {
        assert!(delta < (1u64 << n));
        let starred = (!delta) & ((1u64 << n) - 1);
        let mask = (delta as u128) | ((starred as u128) << n);
        AdmissibleSet { n, mask }
    }

    pub fn ground(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: Element) -> bool {
        e.index() <= self.n && self.mask & (1u128 << (e.code(self.n) - 1)) != 0
    }

    /// Elements in code order (unstarred ascending, then starred ascending).
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let n = self.n;
        (1..=2 * n).filter_map(move |code| {
            if self.mask & (1u128 << (code - 1)) != 0 {
                Some(Element::from_code(code, n))
            } else {
                None
            }
        })
    }

    /// The image under the star involution (always admissible).
    pub fn star_set(&self) -> Self {
        let lo = self.mask & ((1u128 << self.n) - 1);
        let hi = self.mask >> self.n;
        AdmissibleSet {
            n: self.n,
            mask: hi | (lo << self.n),
        }
    }

    /// For a set covering this index: its starred or unstarred member.
    pub fn member_with_index(&self, index: u32) -> Option<Element> {
        let plain = Element::unstarred(index);
        if self.contains(plain) {
            Some(plain)
        } else if self.contains(plain.star()) {
            Some(plain.star())
        } else {
            None
        }
    }

    /// Bitmask of the unstarred part, a subset of `[n]`.
    pub fn delta_mask(&self) -> u64 {
        (self.mask & ((1u128 << self.n) - 1)) as u64
    }

    /// Number of unstarred members.
    pub fn unstarred_count(&self) -> usize {
        self.delta_mask().count_ones() as usize
    }

    pub(crate) fn mask(&self) -> u128 {
        self.mask
    }

    pub(crate) fn symmetric_difference_mask(&self, other: &AdmissibleSet) -> u128 {
        debug_assert_eq!(self.n, other.n);
        self.mask ^ other.mask
    }

    /// Toggles the given codes; returns None when the result is inadmissible.
    pub(crate) fn toggled(&self, toggle: u128) -> Option<Self> {
        let mask = self.mask ^ toggle;
        let lo = mask & ((1u128 << self.n) - 1);
        let hi = mask >> self.n;
        if lo & hi != 0 {
            return None;
        }
        Some(AdmissibleSet { n: self.n, mask })
    }
}

impl fmt::Debug for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// Lexicographic order on the ascending element sequences, shorter prefixes
/// first. This is the order used for all deterministic output.
impl Ord for AdmissibleSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mut a = self.elements();
        let mut b = other.elements();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for AdmissibleSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Enumerates all admissible `k`-subsets of `J` for ground size `n`, in a
/// fixed deterministic order.
pub fn admissible_sets(n: u32, k: usize) -> impl Iterator<Item = AdmissibleSet> {
    assert!(k as u32 <= n);
    IndexCombinations::new(n, k).flat_map(move |combo| {
        (0u64..1 << k).map(move |stars| {
            let mut mask: u128 = 0;
            for (j, &index) in combo.iter().enumerate() {
                let e = Element::new(index, stars & (1 << j) != 0);
                mask |= 1u128 << (e.code(n) - 1);
            }
            AdmissibleSet::from_mask(n, mask)
        })
    })
}

/// Ascending k-subsets of 1..=n as sorted index vectors.
struct IndexCombinations {
    n: u32,
    current: Option<Vec<u32>>,
}

impl IndexCombinations {
    fn new(n: u32, k: usize) -> Self {
        let current = if k as u32 <= n {
            Some((1..=k as u32).collect())
        } else {
            None
        };
        IndexCombinations { n, current }
    }
}

impl Iterator for IndexCombinations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let combo = self.current.clone()?;
        let k = combo.len();
        // Advance: increment the rightmost index that still has room.
        let mut next = combo.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - (k - 1 - i) as u32 {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(combo)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderVariant {
    /// Total orderings (hyperoctahedral symmetry).
    C,
    /// Middle mutually starred pair incomparable.
    D,
}

/// An admissible ordering of `J`, stored as the listing of all `2n` elements
/// from largest to smallest.
///
/// The listing always has the star-reversal property: the last `n` entries
/// are the stars of the first `n`, in reverse order. For variant D the
/// entries at positions `n-1` and `n` form a mutually starred pair that the
/// induced order treats as incomparable; the canonical representative keeps
/// the unstarred element of that pair at position `n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleOrdering {
    n: u32,
    variant: OrderVariant,
    listing: Vec<Element>,
    position: Vec<u32>, // indexed by code - 1
}

impl AdmissibleOrdering {
    /// Builds the ordering whose largest-to-smallest listing starts with the
    /// given `n` elements. D-variant listings are canonicalized.
    pub fn from_top(n: u32, variant: OrderVariant, top: &[Element]) -> Result<Self, GroundError> {
        if top.len() != n as usize {
            return Err(GroundError::WrongLength {
                expected: n as usize,
                found: top.len(),
            });
        }
        let mut seen: u64 = 0;
        for e in top {
            if e.index() == 0 || e.index() > n {
                return Err(GroundError::IndexOutOfRange {
                    index: e.index(),
                    n,
                });
            }
            let bit = 1u64 << (e.index() - 1);
            if seen & bit != 0 {
                return Err(GroundError::RepeatedIndex(e.index()));
            }
            seen |= bit;
        }
        let mut top = top.to_vec();
        if variant == OrderVariant::D && top[n as usize - 1].is_starred() {
            top[n as usize - 1] = top[n as usize - 1].star();
        }
        let mut listing = top.clone();
        listing.extend(top.iter().rev().map(|e| e.star()));
        let mut position = vec![0u32; 2 * n as usize];
        for (pos, e) in listing.iter().enumerate() {
            position[(e.code(n) - 1) as usize] = pos as u32;
        }
        Ok(AdmissibleOrdering {
            n,
            variant,
            listing,
            position,
        })
    }

    pub fn ground(&self) -> u32 {
        self.n
    }

    pub fn variant(&self) -> OrderVariant {
        self.variant
    }

    /// All `2n` elements from largest to smallest.
    pub fn listing(&self) -> &[Element] {
        &self.listing
    }

    /// Position of an element in the listing; 0 is the largest.
    pub fn position(&self, e: Element) -> usize {
        self.position[(e.code(self.n) - 1) as usize] as usize
    }

    /// The order-reversed ordering, obtained by starring every entry of the
    /// listing in place.
    pub fn reversed(&self) -> Self {
        let top: Vec<Element> = self.listing[..self.n as usize]
            .iter()
            .map(|e| e.star())
            .collect();
        Self::from_top(self.n, self.variant, &top).expect("reversal preserves validity")
    }

    fn position_refined(&self, e: Element, swap_middle: bool) -> u32 {
        let p = self.position[(e.code(self.n) - 1) as usize];
        if swap_middle {
            if p == self.n - 1 {
                return self.n;
            }
            if p == self.n {
                return self.n - 1;
            }
        }
        p
    }

    fn sorted_positions(&self, s: &AdmissibleSet, swap_middle: bool) -> Vec<u32> {
        let mut v: Vec<u32> = s
            .elements()
            .map(|e| self.position_refined(e, swap_middle))
            .collect();
        v.sort_unstable();
        v
    }

    /// Gale comparison: true iff `a ⪯ b` in the Gale order induced on
    /// admissible `k`-sets. For variant D this requires domination under both
    /// total refinements of the ordering.
    pub fn gale_leq(&self, a: &AdmissibleSet, b: &AdmissibleSet) -> bool {
        assert_eq!(a.ground(), self.n);
        assert_eq!(b.ground(), self.n);
        assert_eq!(a.len(), b.len(), "Gale order compares equicardinal sets");
        let dominated = |swap: bool| {
            let pa = self.sorted_positions(a, swap);
            let pb = self.sorted_positions(b, swap);
            pa.iter().zip(pb.iter()).all(|(x, y)| x >= y)
        };
        match self.variant {
            OrderVariant::C => dominated(false),
            OrderVariant::D => dominated(false) && dominated(true),
        }
    }
}

impl fmt::Debug for AdmissibleOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AdmissibleOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n as usize;
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.listing.len() {
            if self.variant == OrderVariant::D && i == n - 1 {
                parts.push(format!("{{{} {}}}", self.listing[i], self.listing[i + 1]));
                i += 2;
            } else {
                parts.push(self.listing[i].to_string());
                i += 1;
            }
        }
        write!(f, "{}", parts.join(" > "))
    }
}

/// Enumerates every admissible ordering exactly once: `2^n·n!` for variant C
/// and `2^(n-1)·n!` canonical representatives for variant D. Permutations are
/// visited in lexicographic order and star patterns in ascending mask order,
/// which fixes the scan order used for minimal witnesses.
pub fn enumerate_admissible_orderings(
    n: u32,
    variant: OrderVariant,
) -> impl Iterator<Item = AdmissibleOrdering> {
    assert!(n >= 1);
    let star_bits = match variant {
        OrderVariant::C => n,
        OrderVariant::D => n - 1,
    };
    OrderingIter {
        n,
        variant,
        perm: Some((1..=n).collect()),
        stars: 0,
        star_limit: 1u64 << star_bits,
    }
}

struct OrderingIter {
    n: u32,
    variant: OrderVariant,
    perm: Option<Vec<u32>>,
    stars: u64,
    star_limit: u64,
}

impl Iterator for OrderingIter {
    type Item = AdmissibleOrdering;

    fn next(&mut self) -> Option<AdmissibleOrdering> {
        let perm = self.perm.as_ref()?.clone();
        let top: Vec<Element> = perm
            .iter()
            .enumerate()
            .map(|(j, &index)| Element::new(index, self.stars & (1 << j) != 0))
            .collect();
        let ordering = AdmissibleOrdering::from_top(self.n, self.variant, &top)
            .expect("enumeration produces valid tops");
        self.stars += 1;
        if self.stars == self.star_limit {
            self.stars = 0;
            let perm = self.perm.as_mut().expect("checked above");
            if !next_permutation(perm) {
                self.perm = None;
            }
        }
        Some(ordering)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The unique Gale-maximal member of `sets`, or the first two incomparable
/// maximal members in scan order when no unique maximum exists.
pub fn max_basis(
    sets: &[AdmissibleSet],
    ord: &AdmissibleOrdering,
) -> Result<AdmissibleSet, (AdmissibleSet, AdmissibleSet)> {
    assert!(!sets.is_empty(), "max_basis needs a nonempty collection");
    let refinements: &[bool] = match ord.variant() {
        OrderVariant::C => &[false],
        OrderVariant::D => &[false, true],
    };
    let posvecs: Vec<Vec<Vec<u32>>> = refinements
        .iter()
        .map(|&swap| sets.iter().map(|s| ord.sorted_positions(s, swap)).collect())
        .collect();

    // A maximum, if it exists, realizes the componentwise position minimum in
    // every refinement.
    let k = sets[0].len();
    let mins: Vec<Vec<u32>> = posvecs
        .iter()
        .map(|vecs| {
            (0..k)
                .map(|slot| vecs.iter().map(|v| v[slot]).min().expect("nonempty"))
                .collect()
        })
        .collect();
    for (i, _) in sets.iter().enumerate() {
        if posvecs
            .iter()
            .zip(mins.iter())
            .all(|(vecs, m)| &vecs[i] == m)
        {
            return Ok(sets[i]);
        }
    }

    // No maximum: report the first two maximal (hence incomparable) members.
    let leq = |i: usize, j: usize| {
        posvecs
            .iter()
            .all(|vecs| vecs[i].iter().zip(vecs[j].iter()).all(|(x, y)| x >= y))
    };
    let mut maximal = Vec::new();
    for i in 0..sets.len() {
        let strictly_below = (0..sets.len()).any(|j| j != i && leq(i, j) && !leq(j, i));
        if !strictly_below {
            maximal.push(i);
            if maximal.len() == 2 {
                break;
            }
        }
    }
    debug_assert!(maximal.len() == 2);
    Err((sets[maximal[0]], sets[maximal[1]]))
}
