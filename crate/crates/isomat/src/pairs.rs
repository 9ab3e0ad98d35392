//! Lagrangian pairs of sets, matroids and subspaces: detection, the
//! rank-(n-1) intersection matroid, parity completion, union, the exploded
//! union on a ground set one larger, and the gluing/decomposition between
//! pairs of rank-n orthogonal representations and representations with one
//! extra isotropic coordinate.

use std::fmt;

use num::traits::{One, Signed, Zero};
use thiserror::Error;

use crate::axioms::{is_orthogonal_matroid, MaximalityFailure};
use crate::ground::{
    enumerate_admissible_orderings, max_basis, AdmissibleOrdering, AdmissibleSet, Element,
    OrderVariant,
};
use crate::linalg::{ratio, LinalgError, Matrix, Rat};
use crate::repr::{
    reference_labels, scalar_product, BasisCollection, Kind, Label, ReprError, Representation,
};

#[derive(Debug, Error)]
pub enum PairError {
    #[error("side {side} is not a Lagrangian orthogonal matroid: {failure}")]
    NotOrthogonalMatroid {
        side: usize,
        failure: Box<MaximalityFailure>,
    },
    #[error("side {side} does not have full rank n")]
    NotLagrangianRank { side: usize },
    #[error("not a Lagrangian pair: {0}")]
    NotAPair(Box<PairFailure>),
    #[error("cannot complete to a pair: {0}")]
    NotCompletable(String),
    #[error("completion rows pair to zero: degenerate input")]
    DegeneratePair,
    #[error("invalid gluing input: {0}")]
    InvalidGlueInput(String),
    #[error("ground sizes differ")]
    GroundMismatch,
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An ordering whose two Gale maxima do not differ by a mutually starred
/// pair.
#[derive(Debug, Clone)]
pub struct PairFailure {
    pub ordering: AdmissibleOrdering,
    pub first_max: AdmissibleSet,
    pub second_max: AdmissibleSet,
}

impl fmt::Display for PairFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "under {} the maxima are {} | {}",
            self.ordering, self.first_max, self.second_max
        )
    }
}

/// Two rank-n Lagrangian orthogonal matroids of opposite parity whose Gale
/// maxima differ by exactly `{i, i*}` under every D-admissible ordering.
/// Stored with the even-parity side first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangianPair {
    even: BasisCollection,
    odd: BasisCollection,
}

fn validate_side(b: &BasisCollection, side: usize) -> Result<(), PairError> {
    if b.rank() != b.ground() as usize {
        return Err(PairError::NotLagrangianRank { side });
    }
    match is_orthogonal_matroid(b) {
        crate::axioms::Verdict::Holds => Ok(()),
        crate::axioms::Verdict::Fails(failure) => Err(PairError::NotOrthogonalMatroid {
            side,
            failure: Box::new(failure),
        }),
    }
}

fn side_parity(b: &BasisCollection) -> usize {
    debug_assert!(crate::axioms::is_even(b));
    b.sets()[0].unstarred_count() % 2
}

impl LagrangianPair {
    /// Validates the pair condition over every D-admissible ordering.
    pub fn new(b1: &BasisCollection, b2: &BasisCollection) -> Result<Self, PairError> {
        if b1.ground() != b2.ground() {
            return Err(PairError::GroundMismatch);
        }
        validate_side(b1, 1)?;
        validate_side(b2, 2)?;
        for ordering in enumerate_admissible_orderings(b1.ground(), OrderVariant::D) {
            let first_max = max_basis(b1.sets(), &ordering).expect("orthogonal matroid");
            let second_max = max_basis(b2.sets(), &ordering).expect("orthogonal matroid");
            let diff = first_max.symmetric_difference_mask(&second_max);
            let lo = (diff & ((1u128 << b1.ground()) - 1)) as u64;
            let hi = (diff >> b1.ground()) as u64;
            if !(lo == hi && lo.count_ones() == 1) {
                return Err(PairError::NotAPair(Box::new(PairFailure {
                    ordering,
                    first_max,
                    second_max,
                })));
            }
        }
        let (even, odd) = if side_parity(b1) == 0 {
            (b1.clone(), b2.clone())
        } else {
            (b2.clone(), b1.clone())
        };
        debug_assert_ne!(side_parity(&even), side_parity(&odd));
        Ok(LagrangianPair { even, odd })
    }

    pub fn ground(&self) -> u32 {
        self.even.ground()
    }

    pub fn even(&self) -> &BasisCollection {
        &self.even
    }

    pub fn odd(&self) -> &BasisCollection {
        &self.odd
    }
}

/// Whether the two collections form a Lagrangian pair. Errors only when a
/// precondition fails (a side is not a Lagrangian orthogonal matroid).
pub fn is_lagrangian_pair(b1: &BasisCollection, b2: &BasisCollection) -> Result<bool, PairError> {
    match LagrangianPair::new(b1, b2) {
        Ok(_) => Ok(true),
        Err(PairError::NotAPair(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The rank-(n-1) orthogonal matroid whose bases are the pairwise
/// intersections of the two Gale maxima, over all D-admissible orderings.
pub fn pair_intersection_matroid(pair: &LagrangianPair) -> BasisCollection {
    let n = pair.ground();
    let mut sets = Vec::new();
    for ordering in enumerate_admissible_orderings(n, OrderVariant::D) {
        let a = max_basis(pair.even.sets(), &ordering).expect("orthogonal matroid");
        let b = max_basis(pair.odd.sets(), &ordering).expect("orthogonal matroid");
        sets.push(AdmissibleSet::from_mask(n, a.mask() & b.mask()));
    }
    BasisCollection::new(n, n as usize - 1, sets).expect("nonempty by construction")
}

/// Completes each basis of a rank-(n-1) orthogonal matroid with its free
/// index, once starred and once unstarred, splitting by parity. Inverse of
/// [`pair_intersection_matroid`].
pub fn complete_to_pair(b: &BasisCollection) -> Result<LagrangianPair, PairError> {
    let n = b.ground();
    if b.rank() + 1 != n as usize {
        return Err(PairError::NotCompletable(format!(
            "rank {} collection on ground {n} (need rank n-1)",
            b.rank()
        )));
    }
    if let crate::axioms::Verdict::Fails(f) = is_orthogonal_matroid(b) {
        return Err(PairError::NotCompletable(format!(
            "not an orthogonal matroid: {f}"
        )));
    }
    let mut evens = Vec::new();
    let mut odds = Vec::new();
    for basis in b.iter() {
        let covered = basis.delta_mask() | basis.star_set().delta_mask();
        let free = !covered & ((1u64 << n) - 1);
        debug_assert_eq!(free.count_ones(), 1, "rank n-1 leaves one free index");
        let index = free.trailing_zeros() + 1;
        let with_plain = basis
            .toggled(1u128 << (Element::unstarred(index).code(n) - 1))
            .expect("free index");
        let with_star = basis
            .toggled(1u128 << (Element::starred(index).code(n) - 1))
            .expect("free index");
        if with_plain.unstarred_count() % 2 == 0 {
            evens.push(with_plain);
            odds.push(with_star);
        } else {
            evens.push(with_star);
            odds.push(with_plain);
        }
    }
    let even = BasisCollection::new(n, n as usize, evens)?;
    let odd = BasisCollection::new(n, n as usize, odds)?;
    LagrangianPair::new(&even, &odd).map_err(|e| PairError::NotCompletable(e.to_string()))
}

/// The union of the two sides; always the basis collection of a Lagrangian
/// symplectic matroid.
pub fn pair_union(pair: &LagrangianPair) -> BasisCollection {
    let mut sets: Vec<AdmissibleSet> = pair.even.sets().to_vec();
    sets.extend_from_slice(pair.odd.sets());
    BasisCollection::new(pair.ground(), pair.ground() as usize, sets).expect("nonempty")
}

fn explode_set(s: &AdmissibleSet, appended: Element) -> AdmissibleSet {
    let n = s.ground() + 1;
    let mut elements: Vec<Element> = s.elements().collect();
    elements.push(appended);
    AdmissibleSet::from_elements(n, elements).expect("fresh index keeps admissibility")
}

/// The exploded union on ground `n+1`: bases of the first collection get
/// `n+1`, bases of the second get `(n+1)*`. Returned uninterpreted; the two
/// inputs form a Lagrangian pair exactly when the result is a Lagrangian
/// orthogonal matroid of rank `n+1`.
pub fn exploded_union(b1: &BasisCollection, b2: &BasisCollection) -> BasisCollection {
    assert_eq!(b1.ground(), b2.ground(), "exploded union needs one ground");
    let n = b1.ground();
    assert_eq!(b1.rank(), n as usize);
    assert_eq!(b2.rank(), n as usize);
    let mut sets: Vec<AdmissibleSet> = b1
        .iter()
        .map(|s| explode_set(s, Element::unstarred(n + 1)))
        .collect();
    sets.extend(b2.iter().map(|s| explode_set(s, Element::starred(n + 1))));
    BasisCollection::new(n + 1, n as usize + 1, sets).expect("nonempty")
}

/// Pair detection through the exploded union; agrees with
/// [`is_lagrangian_pair`] whenever that check's preconditions hold.
pub fn is_pair_via_explosion(
    b1: &BasisCollection,
    b2: &BasisCollection,
) -> Result<bool, PairError> {
    if b1.ground() != b2.ground() {
        return Err(PairError::GroundMismatch);
    }
    for (side, b) in [(1usize, b1), (2, b2)] {
        if b.rank() != b.ground() as usize {
            return Err(PairError::NotLagrangianRank { side });
        }
    }
    Ok(is_orthogonal_matroid(&exploded_union(b1, b2)).holds())
}

/// The hyperbolic Gram matrix `[[0, I], [I, 0]]` on `2n` coordinates.
fn hyperbolic_gram(n: usize) -> Matrix {
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if r + n == c || c + n == r {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
}

fn form(n: u32, u: &[Rat], v: &[Rat]) -> Rat {
    scalar_product(n, u, v)
}

fn exact_sqrt(value: &Rat) -> Option<Rat> {
    if value.is_negative() {
        return None;
    }
    let sn = value.numer().sqrt();
    let sd = value.denom().sqrt();
    if &(&sn * &sn) == value.numer() && &(&sd * &sd) == value.denom() {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

fn scaled_sum(a: &[Rat], alpha: &Rat, b: &[Rat], beta: &Rat) -> Vec<Rat> {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| x * alpha + y * beta)
        .collect()
}

/// The two isotropic rows extending an isotropic `(n-1)`-dimensional row
/// space to its two Lagrangian superspaces. The annihilator of the row space
/// under the symmetric form has dimension `n+1`; modulo the row space it is
/// a hyperbolic plane, whose two isotropic lines are found by solving one
/// rational quadratic exactly.
pub fn lagrangian_extensions(shared: &Matrix) -> Result<(Vec<Rat>, Vec<Rat>), PairError> {
    let n = shared.cols() / 2;
    if shared.cols() != 2 * n || shared.rows() + 1 != n {
        return Err(PairError::InvalidGlueInput(format!(
            "shared block must be (n-1) x 2n, got {}x{}",
            shared.rows(),
            shared.cols()
        )));
    }
    let gram = shared.mul(&hyperbolic_gram(n));
    let annihilator = gram.null_space();
    debug_assert_eq!(annihilator.rows(), n + 1);

    // Two annihilator rows completing the shared row space.
    let mut complement: Vec<Vec<Rat>> = Vec::new();
    let mut stack = shared.clone();
    for r in 0..annihilator.rows() {
        let candidate = Matrix::from_rows(vec![annihilator.row_slice(r).to_vec()]);
        let grown = stack.vstack(&candidate);
        if grown.rank() == stack.rank() + 1 {
            complement.push(annihilator.row_slice(r).to_vec());
            stack = grown;
            if complement.len() == 2 {
                break;
            }
        }
    }
    if complement.len() != 2 {
        return Err(PairError::InvalidGlueInput(
            "annihilator does not extend the shared block by two".into(),
        ));
    }
    let (w1, w2) = (&complement[0], &complement[1]);
    let nq = n as u32;
    let q11 = form(nq, w1, w1);
    let q12 = form(nq, w1, w2);
    let q22 = form(nq, w2, w2);

    // Isotropic lines of q(α,β) = q11 α² + 2 q12 αβ + q22 β².
    let one = Rat::one();
    let (x, y) = if q11.is_zero() && q22.is_zero() {
        if q12.is_zero() {
            return Err(PairError::InvalidGlueInput(
                "degenerate induced form on the hyperbolic plane".into(),
            ));
        }
        (w1.clone(), w2.clone())
    } else if q11.is_zero() {
        let beta = ratio(-2, 1) * &q12;
        (w1.clone(), scaled_sum(w1, &q22, w2, &beta))
    } else {
        let disc = &q12 * &q12 - &q11 * &q22;
        let root = exact_sqrt(&disc).ok_or_else(|| {
            PairError::InvalidGlueInput("induced plane is not hyperbolic over the rationals".into())
        })?;
        if root.is_zero() {
            return Err(PairError::InvalidGlueInput(
                "induced plane has a single isotropic line".into(),
            ));
        }
        let alpha_plus = (-&q12 + &root) / &q11;
        let alpha_minus = (-&q12 - &root) / &q11;
        (
            scaled_sum(w1, &alpha_plus, w2, &one),
            scaled_sum(w1, &alpha_minus, w2, &one),
        )
    };
    debug_assert!(form(nq, &x, &x).is_zero());
    debug_assert!(form(nq, &y, &y).is_zero());
    Ok((x, y))
}

/// Glues a Lagrangian pair of subspaces, given as a shared isotropic
/// `(n-1) x 2n` block and two completion rows, into one rank-n
/// representation with a single extra coordinate. The scaling constants are
/// `α = 1`, `β = -1/(2⟨x,y⟩)`, `c = 1`, which satisfy
/// `⟨αx, βy⟩ = -½c²` without leaving the rationals.
pub fn glue_pair_representations(
    shared: &Matrix,
    x: &[Rat],
    y: &[Rat],
) -> Result<Representation, PairError> {
    let n = shared.cols() / 2;
    if shared.cols() != 2 * n || shared.rows() + 1 != n || n == 0 {
        return Err(PairError::InvalidGlueInput(format!(
            "shared block must be (n-1) x 2n, got {}x{}",
            shared.rows(),
            shared.cols()
        )));
    }
    if x.len() != 2 * n || y.len() != 2 * n {
        return Err(PairError::InvalidGlueInput("row length must be 2n".into()));
    }
    let nq = n as u32;
    for r in 0..shared.rows() {
        for s in r..shared.rows() {
            if !form(nq, shared.row_slice(r), shared.row_slice(s)).is_zero() {
                return Err(PairError::InvalidGlueInput(
                    "shared rows are not mutually isotropic".into(),
                ));
            }
        }
        if !form(nq, shared.row_slice(r), x).is_zero()
            || !form(nq, shared.row_slice(r), y).is_zero()
        {
            return Err(PairError::InvalidGlueInput(
                "completion rows are not orthogonal to the shared block".into(),
            ));
        }
    }
    if !form(nq, x, x).is_zero() || !form(nq, y, y).is_zero() {
        return Err(PairError::InvalidGlueInput(
            "completion rows are not isotropic".into(),
        ));
    }
    for (row, name) in [(x, "x"), (y, "y")] {
        let grown = shared.vstack(&Matrix::from_rows(vec![row.to_vec()]));
        if grown.rank() != n {
            return Err(PairError::InvalidGlueInput(format!(
                "completion row {name} does not extend the shared block"
            )));
        }
    }
    let pairing = form(nq, x, y);
    if pairing.is_zero() {
        return Err(PairError::DegeneratePair);
    }
    let beta = ratio(-1, 2) / &pairing;
    let mut last: Vec<Rat> = scaled_sum(x, &Rat::one(), y, &beta);
    last.push(Rat::one());
    let mat = shared
        .hstack(&Matrix::zeros(shared.rows(), 1))
        .vstack(&Matrix::from_rows(vec![last]));
    let rep = Representation::new(Kind::General, nq, 1, mat, reference_labels(nq, 1))?;
    debug_assert_eq!(rep.check_isotropy(), Ok(true));
    Ok(rep)
}

fn row_space_intersection(p: &Matrix, q: &Matrix) -> Matrix {
    // rowspace(Q) is the dot-product complement of ker(Q), so a combination
    // aP lies in it iff the row vector a annihilates P·ker(Q)ᵀ.
    let kernel = q.null_space();
    let coeffs = p.mul(&kernel.transpose()).transpose().null_space();
    let inter = coeffs.mul(p);
    let (reduced, pivots) = inter.rref();
    let rows: Vec<usize> = (0..pivots.len()).collect();
    let cols: Vec<usize> = (0..reduced.cols()).collect();
    reduced.minor(&rows, &cols).expect("in range")
}

/// Glues two labeled rank-n orthogonal representations whose row spaces meet
/// in dimension `n-1`. The output keeps the shared column labels plus the
/// extra coordinate.
pub fn glue_represented_pair(
    rep1: &Representation,
    rep2: &Representation,
) -> Result<Representation, PairError> {
    let n = rep1.ground();
    if rep2.ground() != n {
        return Err(PairError::GroundMismatch);
    }
    for (side, rep) in [(1usize, rep1), (2, rep2)] {
        if rep.extra() != 0 || rep.rank() != n as usize {
            return Err(PairError::NotLagrangianRank { side });
        }
    }
    if rep1.labels() != rep2.labels() {
        return Err(PairError::InvalidGlueInput(
            "the two representations must carry the same column labels".into(),
        ));
    }
    let shared = row_space_intersection(rep1.matrix(), rep2.matrix());
    if shared.rows() + 1 != n as usize {
        return Err(PairError::InvalidGlueInput(format!(
            "row spaces meet in dimension {}, expected n-1",
            shared.rows()
        )));
    }
    let pick_completion = |rep: &Representation| -> Option<Vec<Rat>> {
        (0..rep.rank()).find_map(|r| {
            let candidate = Matrix::from_rows(vec![rep.matrix().row_slice(r).to_vec()]);
            (shared.vstack(&candidate).rank() == n as usize)
                .then(|| rep.matrix().row_slice(r).to_vec())
        })
    };
    let x = pick_completion(rep1).ok_or_else(|| {
        PairError::InvalidGlueInput("first row space lies in the shared block".into())
    })?;
    let y = pick_completion(rep2).ok_or_else(|| {
        PairError::InvalidGlueInput("second row space lies in the shared block".into())
    })?;
    let glued = glue_pair_representations(&shared, &x, &y)?;
    let mut labels = rep1.labels().to_vec();
    labels.push(Label::Extra(2 * n + 1));
    Ok(Representation::new(
        Kind::General,
        n,
        1,
        glued.matrix().clone(),
        labels,
    )?)
}

/// Outcome of decomposing a rank-n representation with one extra coordinate.
#[derive(Debug, Clone)]
pub enum BnDecomposition {
    /// The extra column is identically zero: dropping it leaves an
    /// orthogonal representation of the same matroid.
    SingleOrthogonal(Representation),
    /// The matroid is the union of a represented Lagrangian pair, stored
    /// even side first.
    Pair {
        even: Representation,
        odd: Representation,
    },
}

/// Splits a rank-n, `m = 1` representation into the Lagrangian pair of
/// orthogonal representations it glues, or reports that the extra column is
/// zero. The union of the pair's basis collections equals the input's.
pub fn decompose_bn_representation(rep: &Representation) -> Result<BnDecomposition, PairError> {
    let n = rep.ground();
    if rep.extra() != 1 || rep.rank() != n as usize {
        return Err(PairError::InvalidGlueInput(
            "decomposition expects k = n and m = 1".into(),
        ));
    }
    if !rep.check_isotropy()? {
        return Err(PairError::Repr(ReprError::NotIsotropic));
    }
    let mat = rep.matrix();
    let c_col = (2 * n) as usize;
    let ground_labels = rep.labels()[..c_col].to_vec();

    // Row operations cannot create or destroy a nonzero extra column.
    let pivot = (0..mat.rows()).find(|&r| !mat.at(r, c_col).is_zero());
    let Some(pivot) = pivot else {
        let rows: Vec<usize> = (0..mat.rows()).collect();
        let cols: Vec<usize> = (0..c_col).collect();
        let dropped = mat.minor(&rows, &cols)?;
        let single = Representation::new(Kind::Orthogonal, n, 0, dropped, ground_labels)?;
        return Ok(BnDecomposition::SingleOrthogonal(single));
    };

    // Normalize the pivot row and clear the extra column elsewhere, leaving
    // the shape [[A, 0], [z, 1]].
    let inv = mat.at(pivot, c_col).recip();
    let pivot_row: Vec<Rat> = mat.row_slice(pivot).iter().map(|v| v * &inv).collect();
    let mut shared_rows: Vec<Vec<Rat>> = Vec::new();
    for r in 0..mat.rows() {
        if r == pivot {
            continue;
        }
        let factor = mat.at(r, c_col).clone();
        let cleared: Vec<Rat> = mat
            .row_slice(r)
            .iter()
            .zip(pivot_row.iter())
            .map(|(v, p)| v - p * &factor)
            .collect();
        shared_rows.push(cleared[..c_col].to_vec());
    }
    let shared = if shared_rows.is_empty() {
        Matrix::zeros(0, c_col)
    } else {
        Matrix::from_rows(shared_rows).rref().0
    };
    let (x, y) = lagrangian_extensions(&shared)?;

    let build = |row: &[Rat]| -> Result<(Representation, usize), PairError> {
        let mat = shared
            .vstack(&Matrix::from_rows(vec![row.to_vec()]))
            .rref()
            .0;
        let rep = Representation::new(Kind::Orthogonal, n, 0, mat, ground_labels.clone())?;
        let bases = rep.extract_bases()?;
        let parity = bases.sets()[0].unstarred_count() % 2;
        Ok((rep, parity))
    };
    let (rep_x, parity_x) = build(&x)?;
    let (rep_y, parity_y) = build(&y)?;
    if parity_x == parity_y {
        return Err(PairError::InvalidGlueInput(
            "constituents do not have opposite parity".into(),
        ));
    }
    let (even, odd) = if parity_x == 0 {
        (rep_x, rep_y)
    } else {
        (rep_y, rep_x)
    };
    Ok(BnDecomposition::Pair { even, odd })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::is_symplectic_matroid;
    use crate::repr::generate_random_isotropic;
    use crate::repr::tests::coll;

    fn the_n2_pair() -> LagrangianPair {
        LagrangianPair::new(
            &coll(2, 2, &["1 2", "1* 2*"]),
            &coll(2, 2, &["1 2*", "1* 2"]),
        )
        .unwrap()
    }

    #[test]
    fn pair_detection_examples() {
        assert!(is_lagrangian_pair(
            &coll(2, 2, &["1 2", "1* 2*"]),
            &coll(2, 2, &["1 2*", "1* 2"])
        )
        .unwrap());
        assert!(!is_lagrangian_pair(&coll(2, 2, &["1 2"]), &coll(2, 2, &["1 2"])).unwrap());
        assert!(is_lagrangian_pair(&coll(1, 1, &["1"]), &coll(1, 1, &["1*"])).unwrap());
        // Precondition violations surface as errors, not `false`.
        assert!(matches!(
            is_lagrangian_pair(&coll(2, 2, &["1 2", "1* 2"]), &coll(2, 2, &["1 2*"])),
            Err(PairError::NotOrthogonalMatroid { side: 1, .. })
        ));
    }

    #[test]
    fn intersection_examples() {
        let pair = the_n2_pair();
        assert_eq!(
            pair_intersection_matroid(&pair),
            coll(2, 1, &["1", "1*", "2", "2*"])
        );

        let tiny = LagrangianPair::new(&coll(1, 1, &["1"]), &coll(1, 1, &["1*"])).unwrap();
        assert_eq!(pair_intersection_matroid(&tiny), coll(1, 0, &["-"]));

        assert!(is_orthogonal_matroid(&pair_intersection_matroid(&pair)).holds());
    }

    #[test]
    fn completion_examples() {
        let completed = complete_to_pair(&coll(2, 1, &["1", "1*", "2", "2*"])).unwrap();
        assert_eq!(completed.even(), &coll(2, 2, &["1 2", "1* 2*"]));
        assert_eq!(completed.odd(), &coll(2, 2, &["1 2*", "1* 2"]));

        let tiny = complete_to_pair(&coll(1, 0, &["-"])).unwrap();
        assert_eq!(tiny.even(), &coll(1, 1, &["1*"]));
        assert_eq!(tiny.odd(), &coll(1, 1, &["1"]));

        // Round trip through the intersection matroid.
        let pair = the_n2_pair();
        let back = complete_to_pair(&pair_intersection_matroid(&pair)).unwrap();
        assert_eq!(back, pair);
    }

    #[test]
    fn union_examples() {
        let pair = the_n2_pair();
        assert_eq!(
            pair_union(&pair),
            coll(2, 2, &["1 2", "1* 2*", "1 2*", "1* 2"])
        );
        assert!(is_symplectic_matroid(&pair_union(&pair)).holds());

        let tiny = LagrangianPair::new(&coll(1, 1, &["1"]), &coll(1, 1, &["1*"])).unwrap();
        assert_eq!(pair_union(&tiny), coll(1, 1, &["1", "1*"]));
    }

    #[test]
    fn exploded_union_examples() {
        let exploded = exploded_union(
            &coll(2, 2, &["1 2", "1* 2*"]),
            &coll(2, 2, &["1 2*", "1* 2"]),
        );
        assert_eq!(
            exploded,
            coll(3, 3, &["1 2 3", "1* 2* 3", "1 2* 3*", "1* 2 3*"])
        );
        assert!(is_orthogonal_matroid(&exploded).holds());

        let tiny = exploded_union(&coll(1, 1, &["1"]), &coll(1, 1, &["1*"]));
        assert_eq!(tiny, coll(2, 2, &["1 2", "1* 2*"]));
    }

    #[test]
    fn explosion_agrees_with_direct_pair_check() {
        // Exhaustive over all opposite-parity pairs of Lagrangian orthogonal
        // matroids for n = 2.
        let evens = [
            coll(2, 2, &["1 2"]),
            coll(2, 2, &["1* 2*"]),
            coll(2, 2, &["1 2", "1* 2*"]),
        ];
        let odds = [
            coll(2, 2, &["1 2*"]),
            coll(2, 2, &["1* 2"]),
            coll(2, 2, &["1 2*", "1* 2"]),
        ];
        for b1 in &evens {
            for b2 in &odds {
                assert_eq!(
                    is_pair_via_explosion(b1, b2).unwrap(),
                    is_lagrangian_pair(b1, b2).unwrap(),
                    "b1={b1} b2={b2}"
                );
            }
        }
        assert!(!is_pair_via_explosion(&coll(2, 2, &["1 2"]), &coll(2, 2, &["1 2"])).unwrap());
    }

    #[test]
    fn glue_examples() {
        // n=1: x = e1, y = e1*; shared block is empty.
        let shared = Matrix::zeros(0, 2);
        let x = vec![crate::linalg::rat(1), crate::linalg::rat(0)];
        let y = vec![crate::linalg::rat(0), crate::linalg::rat(1)];
        let glued = glue_pair_representations(&shared, &x, &y).unwrap();
        assert_eq!(glued.check_isotropy(), Ok(true));
        // (1 | -1/2 | 1)
        assert_eq!(glued.matrix().at(0, 0), &crate::linalg::rat(1));
        assert_eq!(glued.matrix().at(0, 1), &ratio(-1, 2));
        assert_eq!(glued.matrix().at(0, 2), &crate::linalg::rat(1));
        assert_eq!(glued.extract_bases().unwrap(), coll(1, 1, &["1", "1*"]));

        // Pairing zero -> degenerate.
        let z = vec![crate::linalg::rat(1), crate::linalg::rat(0)];
        assert!(matches!(
            glue_pair_representations(&shared, &x, &z),
            Err(PairError::DegeneratePair)
        ));
    }

    #[test]
    fn decompose_examples() {
        let b1 = Representation::from_blocks(
            Kind::General,
            &Matrix::from_int_rows(&[vec![-2]]),
            &Matrix::from_int_rows(&[vec![1]]),
            Some(&Matrix::from_int_rows(&[vec![2]])),
        )
        .unwrap();
        match decompose_bn_representation(&b1).unwrap() {
            BnDecomposition::Pair { even, odd } => {
                assert_eq!(even.extract_bases().unwrap(), coll(1, 1, &["1*"]));
                assert_eq!(odd.extract_bases().unwrap(), coll(1, 1, &["1"]));
            }
            other => panic!("expected a pair, got {other:?}"),
        }

        let single_input = Representation::from_blocks(
            Kind::General,
            &Matrix::from_int_rows(&[vec![0, 2], vec![-2, 0]]),
            &Matrix::identity(2),
            Some(&Matrix::zeros(2, 1)),
        )
        .unwrap();
        match decompose_bn_representation(&single_input).unwrap() {
            BnDecomposition::SingleOrthogonal(rep) => {
                assert_eq!(rep.extract_bases().unwrap(), coll(2, 2, &["1 2", "1* 2*"]));
            }
            other => panic!("expected single, got {other:?}"),
        }
    }

    #[test]
    fn decompose_glue_round_trip() {
        for seed in 0..25u64 {
            for n in 1..=3u32 {
                let rep = generate_random_isotropic(n, 1, Kind::General, seed);
                let bases = rep.extract_bases().unwrap();
                match decompose_bn_representation(&rep).unwrap() {
                    BnDecomposition::SingleOrthogonal(single) => {
                        assert_eq!(single.extract_bases().unwrap(), bases);
                    }
                    BnDecomposition::Pair { even, odd } => {
                        let eb = even.extract_bases().unwrap();
                        let ob = odd.extract_bases().unwrap();
                        let mut union: Vec<AdmissibleSet> = eb.sets().to_vec();
                        union.extend_from_slice(ob.sets());
                        let union = BasisCollection::new(n, n as usize, union).unwrap();
                        assert_eq!(union, bases, "n={n} seed={seed}");

                        let reglued = glue_represented_pair(&even, &odd).unwrap();
                        assert_eq!(reglued.extract_bases().unwrap(), bases);
                    }
                }
            }
        }
    }

    #[test]
    fn union_theorem_on_generated_pairs() {
        // Build pairs from random isotropic (n-1)-subspaces and check the
        // union and explosion theorems.
        for seed in 0..15u64 {
            let n = 3u32;
            let rep = generate_random_isotropic(n, 0, Kind::Orthogonal, seed);
            let rows: Vec<usize> = (0..n as usize - 1).collect();
            let cols: Vec<usize> = (0..2 * n as usize).collect();
            let shared = rep.matrix().minor(&rows, &cols).unwrap().rref().0;
            let (x, y) = lagrangian_extensions(&shared).unwrap();
            let rep_x = Representation::from_blocks(
                Kind::Orthogonal,
                &shared
                    .vstack(&Matrix::from_rows(vec![x.clone()]))
                    .minor(
                        &(0..n as usize).collect::<Vec<_>>(),
                        &(0..n as usize).collect::<Vec<_>>(),
                    )
                    .unwrap(),
                &shared
                    .vstack(&Matrix::from_rows(vec![x]))
                    .minor(
                        &(0..n as usize).collect::<Vec<_>>(),
                        &(n as usize..2 * n as usize).collect::<Vec<_>>(),
                    )
                    .unwrap(),
                None,
            )
            .unwrap();
            let rep_y = Representation::from_blocks(
                Kind::Orthogonal,
                &shared
                    .vstack(&Matrix::from_rows(vec![y.clone()]))
                    .minor(
                        &(0..n as usize).collect::<Vec<_>>(),
                        &(0..n as usize).collect::<Vec<_>>(),
                    )
                    .unwrap(),
                &shared
                    .vstack(&Matrix::from_rows(vec![y]))
                    .minor(
                        &(0..n as usize).collect::<Vec<_>>(),
                        &(n as usize..2 * n as usize).collect::<Vec<_>>(),
                    )
                    .unwrap(),
                None,
            )
            .unwrap();
            let b1 = rep_x.extract_bases().unwrap();
            let b2 = rep_y.extract_bases().unwrap();
            let pair = LagrangianPair::new(&b1, &b2).unwrap();
            assert!(is_symplectic_matroid(&pair_union(&pair)).holds());
            assert!(is_orthogonal_matroid(&exploded_union(&b1, &b2)).holds());
            assert_eq!(
                complete_to_pair(&pair_intersection_matroid(&pair)).unwrap(),
                pair
            );
        }
    }

    #[test]
    fn converse_of_the_union_theorem_fails() {
        // A Lagrangian symplectic matroid need not be a union of a pair: a
        // single-parity collection has an empty odd side.
        let witness = coll(2, 2, &["1 2", "1* 2*"]);
        assert!(is_symplectic_matroid(&witness).holds());
        let (evens, odds): (Vec<AdmissibleSet>, Vec<AdmissibleSet>) =
            witness.iter().partition(|s| s.unstarred_count() % 2 == 0);
        assert!(odds.is_empty());
        assert!(!evens.is_empty());
    }

    #[test]
    fn parity_split_is_forced() {
        // Pair sides are parity-pure, so the only candidate split of a union
        // is the partition by parity; check it recovers the n=2 pair.
        let pair = the_n2_pair();
        let union = pair_union(&pair);
        let (evens, odds): (Vec<AdmissibleSet>, Vec<AdmissibleSet>) =
            union.iter().partition(|s| s.unstarred_count() % 2 == 0);
        let even = BasisCollection::new(2, 2, evens).unwrap();
        let odd = BasisCollection::new(2, 2, odds).unwrap();
        assert_eq!(&even, pair.even());
        assert_eq!(&odd, pair.odd());
    }
}
