//! Matrix representations of totally isotropic subspaces and the basis
//! collections of the matroids they define.
//!
//! A representation is a `k × (2n+m)` rational matrix whose columns are
//! labeled by `J = [n] ∪ [n]*` plus `m` extra coordinates `2n+1..2n+m`
//! carrying a positive-definite block of the symmetric form. Columns `i` and
//! `i*` may be swapped pairwise relative to the reference order
//! `1..n, 1*..n*, 2n+1..2n+m`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ground::{admissible_sets, AdmissibleSet, Element};
use crate::linalg::{rat, ratio, Matrix, Rat};
use num::traits::Zero;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReprError {
    #[error("a representation with m > 0 extra columns must have kind `general`")]
    KindMismatch,
    #[error("representation is not isotropic for its declared kind")]
    NotIsotropic,
    #[error("rank-deficient input: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },
    #[error("dimension bound violated: k = {k} rows exceed n = {n}")]
    DimensionBound { k: usize, n: u32 },
    #[error("matrix shape {rows}x{cols} does not match n={n}, m={m}")]
    BadShape {
        rows: usize,
        cols: usize,
        n: u32,
        m: u32,
    },
    #[error("column labels are not a pairwise swap of the reference order")]
    BadLabels,
    #[error("no admissible subset has a nonzero maximal minor")]
    NoBases,
    #[error("basis collection must be nonempty")]
    EmptyCollection,
    #[error("basis {basis} has size {found}, expected {expected}")]
    WrongBasisSize {
        basis: AdmissibleSet,
        found: usize,
        expected: usize,
    },
    #[error("ground size mismatch")]
    GroundMismatch,
}

/// Which bilinear form the representation is isotropic for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Antisymmetric form on 2n coordinates; isotropy means `ABᵀ` symmetric.
    Symplectic,
    /// Symmetric form on 2n coordinates; isotropy means `ABᵀ` skew.
    Orthogonal,
    /// Symmetric form on 2n+m coordinates; isotropy means
    /// `ABᵀ + BAᵀ + CCᵀ = 0`.
    General,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Kind::Symplectic => "symplectic",
            Kind::Orthogonal => "orthogonal",
            Kind::General => "general",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "symplectic" => Ok(Kind::Symplectic),
            "orthogonal" => Ok(Kind::Orthogonal),
            "general" => Ok(Kind::General),
            other => Err(format!("unknown kind {other:?}")),
        }
    }
}

/// A column label: an element of `J` or one of the extra coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    J(Element),
    Extra(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::J(e) => write!(f, "{e}"),
            Label::Extra(v) => write!(f, "{v}"),
        }
    }
}

/// Reference column labels `1..n, 1*..n*, 2n+1..2n+m`.
pub fn reference_labels(n: u32, m: u32) -> Vec<Label> {
    let mut labels = Vec::with_capacity((2 * n + m) as usize);
    labels.extend((1..=n).map(|i| Label::J(Element::unstarred(i))));
    labels.extend((1..=n).map(|i| Label::J(Element::starred(i))));
    labels.extend((2 * n + 1..=2 * n + m).map(Label::Extra));
    labels
}

/// The scalar product of the standard form on `2n+m` coordinates:
/// `⟨e_i, e_i*⟩ = 1`, `⟨f_k, f_k⟩ = 1`, all other basis pairs zero.
pub fn scalar_product(n: u32, u: &[Rat], v: &[Rat]) -> Rat {
    let n = n as usize;
    assert_eq!(u.len(), v.len());
    assert!(u.len() >= 2 * n);
    let mut acc = Rat::zero();
    for i in 0..n {
        acc += &u[i] * &v[n + i] + &u[n + i] * &v[i];
    }
    for k in 2 * n..u.len() {
        acc += &u[k] * &v[k];
    }
    acc
}

/// A matrix representation of a subspace, with labeled columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    n: u32,
    m: u32,
    kind: Kind,
    mat: Matrix,
    labels: Vec<Label>,
}

impl Representation {
    pub fn new(
        kind: Kind,
        n: u32,
        m: u32,
        mat: Matrix,
        labels: Vec<Label>,
    ) -> Result<Self, ReprError> {
        assert!(
            (1..=63).contains(&n),
            "ground size must be between 1 and 63"
        );
        if mat.cols() != (2 * n + m) as usize {
            return Err(ReprError::BadShape {
                rows: mat.rows(),
                cols: mat.cols(),
                n,
                m,
            });
        }
        if mat.rows() > n as usize {
            return Err(ReprError::DimensionBound { k: mat.rows(), n });
        }
        if labels.len() != mat.cols() {
            return Err(ReprError::BadLabels);
        }
        for i in 1..=n {
            let a = labels[(i - 1) as usize];
            let b = labels[(n + i - 1) as usize];
            let plain = Label::J(Element::unstarred(i));
            let star = Label::J(Element::starred(i));
            if !((a == plain && b == star) || (a == star && b == plain)) {
                return Err(ReprError::BadLabels);
            }
        }
        for j in 0..m {
            if labels[(2 * n + j) as usize] != Label::Extra(2 * n + 1 + j) {
                return Err(ReprError::BadLabels);
            }
        }
        Ok(Representation {
            n,
            m,
            kind,
            mat,
            labels,
        })
    }

    /// Representation with reference column order from the blocks `A`, `B`
    /// and optionally `C`.
    pub fn from_blocks(
        kind: Kind,
        a: &Matrix,
        b: &Matrix,
        c: Option<&Matrix>,
    ) -> Result<Self, ReprError> {
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.cols(), b.cols());
        let n = a.cols() as u32;
        let mut mat = a.hstack(b);
        let m = match c {
            Some(c) => {
                assert_eq!(c.rows(), a.rows());
                mat = mat.hstack(c);
                c.cols() as u32
            }
            None => 0,
        };
        Representation::new(kind, n, m, mat, reference_labels(n, m))
    }

    pub fn ground(&self) -> u32 {
        self.n
    }

    pub fn extra(&self) -> u32 {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.mat.rows()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn with_kind(&self, kind: Kind) -> Self {
        let mut rep = self.clone();
        rep.kind = kind;
        rep
    }

    /// Replaces the matrix, keeping kind and labels. The caller is
    /// responsible for the row space still being what it claims; isotropy is
    /// re-checked by the operations that require it.
    pub fn with_matrix(&self, mat: Matrix) -> Self {
        assert_eq!(mat.cols(), self.mat.cols());
        let mut rep = self.clone();
        rep.mat = mat;
        rep
    }

    /// Column position currently carrying the given label.
    pub fn column_of(&self, label: Label) -> usize {
        match label {
            Label::Extra(v) => {
                debug_assert!(v > 2 * self.n && v <= 2 * self.n + self.m);
                (v - 1) as usize
            }
            Label::J(e) => {
                let home = (e.code(self.n) - 1) as usize;
                if self.labels[home] == label {
                    home
                } else {
                    let other = (e.star().code(self.n) - 1) as usize;
                    debug_assert_eq!(self.labels[other], label);
                    other
                }
            }
        }
    }

    /// The `A`, `B`, `C` blocks in reference label order, undoing any column
    /// swaps.
    pub fn reference_blocks(&self) -> (Matrix, Matrix, Matrix) {
        let k = self.rank();
        let rows: Vec<usize> = (0..k).collect();
        let a_cols: Vec<usize> = (1..=self.n)
            .map(|i| self.column_of(Label::J(Element::unstarred(i))))
            .collect();
        let b_cols: Vec<usize> = (1..=self.n)
            .map(|i| self.column_of(Label::J(Element::starred(i))))
            .collect();
        let c_cols: Vec<usize> = (2 * self.n..2 * self.n + self.m)
            .map(|c| c as usize)
            .collect();
        let a = self.mat.minor(&rows, &a_cols).expect("in range");
        let b = self.mat.minor(&rows, &b_cols).expect("in range");
        let c = self.mat.minor(&rows, &c_cols).expect("in range");
        (a, b, c)
    }

    /// Whether the labeled row space is totally isotropic for the declared
    /// kind. Column swaps are undone before testing.
    pub fn check_isotropy(&self) -> Result<bool, ReprError> {
        if self.m > 0 && self.kind != Kind::General {
            return Err(ReprError::KindMismatch);
        }
        let (a, b, c) = self.reference_blocks();
        let ab = a.mul(&b.transpose());
        Ok(match self.kind {
            Kind::Symplectic => ab.is_symmetric(),
            Kind::Orthogonal => ab.is_skew_symmetric(),
            Kind::General => ab
                .add(&ab.transpose())
                .add(&c.mul(&c.transpose()))
                .is_zero(),
        })
    }

    /// The collection of admissible `k`-sets whose maximal minor is nonzero.
    pub fn extract_bases(&self) -> Result<BasisCollection, ReprError> {
        if !self.check_isotropy()? {
            return Err(ReprError::NotIsotropic);
        }
        let k = self.rank();
        let rows: Vec<usize> = (0..k).collect();
        let mut found = Vec::new();
        for candidate in admissible_sets(self.n, k) {
            let cols: Vec<usize> = candidate
                .elements()
                .map(|e| self.column_of(Label::J(e)))
                .collect();
            let det = self
                .mat
                .minor(&rows, &cols)
                .expect("in range")
                .det()
                .expect("square");
            if !det.is_zero() {
                found.push(candidate);
            }
        }
        BasisCollection::new(self.n, k, found).map_err(|_| ReprError::NoBases)
    }

    /// The same labeled representation with columns physically rearranged
    /// into reference label order. Pure presentation change: the label-to-
    /// column association, and hence the represented matroid, is untouched.
    pub fn reference_layout(&self) -> Self {
        let k = self.rank();
        let mut mat = Matrix::zeros(k, self.mat.cols());
        for (p, label) in self.labels.iter().enumerate() {
            let home = match label {
                Label::J(e) => (e.code(self.n) - 1) as usize,
                Label::Extra(v) => (*v - 1) as usize,
            };
            for r in 0..k {
                mat.set(r, home, self.mat.at(r, p).clone());
            }
        }
        Representation {
            n: self.n,
            m: self.m,
            kind: self.kind,
            mat,
            labels: reference_labels(self.n, self.m),
        }
    }

    /// Swaps the labels `i` and `i*` between their two columns, relabeling
    /// the represented matroid by the transposition `i ↔ i*`. Involutive.
    pub fn swap_columns_unsigned(&self, i: u32) -> Self {
        assert!(i >= 1 && i <= self.n);
        let mut rep = self.clone();
        rep.labels.swap((i - 1) as usize, (self.n + i - 1) as usize);
        rep
    }
}

/// Embeds a full-rank classical `k × n` representation as a Lagrangian
/// representation on `2n` columns: the classical matrix on top of `A` with
/// zeros below, and a maximal-rank orthogonal complement in the lower rows
/// of `B`. The result is isotropic for the symplectic and orthogonal kinds
/// simultaneously.
pub fn embed_classical(classical: &Matrix) -> Result<Representation, ReprError> {
    let k = classical.rows();
    let n = classical.cols();
    let rank = classical.rank();
    if rank != k || k == 0 {
        return Err(ReprError::RankDeficient {
            expected: k,
            found: rank,
        });
    }
    let complement = classical.null_space(); // (n-k) x n, rows orthogonal to classical rows
    let a = classical.vstack(&Matrix::zeros(n - k, n));
    let b = Matrix::zeros(k, n).vstack(&complement);
    Representation::from_blocks(Kind::Orthogonal, &a, &b, None)
}

/// A nonempty collection of admissible `k`-subsets of `J`, kept sorted in
/// the lexicographic element order used for all output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCollection {
    n: u32,
    k: usize,
    sets: Vec<AdmissibleSet>,
}

impl BasisCollection {
    pub fn new(n: u32, k: usize, mut sets: Vec<AdmissibleSet>) -> Result<Self, ReprError> {
        if sets.is_empty() {
            return Err(ReprError::EmptyCollection);
        }
        for s in &sets {
            if s.ground() != n {
                return Err(ReprError::GroundMismatch);
            }
            if s.len() != k {
                return Err(ReprError::WrongBasisSize {
                    basis: *s,
                    found: s.len(),
                    expected: k,
                });
            }
        }
        sets.sort();
        sets.dedup();
        Ok(BasisCollection { n, k, sets })
    }

    pub fn ground(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[AdmissibleSet] {
        &self.sets
    }

    pub fn contains(&self, s: &AdmissibleSet) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &AdmissibleSet> {
        self.sets.iter()
    }
}

impl fmt::Display for BasisCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sets {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

fn random_row_entry(rng: &mut ChaCha8Rng) -> Rat {
    match rng.gen_range(0..6) {
        0 => rat(0),
        1 => rat(1),
        2 => rat(-1),
        3 => rat(2),
        4 => rat(-2),
        _ => ratio(rng.gen_range(-3..=3), 2),
    }
}

fn random_skew(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = random_row_entry(rng);
            s.set(i, j, v.clone());
            s.set(j, i, -v);
        }
    }
    s
}

/// Deterministically generates a rank-`n` isotropic representation of the
/// requested kind, then obscures it with random row operations and (for the
/// symmetric-form kinds) random column swaps.
///
/// * orthogonal: `(S | I_n)` with `S` skew;
/// * symplectic: `(Y | I_n)` with `Y` symmetric;
/// * general: `(S - ½CCᵀ | I_n | C)`, which satisfies
///   `ABᵀ + BAᵀ + CCᵀ = 0` exactly.
pub fn generate_random_isotropic(n: u32, m: u32, kind: Kind, seed: u64) -> Representation {
    assert!(
        m == 0 || kind == Kind::General,
        "extra columns need kind general"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nu = n as usize;
    let skew = random_skew(nu, &mut rng);
    let (a, c) = match kind {
        Kind::Orthogonal => (skew, Matrix::zeros(nu, 0)),
        Kind::Symplectic => {
            let mut y = Matrix::zeros(nu, nu);
            for i in 0..nu {
                for j in i..nu {
                    let v = random_row_entry(&mut rng);
                    y.set(i, j, v.clone());
                    y.set(j, i, v);
                }
            }
            (y, Matrix::zeros(nu, 0))
        }
        Kind::General => {
            let c = Matrix::from_fn(nu, m as usize, |_, _| random_row_entry(&mut rng));
            let correction = c.mul(&c.transpose()).scale(&ratio(-1, 2));
            (skew.add(&correction), c)
        }
    };
    let b = Matrix::identity(nu);
    let mat = if m > 0 {
        a.hstack(&b).hstack(&c)
    } else {
        a.hstack(&b)
    };
    let mut rep = Representation::new(kind, n, m, mat, reference_labels(n, m))
        .expect("construction is well-shaped");

    // Row operations preserve both the row space and the basis collection.
    let mut work = rep.mat.clone();
    for _ in 0..2 * nu {
        let i = rng.gen_range(0..nu);
        let j = rng.gen_range(0..nu);
        if i != j {
            let mut e = Matrix::identity(nu);
            e.set(i, j, random_row_entry(&mut rng));
            work = e.mul(&work);
        }
    }
    rep = rep.with_matrix(work);

    // Unsigned column swaps are isometries of the symmetric form but not of
    // the antisymmetric one, so symplectic representations keep the
    // reference layout.
    if kind != Kind::Symplectic {
        for i in 1..=n {
            if rng.gen_bool(0.4) {
                rep = rep.swap_columns_unsigned(i);
            }
        }
    }
    debug_assert_eq!(rep.check_isotropy(), Ok(true));
    rep
}
