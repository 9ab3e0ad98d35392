//! Dense matrices over arbitrary-precision rationals: reduced row echelon
//! form, determinants, minors, kernels, and Pfaffians.
//!
//! Everything is exact. Orientation data downstream is pure sign
//! information, so no floating point is allowed anywhere near it.

use std::collections::HashMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Parses and prints as `p/q` or a bare integer `p`.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// The rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
}

/// A dense row-major matrix of rationals. Zero-dimensional shapes are valid;
/// the empty 0x0 matrix has determinant and Pfaffian 1.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == width), "ragged rows");
        Matrix {
            rows: height,
            cols: width,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor for integer matrices (tests and examples).
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rat) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = value;
    }

    pub fn row_slice(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                if !a.is_zero() {
                    acc += a * rhs.at(k, c);
                }
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }

    pub fn scale(&self, factor: &Rat) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * factor)
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }

    pub fn hstack(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows);
        Matrix::from_fn(self.rows, self.cols + right.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                right.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols);
        Matrix::from_fn(self.rows + below.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                below.at(r - self.rows, c).clone()
            }
        })
    }

    /// Submatrix with the given rows and columns, in the given order.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Matrix, LinalgError> {
        for &r in rows {
            if r >= self.rows {
                return Err(LinalgError::IndexOutOfRange {
                    index: r,
                    dim: self.rows,
                });
            }
        }
        for &c in cols {
            if c >= self.cols {
                return Err(LinalgError::IndexOutOfRange {
                    index: c,
                    dim: self.cols,
                });
            }
        }
        Ok(Matrix::from_fn(rows.len(), cols.len(), |r, c| {
            self.at(rows[r], cols[c]).clone()
        }))
    }

    /// Principal minor on the index set given as a bitmask (bit i = row and
    /// column i), indices taken in increasing order.
    pub fn principal_minor(&self, mask: u64) -> Result<Matrix, LinalgError> {
        let idx: Vec<usize> = (0..64).filter(|i| mask & (1 << i) != 0).collect();
        self.minor(&idx, &idx)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..=r).all(|c| {
                    let sum = self.at(r, c) + self.at(c, r);
                    sum.is_zero()
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Reduced row echelon form together with the 0-based pivot columns.
    /// The row space is preserved.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut target = 0usize;
        for col in 0..m.cols {
            if target == m.rows {
                break;
            }
            let Some(pivot_row) = (target..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(target, pivot_row);
            let inv = m.at(target, col).recip();
            m.scale_row(target, &inv);
            for r in 0..m.rows {
                if r != target && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    m.sub_scaled_row(r, target, &factor);
                }
            }
            pivots.push(col);
            target += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rat) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * factor;
            }
        }
    }

    /// row r -= factor * row src
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Rat) {
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * factor;
            if !v.is_zero() {
                let idx = r * self.cols + c;
                self.data[idx] = &self.data[idx] - v;
            }
        }
    }

    /// Exact determinant by fraction-preserving Gaussian elimination.
    pub fn det(&self) -> Result<Rat, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(Rat::zero());
            };
            if pivot_row != col {
                m.swap_rows(col, pivot_row);
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col) * &inv;
                    m.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(det)
    }

    /// Matrix inverse via row reduction of `[self | I]`.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let (reduced, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::Singular);
        }
        reduced.minor(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>())
    }

    /// A basis of the kernel `{v : Mv = 0}`, one vector per row. The basis is
    /// the canonical one read off the reduced row echelon form.
    pub fn null_space(&self) -> Matrix {
        let (reduced, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.at(r, f).clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Matrix::zeros(0, self.cols)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// The Pfaffian of a skew-symmetric matrix, by expansion along the first
    /// remaining row with memoization over index subsets. Odd sizes give 0
    /// and the empty matrix gives 1.
    pub fn pfaffian(&self) -> Result<Rat, LinalgError> {
        self.require_skew()?;
        if self.rows % 2 == 1 {
            return Ok(Rat::zero());
        }
        let full: u64 = if self.rows == 64 {
            u64::MAX
        } else {
            (1u64 << self.rows) - 1
        };
        let mut memo = HashMap::new();
        Ok(self.pf_mask(full, &mut memo))
    }

    fn pf_mask(&self, mask: u64, memo: &mut HashMap<u64, Rat>) -> Rat {
        if mask == 0 {
            return Rat::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut acc = Rat::zero();
        let mut positive = true;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let entry = self.at(first, j);
            if !entry.is_zero() {
                let sub = self.pf_mask(rest & !(1 << j), memo);
                let term = entry * sub;
                if positive {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            positive = !positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Pfaffians of every principal minor, indexed by subset bitmask. Shares
    /// one memo table, so the whole family costs little more than the full
    /// Pfaffian.
    pub fn principal_minor_pfaffians(&self) -> Result<Vec<Rat>, LinalgError> {
        self.require_skew()?;
        assert!(self.rows <= 20, "principal minor table limited to size 20");
        let mut memo = HashMap::new();
        let mut table = Vec::with_capacity(1 << self.rows);
        for mask in 0u64..(1 << self.rows) {
            if mask.count_ones() % 2 == 1 {
                table.push(Rat::zero());
            } else {
                table.push(self.pf_mask(mask, &mut memo));
            }
        }
        Ok(table)
    }

    /// The Pfaffian evaluated literally as the signed sum over the set of
    /// permutations that list each matching pair after the minimum of the
    /// remaining entries. Exponential; kept as an independent oracle for the
    /// production expansion and surfaced by the `oracle` CLI verb.
    pub fn pfaffian_oracle(&self) -> Result<Rat, LinalgError> {
        self.require_skew()?;
        assert!(self.rows <= 12, "the definitional sum is for small sizes");
        if self.rows % 2 == 1 {
            return Ok(Rat::zero());
        }
        if self.rows == 0 {
            return Ok(Rat::one());
        }
        let mut remaining: Vec<usize> = (0..self.rows).collect();
        let mut sequence = Vec::with_capacity(self.rows);
        let mut acc = Rat::zero();
        self.oracle_rec(&mut remaining, &mut sequence, &mut acc);
        Ok(acc)
    }

    fn oracle_rec(&self, remaining: &mut Vec<usize>, sequence: &mut Vec<usize>, acc: &mut Rat) {
        if remaining.is_empty() {
            let mut product = Rat::one();
            for pair in sequence.chunks(2) {
                product *= self.at(pair[0], pair[1]);
                if product.is_zero() {
                    return;
                }
            }
            if permutation_sign(sequence) < 0 {
                *acc -= product;
            } else {
                *acc += product;
            }
            return;
        }
        // The smallest remaining index always leads its pair.
        let smallest = remaining.remove(0);
        sequence.push(smallest);
        for i in 0..remaining.len() {
            let partner = remaining.remove(i);
            sequence.push(partner);
            self.oracle_rec(remaining, sequence, acc);
            sequence.pop();
            remaining.insert(i, partner);
        }
        sequence.pop();
        remaining.insert(0, smallest);
    }

    fn require_skew(&self) -> Result<(), LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_skew_symmetric() {
            return Err(LinalgError::NotSkewSymmetric);
        }
        Ok(())
    }
}

/// Sign of a permutation given as a sequence of distinct values, by counting
/// inversions.
pub fn permutation_sign(sequence: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..sequence.len() {
        for j in i + 1..sequence.len() {
            if sequence[i] > sequence[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// -1, 0 or +1.
pub fn sign_of(v: &Rat) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row_slice(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}:\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    pub(crate) fn random_rat(rng: &mut impl Rng) -> Rat {
        let num = rng.gen_range(-4i64..=4);
        let den = *[1i64, 1, 1, 2, 3].get(rng.gen_range(0..5)).unwrap();
        ratio(num, den)
    }

    pub(crate) fn random_skew(n: usize, rng: &mut impl Rng) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = random_rat(rng);
                m.set(i, j, v.clone());
                m.set(j, i, -v);
            }
        }
        m
    }

    #[test]
    fn rref_examples() {
        let (r, p) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = Matrix::from_int_rows(&[vec![2, 4], vec![1, 2]]).rref();
        assert_eq!(r, Matrix::from_int_rows(&[vec![1, 2], vec![0, 0]]));
        assert_eq!(p, vec![0]);

        let (r, p) = Matrix::zeros(2, 3).rref();
        assert_eq!(r, Matrix::zeros(2, 3));
        assert!(p.is_empty());
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::identity(3).det().unwrap(), rat(1));
        assert_eq!(
            Matrix::from_int_rows(&[vec![0, 2], vec![-2, 0]])
                .det()
                .unwrap(),
            rat(4)
        );
        assert_eq!(
            Matrix::from_int_rows(&[vec![1, 2], vec![2, 4]])
                .det()
                .unwrap(),
            rat(0)
        );
        assert_eq!(Matrix::zeros(0, 0).det().unwrap(), rat(1));
        assert!(Matrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn minor_examples() {
        assert_eq!(
            Matrix::identity(3).minor(&[0, 1], &[0, 1]).unwrap(),
            Matrix::identity(2)
        );
        let empty = Matrix::identity(2).minor(&[], &[]).unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 0));
        assert_eq!(
            Matrix::from_int_rows(&[vec![1, 2], vec![3, 4]])
                .minor(&[1], &[0])
                .unwrap(),
            Matrix::from_int_rows(&[vec![3]])
        );
        assert!(Matrix::identity(2).minor(&[2], &[0]).is_err());
    }

    #[test]
    fn pfaffian_examples() {
        assert_eq!(Matrix::zeros(0, 0).pfaffian().unwrap(), rat(1));
        assert_eq!(
            Matrix::from_int_rows(&[vec![0, 5], vec![-5, 0]])
                .pfaffian()
                .unwrap(),
            rat(5)
        );
        let mut rng = StdRng::seed_from_u64(7);
        let odd = random_skew(3, &mut rng);
        assert_eq!(odd.pfaffian().unwrap(), rat(0));
        // a12=1 a13=2 a14=3 a23=4 a24=5 a34=6 -> 1*6 - 2*5 + 3*4 = 8
        let m = Matrix::from_int_rows(&[
            vec![0, 1, 2, 3],
            vec![-1, 0, 4, 5],
            vec![-2, -4, 0, 6],
            vec![-3, -5, -6, 0],
        ]);
        assert_eq!(m.pfaffian().unwrap(), rat(8));
        assert_eq!(m.pfaffian_oracle().unwrap(), rat(8));
        assert!(Matrix::identity(2).pfaffian().is_err());
    }

    #[test]
    fn pfaffian_oracle_examples() {
        assert_eq!(Matrix::zeros(2, 2).pfaffian_oracle().unwrap(), rat(0));
        assert_eq!(Matrix::zeros(0, 0).pfaffian_oracle().unwrap(), rat(1));
        let mut rng = StdRng::seed_from_u64(42);
        let m = random_skew(6, &mut rng);
        assert_eq!(m.pfaffian().unwrap(), m.pfaffian_oracle().unwrap());
    }

    #[test]
    fn null_space_is_a_kernel_basis() {
        let m = Matrix::from_int_rows(&[vec![1, 1, 0], vec![0, 1, 1]]);
        let ns = m.null_space();
        assert_eq!(ns.rows(), 1);
        for r in 0..ns.rows() {
            let v = Matrix::from_rows(vec![ns.row_slice(r).to_vec()]);
            assert!(m.mul(&v.transpose()).is_zero());
        }
        assert_eq!(Matrix::identity(3).null_space().rows(), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_int_rows(&[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_int_rows(&[vec![1, 2], vec![2, 4]])
            .inverse()
            .is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn pfaffian_squares_to_determinant(seed in 0u64..10_000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let n = rng.gen_range(0..=8usize) & !1; // even sizes
            let m = random_skew(n, &mut rng);
            let pf = m.pfaffian().unwrap();
            prop_assert_eq!(&pf * &pf, m.det().unwrap());
        }

        #[test]
        fn pfaffian_matches_oracle(seed in 0u64..10_000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let n = rng.gen_range(0..=10usize);
            let m = random_skew(n, &mut rng);
            prop_assert_eq!(m.pfaffian().unwrap(), m.pfaffian_oracle().unwrap());
        }

        #[test]
        fn pfaffian_invariant_under_congruence_row_col_op(seed in 0u64..10_000) {
            // Adding λ·(row i) to row j together with λ·(col i) to col j is a
            // congruence by an elementary matrix of determinant 1, so the
            // Pfaffian is unchanged.
            let mut rng = StdRng::seed_from_u64(seed);
            let n = 2 * rng.gen_range(1..=4usize);
            let m = random_skew(n, &mut rng);
            let i = rng.gen_range(0..n);
            let j = (i + rng.gen_range(1..n)) % n;
            let lambda = random_rat(&mut rng);
            let mut e = Matrix::identity(n);
            e.set(j, i, lambda);
            let congruent = e.mul(&m).mul(&e.transpose());
            prop_assert_eq!(congruent.pfaffian().unwrap(), m.pfaffian().unwrap());
        }

        #[test]
        fn row_operations_preserve_independent_column_sets(seed in 0u64..10_000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let rows = rng.gen_range(1..=3usize);
            let cols = rng.gen_range(rows..=4usize);
            let m = Matrix::from_fn(rows, cols, |_, _| random_rat(&mut rng));
            // Random invertible row transformation.
            let mut e = Matrix::identity(rows);
            for _ in 0..4 {
                let i = rng.gen_range(0..rows);
                let j = rng.gen_range(0..rows);
                if i != j {
                    let mut step = Matrix::identity(rows);
                    step.set(i, j, random_rat(&mut rng));
                    e = e.mul(&step);
                }
            }
            let m2 = e.mul(&m);
            let all_rows: Vec<usize> = (0..rows).collect();
            let mut subset = vec![0usize; rows];
            // All size-`rows` column subsets.
            fn subsets(cols: usize, k: usize) -> Vec<Vec<usize>> {
                if k == 0 { return vec![vec![]]; }
                let mut out = Vec::new();
                for first in 0..cols {
                    for rest in subsets(cols, k - 1) {
                        if rest.iter().all(|&r| r > first) {
                            let mut v = vec![first];
                            v.extend(rest);
                            out.push(v);
                        }
                    }
                }
                out
            }
            for cols_pick in subsets(cols, rows) {
                subset.copy_from_slice(&cols_pick);
                let d1 = m.minor(&all_rows, &subset).unwrap().det().unwrap();
                let d2 = m2.minor(&all_rows, &subset).unwrap().det().unwrap();
                prop_assert_eq!(d1.is_zero(), d2.is_zero());
            }
        }
    }
}
