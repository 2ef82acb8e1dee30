//! Exact dense linear algebra over the supported coefficient rings.
//!
//! Vectors and matrices store [`Scalar`] entries (matrices in row-major order)
//! together with the [`RingDesc`] they live over. All operations are exact; there
//! is no floating point and no tolerance anywhere.
//!
//! Inversion works over arbitrary commutative rings via the adjugate: a square
//! matrix is invertible iff its determinant is a unit, in which case
//! `A⁻¹ = det(A)⁻¹ · adj(A)`. This is deliberately division-free until the final
//! unit inversion, so it is correct over ℤ and over ℤ/n with composite n, where
//! Gaussian elimination would need pivots that are units. Determinants use
//! expansion over column subsets (dynamic programming on bitmasks), which costs
//! `O(2^n · n)` ring operations — fine for the small ranks that arise here, and
//! guarded by an explicit size cap.
//!
//! Kronecker (tensor) products follow one fixed convention throughout the crate:
//! **the left factor varies slowest**. Concretely, `(a ⊗ b)[i·m + j] = a[i]·b[j]`
//! where `m = b.len()`, and similarly for matrix rows and columns.
//!
//! Shape and ring mismatches on the fallible operations are reported through
//! [`LinalgError`]; constructors panic on malformed input since that is a
//! programming error, not a data-dependent condition.

use std::fmt;

use thiserror::Error;

use crate::ring::{RingDesc, Scalar};

/// Determinants (and hence inverses) are computed by subset dynamic programming,
/// so matrices beyond this size are refused rather than allowed to allocate `2^n`
/// intermediates.
pub const MAX_DET_DIM: usize = 20;

/// Errors from exact linear-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// Operand shapes do not fit the operation.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Operands live over different rings.
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingDesc, RingDesc),
    /// A square matrix has a determinant that is not a unit, so it has no inverse
    /// over its ring.
    #[error("matrix is degenerate over {ring}: determinant {det} is not a unit")]
    Degenerate {
        /// The ring of the matrix.
        ring: RingDesc,
        /// The determinant, formatted canonically.
        det: String,
    },
    /// The matrix exceeds [`MAX_DET_DIM`].
    #[error("matrix of size {0} exceeds the determinant size cap {MAX_DET_DIM}")]
    TooLarge(usize),
}

/// A dense vector of exact scalars over a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    ring: RingDesc,
    entries: Vec<Scalar>,
}

/// A dense row-major matrix of exact scalars over a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingDesc,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Vector {
    /// Wraps entries into a vector. Panics if any entry is foreign to `ring`.
    pub fn new(ring: RingDesc, entries: Vec<Scalar>) -> Self {
        for e in &entries {
            assert!(ring.contains(e), "vector entry {e:?} not in ring {ring}");
        }
        Vector { ring, entries }
    }

    /// The zero vector of length `len`.
    pub fn zeros(ring: RingDesc, len: usize) -> Self {
        Vector {
            ring,
            entries: vec![ring.zero(); len],
        }
    }

    /// Builds a vector by embedding machine integers.
    pub fn from_i64(ring: RingDesc, entries: &[i64]) -> Self {
        Vector {
            ring,
            entries: entries.iter().map(|&x| ring.from_i64(x)).collect(),
        }
    }

    /// The ring the vector lives over.
    pub fn ring(&self) -> RingDesc {
        self.ring
    }

    /// The number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True if the vector has no entries.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `i`.
    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    /// Overwrites entry `i`.
    pub fn set(&mut self, i: usize, value: Scalar) {
        assert!(self.ring.contains(&value), "entry not in ring {}", self.ring);
        self.entries[i] = value;
    }

    /// Iterates over the entries in order.
    pub fn iter(&self) -> impl Iterator<Item = &Scalar> {
        self.entries.iter()
    }

    /// True if every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Vector) -> Result<Vector, LinalgError> {
        if self.ring != other.ring {
            return Err(LinalgError::RingMismatch(self.ring, other.ring));
        }
        if self.len() != other.len() {
            return Err(LinalgError::Shape(format!(
                "vector lengths {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Vector {
            ring: self.ring,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| self.ring.add(a, b))
                .collect(),
        })
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            ring: self.ring,
            entries: self.entries.iter().map(|e| self.ring.mul(c, e)).collect(),
        }
    }

    /// The dot product `Σ_i self[i]·other[i]`.
    pub fn dot(&self, other: &Vector) -> Result<Scalar, LinalgError> {
        if self.ring != other.ring {
            return Err(LinalgError::RingMismatch(self.ring, other.ring));
        }
        if self.len() != other.len() {
            return Err(LinalgError::Shape(format!(
                "vector lengths {} vs {}",
                self.len(),
                other.len()
            )));
        }
        let mut acc = self.ring.zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = self.ring.add(&acc, &self.ring.mul(a, b));
        }
        Ok(acc)
    }

    /// The Kronecker product; the left factor (self) varies slowest:
    /// `(v ⊗ w)[i·w.len() + j] = v[i]·w[j]`.
    pub fn tensor(&self, other: &Vector) -> Result<Vector, LinalgError> {
        if self.ring != other.ring {
            return Err(LinalgError::RingMismatch(self.ring, other.ring));
        }
        let mut entries = Vec::with_capacity(self.len() * other.len());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(self.ring.mul(a, b));
            }
        }
        Ok(Vector {
            ring: self.ring,
            entries,
        })
    }
}

impl Matrix {
    /// Wraps row-major entries into a `rows × cols` matrix. Panics if the entry
    /// count or any entry's ring is wrong.
    pub fn new(ring: RingDesc, rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "a {rows}x{cols} matrix needs {} entries, got {}",
            rows * cols,
            entries.len()
        );
        for e in &entries {
            assert!(ring.contains(e), "matrix entry {e:?} not in ring {ring}");
        }
        Matrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    /// The zero matrix of the given shape.
    pub fn zeros(ring: RingDesc, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    /// The `n × n` identity matrix.
    pub fn identity(ring: RingDesc, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged rows.
    pub fn from_i64(ring: RingDesc, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| ring.from_i64(x)));
        }
        Matrix::new(ring, r, c, entries)
    }

    /// The ring the matrix lives over.
    pub fn ring(&self) -> RingDesc {
        self.ring
    }

    /// The number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// The number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    /// Overwrites entry `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        assert!(self.ring.contains(&value), "entry not in ring {}", self.ring);
        self.entries[r * self.cols + c] = value;
    }

    /// Row `r` as a vector.
    pub fn row(&self, r: usize) -> Vector {
        Vector {
            ring: self.ring,
            entries: (0..self.cols).map(|c| self.get(r, c).clone()).collect(),
        }
    }

    /// Column `c` as a vector.
    pub fn col(&self, c: usize) -> Vector {
        Vector {
            ring: self.ring,
            entries: (0..self.rows).map(|r| self.get(r, c).clone()).collect(),
        }
    }

    /// The row-major entries, flattened.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Reinterprets the entries as a new shape with the same row-major order.
    pub fn reshape(&self, rows: usize, cols: usize) -> Result<Matrix, LinalgError> {
        if rows * cols != self.entries.len() {
            return Err(LinalgError::Shape(format!(
                "cannot reshape {}x{} into {rows}x{cols}",
                self.rows, self.cols
            )));
        }
        Ok(Matrix {
            ring: self.ring,
            rows,
            cols,
            entries: self.entries.clone(),
        })
    }

    /// Builds a single-column matrix from a vector.
    pub fn column_from(v: &Vector) -> Matrix {
        Matrix {
            ring: v.ring,
            rows: v.len(),
            cols: 1,
            entries: v.entries.clone(),
        }
    }

    /// Builds a single-row matrix from a vector.
    pub fn row_from(v: &Vector) -> Matrix {
        Matrix {
            ring: v.ring,
            rows: 1,
            cols: v.len(),
            entries: v.entries.clone(),
        }
    }

    /// The transpose.
    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// The matrix product `self · other`.
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.ring != other.ring {
            return Err(LinalgError::RingMismatch(self.ring, other.ring));
        }
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self.ring;
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = ring.zero();
                for k in 0..self.cols {
                    acc = ring.add(&acc, &ring.mul(self.get(r, k), other.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a (column) vector.
    pub fn apply(&self, v: &Vector) -> Result<Vector, LinalgError> {
        if self.ring != v.ring {
            return Err(LinalgError::RingMismatch(self.ring, v.ring));
        }
        if self.cols != v.len() {
            return Err(LinalgError::Shape(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let ring = self.ring;
        let mut entries = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = ring.zero();
            for c in 0..self.cols {
                acc = ring.add(&acc, &ring.mul(self.get(r, c), v.get(c)));
            }
            entries.push(acc);
        }
        Ok(Vector { ring, entries })
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.ring != other.ring {
            return Err(LinalgError::RingMismatch(self.ring, other.ring));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| self.ring.add(a, b))
                .collect(),
        })
    }

    /// The Kronecker product; the left factor (self) varies slowest: the entry at
    /// row `i1·other.rows + i2`, column `j1·other.cols + j2` is
    /// `self[i1,j1]·other[i2,j2]`.
    pub fn tensor(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.ring != other.ring {
            return Err(LinalgError::RingMismatch(self.ring, other.ring));
        }
        let ring = self.ring;
        let mut out = Matrix::zeros(ring, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out.set(
                            i1 * other.rows + i2,
                            j1 * other.cols + j2,
                            ring.mul(a, other.get(i2, j2)),
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// The trace `Σ_i self[i,i]`; errors on non-square input.
    pub fn trace(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape(format!(
                "trace of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut acc = self.ring.zero();
        for i in 0..self.rows {
            acc = self.ring.add(&acc, self.get(i, i));
        }
        Ok(acc)
    }

    /// The determinant of a square matrix, by dynamic programming over column
    /// subsets: `dp[S]` is the determinant of the submatrix on rows
    /// `0..|S|` and columns `S`, expanded along its last row.
    pub fn det(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n > MAX_DET_DIM {
            return Err(LinalgError::TooLarge(n));
        }
        let ring = self.ring;
        // The empty matrix has determinant 1.
        let mut dp = vec![ring.zero(); 1usize << n];
        dp[0] = ring.one();
        for mask in 1usize..(1usize << n) {
            let row = mask.count_ones() as usize - 1;
            let mut acc = ring.zero();
            let mut position = 0usize;
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    let term = ring.mul(self.get(row, col), &dp[mask ^ (1 << col)]);
                    if (row + position) % 2 == 0 {
                        acc = ring.add(&acc, &term);
                    } else {
                        acc = ring.sub(&acc, &term);
                    }
                    position += 1;
                }
            }
            dp[mask] = acc;
        }
        Ok(dp.pop().expect("dp table is nonempty"))
    }

    /// The inverse via the adjugate: `A⁻¹ = det(A)⁻¹ · adj(A)`. Errors with
    /// [`LinalgError::Degenerate`] when the determinant is not a unit (which over
    /// ℤ or composite ℤ/n is strictly stronger than being nonzero).
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape(format!(
                "inverse of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let ring = self.ring;
        let d = self.det()?;
        let d_inv = ring.inv(&d).map_err(|_| LinalgError::Degenerate {
            ring,
            det: ring.format_scalar(&d),
        })?;
        let mut out = Matrix::zeros(ring, n, n);
        for i in 0..n {
            for j in 0..n {
                // Cofactor C[i][j] = (-1)^{i+j} · det(minor(i, j));
                // the adjugate (hence the inverse) is its transpose.
                let minor = self.minor(i, j).det()?;
                let cof = if (i + j) % 2 == 0 {
                    minor
                } else {
                    ring.neg(&minor)
                };
                out.set(j, i, ring.mul(&d_inv, &cof));
            }
        }
        Ok(out)
    }

    /// Solves `self · X = rhs` for `X`, requiring `self` to be invertible.
    pub fn solve_right(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.ring != rhs.ring {
            return Err(LinalgError::RingMismatch(self.ring, rhs.ring));
        }
        if self.rows != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "cannot solve {}x{} · X = {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        self.inverse()?.matmul(rhs)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Matrix {
        let n = self.rows;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for r in 0..n {
            if r == skip_row {
                continue;
            }
            for c in 0..n {
                if c == skip_col {
                    continue;
                }
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix {
            ring: self.ring,
            rows: n - 1,
            cols: n - 1,
            entries,
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.ring.format_scalar(e))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.ring.format_scalar(self.get(r, c)))?;
            }
        }
        write!(f, "]")
    }
}
