use std::fmt;

use super::scalar::ComplexRational;
use super::vector::Vector;
use crate::error::DimMismatch;

/// Dense row-major matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<ComplexRational>,
}

impl Matrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<ComplexRational>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    /// Stack vectors as rows. All vectors must share a dimension; the list
    /// must be nonempty.
    pub fn from_rows(vectors: &[Vector]) -> Result<Self, DimMismatch> {
        assert!(!vectors.is_empty(), "from_rows needs at least one row");
        let cols = vectors[0].dim();
        for v in vectors {
            DimMismatch::check(cols, v.dim())?;
        }
        let entries = vectors
            .iter()
            .flat_map(|v| v.components().iter().cloned())
            .collect();
        Ok(Matrix::from_entries(vectors.len(), cols, entries))
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_entries(rows, cols, vec![ComplexRational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for k in 0..n {
            *m.at_mut(k, k) = ComplexRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &ComplexRational {
        &self.entries[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut ComplexRational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector::new((0..self.cols).map(|c| self.at(r, c).clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn conj(&self) -> Matrix {
        Matrix::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().map(ComplexRational::conj).collect(),
        )
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, DimMismatch> {
        DimMismatch::check(self.rows, other.rows)?;
        DimMismatch::check(self.cols, other.cols)?;
        Ok(Matrix::from_entries(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn scale(&self, by: &ComplexRational) -> Matrix {
        Matrix::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e * by).collect(),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, DimMismatch> {
        DimMismatch::check(self.cols, other.rows)?;
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = ComplexRational::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.at(r, k) * other.at(k, c));
                }
                *out.at_mut(r, c) = acc;
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form by Gauss–Jordan elimination: leading entries
    /// are 1, pivot columns are otherwise zero, zero rows sink to the bottom.
    /// The result is the unique canonical representative of the row space,
    /// so `rref` is idempotent.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(src) = found else { continue };
            if src != pivot_row {
                for c in 0..m.cols {
                    m.entries.swap(pivot_row * m.cols + c, src * m.cols + c);
                }
            }
            let inv = m.at(pivot_row, col).recip();
            for c in col..m.cols {
                *m.at_mut(pivot_row, c) = m.at(pivot_row, c) * &inv;
            }
            for r in 0..m.rows {
                if r == pivot_row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    *m.at_mut(r, c) = m.at(r, c) - &(&factor * m.at(pivot_row, c));
                }
            }
            pivot_row += 1;
        }
        m
    }

    /// Column indices of the pivots of `rref(self)`. Assumes `self` is
    /// already in reduced row-echelon form when used internally.
    fn pivot_columns(rref: &Matrix) -> Vec<usize> {
        let mut pivots = Vec::new();
        for r in 0..rref.rows {
            if let Some(c) = (0..rref.cols).find(|&c| !rref.at(r, c).is_zero()) {
                pivots.push(c);
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        Matrix::pivot_columns(&self.rref()).len()
    }

    /// Basis of the null space {x : Mx = 0} in rref-derived order: one basis
    /// vector per free column, ascending. Empty for injective maps.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let r = self.rref();
        let pivots = Matrix::pivot_columns(&r);
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut x = vec![ComplexRational::zero(); self.cols];
            x[free] = ComplexRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -r.at(row, free);
            }
            basis.push(Vector::new(x));
        }
        basis
    }

    /// Nonzero rows of the rref: the canonical basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vector> {
        let r = self.rref();
        (0..Matrix::pivot_columns(&r).len())
            .map(|k| r.row_vector(k))
            .collect()
    }

    /// Canonical basis of the span of the columns.
    pub fn col_space_basis(&self) -> Vec<Vector> {
        self.transpose().row_space_basis()
    }
}

/// Basis of {x : ⟨v, x⟩ = 0 for every given v}, the orthogonal complement of
/// the span of `vs` inside ℂ^dim. Since ⟨v,x⟩ = Σ conj(v_k)·x_k, this is the
/// kernel of the matrix whose rows are the conjugated generators. An empty
/// generator list yields the standard basis of the full space.
pub fn orth_complement_basis(vs: &[Vector], dim: usize) -> Result<Vec<Vector>, DimMismatch> {
    for v in vs {
        DimMismatch::check(dim, v.dim())?;
    }
    if vs.is_empty() {
        return Ok((0..dim).map(|k| Vector::basis(dim, k)).collect());
    }
    let rows: Vec<Vector> = vs.iter().map(Vector::conj).collect();
    Ok(Matrix::from_rows(&rows)?.kernel_basis())
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row_vector(r))?;
        }
        write!(f, "]")
    }
}
