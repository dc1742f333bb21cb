//! Dense row-major matrices over a finite field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldContext;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldContext,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl Matrix {
    /// Builds a matrix from row-major entries. The entry count must equal
    /// `rows * cols`; entries outside `[0, q)` are rejected.
    pub fn new(field: FieldContext, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Matrix> {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must be rows * cols"
        );
        for &e in &entries {
            if !field.contains(e) {
                return Err(Error::OutOfRange {
                    value: e,
                    q: field.q(),
                });
            }
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(field: FieldContext, rows: &[Vec<u32>], cols: usize) -> Result<Matrix> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "all rows must have the same width");
            entries.extend_from_slice(row);
        }
        Matrix::new(field, rows.len(), cols, entries)
    }

    pub fn zeros(field: FieldContext, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldContext, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        debug_assert!(self.field.contains(v));
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        debug_assert!(i < self.rows);
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn compatible(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Stacks `other` below `self`; both must share field and width.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        if self.cols != other.cols {
            return Err(Error::AmbientMismatch(self.cols, other.cols));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        if self.cols != other.rows {
            return Err(Error::AmbientMismatch(self.cols, other.rows));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if b == 0 {
                        continue;
                    }
                    let cur = out.entry(i, j);
                    out.set(i, j, f.add_raw(cur, f.mul_raw(a, b)));
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form with zero rows removed, plus the rank.
    /// The row space is preserved and the result is unique.
    pub fn rref(&self) -> (Matrix, usize) {
        let f = self.field.clone();
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |m: &[u32], i: usize, j: usize| m[i * cols + j];
        let mut pivot_row = 0usize;
        for col in 0..cols {
            let Some(src) = (pivot_row..rows).find(|&r| at(&m, r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for j in 0..cols {
                    m.swap(src * cols + j, pivot_row * cols + j);
                }
            }
            let inv = f.inv_raw(at(&m, pivot_row, col));
            if inv != 1 {
                for j in col..cols {
                    let v = at(&m, pivot_row, j);
                    m[pivot_row * cols + j] = f.mul_raw(v, inv);
                }
            }
            for r in 0..rows {
                if r == pivot_row {
                    continue;
                }
                let factor = at(&m, r, col);
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    let sub = f.mul_raw(factor, at(&m, pivot_row, j));
                    let v = at(&m, r, j);
                    m[r * cols + j] = f.sub_raw(v, sub);
                }
            }
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        m.truncate(pivot_row * cols);
        let rank = pivot_row;
        (
            Matrix {
                field: f,
                rows: rank,
                cols,
                entries: m,
            },
            rank,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldContext {
        FieldContext::new(2).unwrap()
    }

    #[test]
    fn rref_hand_example() {
        // over F_2, rows {(1,1,0),(0,1,1)} reduce to {(1,0,1),(0,1,1)}
        let m = Matrix::from_rows(f2(), &[vec![1, 1, 0], vec![0, 1, 1]], 3).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r.row(0), &[1, 0, 1]);
        assert_eq!(r.row(1), &[0, 1, 1]);
    }

    #[test]
    fn rref_identity_fixed_point() {
        let id = Matrix::identity(f2(), 4);
        let (r, rank) = id.rref();
        assert_eq!(rank, 4);
        assert_eq!(r, id);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Matrix::zeros(f2(), 2, 3);
        let (r, rank) = z.rref();
        assert_eq!(rank, 0);
        assert_eq!(r.rows(), 0);
        assert_eq!(r.cols(), 3);
    }

    #[test]
    fn rref_over_f3_scales_pivots() {
        let f3 = FieldContext::new(3).unwrap();
        let m = Matrix::from_rows(f3.clone(), &[vec![2, 1], vec![1, 1]], 2).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r.row(0), &[1, 0]);
        assert_eq!(r.row(1), &[0, 1]);

        // [2 1; 1 2] is singular over F_3 (det = 3): one basis row survives
        let s = Matrix::from_rows(f3, &[vec![2, 1], vec![1, 2]], 2).unwrap();
        let (r, rank) = s.rref();
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), &[1, 2]);
    }

    #[test]
    fn stack_and_mul_shape_checks() {
        let a = Matrix::identity(f2(), 2);
        let b = Matrix::zeros(f2(), 1, 3);
        assert_eq!(a.stack(&b), Err(Error::AmbientMismatch(2, 3)));
        assert_eq!(a.mul(&b).unwrap_err(), Error::AmbientMismatch(2, 1));
        let f3 = FieldContext::new(3).unwrap();
        let c = Matrix::zeros(f3, 2, 2);
        assert_eq!(a.stack(&c), Err(Error::FieldMismatch));
    }

    #[test]
    fn entry_range_validated() {
        assert_eq!(
            Matrix::new(f2(), 1, 2, vec![0, 2]),
            Err(Error::OutOfRange { value: 2, q: 2 })
        );
    }

    #[test]
    fn mul_identity() {
        let f4 = FieldContext::new(4).unwrap();
        let m = Matrix::from_rows(f4.clone(), &[vec![2, 3], vec![1, 2]], 2).unwrap();
        let id = Matrix::identity(f4, 2);
        assert_eq!(m.mul(&id).unwrap(), m);
    }
}
