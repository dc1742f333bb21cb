//! Subspaces of F_q^n in canonical form, with the lattice operations and the
//! subspace distance.
//!
//! A subspace is stored as its reduced row echelon basis with zero rows
//! removed. RREF is a canonical form, so two subspaces are equal exactly when
//! their stored bases are entry-wise identical; codes can therefore be
//! deduplicated by plain comparison. The zero subspace is a first-class value
//! with an empty basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Row space of an arbitrary matrix.
    pub fn span(m: &Matrix) -> Subspace {
        let (basis, _) = m.rref();
        Subspace { basis }
    }

    pub fn from_vectors(
        field: FieldContext,
        ambient: usize,
        rows: &[Vec<u32>],
    ) -> Result<Subspace> {
        let m = Matrix::from_rows(field, rows, ambient)?;
        Ok(Subspace::span(&m))
    }

    pub fn zero(field: FieldContext, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: FieldContext, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn field(&self) -> &FieldContext {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The canonical RREF basis, zero rows removed.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), other.ambient()));
        }
        Ok(())
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains_vector(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient());
        let f = self.field();
        let mut rem = v.to_vec();
        for row in self.basis.row_iter() {
            let pivot = row
                .iter()
                .position(|&e| e != 0)
                .expect("basis rows are nonzero");
            let c = rem[pivot];
            if c == 0 {
                continue;
            }
            for (r, &b) in rem.iter_mut().zip(row.iter()) {
                *r = f.sub_raw(*r, f.mul_raw(c, b));
            }
        }
        rem.iter().all(|&e| e == 0)
    }

    /// True when `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        Ok(other.basis.row_iter().all(|row| self.contains_vector(row)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        Ok(Subspace::span(&self.basis.stack(&other.basis)?))
    }

    /// Intersection via the Zassenhaus construction: row reduce
    /// [B_U | B_U; B_V | 0] and read the intersection basis off the rows
    /// whose left block vanished.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let n = self.ambient();
        let f = self.field().clone();
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(self.dim() + other.dim());
        for row in self.basis.row_iter() {
            let mut wide = Vec::with_capacity(2 * n);
            wide.extend_from_slice(row);
            wide.extend_from_slice(row);
            rows.push(wide);
        }
        for row in other.basis.row_iter() {
            let mut wide = Vec::with_capacity(2 * n);
            wide.extend_from_slice(row);
            wide.resize(2 * n, 0);
            rows.push(wide);
        }
        let wide = Matrix::from_rows(f.clone(), &rows, 2 * n)?;
        let (reduced, _) = wide.rref();
        let mut inter_rows: Vec<Vec<u32>> = Vec::new();
        for row in reduced.row_iter() {
            if row[..n].iter().all(|&e| e == 0) {
                inter_rows.push(row[n..].to_vec());
            }
        }
        Subspace::from_vectors(f, n, &inter_rows)
    }

    /// Subspace distance dim(U+V) - dim(U∩V), always even for inputs of
    /// equal dimension.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        self.compatible(other)?;
        let sum_dim = self.basis.stack(&other.basis)?.rank();
        // dim(U∩V) = dim U + dim V - dim(U+V)
        Ok(2 * sum_dim - self.dim() - other.dim())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rows: Vec<String> = self
            .basis
            .row_iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
