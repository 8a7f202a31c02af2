//! Dense matrices over a prime field with deterministic Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poset::CoordSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    /// Rows of equal length `cols`; every entry must be a residue mod q.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Usage(format!(
                    "row {} has {} entries, expected {cols}",
                    r + 1,
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= field.order()) {
                return Err(Error::Usage(format!(
                    "entry {bad} in row {} is not a residue mod {}",
                    r + 1,
                    field.order()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self { field, rows: rows.len(), cols, data })
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.order());
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.rows {
            return Err(Error::Usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = f.add(*cell, f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Columns listed in `cols`, in that order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn columns_in(&self, set: CoordSet) -> Matrix {
        let cols: Vec<usize> = set.iter().collect();
        self.select_columns(&cols)
    }

    pub fn remove_column(&self, col: usize) -> Matrix {
        let keep: Vec<usize> = (0..self.cols).filter(|&c| c != col).collect();
        self.select_columns(&keep)
    }

    /// Reduced row echelon form. Pivots are taken in increasing column order,
    /// and within a column the first nonzero row wins. Zero rows are dropped.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = f.inv(m.get(lead, c)).expect("nonzero pivot");
            m.scale_row(lead, inv);
            for r in 0..m.rows {
                if r != lead {
                    let factor = m.get(r, c);
                    if factor != 0 {
                        m.sub_scaled_row(r, lead, factor);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        m.data.truncate(lead * m.cols);
        m.rows = lead;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only.
        let f = self.field;
        let mut m = self.clone();
        let mut rank = 0usize;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = f.inv(m.get(rank, c)).expect("nonzero pivot");
            m.scale_row(rank, inv);
            for r in rank + 1..m.rows {
                let factor = m.get(r, c);
                if factor != 0 {
                    m.sub_scaled_row(r, rank, factor);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis (as rows) of { y : self * y^T = 0 }, one vector per free column,
    /// free columns in increasing order.
    pub fn null_space(&self) -> Matrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(pr, fc)));
            }
        }
        basis
    }

    /// Whether both matrices span the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.field == other.field && self.cols == other.cols && self.rref().0 == other.rref().0
    }

    /// `message * self`.
    pub fn combine_rows(&self, message: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (r, &m) in message.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(m, self.get(r, c)));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        let f = self.field;
        for c in 0..self.cols {
            let v = &mut self.data[r * self.cols + c];
            *v = f.mul(*v, s);
        }
    }

    /// row[dst] -= factor * row[src]
    fn sub_scaled_row(&mut self, dst: usize, src: usize, factor: u32) {
        let f = self.field;
        for c in 0..self.cols {
            let s = self.data[src * self.cols + c];
            if s != 0 {
                let d = &mut self.data[dst * self.cols + c];
                *d = f.sub(*d, f.mul(factor, s));
            }
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.field.order() > 10;
        for r in 0..self.rows {
            let row = self.row(r);
            if wide {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(f, "{}", cells.join(" "))?;
            } else {
                let cells: String = row.iter().map(|v| char::from(b'0' + *v as u8)).collect();
                writeln!(f, "{cells}")?;
            }
        }
        Ok(())
    }
}
