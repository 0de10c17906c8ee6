//! Dense matrices over a prime field and reduced row echelon form.
//!
//! Elimination is generic over the row representation: bit-packed rows
//! (one `u64` per 64 columns) for `F_2`, byte rows for odd primes. Pivots
//! are the first nonzero entry scanning columns left to right and rows top
//! to bottom, so results are deterministic.

use crate::error::{Error, Result};
use crate::field::PrimeField;

pub(crate) trait Row: Clone {
    fn zeros(len: usize) -> Self;
    fn get(&self, j: usize) -> u8;
    fn set(&mut self, j: usize, v: u8);
    /// `self *= s`
    fn scale(&mut self, field: PrimeField, s: u8);
    /// `self += s * other`
    fn add_scaled(&mut self, field: PrimeField, other: &Self, s: u8);
}

#[derive(Debug, Clone)]
pub(crate) struct BitRow(Vec<u64>);

impl Row for BitRow {
    fn zeros(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    #[inline]
    fn get(&self, j: usize) -> u8 {
        ((self.0[j / 64] >> (j % 64)) & 1) as u8
    }

    #[inline]
    fn set(&mut self, j: usize, v: u8) {
        let mask = 1u64 << (j % 64);
        if v & 1 == 1 {
            self.0[j / 64] |= mask;
        } else {
            self.0[j / 64] &= !mask;
        }
    }

    fn scale(&mut self, _field: PrimeField, s: u8) {
        if s & 1 == 0 {
            self.0.fill(0);
        }
    }

    #[inline]
    fn add_scaled(&mut self, _field: PrimeField, other: &Self, s: u8) {
        if s & 1 == 1 {
            for (a, b) in self.0.iter_mut().zip(&other.0) {
                *a ^= b;
            }
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct ByteRow(Vec<u8>);

impl Row for ByteRow {
    fn zeros(len: usize) -> Self {
        ByteRow(vec![0; len])
    }

    #[inline]
    fn get(&self, j: usize) -> u8 {
        self.0[j]
    }

    #[inline]
    fn set(&mut self, j: usize, v: u8) {
        self.0[j] = v;
    }

    fn scale(&mut self, field: PrimeField, s: u8) {
        for a in &mut self.0 {
            *a = field.mul(*a, s);
        }
    }

    fn add_scaled(&mut self, field: PrimeField, other: &Self, s: u8) {
        if s == 0 {
            return;
        }
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            *a = field.add(*a, field.mul(s, b));
        }
    }
}

/// Reduces `rows` to RREF in place, searching for pivots only in the first
/// `pivot_cols` columns. Returns the pivot column of each of the first
/// `rank` rows.
pub(crate) fn row_reduce<R: Row>(
    field: PrimeField,
    rows: &mut [R],
    pivot_cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    for col in 0..pivot_cols {
        let rank = pivots.len();
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col) != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(rows[rank].get(col)).expect("pivot is nonzero");
        rows[rank].scale(field, inv);
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot, tail) = tail.split_first_mut().expect("rank < rows.len()");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let v = row.get(col);
            if v != 0 {
                row.add_scaled(field, pivot, field.neg(v));
            }
        }
        pivots.push(col);
    }
    pivots
}

/// Outcome of eliminating `[A | b]` (or `A` alone).
#[derive(Debug, Clone)]
pub(crate) struct Reduced {
    pub(crate) pivots: Vec<usize>,
    /// Reduced coefficient entries of the pivot rows, `rank x cols`.
    pub(crate) pivot_rows: Vec<Vec<u8>>,
    /// Reduced right-hand side for each row (all rows), when augmented.
    pub(crate) rhs: Option<Vec<u8>>,
    pub(crate) cols: usize,
}

impl Reduced {
    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn is_consistent(&self) -> bool {
        self.rhs
            .as_ref()
            .is_none_or(|rhs| rhs[self.rank()..].iter().all(|&v| v == 0))
    }

    /// Particular solution with every free variable set to zero.
    pub(crate) fn particular_solution(&self) -> Option<Vec<u8>> {
        if !self.is_consistent() {
            return None;
        }
        let mut x = vec![0u8; self.cols];
        if let Some(rhs) = &self.rhs {
            for (i, &c) in self.pivots.iter().enumerate() {
                x[c] = rhs[i];
            }
        }
        Some(x)
    }

    /// One kernel vector per free column `j`: `x_j = 1`, pivots solved, other free columns 0.
    pub(crate) fn kernel_basis(&self, field: PrimeField) -> Vec<Vec<u8>> {
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut x = vec![0u8; self.cols];
                x[j] = 1;
                for (i, &c) in self.pivots.iter().enumerate() {
                    x[c] = field.neg(self.pivot_rows[i][j]);
                }
                x
            })
            .collect()
    }
}

fn reduce_with<R: Row>(
    field: PrimeField,
    rows: usize,
    cols: usize,
    fill: impl Fn(usize, &mut R),
    rhs: Option<&[u8]>,
) -> Reduced {
    let width = cols + usize::from(rhs.is_some());
    let mut rows: Vec<R> = (0..rows)
        .map(|i| {
            let mut row = R::zeros(width);
            fill(i, &mut row);
            if let Some(b) = rhs {
                row.set(cols, b[i]);
            }
            row
        })
        .collect();
    let pivots = row_reduce(field, &mut rows, cols);
    let pivot_rows = rows[..pivots.len()]
        .iter()
        .map(|r| (0..cols).map(|j| r.get(j)).collect())
        .collect();
    let rhs = rhs.map(|_| rows.iter().map(|r| r.get(cols)).collect());
    Reduced {
        pivots,
        pivot_rows,
        rhs,
        cols,
    }
}

/// Eliminates a matrix given by its nonzero entries per row, picking the
/// bit-packed backend over `F_2`.
pub(crate) fn reduce_sparse(
    field: PrimeField,
    cols: usize,
    entries: &[Vec<(usize, u8)>],
    rhs: Option<&[u8]>,
) -> Reduced {
    fn fill<R: Row>(entries: &[Vec<(usize, u8)>]) -> impl Fn(usize, &mut R) + '_ {
        move |i, row| {
            for &(j, v) in &entries[i] {
                row.set(j, v);
            }
        }
    }
    if field.order() == 2 {
        reduce_with::<BitRow>(field, entries.len(), cols, fill(entries), rhs)
    } else {
        reduce_with::<ByteRow>(field, entries.len(), cols, fill(entries), rhs)
    }
}

/// A dense row-major matrix over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    /// Builds a matrix from equal-length rows of field elements.
    pub fn from_rows(field: PrimeField, rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("rows have different lengths".into()));
        }
        if rows.iter().flatten().any(|&v| v >= field.order()) {
            return Err(Error::Domain(format!("matrix entry outside {field}")));
        }
        Ok(FieldMatrix {
            field,
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `M * x`.
    pub fn mul_vec(&self, x: &[u8]) -> Result<Vec<u8>> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                x.len()
            )));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|i| {
                let acc: u64 = self
                    .row(i)
                    .iter()
                    .zip(x)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                f.reduce(acc)
            })
            .collect())
    }

    pub(crate) fn reduce(&self, rhs: Option<&[u8]>) -> Reduced {
        fn fill<R: Row>(m: &FieldMatrix) -> impl Fn(usize, &mut R) + '_ {
            move |i, row| {
                for (j, &v) in m.row(i).iter().enumerate() {
                    if v != 0 {
                        row.set(j, v);
                    }
                }
            }
        }
        if self.field.order() == 2 {
            reduce_with::<BitRow>(self.field, self.rows, self.cols, fill(self), rhs)
        } else {
            reduce_with::<ByteRow>(self.field, self.rows, self.cols, fill(self), rhs)
        }
    }

    pub fn rank(&self) -> usize {
        self.reduce(None).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: PrimeField, rows: &[&[u8]]) -> FieldMatrix {
        FieldMatrix::from_rows(field, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn ranks() {
        let f2 = PrimeField::F2;
        assert_eq!(FieldMatrix::identity(f2, 70).rank(), 70);
        assert_eq!(m(f2, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).rank(), 2);
        // Same matrix over F_3 is invertible (determinant 2).
        assert_eq!(
            m(PrimeField::F3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).rank(),
            3
        );
        assert_eq!(FieldMatrix::zeros(f2, 3, 4).rank(), 0);
    }

    #[test]
    fn solve_and_kernel_over_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let a = m(f5, &[&[1, 2, 3, 4], &[2, 4, 1, 3], &[3, 1, 4, 2]]);
        let b = vec![1, 2, 3];
        let red = a.reduce(Some(&b));
        let x = red.particular_solution().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
        for k in red.kernel_basis(f5) {
            assert!(a.mul_vec(&k).unwrap().iter().all(|&v| v == 0));
        }
        assert_eq!(red.rank() + red.kernel_basis(f5).len(), 4);
    }

    #[test]
    fn inconsistent_system() {
        let f2 = PrimeField::F2;
        let a = m(f2, &[&[1, 1], &[1, 1]]);
        assert!(a.reduce(Some(&[1, 0])).particular_solution().is_none());
        assert!(a.reduce(Some(&[1, 1])).particular_solution().is_some());
    }

    #[test]
    fn bit_and_byte_backends_agree() {
        let f2 = PrimeField::F2;
        let rows: Vec<Vec<u8>> = (0..40)
            .map(|i| {
                (0..130)
                    .map(|j| ((i * 7 + j * 13 + i * j) % 3 == 0) as u8)
                    .collect()
            })
            .collect();
        let a = FieldMatrix::from_rows(f2, &rows).unwrap();
        let b: Vec<u8> = (0..40).map(|i| (i % 2) as u8).collect();
        let fill = |i: usize, row: &mut dyn FnMut(usize, u8)| {
            for (j, &v) in a.row(i).iter().enumerate() {
                row(j, v);
            }
        };
        let bits = reduce_with::<BitRow>(
            f2,
            40,
            130,
            |i, r| fill(i, &mut |j, v| r.set(j, v)),
            Some(&b),
        );
        let bytes = reduce_with::<ByteRow>(
            f2,
            40,
            130,
            |i, r| fill(i, &mut |j, v| r.set(j, v)),
            Some(&b),
        );
        assert_eq!(bits.pivots, bytes.pivots);
        assert_eq!(bits.pivot_rows, bytes.pivot_rows);
        assert_eq!(bits.rhs, bytes.rhs);
    }

    #[test]
    fn mul_vec_shape() {
        let a = FieldMatrix::identity(PrimeField::F3, 3);
        assert!(a.mul_vec(&[1, 2]).is_err());
        assert_eq!(a.mul_vec(&[1, 2, 0]).unwrap(), vec![1, 2, 0]);
    }
}
