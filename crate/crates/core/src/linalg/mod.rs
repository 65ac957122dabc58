//! Exact linear algebra over GF(q).

mod enumerate;
mod gf2;
mod qbinom;
mod subspace;

use std::fmt;
use std::hash::{Hash, Hasher};

pub use enumerate::{enumerate_subspaces, for_each_vector, SubspaceIter};
pub(crate) use gf2::rank_words;
pub use qbinom::gaussian_binomial;
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::gf::Field;

/// Dense row-major matrix over a finite field, entries as integer encodings.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
    field: Field,
}

impl Hash for Mat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
        self.field.q().hash(state);
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[{}]", self.rows, self.cols, self.to_text())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols], field: field.clone() }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(v) = data.iter().find(|&&v| v >= field.q()) {
            return Err(Error::InvalidArgument(format!("{v} is not an element of GF({})", field.q())));
        }
        Ok(Mat { rows, cols, data, field: field.clone() })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<u32>]) -> Result<Mat> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Mat::from_vec(field, rows.len(), cols, rows.concat())
    }

    /// A single row vector.
    pub fn row_vector(field: &Field, v: &[u32]) -> Result<Mat> {
        Mat::from_vec(field, 1, v.len(), v.to_vec())
    }

    /// A single column vector.
    pub fn column_vector(field: &Field, v: &[u32]) -> Result<Mat> {
        Mat::from_vec(field, v.len(), 1, v.to_vec())
    }

    pub(crate) fn from_parts(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Mat {
        debug_assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data, field: field.clone() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Row-major entries; this is also the flattening used for matrix spaces.
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u32> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch("matrix sum of different shapes".into()));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Mat::from_parts(f, self.rows, self.cols, data))
    }

    pub fn scale(&self, c: u32) -> Mat {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Mat::from_parts(f, self.rows, self.cols, data)
    }

    /// `self += c * other`, shapes assumed equal.
    pub(crate) fn axpy(&mut self, c: u32, other: &Mat) {
        let f = self.field.clone();
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(c, b));
        }
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.field, self.rows, self.cols, &self.data)
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(piv, r);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..m.cols {
                    let v = f.add(m.get(i, j), f.mul(neg, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rows `[start, end)`.
    pub fn row_range(&self, start: usize, end: usize) -> Mat {
        Mat::from_parts(&self.field, end - start, self.cols, self.data[start * self.cols..end * self.cols].to_vec())
    }

    /// Top-left `rows x cols` block.
    pub fn block(&self, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(&self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }

    pub fn vstack(parts: &[Mat]) -> Result<Mat> {
        let first = parts.first().ok_or_else(|| Error::InvalidArgument("empty vstack".into()))?;
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            first.check_field(p)?;
            if p.cols != cols {
                return Err(Error::ShapeMismatch("vstack of different widths".into()));
            }
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Ok(Mat::from_parts(&first.field, rows, cols, data))
    }

    pub fn inverse(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::SingularTransform);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug = Mat::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularTransform);
        }
        let mut out = Mat::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j));
            }
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// `rows;`-separated, `,`-separated integer encodings.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn from_text(field: &Field, text: &str) -> Result<Mat> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Mat::zeros(field, 0, 0));
        }
        let rows: Result<Vec<Vec<u32>>> = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("matrix entry `{t}`: {e}"))))
                    .collect()
            })
            .collect();
        Mat::from_rows(field, &rows?)
    }
}

/// Rank of a row-major `rows x cols` block of values.
pub(crate) fn rank_of(field: &Field, rows: usize, cols: usize, data: &[u32]) -> usize {
    if rows == 0 || cols == 0 {
        return 0;
    }
    if field.q() == 2 {
        if cols <= 64 {
            let mut packed: Vec<u64> = (0..rows)
                .map(|i| {
                    data[i * cols..(i + 1) * cols]
                        .iter()
                        .enumerate()
                        .fold(0u64, |acc, (j, &v)| acc | ((v as u64) << j))
                })
                .collect();
            return rank_words(&mut packed);
        }
        return gf2::BitRows::from_values(rows, cols, data).rank();
    }
    let f = field;
    let mut m = data.to_vec();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                m.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = f.inv(m[rank * cols + c]).expect("nonzero pivot");
        for i in rank + 1..rows {
            let factor = m[i * cols + c];
            if factor == 0 {
                continue;
            }
            let mult = f.neg(f.mul(factor, inv));
            for j in c..cols {
                let v = f.add(m[i * cols + j], f.mul(mult, m[rank * cols + j]));
                m[i * cols + j] = v;
            }
        }
        rank += 1;
    }
    rank
}
