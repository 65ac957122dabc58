//! Order-3 tensors over GF(q).
//!
//! A `k x m x n` tensor `T` is indexed `T[i][a][l]`. Slices along axis 1 are
//! `m x n`, along axis 2 `k x n`, along axis 3 `k x m`. Flattening is row-major.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{Mat, Subspace};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    shape: [usize; 3],
    data: Vec<u32>,
    field: Field,
}

fn check_axis(axis: usize) -> Result<usize> {
    match axis {
        1..=3 => Ok(axis - 1),
        _ => Err(Error::InvalidArgument(format!("axis must be 1, 2 or 3, got {axis}"))),
    }
}

impl Tensor3 {
    pub fn zeros(field: &Field, shape: [usize; 3]) -> Tensor3 {
        Tensor3 { shape, data: vec![0; shape.iter().product()], field: field.clone() }
    }

    pub fn from_vec(field: &Field, shape: [usize; 3], data: Vec<u32>) -> Result<Tensor3> {
        if data.len() != shape.iter().product::<usize>() {
            return Err(Error::ShapeMismatch(format!("{} entries for shape {shape:?}", data.len())));
        }
        if let Some(v) = data.iter().find(|&&v| v >= field.q()) {
            return Err(Error::InvalidArgument(format!("{v} is not an element of GF({})", field.q())));
        }
        Ok(Tensor3 { shape, data, field: field.clone() })
    }

    /// Stack `k` matrices of shape `m x n` along axis 1.
    pub fn from_slices(field: &Field, m: usize, n: usize, slices: &[Mat]) -> Result<Tensor3> {
        let mut data = Vec::with_capacity(slices.len() * m * n);
        for s in slices {
            if s.field() != field {
                return Err(Error::MixedFields);
            }
            if s.shape() != (m, n) {
                return Err(Error::ShapeMismatch(format!(
                    "slice of shape {}x{}, expected {m}x{n}",
                    s.rows(),
                    s.cols()
                )));
            }
            data.extend_from_slice(s.data());
        }
        Ok(Tensor3 { shape: [slices.len(), m, n], data, field: field.clone() })
    }

    pub fn shape(&self) -> [usize; 3] {
        self.shape
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, l: usize) -> usize {
        (i * self.shape[1] + j) * self.shape[2] + l
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, l: usize) -> u32 {
        self.data[self.idx(i, j, l)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, l: usize, v: u32) {
        let idx = self.idx(i, j, l);
        self.data[idx] = v;
    }

    fn other_dims(&self, ax: usize) -> (usize, usize) {
        match ax {
            0 => (self.shape[1], self.shape[2]),
            1 => (self.shape[0], self.shape[2]),
            _ => (self.shape[0], self.shape[1]),
        }
    }

    fn at(&self, ax: usize, a: usize, r: usize, c: usize) -> u32 {
        match ax {
            0 => self.get(a, r, c),
            1 => self.get(r, a, c),
            _ => self.get(r, c, a),
        }
    }

    /// Slice number `index` (0-based) along `axis` (1, 2 or 3).
    pub fn slice(&self, axis: usize, index: usize) -> Result<Mat> {
        let ax = check_axis(axis)?;
        if index >= self.shape[ax] {
            return Err(Error::InvalidArgument(format!("slice {index} out of range on axis {axis}")));
        }
        let (r, c) = self.other_dims(ax);
        let mut data = Vec::with_capacity(r * c);
        for x in 0..r {
            for y in 0..c {
                data.push(self.at(ax, index, x, y));
            }
        }
        Ok(Mat::from_parts(&self.field, r, c, data))
    }

    pub fn slices(&self, axis: usize) -> Result<Vec<Mat>> {
        let ax = check_axis(axis)?;
        (0..self.shape[ax]).map(|i| self.slice(axis, i)).collect()
    }

    /// `sum_a u_a * slice(axis, a)`.
    pub fn contract(&self, axis: usize, u: &[u32]) -> Result<Mat> {
        let ax = check_axis(axis)?;
        if u.len() != self.shape[ax] {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against axis {axis} of length {}",
                u.len(),
                self.shape[ax]
            )));
        }
        let (r, c) = self.other_dims(ax);
        let f = &self.field;
        let mut out = Mat::zeros(f, r, c);
        for (a, &ua) in u.iter().enumerate() {
            if ua == 0 {
                continue;
            }
            for x in 0..r {
                for y in 0..c {
                    let v = f.add(out.get(x, y), f.mul(ua, self.at(ax, a, x, y)));
                    out.set(x, y, v);
                }
            }
        }
        Ok(out)
    }

    /// Multiply along `axis` by an `n_axis x s` matrix.
    pub fn mult(&self, a: &Mat, axis: usize) -> Result<Tensor3> {
        let ax = check_axis(axis)?;
        if a.field() != &self.field {
            return Err(Error::MixedFields);
        }
        if a.rows() != self.shape[ax] {
            return Err(Error::ShapeMismatch(format!(
                "matrix with {} rows against axis {axis} of length {}",
                a.rows(),
                self.shape[ax]
            )));
        }
        let mut shape = self.shape;
        shape[ax] = a.cols();
        let mut out = Tensor3::zeros(&self.field, shape);
        let f = &self.field;
        for i in 0..shape[0] {
            for j in 0..shape[1] {
                for l in 0..shape[2] {
                    let mut idx = [i, j, l];
                    let c = idx[ax];
                    let mut acc = 0;
                    for s in 0..self.shape[ax] {
                        idx[ax] = s;
                        let t = self.get(idx[0], idx[1], idx[2]);
                        acc = f.add(acc, f.mul(t, a.get(s, c)));
                    }
                    out.set(i, j, l, acc);
                }
            }
        }
        Ok(out)
    }

    /// Span of the flattened slices along `axis`.
    pub fn slice_space(&self, axis: usize) -> Result<Subspace> {
        let ax = check_axis(axis)?;
        let (r, c) = self.other_dims(ax);
        let slices = self.slices(axis)?;
        if slices.is_empty() {
            return Ok(Subspace::zero(&self.field, r * c));
        }
        let data: Vec<u32> = slices.iter().flat_map(|s| s.data().iter().copied()).collect();
        Ok(Subspace::rowspace(&Mat::from_parts(&self.field, slices.len(), r * c, data)))
    }

    /// Shape an element of the flattened slice space of `axis` back into a matrix.
    pub fn unflatten(&self, axis: usize, v: &[u32]) -> Result<Mat> {
        let ax = check_axis(axis)?;
        let (r, c) = self.other_dims(ax);
        Mat::from_vec(&self.field, r, c, v.to_vec())
    }

    /// Tensor with `new[idx] = self[idx permuted]`: new axis `a` is old axis `perm[a]`.
    pub fn permute_axes(&self, perm: [usize; 3]) -> Result<Tensor3> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p] {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation of 0..3")));
            }
            seen[p] = true;
        }
        let shape = [self.shape[perm[0]], self.shape[perm[1]], self.shape[perm[2]]];
        let mut out = Tensor3::zeros(&self.field, shape);
        for x in 0..shape[0] {
            for y in 0..shape[1] {
                for z in 0..shape[2] {
                    let mut old = [0; 3];
                    old[perm[0]] = x;
                    old[perm[1]] = y;
                    old[perm[2]] = z;
                    out.set(x, y, z, self.get(old[0], old[1], old[2]));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Tensor3 {
        let f = Field::new(2, 1).unwrap();
        let slices: Vec<Mat> = ["1,0,0;0,0,0;1,1,0", "0,0,1;0,0,0;1,1,1", "0,0,0;1,0,0;0,1,1", "0,0,0;0,1,0;1,1,1"]
            .iter()
            .map(|s| Mat::from_text(&f, s).unwrap())
            .collect();
        Tensor3::from_slices(&f, 3, 3, &slices).unwrap()
    }

    #[test]
    fn identity_multiplication() {
        let t = toy();
        for axis in 1..=3 {
            let n = t.shape()[axis - 1];
            assert_eq!(t.mult(&Mat::identity(t.field(), n), axis).unwrap(), t);
        }
    }

    #[test]
    fn first_unit_vector_gives_first_slice() {
        let t = toy();
        let e1 = Mat::column_vector(t.field(), &[1, 0, 0, 0]).unwrap();
        let s = t.mult(&e1, 1).unwrap();
        assert_eq!(s.shape(), [1, 3, 3]);
        assert_eq!(s.slice(1, 0).unwrap(), t.slice(1, 0).unwrap());
    }

    #[test]
    fn toy_codeword() {
        let t = toy();
        let c = t.contract(1, &[1, 0, 1, 0]).unwrap();
        assert_eq!(c.to_text(), "1,0,0;1,0,0;1,0,1");
        let u = Mat::column_vector(t.field(), &[1, 0, 1, 0]).unwrap();
        assert_eq!(t.mult(&u, 1).unwrap().slice(1, 0).unwrap(), c);
    }

    #[test]
    fn toy_slice_spaces() {
        let t = toy();
        let s1 = t.slice_space(1).unwrap();
        assert_eq!(s1.dim(), 4);
        assert!(s1.contains(t.contract(1, &[1, 0, 1, 0]).unwrap().data()).unwrap());
        let s3 = t.slice_space(3).unwrap();
        assert_eq!(s3.ambient(), 12);
        assert_eq!(s3.dim(), 3);
        assert_eq!(t.slice(3, 0).unwrap().to_text(), "1,0,1;0,0,1;0,1,0;0,0,1");
    }

    #[test]
    fn zero_tensor_slice_space() {
        let f = Field::new(3, 1).unwrap();
        let t = Tensor3::zeros(&f, [2, 2, 3]);
        for axis in 1..=3 {
            assert_eq!(t.slice_space(axis).unwrap().dim(), 0);
        }
    }

    #[test]
    fn cyclic_permutation_has_order_three() {
        let t = toy();
        let c = t.permute_axes([2, 0, 1]).unwrap();
        assert_eq!(c.permute_axes([2, 0, 1]).unwrap().permute_axes([2, 0, 1]).unwrap(), t);
    }
}
