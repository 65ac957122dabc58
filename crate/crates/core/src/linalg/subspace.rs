use super::Mat;
use crate::error::{Error, Result};
use crate::gf::Field;

/// Subspace of `GF(q)^N` stored by its reduced row-echelon basis.
///
/// Two subspaces are equal exactly when their bases are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Row space of `m`.
    pub fn rowspace(m: &Mat) -> Subspace {
        let (r, pivots) = m.rref();
        let basis = r.row_range(0, pivots.len());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    /// Column space of `m`, as a subspace of `GF(q)^rows`.
    pub fn colspace(m: &Mat) -> Subspace {
        Subspace::rowspace(&m.transpose())
    }

    /// Span of the given vectors.
    pub fn span(field: &Field, ambient: usize, vectors: &[Vec<u32>]) -> Result<Subspace> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::AmbientMismatch { expected: ambient, got: v.len() });
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        Ok(Subspace::rowspace(&Mat::from_rows(field, vectors)?))
    }

    /// `{x : m x = 0}`.
    pub fn kernel(m: &Mat) -> Subspace {
        Subspace::rowspace(m).orthogonal_complement()
    }

    /// `{y : y m = 0}`.
    pub fn left_kernel(m: &Mat) -> Subspace {
        Subspace::kernel(&m.transpose())
    }

    /// Build from a basis already in reduced row-echelon form.
    pub(crate) fn from_rref(basis: Mat, pivots: Vec<usize>) -> Subspace {
        Subspace { ambient: basis.cols(), basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::MixedFields);
        }
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }

    /// Reduce `v` against the basis; the remainder is zero iff `v` lies in the span.
    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &b) in r.iter_mut().zip(self.basis.row(i)) {
                *x = f.add(*x, f.mul(neg, b));
            }
        }
        r
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, got: v.len() });
        }
        Ok(self.reduce(v).iter().all(|&x| x == 0))
    }

    /// Coordinates of a member in the canonical basis.
    pub fn coordinates(&self, v: &[u32]) -> Result<Option<Vec<u32>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p]).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if other.dim() == 0 {
            return Ok(self.clone());
        }
        if self.dim() == 0 {
            return Ok(other.clone());
        }
        Ok(Subspace::rowspace(&Mat::vstack(&[self.basis.clone(), other.basis.clone()])?))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(self.orthogonal_complement().sum(&other.orthogonal_complement())?.orthogonal_complement())
    }

    /// Complement under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        let f = self.field().clone();
        let n = self.ambient;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut data = vec![0u32; free.len() * n];
        for (r, &fc) in free.iter().enumerate() {
            data[r * n + fc] = 1;
            for (i, &p) in self.pivots.iter().enumerate() {
                data[r * n + p] = f.neg(self.basis.get(i, fc));
            }
        }
        Subspace::rowspace(&Mat::from_parts(&f, free.len(), n, data))
    }

    /// Image under `x -> x m`.
    pub fn map_right(&self, m: &Mat) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, got: m.rows() });
        }
        if self.dim() == 0 {
            return Ok(Subspace::zero(m.field(), m.cols()));
        }
        Ok(Subspace::rowspace(&self.basis.mul(m)?))
    }
}
