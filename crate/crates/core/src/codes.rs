//! Matrix rank-metric codes: `K`-subspaces of `K^(m x n)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{enumerate_subspaces, rank_words, Mat, Subspace};
use crate::tensor::Tensor3;
use crate::{Guards, Side};

/// `A_0, ..., A_min(m,n)`: number of codewords of each rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankDistribution {
    pub counts: Vec<u64>,
}

impl RankDistribution {
    /// Least positive rank that occurs; `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&r| self.counts[r] > 0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Ranks of the nonzero codewords, if they all agree.
    pub fn one_weight(&self) -> Option<usize> {
        let ranks: Vec<usize> = (1..self.counts.len()).filter(|&r| self.counts[r] > 0).collect();
        match ranks.as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }
}

/// Number of `t`-dimensional subcodes by support dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportDistribution {
    pub t: usize,
    pub side: Side,
    pub counts: Vec<u64>,
}

/// Change of basis `M -> A^T M B` followed by cropping to the top-left block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub a: Mat,
    pub b: Mat,
    pub rows: usize,
    pub cols: usize,
}

#[derive(Clone, Debug)]
pub struct MatrixRankCode {
    m: usize,
    n: usize,
    field: Field,
    basis: Vec<Mat>,
    space: Subspace,
}

impl PartialEq for MatrixRankCode {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.n == other.n && self.space == other.space
    }
}

impl Eq for MatrixRankCode {}

fn flat(field: &Field, m: usize, n: usize, mats: &[Mat]) -> Mat {
    let data: Vec<u32> = mats.iter().flat_map(|b| b.data().iter().copied()).collect();
    Mat::from_parts(field, mats.len(), m * n, data)
}

impl MatrixRankCode {
    /// Code spanned by linearly independent `m x n` matrices.
    pub fn new(field: &Field, m: usize, n: usize, basis: Vec<Mat>) -> Result<MatrixRankCode> {
        for b in &basis {
            if b.field() != field {
                return Err(Error::MixedFields);
            }
            if b.shape() != (m, n) {
                return Err(Error::ShapeMismatch(format!("{}x{} matrix in an {m}x{n} code", b.rows(), b.cols())));
            }
        }
        let mut rank = 0;
        for i in 0..basis.len() {
            let r = flat(field, m, n, &basis[..=i]).rank();
            if r == rank {
                return Err(Error::DependentSlices { index: i });
            }
            rank = r;
        }
        let space = if basis.is_empty() {
            Subspace::zero(field, m * n)
        } else {
            Subspace::rowspace(&flat(field, m, n, &basis))
        };
        Ok(MatrixRankCode { m, n, field: field.clone(), basis, space })
    }

    /// Code with the canonical basis of a subspace of flattened `m x n` matrices.
    pub fn from_subspace(field: &Field, m: usize, n: usize, space: &Subspace) -> Result<MatrixRankCode> {
        if space.ambient() != m * n {
            return Err(Error::AmbientMismatch { expected: m * n, got: space.ambient() });
        }
        let basis = (0..space.dim())
            .map(|i| Mat::from_parts(field, m, n, space.basis().row(i).to_vec()))
            .collect();
        Ok(MatrixRankCode { m, n, field: field.clone(), basis, space: space.clone() })
    }

    /// First slice space of a generator tensor.
    pub fn from_tensor(t: &Tensor3) -> Result<MatrixRankCode> {
        let [_, m, n] = t.shape();
        MatrixRankCode::new(t.field(), m, n, t.slices(1)?)
    }

    /// `k x m x n` tensor whose axis-1 slices are the basis.
    pub fn generator_tensor(&self) -> Tensor3 {
        Tensor3::from_slices(&self.field, self.m, self.n, &self.basis).expect("basis shapes checked")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// The code as a subspace of flattened matrices.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, m: &Mat) -> Result<bool> {
        if m.shape() != (self.m, self.n) {
            return Err(Error::ShapeMismatch("matrix shape differs from the code".into()));
        }
        self.space.contains(m.data())
    }

    /// `sum u_i B_i`.
    pub fn codeword(&self, u: &[u32]) -> Result<Mat> {
        if u.len() != self.k() {
            return Err(Error::ShapeMismatch(format!("{} coefficients for a {}-dimensional code", u.len(), self.k())));
        }
        let mut out = Mat::zeros(&self.field, self.m, self.n);
        for (b, &c) in self.basis.iter().zip(u) {
            if c != 0 {
                out.axpy(c, b);
            }
        }
        Ok(out)
    }

    /// Visit `(u, m_1(T, u))` for every `u` in `K^k`.
    ///
    /// Coordinates run through a modular `p`-ary Gray order over the prime-field
    /// digits of `u`, so each step adds `x^d B_j` for a single `(j, d)`.
    pub fn for_each_codeword<F: FnMut(&[u32], &Mat)>(&self, guards: &Guards, mut f: F) -> Result<()> {
        let k = self.k();
        guards.vectors("codewords", self.field.q(), k)?;
        let p = self.field.p();
        let e = self.field.e() as usize;
        let gens: Vec<Mat> = (0..k * e)
            .map(|r| self.basis[r / e].scale(p.pow((r % e) as u32)))
            .collect();
        let mut u = vec![0u32; k];
        let mut digits = vec![0u32; k * e];
        let mut word = Mat::zeros(&self.field, self.m, self.n);
        f(&u, &word);
        let total = (p as u64).pow((k * e) as u32);
        for s in 1..total {
            let mut r = 0;
            let mut x = s;
            while x % p as u64 == 0 {
                x /= p as u64;
                r += 1;
            }
            word.axpy(1, &gens[r]);
            digits[r] = (digits[r] + 1) % p;
            let j = r / e;
            u[j] = digits[j * e..(j + 1) * e].iter().rev().fold(0, |acc, &d| acc * p + d);
            f(&u, &word);
        }
        Ok(())
    }

    pub fn rank_distribution(&self, guards: &Guards) -> Result<RankDistribution> {
        let mut counts = vec![0u64; self.m.min(self.n) + 1];
        if self.field.q() == 2 && self.n <= 64 {
            guards.vectors("codewords", 2, self.k())?;
            let packed: Vec<Vec<u64>> = self
                .basis
                .iter()
                .map(|b| (0..self.m).map(|i| pack(b.row(i))).collect())
                .collect();
            let mut word = vec![0u64; self.m];
            let mut scratch = vec![0u64; self.m];
            counts[0] += 1;
            for s in 1u64..(1u64 << self.k()) {
                let j = s.trailing_zeros() as usize;
                for (w, &b) in word.iter_mut().zip(&packed[j]) {
                    *w ^= b;
                }
                scratch.copy_from_slice(&word);
                counts[rank_words(&mut scratch)] += 1;
            }
        } else {
            self.for_each_codeword(guards, |_, w| counts[w.rank()] += 1)?;
        }
        Ok(RankDistribution { counts })
    }

    /// Minimum rank of a nonzero codeword; 0 for the zero code.
    pub fn min_distance(&self, guards: &Guards) -> Result<usize> {
        Ok(self.rank_distribution(guards)?.min_distance().unwrap_or(0))
    }

    /// Sum of the row spaces (or column spaces) of the given matrices.
    pub fn support_of(field: &Field, m: usize, n: usize, mats: &[Mat], side: Side) -> Subspace {
        let parts: Vec<Mat> = match side {
            Side::Row => mats.to_vec(),
            Side::Column => mats.iter().map(Mat::transpose).collect(),
        };
        let ambient = match side {
            Side::Row => n,
            Side::Column => m,
        };
        if parts.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::rowspace(&Mat::vstack(&parts).expect("equal widths"))
    }

    /// Row support (in `K^n`) or column support (in `K^m`).
    pub fn support(&self, side: Side) -> Subspace {
        Self::support_of(&self.field, self.m, self.n, &self.basis, side)
    }

    /// Support of the subcode `{m_1(T, u) : u in U}`.
    pub fn subcode_support(&self, u: &Subspace, side: Side) -> Result<Subspace> {
        if u.ambient() != self.k() {
            return Err(Error::AmbientMismatch { expected: self.k(), got: u.ambient() });
        }
        let gens: Result<Vec<Mat>> = (0..u.dim()).map(|i| self.codeword(u.basis().row(i))).collect();
        Ok(Self::support_of(&self.field, self.m, self.n, &gens?, side))
    }

    /// `Side::Column`: the row support is all of `K^n`.
    /// `Side::Row`: the column support is all of `K^m`.
    pub fn is_nondegenerate(&self, side: Side) -> bool {
        match side {
            Side::Column => self.support(Side::Row).dim() == self.n,
            Side::Row => self.support(Side::Column).dim() == self.m,
        }
    }

    /// Coefficient vectors `u` in `K^k` whose codeword has column space
    /// (`Side::Column`, `U` in `K^m`) or row space (`Side::Row`, `U` in `K^n`)
    /// inside `U`.
    pub fn shorten_coefficients(&self, u: &Subspace, side: Side) -> Result<Subspace> {
        let ambient = match side {
            Side::Column => self.m,
            Side::Row => self.n,
        };
        if u.ambient() != ambient {
            return Err(Error::AmbientMismatch { expected: ambient, got: u.ambient() });
        }
        let w = u.orthogonal_complement();
        if w.dim() == 0 || self.k() == 0 {
            return Ok(Subspace::full(&self.field, self.k()));
        }
        let rows: Result<Vec<Vec<u32>>> = self
            .basis
            .iter()
            .map(|b| {
                let prod = match side {
                    Side::Column => w.basis().mul(b)?,
                    Side::Row => b.mul(&w.basis().transpose())?,
                };
                Ok(prod.into_data())
            })
            .collect();
        Ok(Subspace::left_kernel(&Mat::from_rows(&self.field, &rows?)?))
    }

    /// The shortened code `C_c(U)` or `C_r(U)`.
    pub fn shorten(&self, u: &Subspace, side: Side) -> Result<MatrixRankCode> {
        let coeffs = self.shorten_coefficients(u, side)?;
        let mats: Result<Vec<Mat>> = (0..coeffs.dim()).map(|i| self.codeword(coeffs.basis().row(i))).collect();
        let mats = mats?;
        let space = if mats.is_empty() {
            Subspace::zero(&self.field, self.m * self.n)
        } else {
            Subspace::rowspace(&flat(&self.field, self.m, self.n, &mats))
        };
        MatrixRankCode::from_subspace(&self.field, self.m, self.n, &space)
    }

    /// Bin every `t`-dimensional subcode by the dimension of its support.
    pub fn support_distribution(&self, t: usize, side: Side, guards: &Guards) -> Result<SupportDistribution> {
        let k = self.k();
        let ambient = match side {
            Side::Row => self.n,
            Side::Column => self.m,
        };
        let mut counts = vec![0u64; ambient + 1];
        if t > k {
            return Ok(SupportDistribution { t, side, counts });
        }
        guards.subspaces("subcodes", k, t, self.field.q())?;
        for u in enumerate_subspaces(&self.field, k, t) {
            counts[self.subcode_support(&u, side)?.dim()] += 1;
        }
        Ok(SupportDistribution { t, side, counts })
    }

    /// Equivalent code on `dim csupp x dim rsupp` matrices.
    pub fn embed_nondegenerate(&self) -> Result<(MatrixRankCode, Embedding)> {
        let cs = self.support(Side::Column);
        let rs = self.support(Side::Row);
        let a = completion(&cs).inverse()?;
        let b = completion(&rs).inverse()?;
        let (rows, cols) = (cs.dim(), rs.dim());
        let emb = Embedding { a, b, rows, cols };
        let basis: Result<Vec<Mat>> = self.basis.iter().map(|m| emb.apply(m)).collect();
        let code = MatrixRankCode::new(&self.field, rows, cols, basis?)?;
        Ok((code, emb))
    }

    /// `M -> A^T M B` on every codeword.
    pub fn apply_equivalence(&self, a: &Mat, b: &Mat) -> Result<MatrixRankCode> {
        check_transform(a, self.m)?;
        check_transform(b, self.n)?;
        let at = a.transpose();
        let basis: Result<Vec<Mat>> = self.basis.iter().map(|m| at.mul(m)?.mul(b)).collect();
        MatrixRankCode::new(&self.field, self.m, self.n, basis?)
    }

    pub fn transpose(&self) -> MatrixRankCode {
        let basis = self.basis.iter().map(Mat::transpose).collect();
        MatrixRankCode::new(&self.field, self.n, self.m, basis).expect("transpose preserves independence")
    }
}

impl Embedding {
    pub fn apply(&self, m: &Mat) -> Result<Mat> {
        Ok(self.a.transpose().mul(m)?.mul(&self.b)?.block(self.rows, self.cols))
    }
}

pub(crate) fn check_transform(a: &Mat, n: usize) -> Result<()> {
    if a.shape() != (n, n) {
        return Err(Error::ShapeMismatch(format!("transform must be {n}x{n}, got {}x{}", a.rows(), a.cols())));
    }
    if !a.is_invertible() {
        return Err(Error::SingularTransform);
    }
    Ok(())
}

/// Invertible matrix whose leading rows are the basis of `s`.
fn completion(s: &Subspace) -> Mat {
    let n = s.ambient();
    let mut rows = s.basis_vectors();
    for c in (0..n).filter(|c| !s.pivots().contains(c)) {
        let mut e = vec![0; n];
        e[c] = 1;
        rows.push(e);
    }
    if rows.is_empty() {
        return Mat::zeros(s.field(), 0, 0);
    }
    Mat::from_rows(s.field(), &rows).expect("square")
}

fn pack(row: &[u32]) -> u64 {
    row.iter().enumerate().fold(0u64, |acc, (j, &v)| acc | ((v as u64) << j))
}
