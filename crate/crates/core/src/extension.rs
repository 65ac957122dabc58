//! Vector rank-metric codes as matrix codes, `q`-systems as column-systems, and
//! the extended additive Hamming code of a matrix code.

use crate::codes::MatrixRankCode;
use crate::error::{Error, Result};
use crate::geometry::{ColumnSystem, RowSystem};
use crate::gf::{ExtensionBasis, Field};
use crate::linalg::{enumerate_subspaces, for_each_vector, Mat, Subspace};
use crate::tensor::Tensor3;
use crate::{Guards, Side};

fn check_ext(g: &Mat, basis: &ExtensionBasis) -> Result<()> {
    if g.field() != basis.ext() {
        return Err(Error::MixedFields);
    }
    Ok(())
}

/// Index of the first row of `g` that lies in the span of the previous rows.
fn first_dependent_row(g: &Mat) -> Option<usize> {
    (0..g.rows()).find(|&i| g.row_range(0, i + 1).rank() <= i)
}

/// The `[m x n, km]_K` code of Γ-expansions of the `F`-linear code generated by `g`.
pub fn expand_vector_code(g: &Mat, basis: &ExtensionBasis) -> Result<MatrixRankCode> {
    check_ext(g, basis)?;
    if let Some(index) = first_dependent_row(g) {
        return Err(Error::DependentRows { index });
    }
    let f = basis.ext();
    let mut mats = Vec::with_capacity(g.rows() * basis.m());
    for j in 0..g.rows() {
        for &gamma in basis.gamma() {
            let row: Vec<u32> = g.row(j).iter().map(|&x| f.mul(gamma, x)).collect();
            mats.push(basis.expand_values(&row));
        }
    }
    MatrixRankCode::new(basis.base(), basis.m(), g.cols(), mats)
}

/// Rank of a vector over `F`: the `K`-rank of its Γ-expansion.
pub fn vector_rank(v: &[u32], basis: &ExtensionBasis) -> usize {
    basis.expand_values(v).rank()
}

/// `n` vectors of `F^k` whose `K`-span is a `q`-system.
fn check_q_system(points: &Mat, basis: &ExtensionBasis) -> Result<()> {
    check_ext(points, basis)?;
    let k = points.cols();
    if points.rank() != k {
        return Err(Error::DegenerateSystem(format!("points lie in an F-hyperplane of F^{k}")));
    }
    Ok(())
}

/// `nu_Gamma(S)` for the `q`-system spanned by the rows of `points` (`n x k` over `F`).
pub fn nu_gamma_system(points: &Mat, basis: &ExtensionBasis) -> Result<ColumnSystem> {
    check_q_system(points, basis)?;
    let mats: Vec<Mat> = (0..points.rows()).map(|l| basis.nu_gamma_values(points.row(l))).collect();
    ColumnSystem::new(basis.base(), points.cols() * basis.m(), basis.m(), mats)
}

/// `dim_K(S ∩ w̃^perp)` where `w̃_i` recombines the `i`-th block of `w` in the
/// trace-dual basis.
pub fn q_system_hyperplane_weight(points: &Mat, basis: &ExtensionBasis, w: &[u32]) -> Result<usize> {
    check_ext(points, basis)?;
    let (n, k, m) = (points.rows(), points.cols(), basis.m());
    if w.len() != k * m {
        return Err(Error::ShapeMismatch(format!("vector of length {} in K^{}", w.len(), k * m)));
    }
    let f = basis.ext();
    let wt: Vec<u32> = w.chunks(m).map(|c| basis.recombine_dual(c)).collect();
    let values: Vec<u32> = (0..n)
        .map(|l| points.row(l).iter().zip(&wt).fold(0, |acc, (&v, &x)| f.add(acc, f.mul(v, x))))
        .collect();
    Ok(n - basis.expand_values(&values).rank())
}

/// Additive code over `F = GF(q^s)` that is `K`-linear with generator `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveHammingCode {
    pub side: Side,
    pub length: usize,
    pub kdim: usize,
    pub basis: ExtensionBasis,
    /// `kdim x length` over `F`; codewords are `uG` for `u` in `K^kdim`.
    pub generator: Mat,
}

impl AdditiveHammingCode {
    pub fn base(&self) -> &Field {
        self.basis.base()
    }

    pub fn alphabet(&self) -> &Field {
        self.basis.ext()
    }

    /// `uG` with `u` in `K^kdim`.
    pub fn codeword(&self, u: &[u32]) -> Result<Vec<u32>> {
        if u.len() != self.kdim {
            return Err(Error::ShapeMismatch(format!("vector of length {} for dimension {}", u.len(), self.kdim)));
        }
        let f = self.alphabet();
        let mut out = vec![0; self.length];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            let c = self.basis.embed(ui);
            for (o, &g) in out.iter_mut().zip(self.generator.row(i)) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        Ok(out)
    }

    pub fn weight(&self, u: &[u32]) -> Result<usize> {
        Ok(self.codeword(u)?.iter().filter(|&&x| x != 0).count())
    }

    /// Generator rows expanded over `K`: row `i` concatenates the Γ-coordinates of its entries.
    pub fn expanded_generator(&self) -> Mat {
        let s = self.basis.m();
        let mut out = Mat::zeros(self.base(), self.kdim, self.length * s);
        for i in 0..self.kdim {
            for j in 0..self.length {
                for (a, &c) in self.basis.coordinates(self.generator.get(i, j)).iter().enumerate() {
                    out.set(i, j * s + a, c);
                }
            }
        }
        out
    }

    /// `k x s` matrix over `K` of column `j`: entry `(i, a)` is coordinate `a` of `G[i][j]`.
    pub fn column_matrix(&self, j: usize) -> Mat {
        let s = self.basis.m();
        let mut out = Mat::zeros(self.base(), self.kdim, s);
        for i in 0..self.kdim {
            for (a, &c) in self.basis.coordinates(self.generator.get(i, j)).iter().enumerate() {
                out.set(i, a, c);
            }
        }
        out
    }
}

/// One nonzero element per one-dimensional subspace: first nonzero flattened entry equal to 1,
/// in lexicographic order of coefficient vectors.
fn representatives(field: &Field, basis: &[Mat], guards: &Guards) -> Result<Vec<Mat>> {
    guards.vectors("system elements", field.q(), basis.len())?;
    let (r, c) = basis.first().map(Mat::shape).unwrap_or((0, 0));
    let mut out = Vec::new();
    for_each_vector(field.q(), basis.len(), |a| {
        let mut x = Mat::zeros(field, r, c);
        for (&al, b) in a.iter().zip(basis) {
            if al != 0 {
                x.axpy(al, b);
            }
        }
        if x.data().iter().find(|&&v| v != 0) == Some(&1) {
            out.push(x);
        }
    });
    Ok(out)
}

fn assemble(side: Side, basis: ExtensionBasis, reps: &[Mat], k: usize) -> Result<AdditiveHammingCode> {
    let mut g = Mat::zeros(basis.ext(), k, reps.len());
    for (j, x) in reps.iter().enumerate() {
        for i in 0..k {
            g.set(i, j, basis.recombine(x.row(i)));
        }
    }
    let h = AdditiveHammingCode { side, length: reps.len(), kdim: k, basis, generator: g };
    if h.expanded_generator().rank() != k {
        return Err(Error::DegenerateSystem("generator rows are K-dependent".into()));
    }
    Ok(h)
}

/// The extended additive Hamming code of the code generated by `t`.
///
/// `Side::Column` uses the column system over `GF(q^m)`, length `(q^n - 1)/(q - 1)`;
/// `Side::Row` uses the transposed row system over `GF(q^n)`, length `(q^m - 1)/(q - 1)`.
pub fn extend_hamming(t: &Tensor3, side: Side, guards: &Guards) -> Result<AdditiveHammingCode> {
    let [k, m, n] = t.shape();
    let field = t.field();
    match side {
        Side::Column => {
            let s = ColumnSystem::from_tensor(t)?;
            let reps = representatives(field, s.basis(), guards)?;
            assemble(side, ExtensionBasis::standard(field, m)?, &reps, k)
        }
        Side::Row => {
            let r = RowSystem::from_tensor(t)?;
            let reps: Vec<Mat> = representatives(field, r.basis(), guards)?.iter().map(Mat::transpose).collect();
            assemble(side, ExtensionBasis::standard(field, n)?, &reps, k)
        }
    }
}

/// Number of codewords of each Hamming weight `0..=length`.
pub fn additive_weight_distribution(h: &AdditiveHammingCode, guards: &Guards) -> Result<Vec<u64>> {
    guards.vectors("codewords", h.base().q(), h.kdim)?;
    let mut counts = vec![0u64; h.length + 1];
    let mut err = None;
    for_each_vector(h.base().q(), h.kdim, |u| match h.weight(u) {
        Ok(w) => counts[w] += 1,
        Err(e) => err = Some(e),
    });
    match err {
        Some(e) => Err(e),
        None => Ok(counts),
    }
}

/// A multiset of subspaces of `K^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MProjectiveSystem {
    pub k: usize,
    pub items: Vec<(Subspace, u64)>,
}

impl MProjectiveSystem {
    /// Column spaces of the Γ-expanded generator columns, with multiplicities.
    pub fn from_code(h: &AdditiveHammingCode) -> MProjectiveSystem {
        let mut items: Vec<(Subspace, u64)> = Vec::new();
        for j in 0..h.length {
            let s = Subspace::colspace(&h.column_matrix(j));
            match items.iter_mut().find(|(x, _)| *x == s) {
                Some((_, mult)) => *mult += 1,
                None => items.push((s, 1)),
            }
        }
        MProjectiveSystem { k: h.kdim, items }
    }

    pub fn length(&self) -> u64 {
        self.items.iter().map(|(_, m)| m).sum()
    }

    /// Total multiplicity of members inside `u`.
    pub fn count_inside(&self, u: &Subspace) -> Result<u64> {
        let mut acc = 0;
        for (s, mult) in &self.items {
            if s.is_subspace_of(u)? {
                acc += mult;
            }
        }
        Ok(acc)
    }
}

/// `d_i` as the length minus the largest count of members inside a codimension-`i` subspace.
pub fn additive_generalized_weight(h: &AdditiveHammingCode, i: usize, guards: &Guards) -> Result<usize> {
    let k = h.kdim;
    if i == 0 || i > k {
        return Err(Error::InvalidArgument(format!("i must lie in 1..={k}, got {i}")));
    }
    let sys = MProjectiveSystem::from_code(h);
    guards.subspaces("codimension-i subspaces", k, k - i, h.base().q())?;
    let mut best = 0;
    for u in enumerate_subspaces(h.base(), k, k - i) {
        best = best.max(sys.count_inside(&u)?);
    }
    Ok((sys.length() - best) as usize)
}

pub fn additive_generalized_weights(h: &AdditiveHammingCode, guards: &Guards) -> Result<Vec<usize>> {
    (1..=h.kdim).map(|i| additive_generalized_weight(h, i, guards)).collect()
}

/// `(q^s - q^(s - r)) / (q - 1)`.
pub fn transfer_weight(q: u32, s: usize, r: usize) -> u64 {
    let q = q as u64;
    (q.pow(s as u32) - q.pow((s - r) as u32)) / (q - 1)
}
