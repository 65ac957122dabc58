//! Column- and row-systems of matrix codes, weights of subspaces inside them,
//! generalized rank weights and the Knuth orbit of semifield codes.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::codes::{check_transform, MatrixRankCode};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{enumerate_subspaces, Mat, Subspace};
use crate::tensor::Tensor3;
use crate::{Guards, Side};

/// An `n`-dimensional space of `k x m` matrices whose column spaces span `K^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSystem {
    space: MatrixRankCode,
}

/// An `m`-dimensional space of `n x k` matrices whose row spaces span `K^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSystem {
    space: MatrixRankCode,
}

fn spans(space: &MatrixRankCode, side: Side, target: usize) -> bool {
    space.support(side).dim() == target
}

impl ColumnSystem {
    pub fn new(field: &Field, k: usize, m: usize, basis: Vec<Mat>) -> Result<ColumnSystem> {
        let space = MatrixRankCode::new(field, k, m, basis)?;
        if !spans(&space, Side::Column, k) {
            return Err(Error::DegenerateSystem(format!("column spaces do not span K^{k}")));
        }
        Ok(ColumnSystem { space })
    }

    /// Axis-3 slices `X_l = T[:, :, l]` of a generator tensor.
    pub fn from_tensor(t: &Tensor3) -> Result<ColumnSystem> {
        let code = MatrixRankCode::from_tensor(t)?;
        if !code.is_nondegenerate(Side::Column) {
            return Err(Error::DegenerateCode {
                side: Side::Column,
                detail: format!("row support has dimension {} < {}", code.support(Side::Row).dim(), code.n()),
            });
        }
        let [k, m, _] = t.shape();
        ColumnSystem::new(t.field(), k, m, t.slices(3)?)
    }

    pub fn k(&self) -> usize {
        self.space.m()
    }

    pub fn m(&self) -> usize {
        self.space.n()
    }

    /// `K`-dimension, the length `n` of the associated code.
    pub fn dim(&self) -> usize {
        self.space.k()
    }

    pub fn field(&self) -> &Field {
        self.space.field()
    }

    pub fn basis(&self) -> &[Mat] {
        self.space.basis()
    }

    /// The system as a space of `k x m` matrices.
    pub fn matrix_space(&self) -> &MatrixRankCode {
        &self.space
    }

    /// Generator tensor `T` with `T[:, :, l] = X_l`.
    pub fn tensor(&self) -> Tensor3 {
        self.space.generator_tensor().permute_axes([1, 2, 0]).expect("permutation")
    }

    /// The code `{X^T : X in S}` of `m x k` matrices.
    pub fn as_code(&self) -> MatrixRankCode {
        self.space.transpose()
    }

    /// `dim S_c(W)` for `W` in `K^k`.
    pub fn cwt(&self, w: &Subspace) -> Result<usize> {
        Ok(self.space.shorten_coefficients(w, Side::Column)?.dim())
    }

    /// `X -> A^T X B` with `A` in `GL_k`, `B` in `GL_m`.
    pub fn apply_equivalence(&self, a: &Mat, b: &Mat) -> Result<ColumnSystem> {
        check_transform(a, self.k())?;
        check_transform(b, self.m())?;
        Ok(ColumnSystem { space: self.space.apply_equivalence(a, b)? })
    }
}

impl RowSystem {
    pub fn new(field: &Field, n: usize, k: usize, basis: Vec<Mat>) -> Result<RowSystem> {
        let space = MatrixRankCode::new(field, n, k, basis)?;
        if !spans(&space, Side::Row, k) {
            return Err(Error::DegenerateSystem(format!("row spaces do not span K^{k}")));
        }
        Ok(RowSystem { space })
    }

    /// Transposed axis-2 slices `Y_j = T[:, j, :]^T` of a generator tensor.
    pub fn from_tensor(t: &Tensor3) -> Result<RowSystem> {
        let code = MatrixRankCode::from_tensor(t)?;
        if !code.is_nondegenerate(Side::Row) {
            return Err(Error::DegenerateCode {
                side: Side::Row,
                detail: format!("column support has dimension {} < {}", code.support(Side::Column).dim(), code.m()),
            });
        }
        let [k, _, n] = t.shape();
        let basis = t.slices(2)?.iter().map(Mat::transpose).collect();
        RowSystem::new(t.field(), n, k, basis)
    }

    pub fn n(&self) -> usize {
        self.space.m()
    }

    pub fn k(&self) -> usize {
        self.space.n()
    }

    /// `K`-dimension, the row count `m` of the associated code.
    pub fn dim(&self) -> usize {
        self.space.k()
    }

    pub fn field(&self) -> &Field {
        self.space.field()
    }

    pub fn basis(&self) -> &[Mat] {
        self.space.basis()
    }

    /// The system as a space of `n x k` matrices.
    pub fn matrix_space(&self) -> &MatrixRankCode {
        &self.space
    }

    /// Generator tensor `T` with `T[:, j, :] = Y_j^T`.
    pub fn tensor(&self) -> Tensor3 {
        self.space.generator_tensor().permute_axes([2, 0, 1]).expect("permutation")
    }

    /// `dim T_r(W)` for `W` in `K^k`.
    pub fn rwt(&self, w: &Subspace) -> Result<usize> {
        Ok(self.space.shorten_coefficients(w, Side::Row)?.dim())
    }

    /// `Y -> A^T Y B` with `A` in `GL_n`, `B` in `GL_k`.
    pub fn apply_equivalence(&self, a: &Mat, b: &Mat) -> Result<RowSystem> {
        check_transform(a, self.n())?;
        check_transform(b, self.k())?;
        Ok(RowSystem { space: self.space.apply_equivalence(a, b)? })
    }
}

pub fn column_system(t: &Tensor3) -> Result<ColumnSystem> {
    ColumnSystem::from_tensor(t)
}

pub fn row_system(t: &Tensor3) -> Result<RowSystem> {
    RowSystem::from_tensor(t)
}

pub fn system_as_code(s: &ColumnSystem) -> MatrixRankCode {
    s.as_code()
}

fn perp_of_vector(field: &Field, u: &[u32]) -> Result<Subspace> {
    Ok(Subspace::span(field, u.len(), &[u.to_vec()])?.orthogonal_complement())
}

/// `n - dim S_c(u^perp)`.
pub fn rank_via_system(t: &Tensor3, u: &[u32]) -> Result<usize> {
    let s = ColumnSystem::from_tensor(t)?;
    Ok(s.dim() - s.cwt(&perp_of_vector(t.field(), u)?)?)
}

/// Row support of `m_1(T, u)`, as the complement of `psi_T^{-1}(S_c(u^perp))`.
pub fn support_via_system(t: &Tensor3, u: &[u32]) -> Result<Subspace> {
    let s = ColumnSystem::from_tensor(t)?;
    let w = perp_of_vector(t.field(), u)?;
    Ok(s.matrix_space().shorten_coefficients(&w, Side::Column)?.orthogonal_complement())
}

pub fn cwt(s: &ColumnSystem, w: &Subspace) -> Result<usize> {
    s.cwt(w)
}

pub fn rwt(t: &RowSystem, w: &Subspace) -> Result<usize> {
    t.rwt(w)
}

/// Maximum of `cwt` over all `h`-dimensional `W`; `None` when `h > k`.
pub fn max_cwt(s: &ColumnSystem, h: usize, guards: &Guards) -> Result<Option<usize>> {
    let k = s.k();
    if h > k {
        return Ok(None);
    }
    guards.subspaces("subspaces of K^k", k, h, s.field().q())?;
    let mut best = 0;
    for w in enumerate_subspaces(s.field(), k, h) {
        best = best.max(s.cwt(&w)?);
    }
    Ok(Some(best))
}

/// Maximum of `rwt` over all `h`-dimensional `W`; `None` when `h > k`.
pub fn max_rwt(t: &RowSystem, h: usize, guards: &Guards) -> Result<Option<usize>> {
    let k = t.k();
    if h > k {
        return Ok(None);
    }
    guards.subspaces("subspaces of K^k", k, h, t.field().q())?;
    let mut best = 0;
    for w in enumerate_subspaces(t.field(), k, h) {
        best = best.max(t.rwt(&w)?);
    }
    Ok(Some(best))
}

fn check_evasive_params(h: usize, r: usize, limit: usize) -> Result<()> {
    if h == 0 || h > r || r > limit {
        return Err(Error::InvalidArgument(format!("need 1 <= h <= r <= {limit}, got h = {h}, r = {r}")));
    }
    Ok(())
}

/// `m cwt(W) <= r` for every `h`-dimensional `W`, without range checks on `h, r`.
pub(crate) fn is_evasive_unchecked(s: &ColumnSystem, h: usize, r: usize, guards: &Guards) -> Result<bool> {
    Ok(max_cwt(s, h, guards)?.is_none_or(|c| c * s.m() <= r))
}

pub(crate) fn is_row_evasive_unchecked(t: &RowSystem, h: usize, r: usize, guards: &Guards) -> Result<bool> {
    Ok(max_rwt(t, h, guards)?.is_none_or(|c| c * t.n() <= r))
}

/// `(h, r)`-column-evasive: `cwt(W) <= r / m` for every `h`-dimensional `W`.
pub fn is_evasive(s: &ColumnSystem, h: usize, r: usize, guards: &Guards) -> Result<bool> {
    check_evasive_params(h, r, s.m() * s.dim())?;
    is_evasive_unchecked(s, h, r, guards)
}

/// `(h, r)`-row-evasive: `rwt(W) <= r / n` for every `h`-dimensional `W`.
pub fn is_row_evasive(t: &RowSystem, h: usize, r: usize, guards: &Guards) -> Result<bool> {
    check_evasive_params(h, r, t.n() * t.dim())?;
    is_row_evasive_unchecked(t, h, r, guards)
}

pub fn is_scattered(s: &ColumnSystem, h: usize, guards: &Guards) -> Result<bool> {
    is_evasive(s, h, h, guards)
}

pub fn is_row_scattered(t: &RowSystem, h: usize, guards: &Guards) -> Result<bool> {
    is_row_evasive(t, h, h, guards)
}

/// How a generalized weight is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightMethod {
    /// Minimum support dimension over `t`-dimensional subcodes.
    Subcode,
    /// Minimum `dim U` with `dim C_side(U) >= t`.
    Shorten,
    /// Maximum weight of a `(k - t)`-dimensional subspace in the associated system.
    System,
}

impl WeightMethod {
    pub const ALL: [WeightMethod; 3] = [WeightMethod::Subcode, WeightMethod::Shorten, WeightMethod::System];
}

impl fmt::Display for WeightMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightMethod::Subcode => "subcode",
            WeightMethod::Shorten => "shorten",
            WeightMethod::System => "system",
        })
    }
}

impl FromStr for WeightMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<WeightMethod> {
        match s {
            "subcode" => Ok(WeightMethod::Subcode),
            "shorten" => Ok(WeightMethod::Shorten),
            "system" => Ok(WeightMethod::System),
            _ => Err(Error::Parse(format!("unknown method `{s}`"))),
        }
    }
}

/// `d_t^r` (`Side::Row`, row supports) or `d_t^c` (`Side::Column`, column supports).
pub fn generalized_weight(
    c: &MatrixRankCode,
    t: usize,
    side: Side,
    method: WeightMethod,
    guards: &Guards,
) -> Result<usize> {
    let k = c.k();
    if t == 0 || t > k {
        return Err(Error::InvalidArgument(format!("t must lie in 1..={k}, got {t}")));
    }
    let q = c.field().q();
    match method {
        WeightMethod::Subcode => {
            guards.subspaces("subcodes", k, t, q)?;
            let mut best = usize::MAX;
            for u in enumerate_subspaces(c.field(), k, t) {
                best = best.min(c.subcode_support(&u, side)?.dim());
            }
            Ok(best)
        }
        WeightMethod::Shorten => {
            let ambient = match side {
                Side::Row => c.n(),
                Side::Column => c.m(),
            };
            for d in 0..=ambient {
                guards.subspaces("shortening subspaces", ambient, d, q)?;
                for u in enumerate_subspaces(c.field(), ambient, d) {
                    if c.shorten_coefficients(&u, side)?.dim() >= t {
                        return Ok(d);
                    }
                }
            }
            unreachable!("the full space shortens to the whole code")
        }
        WeightMethod::System => {
            let tensor = c.generator_tensor();
            match side {
                Side::Row => {
                    let s = ColumnSystem::from_tensor(&tensor)?;
                    Ok(c.n() - max_cwt(&s, k - t, guards)?.expect("k - t <= k"))
                }
                Side::Column => {
                    let r = RowSystem::from_tensor(&tensor)?;
                    Ok(c.m() - max_rwt(&r, k - t, guards)?.expect("k - t <= k"))
                }
            }
        }
    }
}

/// `(d_1, ..., d_k)` on one side by one method.
pub fn generalized_weights(c: &MatrixRankCode, side: Side, method: WeightMethod, guards: &Guards) -> Result<Vec<usize>> {
    (1..=c.k()).map(|t| generalized_weight(c, t, side, method, guards)).collect()
}

/// One member of a Knuth orbit and the word that reaches it.
#[derive(Clone, Debug)]
pub struct KnuthMember {
    /// Operations applied left to right: `t` transpose, `c` column system, `r` row system.
    pub word: String,
    pub code: MatrixRankCode,
    pub min_distance: usize,
}

const KNUTH_OPS: [(char, [usize; 3]); 3] = [('t', [0, 2, 1]), ('c', [2, 0, 1]), ('r', [1, 2, 0])];

fn compose(a: [usize; 3], b: [usize; 3]) -> [usize; 3] {
    // apply a, then b
    [a[b[0]], a[b[1]], a[b[2]]]
}

/// Close an `[n x n, n, n]` code under transposition and the two system maps.
pub fn knuth_orbit(c: &MatrixRankCode, guards: &Guards) -> Result<Vec<KnuthMember>> {
    let n = c.n();
    if c.m() != n || c.k() != n {
        return Err(Error::NotASemifieldCode(format!("shape {}x{} with k = {}", c.m(), c.n(), c.k())));
    }
    let d = c.min_distance(guards)?;
    if d != n {
        return Err(Error::NotASemifieldCode(format!("minimum distance {d} < {n}")));
    }
    let base = c.generator_tensor();
    // breadth-first over the six axis permutations, shortest words first
    let mut words: Vec<([usize; 3], String)> = vec![([0, 1, 2], String::new())];
    let mut queue = VecDeque::from([([0usize, 1, 2], String::new())]);
    while let Some((perm, word)) = queue.pop_front() {
        for (letter, op) in KNUTH_OPS {
            let next = compose(perm, op);
            if words.iter().all(|(p, _)| *p != next) {
                let w = format!("{word}{letter}");
                words.push((next, w.clone()));
                queue.push_back((next, w));
            }
        }
    }
    let mut members: Vec<KnuthMember> = Vec::new();
    for (perm, word) in words {
        let code = MatrixRankCode::from_tensor(&base.permute_axes(perm)?)?;
        if members.iter().any(|m| m.code == code) {
            continue;
        }
        let min_distance = code.min_distance(guards)?;
        if code.k() != n || min_distance != n {
            return Err(Error::NotASemifieldCode(format!("orbit member `{word}` has parameters [{n}x{n}, {}, {min_distance}]", code.k())));
        }
        members.push(KnuthMember { word, code, min_distance });
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn toy_systems() {
        let t = corpus::toy_tensor();
        let s = column_system(&t).unwrap();
        assert_eq!((s.k(), s.m(), s.dim()), (4, 3, 3));
        let x: Vec<String> = s.basis().iter().map(Mat::to_text).collect();
        assert_eq!(x, ["1,0,1;0,0,1;0,1,0;0,0,1", "0,0,1;0,0,1;0,0,1;0,1,1", "0,0,0;1,0,1;0,0,1;0,0,1"]);
        let r = row_system(&t).unwrap();
        assert_eq!((r.n(), r.k(), r.dim()), (3, 4, 3));
        let g = Guards::default();
        assert_eq!(s.matrix_space().rank_distribution(&g).unwrap().counts, vec![1, 0, 2, 5]);
        assert_eq!(r.matrix_space().rank_distribution(&g).unwrap().counts, vec![1, 0, 2, 5]);
        assert_eq!(s.as_code().rank_distribution(&g).unwrap().counts, vec![1, 0, 2, 5]);
    }

    #[test]
    fn system_tensors_round_trip() {
        let t = corpus::toy_tensor();
        assert_eq!(column_system(&t).unwrap().tensor(), t);
        assert_eq!(row_system(&t).unwrap().tensor(), t);
    }

    #[test]
    fn toy_rank_via_system() {
        let t = corpus::toy_tensor();
        assert_eq!(rank_via_system(&t, &[1, 0, 1, 0]).unwrap(), 2);
        assert_eq!(rank_via_system(&t, &[0, 0, 0, 0]).unwrap(), 0);
        let s = column_system(&t).unwrap();
        let w = perp_of_vector(t.field(), &[1, 0, 1, 0]).unwrap();
        let short = s.matrix_space().shorten(&w, Side::Column).unwrap();
        assert_eq!(short.k(), 1);
        assert!(short.contains(&s.basis()[1]).unwrap());
    }

    #[test]
    fn degenerate_code_has_no_column_system() {
        let f = Field::new(2, 1).unwrap();
        let c = MatrixRankCode::new(&f, 2, 2, vec![Mat::from_text(&f, "1,0;1,0").unwrap()]).unwrap();
        let err = column_system(&c.generator_tensor()).unwrap_err();
        assert!(matches!(err, Error::DegenerateCode { side: Side::Column, .. }));
    }

    #[test]
    fn toy_generalized_weights_all_methods() {
        let c = corpus::toy_code();
        let g = Guards::default();
        for side in [Side::Row, Side::Column] {
            for method in WeightMethod::ALL {
                assert_eq!(generalized_weights(&c, side, method, &g).unwrap(), vec![2, 2, 3, 3], "{side} {method}");
            }
        }
    }

    #[test]
    fn toy_is_three_scattered() {
        let s = column_system(&corpus::toy_tensor()).unwrap();
        let g = Guards::default();
        assert!(is_scattered(&s, 3, &g).unwrap());
        assert_eq!(max_cwt(&s, 3, &g).unwrap(), Some(1));
        assert!(is_evasive(&s, 5, 6, &g).unwrap());
        assert!(is_evasive(&s, 0, 1, &g).is_err());
    }

    #[test]
    fn mrd_system_is_two_scattered() {
        let c = corpus::spread_code(2, 3).unwrap();
        let s = column_system(&c.generator_tensor()).unwrap();
        assert!(is_scattered(&s, 2, &Guards::default()).unwrap());
    }

    #[test]
    fn knuth_orbit_of_spread_codes() {
        let g = Guards::default();
        for n in [2, 3] {
            let orbit = knuth_orbit(&corpus::spread_code(2, n).unwrap(), &g).unwrap();
            assert!(!orbit.is_empty() && orbit.len() <= 6);
            assert!(orbit.iter().all(|m| m.min_distance == n && m.code.k() == n));
        }
        assert!(matches!(knuth_orbit(&corpus::toy_code(), &g), Err(Error::NotASemifieldCode(_))));
    }

    #[test]
    fn cyclic_maps_have_order_three() {
        let t = corpus::spread_code(2, 3).unwrap().generator_tensor();
        let c = |x: &Tensor3| column_system(x).unwrap().matrix_space().generator_tensor();
        assert_eq!(c(&c(&c(&t))), t);
        let r = |x: &Tensor3| row_system(x).unwrap().matrix_space().generator_tensor();
        assert_eq!(r(&c(&t)), t);
    }
}
