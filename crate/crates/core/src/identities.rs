//! Exact verifiers for the counting identities and bounds linking a code to
//! its systems. Each verifier returns both sides and a verdict.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::codes::{MatrixRankCode, RankDistribution};
use crate::error::{Error, Result};
use crate::geometry::{self, ColumnSystem, RowSystem, WeightMethod};
use crate::linalg::gaussian_binomial;
use crate::tensor::Tensor3;
use crate::{Guards, Side};

/// One side of a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    /// Exact rational; integers serialize as JSON numbers, others as `"a/b"`.
    Num(BigRational),
    Seq(Vec<BigRational>),
    Flags(Vec<bool>),
}

impl Quantity {
    pub fn int<T: Into<BigInt>>(v: T) -> Quantity {
        Quantity::Num(BigRational::from_integer(v.into()))
    }

    pub fn seq<T: Into<BigInt>, I: IntoIterator<Item = T>>(it: I) -> Quantity {
        Quantity::Seq(it.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
    }
}

fn rat_to_json(r: &BigRational) -> Value {
    if r.is_integer() {
        Value::Number(serde_json::Number::from_str(&r.to_integer().to_string()).expect("integer literal"))
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn rat_from_json(v: &Value) -> std::result::Result<BigRational, String> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| format!("`{n}` is not an integer")),
        Value::String(s) => s.parse::<BigRational>().map_err(|_| format!("`{s}` is not a fraction")),
        _ => Err(format!("expected a number, got {v}")),
    }
}

fn rat_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Quantity {
    pub fn to_json(&self) -> Value {
        match self {
            Quantity::Num(r) => rat_to_json(r),
            Quantity::Seq(v) => Value::Array(v.iter().map(rat_to_json).collect()),
            Quantity::Flags(v) => Value::Array(v.iter().map(|&b| Value::Bool(b)).collect()),
        }
    }

    pub fn from_json(v: &Value) -> std::result::Result<Quantity, String> {
        match v {
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_boolean) => {
                Ok(Quantity::Flags(items.iter().map(|b| b.as_bool().expect("bool")).collect()))
            }
            Value::Array(items) => Ok(Quantity::Seq(items.iter().map(rat_from_json).collect::<std::result::Result<_, _>>()?)),
            other => Ok(Quantity::Num(rat_from_json(other)?)),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Num(r) => f.write_str(&rat_text(r)),
            Quantity::Seq(v) => write!(f, "({})", v.iter().map(rat_text).collect::<Vec<_>>().join(",")),
            Quantity::Flags(v) => write!(f, "({})", v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",")),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quantity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Quantity, D::Error> {
        let v = Value::deserialize(d)?;
        Quantity::from_json(&v).map_err(de::Error::custom)
    }
}

/// How `lhs` and `rhs` are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Le,
    Ge,
    /// Every flag in `lhs` equals the single flag in `rhs`.
    Agree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub name: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub relation: Relation,
    pub passed: bool,
    /// `false` when the preconditions of the statement fail; such reports pass vacuously.
    pub applicable: bool,
    pub context: Map<String, Value>,
}

impl VerdictReport {
    fn new(name: &str, lhs: Quantity, rhs: Quantity, relation: Relation, passed: bool) -> VerdictReport {
        VerdictReport { name: name.into(), lhs, rhs, relation, passed, applicable: true, context: Map::new() }
    }

    fn compare(name: &str, lhs: BigRational, rhs: BigRational, relation: Relation) -> VerdictReport {
        let passed = match relation {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Agree => unreachable!("flags"),
        };
        VerdictReport::new(name, Quantity::Num(lhs), Quantity::Num(rhs), relation, passed)
    }

    fn not_applicable(name: &str, reason: &str) -> VerdictReport {
        let mut r = VerdictReport::new(name, Quantity::Seq(vec![]), Quantity::Seq(vec![]), Relation::Eq, true);
        r.applicable = false;
        r.with("reason", reason)
    }

    fn with<V: Into<Value>>(mut self, key: &str, v: V) -> VerdictReport {
        self.context.insert(key.into(), v.into());
        self
    }
}

fn params(c: &MatrixRankCode) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("q".into(), c.field().q().into());
    m.insert("m".into(), c.m().into());
    m.insert("n".into(), c.n().into());
    m.insert("k".into(), c.k().into());
    m
}

fn finish(mut r: VerdictReport, c: &MatrixRankCode) -> VerdictReport {
    for (k, v) in params(c) {
        r.context.entry(k).or_insert(v);
    }
    r
}

fn qpow(q: u32, e: i64) -> BigRational {
    let base = BigRational::from_integer(q.into());
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `sum_{r >= 1} A_r (q^(top - r) - shift)`.
fn weighted_sum(dist: &RankDistribution, q: u32, top: usize, shift: i64) -> BigRational {
    let mut acc = BigRational::zero();
    for (r, &a) in dist.counts.iter().enumerate().skip(1) {
        if a > 0 {
            acc += (qpow(q, top as i64 - r as i64) - int(shift)) * int(a);
        }
    }
    acc
}

/// Replace `c` by its nondegenerate embedding when `side` requires it.
fn nondegenerate(c: &MatrixRankCode, side: Side) -> Result<(MatrixRankCode, Option<Value>)> {
    if c.is_nondegenerate(side) {
        return Ok((c.clone(), None));
    }
    let (e, _) = c.embed_nondegenerate()?;
    let note = json!({"from": [c.m(), c.n()], "to": [e.m(), e.n()]});
    Ok((e, Some(note)))
}

fn with_embedding(r: VerdictReport, note: Option<Value>) -> VerdictReport {
    match note {
        Some(v) => r.with("embedding", v),
        None => r,
    }
}

/// `sum_{M in C*} (q^(n - rk M) - 1) = sum_{X in S*} (q^(k - rk X) - 1)`.
pub fn check_standard_eq(t: &Tensor3, guards: &Guards) -> Result<VerdictReport> {
    let c0 = MatrixRankCode::from_tensor(t)?;
    let (c, note) = nondegenerate(&c0, Side::Column)?;
    let q = c.field().q();
    let lhs = weighted_sum(&c.rank_distribution(guards)?, q, c.n(), 1);
    let s = ColumnSystem::from_tensor(&c.generator_tensor())?;
    let rhs = weighted_sum(&s.matrix_space().rank_distribution(guards)?, q, c.k(), 1);
    let r = VerdictReport::compare("standard_eq", lhs, rhs, Relation::Eq);
    Ok(finish(with_embedding(r, note), &c0))
}

/// Row analogue: `sum_{M in C*} (q^(m - rk M) - 1) = sum_{Y in T*} (q^(k - rk Y) - 1)`.
pub fn check_standard_eq_row(t: &Tensor3, guards: &Guards) -> Result<VerdictReport> {
    let c0 = MatrixRankCode::from_tensor(t)?;
    let (c, note) = nondegenerate(&c0, Side::Row)?;
    let q = c.field().q();
    let lhs = weighted_sum(&c.rank_distribution(guards)?, q, c.m(), 1);
    let r = RowSystem::from_tensor(&c.generator_tensor())?;
    let rhs = weighted_sum(&r.matrix_space().rank_distribution(guards)?, q, c.k(), 1);
    let rep = VerdictReport::compare("standard_eq_row", lhs, rhs, Relation::Eq);
    Ok(finish(with_embedding(rep, note), &c0))
}

/// `sum_r A_r^(t) (q^(n - r) - 1) = sum_{X in S*} [k - rk X choose t]_q`, with row
/// supports and the column system (`Side::Column`), or column supports and the
/// row system (`Side::Row`).
pub fn check_higher_delsarte(t: &Tensor3, dim: usize, side: Side, guards: &Guards) -> Result<VerdictReport> {
    let c0 = MatrixRankCode::from_tensor(t)?;
    let (c, note) = nondegenerate(&c0, side)?;
    let q = c.field().q();
    let (support_side, ambient) = match side {
        Side::Column => (Side::Row, c.n()),
        Side::Row => (Side::Column, c.m()),
    };
    let dist = c.support_distribution(dim, support_side, guards)?;
    let mut lhs = BigInt::zero();
    for (r, &a) in dist.counts.iter().enumerate() {
        lhs += BigInt::from(a) * (BigInt::from(q).pow((ambient - r) as u32) - 1);
    }
    let tensor = c.generator_tensor();
    let system_ranks = match side {
        Side::Column => ColumnSystem::from_tensor(&tensor)?.matrix_space().rank_distribution(guards)?,
        Side::Row => RowSystem::from_tensor(&tensor)?.matrix_space().rank_distribution(guards)?,
    };
    let mut rhs = BigInt::zero();
    for (r, &a) in system_ranks.counts.iter().enumerate().skip(1) {
        if a > 0 && c.k() >= r {
            rhs += BigInt::from(a) * BigInt::from(gaussian_binomial(c.k() - r, dim, q));
        }
    }
    let rep = VerdictReport::compare("higher_delsarte", int(lhs), int(rhs), Relation::Eq)
        .with("t", dim)
        .with("side", side.to_string());
    Ok(finish(with_embedding(rep, note), &c0))
}

/// Ranks of every nonzero element of a slice space equal `rank`, and the space has dimension `dim`.
fn slices_all_rank(t: &Tensor3, axis: usize, dim: usize, rank: usize, guards: &Guards) -> Result<bool> {
    let space = t.slice_space(axis)?;
    if space.dim() != dim {
        return Ok(false);
    }
    let [k, m, n] = t.shape();
    let cols = if axis == 3 { m } else { n };
    let code = MatrixRankCode::from_subspace(t.field(), k, cols, &space)?;
    let dist = code.rank_distribution(guards)?;
    Ok(dist.counts.iter().enumerate().skip(1).all(|(r, &a)| a == 0 || r == rank))
}

/// The four conditions `(column-faithful, column identity, row-faithful, row identity)`.
pub fn faithful_conditions(t: &Tensor3, guards: &Guards) -> Result<[bool; 4]> {
    let [k, m, n] = t.shape();
    let c = MatrixRankCode::from_tensor(t)?;
    let q = c.field().q();
    let dist = c.rank_distribution(guards)?;
    let qk_minus_1 = qpow(q, k as i64) - int(1);
    let col_id = weighted_sum(&dist, q, n, 0)
        == (qpow(q, k as i64 - m as i64) - int(1)) * (qpow(q, n as i64) - int(1)) + qk_minus_1.clone();
    let row_id = weighted_sum(&dist, q, m, 0)
        == (qpow(q, k as i64 - n as i64) - int(1)) * (qpow(q, m as i64) - int(1)) + qk_minus_1;
    let col = slices_all_rank(t, 3, n, m, guards)?;
    let row = slices_all_rank(t, 2, m, n, guards)?;
    Ok([col, col_id, row, row_id])
}

pub fn is_faithful(c: &MatrixRankCode, guards: &Guards) -> Result<bool> {
    Ok(faithful_conditions(&c.generator_tensor(), guards)?.iter().all(|&b| b))
}

/// All four faithfulness conditions agree.
pub fn check_faithful(t: &Tensor3, guards: &Guards) -> Result<VerdictReport> {
    let flags = faithful_conditions(t, guards)?;
    let agree = flags.iter().all(|&b| b == flags[0]);
    let c = MatrixRankCode::from_tensor(t)?;
    let mut rep = VerdictReport::new("faithful", Quantity::Flags(flags.to_vec()), Quantity::Flags(vec![flags[0]]), Relation::Agree, agree)
        .with("faithful", agree && flags[0]);
    if !c.is_nondegenerate(Side::Column) || !c.is_nondegenerate(Side::Row) {
        rep = rep.with("reason", "degenerate code");
    }
    Ok(finish(rep, &c))
}

/// `sum_{C*} (q^(n - rk) - 1) >= (q^(k-m) - 1)(q^n - 1)` and the row counterpart.
pub fn check_bound_sum(t: &Tensor3, guards: &Guards) -> Result<VerdictReport> {
    let [k, m, n] = t.shape();
    let c = MatrixRankCode::from_tensor(t)?;
    let q = c.field().q();
    let dist = c.rank_distribution(guards)?;
    let lhs = vec![weighted_sum(&dist, q, n, 1), weighted_sum(&dist, q, m, 1)];
    let rhs = vec![
        (qpow(q, k as i64 - m as i64) - int(1)) * (qpow(q, n as i64) - int(1)),
        (qpow(q, k as i64 - n as i64) - int(1)) * (qpow(q, m as i64) - int(1)),
    ];
    let passed = lhs.iter().zip(&rhs).all(|(l, r)| l >= r);
    let rep = VerdictReport::new("bound_sum", Quantity::Seq(lhs), Quantity::Seq(rhs), Relation::Ge, passed);
    Ok(finish(rep, &c))
}

/// Lower bound on the number of codewords of rank `min(m, n)` in a faithful code.
pub fn amin_bound(c: &MatrixRankCode, guards: &Guards) -> Result<VerdictReport> {
    if !is_faithful(c, guards)? {
        return Ok(finish(VerdictReport::not_applicable("amin_bound", "code is not faithful"), c));
    }
    let q = c.field().q();
    let (lo, hi) = (c.m().min(c.n()), c.m().max(c.n()));
    let qk = qpow(q, c.k() as i64);
    let inner = (qpow(q, c.k() as i64 - hi as i64) - int(1)) * (qpow(q, lo as i64) - int(1)) + qk.clone() - int(1);
    let bound = (int(q) * (qk - int(1)) - inner) / int(q - 1);
    let a_min = int(c.rank_distribution(guards)?.counts[lo]);
    let positive = bound.is_positive() && a_min.is_positive();
    let passed = a_min >= bound && positive;
    let rep = VerdictReport::new("amin_bound", Quantity::Num(a_min), Quantity::Num(bound), Relation::Ge, passed)
        .with("positive", positive);
    Ok(finish(rep, c))
}

/// Bounds for one-weight codes, and the maximal ranks of their systems.
pub fn one_weight_checks(c: &MatrixRankCode, guards: &Guards) -> Result<VerdictReport> {
    let dist = c.rank_distribution(guards)?;
    let Some(d) = dist.one_weight() else {
        return Ok(finish(VerdictReport::not_applicable("one_weight", "code is not one-weight"), c));
    };
    let (m, n, k) = (c.m(), c.n(), c.k());
    let bound = m + n - d;
    let mut passed = k <= bound;
    let mut rep = VerdictReport::new("one_weight", Quantity::int(k), Quantity::int(bound), Relation::Le, true).with("d", d);
    if is_faithful(c, guards)? {
        let ok = k == m.max(n) && d == m.min(n);
        passed &= ok;
        rep = rep.with("faithful_parameters", ok);
    }
    let t = c.generator_tensor();
    if d == n {
        let ok = match ColumnSystem::from_tensor(&t) {
            Ok(s) => s.matrix_space().rank_distribution(guards)?.one_weight() == Some(k),
            Err(Error::DegenerateCode { .. }) => false,
            Err(e) => return Err(e),
        };
        passed &= ok;
        rep = rep.with("column_system_max_rank", ok);
    }
    if d == m {
        let ok = match RowSystem::from_tensor(&t) {
            Ok(r) => r.matrix_space().rank_distribution(guards)?.one_weight() == Some(k),
            Err(Error::DegenerateCode { .. }) => false,
            Err(e) => return Err(e),
        };
        passed &= ok;
        rep = rep.with("row_system_max_rank", ok);
    }
    rep.passed = passed;
    Ok(finish(rep, c))
}

/// `k <= max(m, n) (min(m, n) - d + 1)`.
pub fn singleton_check(c: &MatrixRankCode, guards: &Guards) -> Result<VerdictReport> {
    let Some(d) = c.rank_distribution(guards)?.min_distance() else {
        return Ok(finish(VerdictReport::not_applicable("singleton", "zero code"), c));
    };
    let (lo, hi) = (c.m().min(c.n()), c.m().max(c.n()));
    let bound = hi * (lo + 1 - d);
    let rep = VerdictReport::compare("singleton", int(c.k()), int(bound), Relation::Le).with("d", d).with("mrd", c.k() == bound);
    Ok(finish(rep, c))
}

/// `d_t^r <= n - floor((k-t)/m)` and `d_t^c <= m - floor((k-t)/n)` for every `t`.
pub fn check_genweight_bounds(c: &MatrixRankCode, guards: &Guards) -> Result<VerdictReport> {
    let (m, n, k) = (c.m(), c.n(), c.k());
    if k == 0 {
        return Ok(finish(VerdictReport::not_applicable("genweight_bounds", "zero code"), c));
    }
    let dr = geometry::generalized_weights(c, Side::Row, WeightMethod::Subcode, guards)?;
    let dc = geometry::generalized_weights(c, Side::Column, WeightMethod::Subcode, guards)?;
    let br: Vec<usize> = (1..=k).map(|t| n - (k - t) / m.max(1)).collect();
    let bc: Vec<usize> = (1..=k).map(|t| m - (k - t) / n.max(1)).collect();
    let passed = dr.iter().zip(&br).all(|(d, b)| d <= b) && dc.iter().zip(&bc).all(|(d, b)| d <= b);
    let lhs = Quantity::seq(dr.iter().chain(&dc).map(|&v| v as u64));
    let rhs = Quantity::seq(br.iter().chain(&bc).map(|&v| v as u64));
    let rep = VerdictReport::new("genweight_bounds", lhs, rhs, Relation::Le, passed);
    Ok(finish(rep, c))
}

/// `d_t^r >= s` exactly when the column system is `(k-t, m(n-s))`-evasive, for all `t, s`,
/// and the row analogue. Reports the two truth tables.
pub fn check_genweight_evasive(c: &MatrixRankCode, guards: &Guards) -> Result<VerdictReport> {
    let c0 = c;
    let (c, note) = nondegenerate(c0, Side::Column)?;
    let (c, note2) = match note {
        Some(_) => (c, note),
        None => nondegenerate(&c, Side::Row)?,
    };
    let (m, n, k) = (c.m(), c.n(), c.k());
    if k == 0 {
        return Ok(finish(VerdictReport::not_applicable("genweight_evasive", "zero code"), c0));
    }
    let tensor = c.generator_tensor();
    let s = ColumnSystem::from_tensor(&tensor)?;
    let r = RowSystem::from_tensor(&tensor)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for t in 1..=k {
        let dr = geometry::generalized_weight(&c, t, Side::Row, WeightMethod::Subcode, guards)?;
        for sv in 1..=n {
            lhs.push(dr >= sv);
            rhs.push(geometry::is_evasive_unchecked(&s, k - t, m * (n - sv), guards)?);
        }
        let dc = geometry::generalized_weight(&c, t, Side::Column, WeightMethod::Subcode, guards)?;
        for sv in 1..=m {
            lhs.push(dc >= sv);
            rhs.push(geometry::is_row_evasive_unchecked(&r, k - t, n * (m - sv), guards)?);
        }
    }
    let passed = lhs == rhs;
    let rep = VerdictReport::new("genweight_evasive", Quantity::Flags(lhs), Quantity::Flags(rhs), Relation::Eq, passed);
    Ok(finish(with_embedding(rep, note2), c0))
}

/// For `n <= m`: `d_t^r = n - floor((k-t)/m)` exactly when the column system is
/// `(k-t)`-scattered; for `m <= n` the row analogue.
pub fn check_scattered_extremal(c: &MatrixRankCode, guards: &Guards) -> Result<VerdictReport> {
    let c0 = c;
    let (c, note) = nondegenerate(c0, Side::Column)?;
    let (c, note) = match note {
        Some(_) => (c, note),
        None => nondegenerate(&c, Side::Row)?,
    };
    let (m, n, k) = (c.m(), c.n(), c.k());
    if k == 0 {
        return Ok(finish(VerdictReport::not_applicable("scattered_extremal", "zero code"), c0));
    }
    let tensor = c.generator_tensor();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    if n <= m {
        let s = ColumnSystem::from_tensor(&tensor)?;
        for t in 1..=k {
            let d = geometry::generalized_weight(&c, t, Side::Row, WeightMethod::Subcode, guards)?;
            lhs.push(d == n - (k - t) / m);
            rhs.push(geometry::is_evasive_unchecked(&s, k - t, k - t, guards)?);
        }
    }
    if m <= n {
        let r = RowSystem::from_tensor(&tensor)?;
        for t in 1..=k {
            let d = geometry::generalized_weight(&c, t, Side::Column, WeightMethod::Subcode, guards)?;
            lhs.push(d == m - (k - t) / n);
            rhs.push(geometry::is_row_evasive_unchecked(&r, k - t, k - t, guards)?);
        }
    }
    let passed = lhs == rhs;
    let rep = VerdictReport::new("scattered_extremal", Quantity::Flags(lhs), Quantity::Flags(rhs), Relation::Eq, passed);
    Ok(finish(with_embedding(rep, note), c0))
}

/// Groups of verifiers selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Standard,
    Higher,
    Faithful,
    Bounds,
    Singleton,
    OneWeight,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "standard" => Suite::Standard,
            "higher" => Suite::Higher,
            "faithful" => Suite::Faithful,
            "bounds" => Suite::Bounds,
            "singleton" => Suite::Singleton,
            "oneweight" => Suite::OneWeight,
            _ => return Err(Error::Parse(format!("unknown suite `{s}`"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Standard => "standard",
            Suite::Higher => "higher",
            Suite::Faithful => "faithful",
            Suite::Bounds => "bounds",
            Suite::Singleton => "singleton",
            Suite::OneWeight => "oneweight",
        })
    }
}

/// Run a suite on one code, in a fixed order.
pub fn run_suite(c: &MatrixRankCode, suite: Suite, guards: &Guards) -> Result<Vec<VerdictReport>> {
    let t = c.generator_tensor();
    let all = suite == Suite::All;
    let mut out = Vec::new();
    if all || suite == Suite::Standard {
        out.push(check_standard_eq(&t, guards)?);
        out.push(check_standard_eq_row(&t, guards)?);
    }
    if all || suite == Suite::Higher {
        for side in [Side::Column, Side::Row] {
            for dim in 0..=c.k() {
                out.push(check_higher_delsarte(&t, dim, side, guards)?);
            }
        }
    }
    if all || suite == Suite::Faithful {
        out.push(check_faithful(&t, guards)?);
    }
    if all || suite == Suite::Bounds {
        out.push(check_bound_sum(&t, guards)?);
        out.push(amin_bound(c, guards)?);
        out.push(check_genweight_bounds(c, guards)?);
        out.push(check_genweight_evasive(c, guards)?);
        out.push(check_scattered_extremal(c, guards)?);
    }
    if all || suite == Suite::Singleton {
        out.push(singleton_check(c, guards)?);
    }
    if all || suite == Suite::OneWeight {
        out.push(one_weight_checks(c, guards)?);
    }
    Ok(out)
}

/// Numeric value of an integral quantity, for callers that know it fits.
pub fn as_i64(q: &Quantity) -> Option<i64> {
    match q {
        Quantity::Num(r) if r.is_integer() => r.to_integer().to_i64(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn g() -> Guards {
        Guards::default()
    }

    #[test]
    fn toy_standard_eq_is_eleven() {
        let r = check_standard_eq(&corpus::toy_tensor(), &g()).unwrap();
        assert!(r.passed);
        assert_eq!(as_i64(&r.lhs), Some(11));
        assert_eq!(as_i64(&r.rhs), Some(11));
        assert!(check_standard_eq_row(&corpus::toy_tensor(), &g()).unwrap().passed);
    }

    #[test]
    fn spread_standard_eq_is_zero() {
        for n in [2, 3] {
            let t = corpus::spread_code(2, n).unwrap().generator_tensor();
            let r = check_standard_eq(&t, &g()).unwrap();
            assert!(r.passed);
            assert_eq!(as_i64(&r.lhs), Some(0));
        }
    }

    #[test]
    fn toy_higher_delsarte() {
        let t = corpus::toy_tensor();
        for side in [Side::Column, Side::Row] {
            for dim in 0..=4 {
                let r = check_higher_delsarte(&t, dim, side, &g()).unwrap();
                assert!(r.passed, "{side} t={dim}: {} vs {}", r.lhs, r.rhs);
            }
        }
        let r0 = check_higher_delsarte(&t, 0, Side::Column, &g()).unwrap();
        assert_eq!(as_i64(&r0.lhs), Some(7));
        let r1 = check_higher_delsarte(&t, 1, Side::Column, &g()).unwrap();
        assert_eq!(as_i64(&r1.lhs), Some(11));
    }

    #[test]
    fn faithfulness() {
        let spread = corpus::spread_code(2, 2).unwrap().generator_tensor();
        assert_eq!(faithful_conditions(&spread, &g()).unwrap(), [true; 4]);
        let toy = check_faithful(&corpus::toy_tensor(), &g()).unwrap();
        assert!(toy.passed);
        assert_eq!(toy.lhs, Quantity::Flags(vec![false; 4]));
    }

    #[test]
    fn degenerate_line_is_not_faithful() {
        let f = crate::Field::new(2, 1).unwrap();
        let c = MatrixRankCode::new(&f, 1, 2, vec![crate::Mat::from_text(&f, "1,0").unwrap()]).unwrap();
        assert_eq!(faithful_conditions(&c.generator_tensor(), &g()).unwrap(), [false; 4]);
    }

    #[test]
    fn toy_bound_sum() {
        let r = check_bound_sum(&corpus::toy_tensor(), &g()).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, Quantity::seq([11, 11]));
        assert_eq!(r.rhs, Quantity::seq([7, 7]));
    }

    #[test]
    fn amin_on_spreads() {
        for (n, b) in [(2, 3), (3, 7)] {
            let r = amin_bound(&corpus::spread_code(2, n).unwrap(), &g()).unwrap();
            assert!(r.applicable && r.passed);
            assert_eq!(as_i64(&r.rhs), Some(b));
            assert_eq!(as_i64(&r.lhs), Some(b));
        }
        assert!(!amin_bound(&corpus::toy_code(), &g()).unwrap().applicable);
    }

    #[test]
    fn one_weight_and_singleton() {
        let r = one_weight_checks(&corpus::spread_code(2, 2).unwrap(), &g()).unwrap();
        assert!(r.applicable && r.passed);
        assert_eq!((as_i64(&r.lhs), as_i64(&r.rhs)), (Some(2), Some(2)));
        let r3 = one_weight_checks(&corpus::spread_code(2, 3).unwrap(), &g()).unwrap();
        assert_eq!(r3.context["column_system_max_rank"], Value::Bool(true));
        assert!(!one_weight_checks(&corpus::toy_code(), &g()).unwrap().applicable);

        let s = singleton_check(&corpus::spread_code(2, 3).unwrap(), &g()).unwrap();
        assert!(s.passed && s.context["mrd"] == Value::Bool(true));
        let s = singleton_check(&corpus::toy_code(), &g()).unwrap();
        assert_eq!((as_i64(&s.lhs), as_i64(&s.rhs)), (Some(4), Some(6)));
        assert_eq!(s.context["mrd"], Value::Bool(false));
    }

    #[test]
    fn toy_weight_statements() {
        let c = corpus::toy_code();
        for r in [
            check_genweight_bounds(&c, &g()).unwrap(),
            check_genweight_evasive(&c, &g()).unwrap(),
            check_scattered_extremal(&c, &g()).unwrap(),
        ] {
            assert!(r.passed, "{}", r.name);
        }
    }

    #[test]
    fn full_suite_on_corpus() {
        for c in [corpus::toy_code(), corpus::spread_code(2, 2).unwrap(), corpus::spread_code(3, 2).unwrap()] {
            for r in run_suite(&c, Suite::All, &g()).unwrap() {
                assert!(r.passed, "{}: {} vs {}", r.name, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn report_round_trip() {
        for r in run_suite(&corpus::toy_code(), Suite::All, &g()).unwrap() {
            let s = serde_json::to_string(&r).unwrap();
            let back: VerdictReport = serde_json::from_str(&s).unwrap();
            assert_eq!(back, r);
        }
        let q = Quantity::Num(BigRational::new(BigInt::from(-3), BigInt::from(4)));
        assert_eq!(serde_json::to_string(&q).unwrap(), "\"-3/4\"");
    }
}
