//! Arithmetic in small finite fields GF(p^e).
//!
//! Elements are encoded as integers in `[0, q)`: the base-`p` digits of the
//! value are the coefficients of the element in the polynomial basis
//! `1, x, ..., x^(e-1)`, lowest degree first.

mod extension;
mod poly;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use extension::ExtensionBasis;

use crate::error::{Error, Result};

/// Largest supported field cardinality.
pub const MAX_Q: u32 = 1 << 16;
/// Fields up to this size get full log/antilog tables.
const TABLE_LIMIT: u32 = 1 << 12;
/// Odd-characteristic extension fields up to this size get an addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// Conway polynomials for the handful of fields the test corpus leans on,
/// coefficients low degree first. Anything else falls back to the first
/// primitive polynomial in lexicographic order.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

enum Mul {
    Prime,
    Tables { log: Vec<u32>, exp: Vec<u32> },
    Poly,
}

/// Parameters of GF(p^e) plus the precomputed arithmetic tables.
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    mul: Mul,
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({})", self.literal())
    }
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Monic modulus, `e + 1` coefficients low degree first; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The `q=p^e;mod=c0,...,ce` literal.
    pub fn literal(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
        format!("q={}^{};mod={}", self.p, self.e, coeffs.join(","))
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut out = vec![0; self.e as usize];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn pack_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if self.e == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if let Some(t) = &self.add_table {
            t[(a * self.q + b) as usize]
        } else {
            self.add_digits(a, b)
        }
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            a
        } else if self.e == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let d: Vec<u32> = self.digits(a).into_iter().map(|x| (self.p - x) % self.p).collect();
            self.pack_digits(&d)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.mul {
            Mul::Prime => ((a as u64 * b as u64) % self.p as u64) as u32,
            Mul::Tables { log, exp } => {
                let s = log[a as usize] + log[b as usize];
                exp[s as usize]
            }
            Mul::Poly => self.mul_poly(a, b),
        }
    }

    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            poly::clmul_reduce(a, b, &self.modulus)
        } else {
            let pa = self.digits(a);
            let pb = self.digits(b);
            let prod = poly::mul_mod(&pa, &pb, &self.modulus, self.p);
            self.pack_digits(&prod)
        }
    }

    pub fn pow(&self, a: u32, mut exp: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        Some(match &self.mul {
            Mul::Tables { log, exp } => {
                let l = log[a as usize];
                exp[((self.q - 1 - l) % (self.q - 1)) as usize]
            }
            _ => self.pow(a, self.q as u64 - 2),
        })
    }

    /// The element `x` of the polynomial basis (the prime field generator when `e = 1`).
    pub fn x(&self) -> u32 {
        if self.e == 1 {
            primitive_root_mod(self.p)
        } else {
            self.p
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root_mod(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| {
            factors.iter().all(|&r| {
                let mut acc = 1u64;
                for _ in 0..(p - 1) / r {
                    acc = acc * g as u64 % p as u64;
                }
                acc != 1
            })
        })
        .unwrap_or(1)
}

/// Cheap-to-clone handle to an immutable [`FieldSpec`].
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.literal())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.0.p, self.0.e, &self.0.modulus).hash(state);
    }
}

impl std::ops::Deref for Field {
    type Target = FieldSpec;
    fn deref(&self) -> &FieldSpec {
        &self.0
    }
}

impl Field {
    /// GF(p^e) with the built-in default modulus.
    pub fn new(p: u32, e: u32) -> Result<Field> {
        check_size(p, e)?;
        if e == 1 {
            return Self::with_modulus(p, 1, Vec::new());
        }
        let modulus = CONWAY
            .iter()
            .find(|(cp, ce, _)| *cp == p && *ce == e)
            .map(|(_, _, m)| m.to_vec())
            .unwrap_or_else(|| poly::first_primitive(p, e));
        Self::with_modulus(p, e, modulus)
    }

    /// GF(q) for a prime power `q`, default modulus.
    pub fn of_order(q: u32) -> Result<Field> {
        let (p, e) = split_prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::new(p, e)
    }

    pub fn with_modulus(p: u32, e: u32, modulus: Vec<u32>) -> Result<Field> {
        check_size(p, e)?;
        let q = p.pow(e);
        if e == 1 {
            if !modulus.is_empty() {
                return Err(Error::InvalidField("prime fields take an empty modulus".into()));
            }
        } else {
            if modulus.len() != e as usize + 1 {
                return Err(Error::InvalidField(format!(
                    "modulus needs {} coefficients, got {}",
                    e + 1,
                    modulus.len()
                )));
            }
            if modulus.iter().any(|&c| c >= p) {
                return Err(Error::InvalidField("modulus coefficient out of range".into()));
            }
            if modulus[e as usize] != 1 {
                return Err(Error::InvalidField("modulus must be monic".into()));
            }
            if !poly::is_irreducible(&modulus, p) {
                return Err(Error::InvalidField(format!(
                    "modulus {modulus:?} is reducible over GF({p})"
                )));
            }
        }
        let mut spec = FieldSpec { p, e, q, modulus, mul: Mul::Poly, add_table: None };
        if e == 1 {
            spec.mul = Mul::Prime;
        }
        if p != 2 && e > 1 && q <= ADD_TABLE_LIMIT {
            let mut t = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = spec.add_digits(a, b);
                }
            }
            spec.add_table = Some(t);
        }
        if q > 2 && q <= TABLE_LIMIT {
            let g = find_generator(&spec);
            let mut log = vec![0u32; q as usize];
            // exp is doubled so log a + log b never needs a reduction
            let mut exp = vec![0u32; 2 * (q as usize - 1)];
            let mut acc = 1;
            for i in 0..(q - 1) {
                exp[i as usize] = acc;
                exp[(i + q - 1) as usize] = acc;
                log[acc as usize] = i;
                acc = spec.mul(acc, g);
            }
            spec.mul = Mul::Tables { log, exp };
        }
        Ok(Field(Arc::new(spec)))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    pub fn elem(&self, value: u32) -> Result<FieldElement> {
        if value >= self.q {
            return Err(Error::InvalidArgument(format!("{value} is not an element of GF({})", self.q)));
        }
        Ok(FieldElement { value, field: self.clone() })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { value: 0, field: self.clone() }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { value: 1, field: self.clone() }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |v| FieldElement { value: v, field: self.clone() })
    }
}

fn check_size(p: u32, e: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    if e == 0 {
        return Err(Error::InvalidField("extension degree must be at least 1".into()));
    }
    match p.checked_pow(e) {
        Some(q) if q <= MAX_Q => Ok(()),
        _ => Err(Error::InvalidField(format!("{p}^{e} exceeds 2^16"))),
    }
}

pub(crate) fn split_prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

fn find_generator(spec: &FieldSpec) -> u32 {
    let order = spec.q - 1;
    let factors = prime_factors(order);
    (1..spec.q)
        .find(|&g| factors.iter().all(|&r| spec.pow(g, (order / r) as u64) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q=p^e;mod=c0,...,ce`, `q=p^e` (default modulus) and `q=N`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        let mut order = None;
        let mut modulus = None;
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad field token `{part}`")))?;
            match key.trim() {
                "q" => order = Some(val.trim().to_string()),
                "mod" => {
                    let coeffs: std::result::Result<Vec<u32>, _> = val
                        .split(',')
                        .map(str::trim)
                        .filter(|c| !c.is_empty())
                        .map(str::parse)
                        .collect();
                    modulus = Some(coeffs.map_err(|e| Error::Parse(format!("modulus: {e}")))?);
                }
                other => return Err(Error::Parse(format!("unknown field key `{other}`"))),
            }
        }
        let order = order.ok_or_else(|| Error::Parse(format!("field literal `{s}` has no q")))?;
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("field order: {e}")));
        let (p, e) = match order.split_once('^') {
            Some((p, e)) => (parse(p)?, parse(e)?),
            None => split_prime_power(parse(&order)?)
                .ok_or_else(|| Error::InvalidField(format!("{order} is not a prime power")))?,
        };
        match modulus {
            Some(m) => Field::with_modulus(p, e, m),
            None => Field::new(p, e),
        }
    }
}

/// A field element together with the field it lives in.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    value: u32,
    field: Field,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.value, self.field.q)
    }
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn with(&self, value: u32) -> FieldElement {
        FieldElement { value, field: self.field.clone() }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field.inv(self.value).map(|v| self.with(v)).ok_or(Error::DivisionByZero)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}
