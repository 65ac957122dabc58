//! A degree-`m` extension `F / K` together with a chosen `K`-basis of `F`.

use std::collections::HashMap;
use std::fmt;

use super::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// `F / K` with basis `gamma`; `K` is embedded in `F` through the smallest root
/// of its defining modulus.
#[derive(Clone)]
pub struct ExtensionBasis {
    base: Field,
    ext: Field,
    m: usize,
    gamma: Vec<u32>,
    dual: Vec<u32>,
    embed: Vec<u32>,
    unembed: HashMap<u32, u32>,
    coords: Vec<u32>,
}

impl fmt::Debug for ExtensionBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtensionBasis")
            .field("base", &self.base)
            .field("ext", &self.ext)
            .field("gamma", &self.gamma)
            .finish()
    }
}

impl PartialEq for ExtensionBasis {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.ext == other.ext && self.gamma == other.gamma
    }
}

impl Eq for ExtensionBasis {}

fn embedding(base: &Field, ext: &Field) -> Result<Vec<u32>> {
    let p = base.p();
    if base.e() == 1 {
        return Ok((0..p).collect());
    }
    let modulus = base.modulus();
    let eval = |x: u32| {
        modulus.iter().rev().fold(0u32, |acc, &c| ext.add(ext.mul(acc, x), c))
    };
    let root = (0..ext.q())
        .find(|&x| eval(x) == 0)
        .ok_or_else(|| Error::InvalidBasis("base field modulus has no root in the extension".into()))?;
    let e = base.e() as usize;
    let powers: Vec<u32> = (0..e).map(|i| ext.pow(root, i as u64)).collect();
    Ok((0..base.q())
        .map(|a| {
            let mut v = a;
            let mut acc = 0;
            for &pw in &powers {
                acc = ext.add(acc, ext.mul(v % p, pw));
                v /= p;
            }
            acc
        })
        .collect())
}

impl ExtensionBasis {
    pub fn new(base: &Field, ext: &Field, gamma: Vec<u32>) -> Result<ExtensionBasis> {
        if base.p() != ext.p() || !ext.e().is_multiple_of(base.e()) {
            return Err(Error::InvalidBasis(format!("GF({}) is not an extension of GF({})", ext.q(), base.q())));
        }
        let m = (ext.e() / base.e()) as usize;
        if gamma.len() != m {
            return Err(Error::InvalidBasis(format!("need {m} basis elements, got {}", gamma.len())));
        }
        if let Some(g) = gamma.iter().find(|&&g| g >= ext.q()) {
            return Err(Error::InvalidBasis(format!("{g} is not an element of GF({})", ext.q())));
        }
        let embed = embedding(base, ext)?;
        let unembed: HashMap<u32, u32> = embed.iter().enumerate().map(|(a, &v)| (v, a as u32)).collect();
        let q = base.q() as usize;
        let size = ext.q() as usize;
        let mut coords = vec![0u32; size * m];
        let mut seen = vec![false; size];
        let mut c = vec![0u32; m];
        for idx in 0..size {
            let mut rest = idx;
            for slot in c.iter_mut() {
                *slot = (rest % q) as u32;
                rest /= q;
            }
            let v = c
                .iter()
                .zip(&gamma)
                .fold(0, |acc, (&ci, &g)| ext.add(acc, ext.mul(embed[ci as usize], g)));
            if seen[v as usize] {
                return Err(Error::InvalidBasis("elements are linearly dependent over the base field".into()));
            }
            seen[v as usize] = true;
            coords[v as usize * m..(v as usize + 1) * m].copy_from_slice(&c);
        }
        let mut basis = ExtensionBasis {
            base: base.clone(),
            ext: ext.clone(),
            m,
            gamma,
            dual: Vec::new(),
            embed,
            unembed,
            coords,
        };
        basis.dual = basis.compute_dual();
        Ok(basis)
    }

    /// `F = GF(p^(e m))` with its default modulus and the power basis `1, x, ..., x^(m-1)`.
    pub fn standard(base: &Field, m: usize) -> Result<ExtensionBasis> {
        if m == 0 {
            return Err(Error::InvalidBasis("extension degree must be at least 1".into()));
        }
        let ext = Field::new(base.p(), base.e() * m as u32)?;
        let x = ext.x();
        let gamma = (0..m).map(|i| ext.pow(x, i as u64)).collect();
        ExtensionBasis::new(base, &ext, gamma)
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn gamma(&self) -> &[u32] {
        &self.gamma
    }

    /// Trace-dual basis: `Tr(gamma_i * dual_j) = [i == j]`.
    pub fn dual_basis(&self) -> &[u32] {
        &self.dual
    }

    /// Image of a base-field element in `F`.
    pub fn embed(&self, a: u32) -> u32 {
        self.embed[a as usize]
    }

    /// Inverse of [`embed`](Self::embed) on its image.
    pub fn restrict(&self, a: u32) -> Option<u32> {
        self.unembed.get(&a).copied()
    }

    /// Coordinates of `a` with respect to `gamma`.
    pub fn coordinates(&self, a: u32) -> &[u32] {
        &self.coords[a as usize * self.m..(a as usize + 1) * self.m]
    }

    /// `sum c_i gamma_i`.
    pub fn recombine(&self, c: &[u32]) -> u32 {
        self.combine(c, &self.gamma)
    }

    /// `sum c_i dual_i`.
    pub fn recombine_dual(&self, c: &[u32]) -> u32 {
        self.combine(c, &self.dual)
    }

    fn combine(&self, c: &[u32], basis: &[u32]) -> u32 {
        let f = &self.ext;
        c.iter().zip(basis).fold(0, |acc, (&ci, &g)| f.add(acc, f.mul(self.embed(ci), g)))
    }

    /// `Tr_{F/K}(a)` as a base-field element.
    pub fn trace(&self, a: u32) -> u32 {
        let f = &self.ext;
        let q = self.base.q() as u64;
        let mut x = a;
        let mut acc = 0;
        for _ in 0..self.m {
            acc = f.add(acc, x);
            x = f.pow(x, q);
        }
        self.restrict(acc).expect("trace lies in the base field")
    }

    fn compute_dual(&self) -> Vec<u32> {
        let m = self.m;
        let f = &self.ext;
        let mut data = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                data.push(self.trace(f.mul(self.gamma[i], self.gamma[j])));
            }
        }
        let gram = Mat::from_parts(&self.base, m, m, data);
        // separable extension: the trace form is nondegenerate
        let inv = gram.inverse().expect("trace form is nondegenerate");
        (0..m).map(|j| self.recombine(inv.row(j))).collect()
    }

    fn check(&self, a: &FieldElement) -> Result<u32> {
        if a.field() == &self.ext {
            Ok(a.value())
        } else {
            Err(Error::MixedFields)
        }
    }

    /// `m x n` matrix whose column `j` is the coordinate vector of `v_j`.
    pub fn gamma_expand(&self, v: &[FieldElement]) -> Result<Mat> {
        let vals: Result<Vec<u32>> = v.iter().map(|a| self.check(a)).collect();
        Ok(self.expand_values(&vals?))
    }

    /// Raw-value form of [`gamma_expand`](Self::gamma_expand).
    pub fn expand_values(&self, v: &[u32]) -> Mat {
        let n = v.len();
        let mut out = Mat::zeros(&self.base, self.m, n);
        for (j, &a) in v.iter().enumerate() {
            for (i, &c) in self.coordinates(a).iter().enumerate() {
                out.set(i, j, c);
            }
        }
        out
    }

    /// Inverse of [`expand_values`](Self::expand_values).
    pub fn collapse(&self, m: &Mat) -> Result<Vec<u32>> {
        if m.rows() != self.m || m.field() != &self.base {
            return Err(Error::ShapeMismatch(format!("expected an {}-row matrix over the base field", self.m)));
        }
        Ok((0..m.cols()).map(|j| self.recombine(&m.column(j))).collect())
    }

    /// Matrix of `x -> x a` in row-coordinate convention: row `i` holds the
    /// coordinates of `gamma_i a`.
    pub fn mult_matrix(&self, a: &FieldElement) -> Result<Mat> {
        Ok(self.mult_matrix_value(self.check(a)?))
    }

    pub fn mult_matrix_value(&self, a: u32) -> Mat {
        let m = self.m;
        let mut data = Vec::with_capacity(m * m);
        for &g in &self.gamma {
            data.extend_from_slice(self.coordinates(self.ext.mul(g, a)));
        }
        Mat::from_parts(&self.base, m, m, data)
    }

    /// Vertical stack of the transposed multiplication matrices of `v_1, ..., v_k`.
    pub fn nu_gamma(&self, v: &[FieldElement]) -> Result<Mat> {
        let vals: Result<Vec<u32>> = v.iter().map(|a| self.check(a)).collect();
        Ok(self.nu_gamma_values(&vals?))
    }

    pub fn nu_gamma_values(&self, v: &[u32]) -> Mat {
        let m = self.m;
        if v.is_empty() {
            return Mat::zeros(&self.base, 0, m);
        }
        let blocks: Vec<Mat> = v.iter().map(|&a| self.mult_matrix_value(a).transpose()).collect();
        Mat::vstack(&blocks).expect("blocks share a shape")
    }
}
