//! JSON documents for codes, tensors, systems and additive codes.
//!
//! Matrices are strings in the `"a,b,c;d,e,f"` row format, rows separated by `;`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::codes::MatrixRankCode;
use crate::error::{Error, Result};
use crate::extension::AdditiveHammingCode;
use crate::geometry::{ColumnSystem, RowSystem};
use crate::gf::{ExtensionBasis, Field};
use crate::linalg::Mat;
use crate::tensor::Tensor3;
use crate::Side;

/// Shared schema of codes and systems: a basis of `shape[0] x shape[1]` matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub kind: String,
    pub field: String,
    pub shape: [usize; 2],
    pub k: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDoc {
    pub kind: String,
    pub field: String,
    pub shape: [usize; 3],
    pub slices_axis1: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditiveDoc {
    pub kind: String,
    pub side: Side,
    pub field: String,
    pub alphabet: String,
    /// Values of `gamma_1, ..., gamma_s` in the alphabet.
    pub basis: Vec<u32>,
    pub length: usize,
    pub kdim: usize,
    /// Generator over the alphabet, entries as element values.
    pub generator: String,
    /// Generator with every entry replaced by its Γ-coordinates.
    pub expanded: String,
}

fn basis_doc(kind: &str, c: &MatrixRankCode) -> SpaceDoc {
    SpaceDoc {
        kind: kind.into(),
        field: c.field().literal(),
        shape: [c.m(), c.n()],
        k: c.k(),
        basis: c.basis().iter().map(Mat::to_text).collect(),
    }
}

pub fn code_doc(c: &MatrixRankCode) -> SpaceDoc {
    basis_doc("code", c)
}

pub fn column_system_doc(s: &ColumnSystem) -> SpaceDoc {
    basis_doc("column-system", s.matrix_space())
}

pub fn row_system_doc(t: &RowSystem) -> SpaceDoc {
    basis_doc("row-system", t.matrix_space())
}

pub fn tensor_doc(t: &Tensor3) -> TensorDoc {
    TensorDoc {
        kind: "tensor".into(),
        field: t.field().literal(),
        shape: t.shape(),
        slices_axis1: t.slices(1).expect("axis 1").iter().map(Mat::to_text).collect(),
    }
}

pub fn additive_doc(h: &AdditiveHammingCode) -> AdditiveDoc {
    AdditiveDoc {
        kind: "additive-code".into(),
        side: h.side,
        field: h.base().literal(),
        alphabet: h.alphabet().literal(),
        basis: h.basis.gamma().to_vec(),
        length: h.length,
        kdim: h.kdim,
        generator: h.generator.to_text(),
        expanded: h.expanded_generator().to_text(),
    }
}

fn parse_mats(field: &Field, rows: usize, cols: usize, texts: &[String]) -> Result<Vec<Mat>> {
    texts
        .iter()
        .map(|s| {
            let m = Mat::from_text(field, s)?;
            if m.shape() != (rows, cols) && !(rows * cols == 0 && m.shape() == (0, 0)) {
                return Err(Error::ShapeMismatch(format!(
                    "matrix `{s}` is {}x{}, expected {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(if m.shape() == (rows, cols) { m } else { Mat::zeros(field, rows, cols) })
        })
        .collect()
}

impl SpaceDoc {
    fn parts(&self) -> Result<(Field, Vec<Mat>)> {
        let field: Field = self.field.parse()?;
        if self.basis.len() != self.k {
            return Err(Error::Parse(format!("k = {} but {} basis matrices", self.k, self.basis.len())));
        }
        let mats = parse_mats(&field, self.shape[0], self.shape[1], &self.basis)?;
        Ok((field, mats))
    }

    fn expect_kind(&self, kind: &str) -> Result<()> {
        if self.kind != kind {
            return Err(Error::Parse(format!("expected a `{kind}` document, got `{}`", self.kind)));
        }
        Ok(())
    }

    pub fn to_code(&self) -> Result<MatrixRankCode> {
        self.expect_kind("code")?;
        let (field, mats) = self.parts()?;
        MatrixRankCode::new(&field, self.shape[0], self.shape[1], mats)
    }

    pub fn to_column_system(&self) -> Result<ColumnSystem> {
        self.expect_kind("column-system")?;
        let (field, mats) = self.parts()?;
        ColumnSystem::new(&field, self.shape[0], self.shape[1], mats)
    }

    pub fn to_row_system(&self) -> Result<RowSystem> {
        self.expect_kind("row-system")?;
        let (field, mats) = self.parts()?;
        RowSystem::new(&field, self.shape[0], self.shape[1], mats)
    }
}

impl TensorDoc {
    pub fn to_tensor(&self) -> Result<Tensor3> {
        let field: Field = self.field.parse()?;
        let [k, m, n] = self.shape;
        if self.slices_axis1.len() != k {
            return Err(Error::Parse(format!("shape says k = {k} but {} slices given", self.slices_axis1.len())));
        }
        let mats = parse_mats(&field, m, n, &self.slices_axis1)?;
        let mut t = Tensor3::from_slices(&field, m, n, &mats)?;
        if k == 0 {
            t = Tensor3::zeros(&field, [0, m, n]);
        }
        Ok(t)
    }
}

impl AdditiveDoc {
    pub fn to_code(&self) -> Result<AdditiveHammingCode> {
        let base: Field = self.field.parse()?;
        let ext: Field = self.alphabet.parse()?;
        let basis = ExtensionBasis::new(&base, &ext, self.basis.clone())?;
        let generator = Mat::from_text(&ext, &self.generator)?;
        let generator = if generator.shape() == (0, 0) { Mat::zeros(&ext, self.kdim, self.length) } else { generator };
        if generator.shape() != (self.kdim, self.length) {
            return Err(Error::ShapeMismatch("generator does not match kdim x length".into()));
        }
        Ok(AdditiveHammingCode { side: self.side, length: self.length, kdim: self.kdim, basis, generator })
    }
}

/// Read a code from a `code` or `tensor` document.
pub fn parse_code(text: &str) -> Result<MatrixRankCode> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let kind = v.get("kind").and_then(Value::as_str).unwrap_or("code").to_string();
    match kind.as_str() {
        "code" => {
            let d: SpaceDoc = serde_json::from_value(with_kind(v, "code")).map_err(|e| Error::Parse(e.to_string()))?;
            d.to_code()
        }
        "tensor" => {
            let d: TensorDoc = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            MatrixRankCode::from_tensor(&d.to_tensor()?)
        }
        other => Err(Error::Parse(format!("cannot read a code from a `{other}` document"))),
    }
}

fn with_kind(mut v: Value, kind: &str) -> Value {
    if let Value::Object(map) = &mut v {
        map.entry("kind").or_insert_with(|| Value::String(kind.into()));
    }
    v
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn to_json_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}
