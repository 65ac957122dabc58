//! Matrix rank-metric codes, their column and row systems, and exact
//! verifiers for the counting identities that connect them.

pub mod error;
pub mod gf;
pub mod linalg;
pub mod tensor;
pub mod codes;
pub mod corpus;
pub mod geometry;
pub mod identities;
pub mod extension;
pub mod io;
pub mod cli;

use std::fmt;
use std::str::FromStr;

pub use error::{Error, Result};
pub use gf::{ExtensionBasis, Field, FieldElement, FieldSpec};
pub use linalg::{enumerate_subspaces, gaussian_binomial, Mat, Subspace};

/// Row or column side of a matrix code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Row,
    Column,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Row => Side::Column,
            Side::Column => Side::Row,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Row => "row",
            Side::Column => "column",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s {
            "row" => Ok(Side::Row),
            "col" | "column" => Ok(Side::Column),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

/// Caps on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest `q^k` for which all codewords are enumerated.
    pub max_vectors: u64,
    /// Largest Gaussian binomial for which all subspaces are enumerated.
    pub max_subspaces: u64,
}

impl Default for Guards {
    fn default() -> Guards {
        Guards { max_vectors: 1 << 26, max_subspaces: 1 << 22 }
    }
}

impl Guards {
    pub(crate) fn vectors(&self, what: &'static str, q: u32, k: usize) -> Result<()> {
        let size = num_bigint::BigUint::from(q).pow(k as u32);
        if size > num_bigint::BigUint::from(self.max_vectors) {
            return Err(Error::EnumerationTooLarge { what, size: size.to_string(), cap: self.max_vectors });
        }
        Ok(())
    }

    pub(crate) fn subspaces(&self, what: &'static str, n: usize, t: usize, q: u32) -> Result<()> {
        let size = gaussian_binomial(n, t, q);
        if size > num_bigint::BigUint::from(self.max_subspaces) {
            return Err(Error::EnumerationTooLarge { what, size: size.to_string(), cap: self.max_subspaces });
        }
        Ok(())
    }
}
