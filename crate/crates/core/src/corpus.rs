//! Built-in instances and seeded random generators.

use rand::Rng;

use crate::codes::MatrixRankCode;
use crate::error::{Error, Result};
use crate::gf::{ExtensionBasis, Field};
use crate::linalg::Mat;
use crate::tensor::Tensor3;
use crate::Side;

const TOY: [&str; 4] = ["1,0,0;0,0,0;1,1,0", "0,0,1;0,0,0;1,1,1", "0,0,0;1,0,0;0,1,1", "0,0,0;0,1,0;1,1,1"];

/// The `[3x3, 4, 2]` binary code spanned by four fixed matrices.
pub fn toy_code() -> MatrixRankCode {
    let f = Field::new(2, 1).expect("GF(2)");
    let basis = TOY.iter().map(|s| Mat::from_text(&f, s).expect("literal")).collect();
    MatrixRankCode::new(&f, 3, 3, basis).expect("independent")
}

pub fn toy_tensor() -> Tensor3 {
    toy_code().generator_tensor()
}

/// `[n x n, n, n]` code of the multiplication maps of `GF(q^n)` over `GF(q)`.
pub fn spread_code(q: u32, n: usize) -> Result<MatrixRankCode> {
    let base = Field::of_order(q)?;
    let ext = ExtensionBasis::standard(&base, n)?;
    let basis = ext.gamma().iter().map(|&g| ext.mult_matrix_value(g)).collect();
    MatrixRankCode::new(&base, n, n, basis)
}

pub fn random_matrix<R: Rng>(rng: &mut R, field: &Field, rows: usize, cols: usize) -> Mat {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..field.q())).collect();
    Mat::from_vec(field, rows, cols, data).expect("entries in range")
}

pub fn random_invertible<R: Rng>(rng: &mut R, field: &Field, n: usize) -> Mat {
    loop {
        let m = random_matrix(rng, field, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_tensor<R: Rng>(rng: &mut R, field: &Field, shape: [usize; 3]) -> Tensor3 {
    let data = (0..shape.iter().product::<usize>()).map(|_| rng.gen_range(0..field.q())).collect();
    Tensor3::from_vec(field, shape, data).expect("entries in range")
}

/// Rejection-sample a `k`-dimensional `m x n` code, optionally requiring
/// both nondegeneracy conditions.
pub fn random_code<R: Rng>(
    rng: &mut R,
    field: &Field,
    m: usize,
    n: usize,
    k: usize,
    nondegenerate: bool,
    max_attempts: usize,
) -> Result<MatrixRankCode> {
    if k > m * n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds m n = {}", m * n)));
    }
    for _ in 0..max_attempts {
        let t = random_tensor(rng, field, [k, m, n]);
        let Ok(code) = MatrixRankCode::from_tensor(&t) else {
            continue;
        };
        if !nondegenerate || (code.is_nondegenerate(Side::Row) && code.is_nondegenerate(Side::Column)) {
            return Ok(code);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no suitable [{m}x{n}, {k}] code over GF({}) in {max_attempts} draws",
        field.q()
    )))
}
