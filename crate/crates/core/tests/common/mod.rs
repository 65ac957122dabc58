//! Brute-force oracles over prime fields, independent of the library's elimination code.
#![allow(dead_code)]

use std::collections::HashSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankgeo::codes::MatrixRankCode;
use rankgeo::{corpus, Field, Mat};

/// Every vector in the span of `vectors` over `GF(p)`, grown one generator at a time.
pub fn span_set(p: u32, len: usize, vectors: &[Vec<u32>]) -> HashSet<Vec<u32>> {
    let mut out: HashSet<Vec<u32>> = HashSet::from([vec![0u32; len]]);
    for row in vectors {
        if out.contains(row) {
            continue;
        }
        let current: Vec<Vec<u32>> = out.iter().cloned().collect();
        for v in current {
            for a in 1..p {
                out.insert(v.iter().zip(row).map(|(&x, &y)| (x + a * y) % p).collect());
            }
        }
    }
    out
}

fn ilog(p: u32, mut size: usize) -> usize {
    let mut r = 0;
    while size > 1 {
        size /= p as usize;
        r += 1;
    }
    r
}

/// Rank of a matrix over `GF(p)` as `log_p` of the size of its row space.
pub fn brute_rank(p: u32, m: &Mat) -> usize {
    let rows: Vec<Vec<u32>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    ilog(p, span_set(p, m.cols(), &rows).len())
}

pub fn brute_dim(p: u32, len: usize, vectors: &[Vec<u32>]) -> usize {
    ilog(p, span_set(p, len, vectors).len())
}

/// All elements of `GF(p)^n`.
pub fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn dot(p: u32, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| (acc + x * y) % p)
}

/// `sum_i u_i B_i` over `GF(p)`.
pub fn combine(p: u32, basis: &[Mat], u: &[u32]) -> Vec<u32> {
    let len = basis.first().map_or(0, |b| b.data().len());
    let mut out = vec![0; len];
    for (b, &a) in basis.iter().zip(u) {
        for (x, &y) in out.iter_mut().zip(b.data()) {
            *x = (*x + a * y) % p;
        }
    }
    out
}

/// Rank distribution by enumerating `GF(p)^k` and ranking through [`brute_rank`].
pub fn brute_rank_distribution(c: &MatrixRankCode) -> Vec<u64> {
    let p = c.field().q();
    let mut counts = vec![0u64; c.m().min(c.n()) + 1];
    for u in all_vectors(p, c.k()) {
        let m = Mat::from_vec(c.field(), c.m(), c.n(), combine(p, c.basis(), &u)).unwrap();
        counts[brute_rank(p, &m)] += 1;
    }
    counts
}

pub fn gf(q: u32) -> Field {
    Field::of_order(q).unwrap()
}

/// Small random codes over `GF(2)` or `GF(3)`, seeded.
pub fn arb_code(nondegenerate: bool) -> impl Strategy<Value = MatrixRankCode> {
    (prop_oneof![Just(2u32), Just(3u32)], 1usize..=3, 1usize..=3, 1usize..=4, any::<u64>()).prop_filter_map(
        "no code with these parameters",
        move |(q, m, n, k, seed)| {
            let k = k.min(m * n);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            corpus::random_code(&mut rng, &gf(q), m, n, k, nondegenerate, 200).ok()
        },
    )
}

pub fn arb_code_with_transforms() -> impl Strategy<Value = (MatrixRankCode, Mat, Mat)> {
    (arb_code(false), any::<u64>()).prop_map(|(c, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = corpus::random_invertible(&mut rng, c.field(), c.m());
        let b = corpus::random_invertible(&mut rng, c.field(), c.n());
        (c, a, b)
    })
}
