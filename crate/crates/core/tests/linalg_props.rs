mod common;

use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankgeo::linalg::for_each_vector;
use rankgeo::{corpus, enumerate_subspaces, gaussian_binomial, Mat, Subspace};

use common::{brute_dim, brute_rank, gf, span_set};

fn arb_mat(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (u32, Mat)> {
    (prop_oneof![Just(2u32), Just(3u32)], 1..=max_rows, 1..=max_cols, any::<u64>()).prop_map(|(q, r, c, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (q, corpus::random_matrix(&mut rng, &gf(q), r, c))
    })
}

fn all_subspaces(q: u32, n: usize) -> Vec<Subspace> {
    (0..=n).flat_map(|t| enumerate_subspaces(&gf(q), n, t)).collect()
}

fn vectors_of(s: &Subspace) -> HashSet<Vec<u32>> {
    span_set(s.field().q(), s.ambient(), &s.basis_vectors())
}

#[test]
fn sixty_seven_subspaces_of_gf2_4() {
    let all = all_subspaces(2, 4);
    assert_eq!(all.len(), 67);
    assert_eq!(all_subspaces(2, 3).len(), 16);
    for v in &all {
        assert_eq!(&v.orthogonal_complement().orthogonal_complement(), v);
    }
}

#[test]
fn complement_is_an_inclusion_reversing_involution() {
    for (q, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)] {
        let all = all_subspaces(q, n);
        let perps: Vec<Subspace> = all.iter().map(Subspace::orthogonal_complement).collect();
        for (v, p) in all.iter().zip(&perps) {
            assert_eq!(v.dim() + p.dim(), n);
            assert_eq!(&p.orthogonal_complement(), v);
            // oracle: every vector orthogonal to the basis of v
            let orth: HashSet<Vec<u32>> = common::all_vectors(q, n)
                .into_iter()
                .filter(|x| v.basis_vectors().iter().all(|b| common::dot(q, x, b) == 0))
                .collect();
            assert_eq!(vectors_of(p), orth);
        }
        for (i, v) in all.iter().enumerate() {
            for (j, w) in all.iter().enumerate() {
                if v.is_subspace_of(w).unwrap() {
                    assert!(perps[j].is_subspace_of(&perps[i]).unwrap());
                }
            }
        }
    }
}

#[test]
fn thirty_five_planes_in_gf2_4() {
    let nonzero: Vec<Vec<u32>> = common::all_vectors(2, 4).into_iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
    let mut planes = HashSet::new();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let mut s: Vec<Vec<u32>> = span_set(2, 4, &[nonzero[i].clone(), nonzero[j].clone()]).into_iter().collect();
            s.sort();
            planes.insert(s);
        }
    }
    assert_eq!(planes.len(), 35);
    assert_eq!(enumerate_subspaces(&gf(2), 4, 2).count(), 35);
    assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
    assert_eq!(enumerate_subspaces(&gf(3), 3, 1).count(), 13);
}

#[test]
fn gaussian_binomial_edges() {
    for q in [2u32, 3, 4, 5] {
        for n in 0..6usize {
            assert_eq!(gaussian_binomial(n, 0, q), BigUint::from(1u32));
            assert_eq!(gaussian_binomial(n, n + 1, q), BigUint::from(0u32));
            let points = (BigUint::from(q).pow(n as u32) - 1u32) / (q - 1);
            assert_eq!(gaussian_binomial(n, 1, q), points);
        }
    }
}

#[test]
fn enumeration_order_is_lexicographic_in_pivots() {
    let f = gf(2);
    let pivots: Vec<Vec<usize>> = enumerate_subspaces(&f, 4, 2).map(|s| s.pivots().to_vec()).collect();
    let mut sorted = pivots.clone();
    sorted.sort();
    assert_eq!(pivots, sorted);
    let mut seen = Vec::new();
    for_each_vector(3, 2, |v| seen.push(v.to_vec()));
    assert_eq!(seen.len(), 9);
    assert!(seen.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn colspace_of_toy_x2() {
    let f = gf(2);
    let x2 = Mat::from_text(&f, "0,0,1;0,0,1;0,0,1;0,1,1").unwrap();
    let s = Subspace::colspace(&x2);
    assert_eq!(s, Subspace::span(&f, 4, &[vec![1, 1, 1, 0], vec![0, 0, 0, 1]]).unwrap());
}

proptest! {
    #[test]
    fn rank_matches_span_size((q, m) in arb_mat(5, 5)) {
        prop_assert_eq!(m.rank(), brute_rank(q, &m));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn packed_rank_on_wide_binary_matrices(rows in 1usize..6, cols in 60usize..140, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = corpus::random_matrix(&mut rng, &gf(2), rows, cols);
        prop_assert_eq!(m.rank(), brute_rank(2, &m));
    }

    #[test]
    fn subspaces_are_canonical((q, m) in arb_mat(4, 5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = corpus::random_invertible(&mut rng, m.field(), m.rows());
        let mixed = a.mul(&m).unwrap();
        let mut rows: Vec<Vec<u32>> = (0..mixed.rows()).map(|i| mixed.row(i).to_vec()).collect();
        rows.extend((0..m.rows()).map(|i| m.row(i).to_vec()));
        let s1 = Subspace::rowspace(&m);
        let s2 = Subspace::span(m.field(), m.cols(), &rows).unwrap();
        prop_assert_eq!(&s1, &s2);
        prop_assert_eq!(s1.dim(), brute_dim(q, m.cols(), &rows));
    }

    #[test]
    fn kernel_is_annihilated((q, m) in arb_mat(4, 5)) {
        let k = Subspace::kernel(&m);
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis_vectors() {
            for i in 0..m.rows() {
                prop_assert_eq!(common::dot(q, m.row(i), &v), 0);
            }
        }
        let lk = Subspace::left_kernel(&m);
        prop_assert_eq!(lk.dim() + m.rank(), m.rows());
    }

    #[test]
    fn modular_dimension_identity(seed in any::<u64>(), da in 0usize..=6, db in 0usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = gf(2);
        let a = Subspace::rowspace(&corpus::random_matrix(&mut rng, &f, da.max(1), 6));
        let b = Subspace::rowspace(&corpus::random_matrix(&mut rng, &f, db.max(1), 6));
        let sum = a.sum(&b).unwrap();
        let cap = a.intersection(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), sum.dim() + cap.dim());
        let (va, vb) = (vectors_of(&a), vectors_of(&b));
        let oracle: HashSet<Vec<u32>> = va.intersection(&vb).cloned().collect();
        prop_assert_eq!(vectors_of(&cap), oracle);
        prop_assert!(a.is_subspace_of(&sum).unwrap() && cap.is_subspace_of(&b).unwrap());
    }

    #[test]
    fn inverse_is_two_sided((_q, m) in arb_mat(4, 4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = m.rows();
        let a = corpus::random_invertible(&mut rng, m.field(), n);
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), Mat::identity(m.field(), n));
        prop_assert_eq!(inv.mul(&a).unwrap(), Mat::identity(m.field(), n));
    }
}
