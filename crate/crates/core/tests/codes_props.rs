mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankgeo::codes::MatrixRankCode;
use rankgeo::tensor::Tensor3;
use rankgeo::{corpus, enumerate_subspaces, Guards, Mat, Side, Subspace};

use common::{arb_code, arb_code_with_transforms, brute_dim, brute_rank_distribution, gf};

fn arb_tensor() -> impl Strategy<Value = Tensor3> {
    (prop_oneof![Just(2u32), Just(3u32)], 1usize..=3, 1usize..=3, 1usize..=3, any::<u64>()).prop_map(|(q, k, m, n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        corpus::random_tensor(&mut rng, &gf(q), [k, m, n])
    })
}

/// Slice along `axis` after multiplying axis `j` by `a`, computed with matrix products.
fn transformed_slice(s: &Mat, axis: usize, j: usize, a: &Mat) -> Mat {
    // the slice's row index is the lower remaining axis, its column index the higher one
    let remaining: Vec<usize> = (1..=3).filter(|&x| x != axis).collect();
    if j == remaining[0] {
        a.transpose().mul(s).unwrap()
    } else {
        s.mul(a).unwrap()
    }
}

fn g() -> Guards {
    Guards::default()
}

#[test]
fn toy_shortening_example() {
    let c = corpus::toy_code();
    let s = rankgeo::geometry::column_system(&c.generator_tensor()).unwrap();
    let perp = Subspace::span(c.field(), 4, &[vec![1, 0, 1, 0]]).unwrap().orthogonal_complement();
    let short = s.matrix_space().shorten(&perp, Side::Column).unwrap();
    assert_eq!(short.k(), 1);
    assert_eq!(short.basis()[0], s.basis()[1]);
}

#[test]
fn padded_toy_embeds_back() {
    let c = corpus::toy_code();
    let f = c.field().clone();
    let padded: Vec<Mat> = c
        .basis()
        .iter()
        .map(|b| {
            let mut m = Mat::zeros(&f, 3, 4);
            for i in 0..3 {
                for j in 0..3 {
                    m.set(i, j, b.get(i, j));
                }
            }
            m
        })
        .collect();
    let p = MatrixRankCode::new(&f, 3, 4, padded).unwrap();
    assert!(!p.is_nondegenerate(Side::Column));
    let (e, emb) = p.embed_nondegenerate().unwrap();
    assert_eq!((e.m(), e.n(), emb.rows, emb.cols), (3, 3, 3, 3));
    assert_eq!(e.rank_distribution(&g()).unwrap().counts, vec![1, 0, 11, 4]);
}

#[test]
fn random_pair_preserves_toy_distribution() {
    let c = corpus::toy_code();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let a = corpus::random_invertible(&mut rng, c.field(), 3);
        let b = corpus::random_invertible(&mut rng, c.field(), 3);
        let e = c.apply_equivalence(&a, &b).unwrap();
        assert_eq!(e.rank_distribution(&g()).unwrap().counts, vec![1, 0, 11, 4]);
    }
}

#[test]
fn support_distribution_of_toy() {
    let c = corpus::toy_code();
    let d = c.support_distribution(1, Side::Row, &g()).unwrap();
    let total: u64 = d.counts.iter().enumerate().map(|(r, &a)| a * ((1u64 << (3 - r)) - 1)).sum();
    assert_eq!(total, 11);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn slice_space_dimension(t in arb_tensor()) {
        let q = t.field().q();
        for axis in 1..=3 {
            let slices = t.slices(axis).unwrap();
            let flat: Vec<Vec<u32>> = slices.iter().map(|s| s.data().to_vec()).collect();
            let len = slices[0].data().len();
            let dim = t.slice_space(axis).unwrap().dim();
            prop_assert!(dim <= t.shape()[axis - 1]);
            prop_assert_eq!(dim, brute_dim(q, len, &flat));
            prop_assert_eq!(dim == slices.len(), MatrixRankCode::new(t.field(), slices[0].rows(), slices[0].cols(), slices.clone()).is_ok());
        }
    }

    #[test]
    fn mult_on_other_axes_maps_slice_spaces(t in arb_tensor(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for axis in 1..=3 {
            for j in (1..=3).filter(|&j| j != axis) {
                let a = corpus::random_invertible(&mut rng, t.field(), t.shape()[j - 1]);
                let lhs = t.mult(&a, j).unwrap().slice_space(axis).unwrap();
                let images: Vec<Vec<u32>> = t.slices(axis).unwrap().iter().map(|s| transformed_slice(s, axis, j, &a).data().to_vec()).collect();
                let rhs = Subspace::span(t.field(), images[0].len(), &images).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn mult_on_own_axis_shrinks_slice_space(t in arb_tensor(), s in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for axis in 1..=3 {
            let n = t.shape()[axis - 1];
            let a = corpus::random_matrix(&mut rng, t.field(), n, s);
            let sub = t.mult(&a, axis).unwrap().slice_space(axis).unwrap();
            let full = t.slice_space(axis).unwrap();
            prop_assert!(sub.is_subspace_of(&full).unwrap());
            let inv = corpus::random_invertible(&mut rng, t.field(), n);
            prop_assert_eq!(t.mult(&inv, axis).unwrap().slice_space(axis).unwrap(), full);
        }
    }

    #[test]
    fn rank_distribution_matches_brute_force(c in arb_code(false)) {
        let d = c.rank_distribution(&g()).unwrap();
        prop_assert_eq!(&d.counts, &brute_rank_distribution(&c));
        prop_assert_eq!(d.total(), (c.field().q() as u64).pow(c.k() as u32));
    }

    #[test]
    fn rank_distribution_is_equivalence_invariant((c, a, b) in arb_code_with_transforms()) {
        let e = c.apply_equivalence(&a, &b).unwrap();
        prop_assert_eq!(e.rank_distribution(&g()).unwrap(), c.rank_distribution(&g()).unwrap());
    }

    #[test]
    fn one_dimensional_subcodes_count_ranks(c in arb_code(false)) {
        let q = c.field().q() as u64;
        let d = c.rank_distribution(&g()).unwrap();
        for side in [Side::Row, Side::Column] {
            let s = c.support_distribution(1, side, &g()).unwrap();
            for r in 1..d.counts.len() {
                prop_assert_eq!(d.counts[r], (q - 1) * s.counts[r]);
            }
        }
    }

    #[test]
    fn shortening_is_monotone_and_exact(c in arb_code(false), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for side in [Side::Column, Side::Row] {
            let ambient = if side == Side::Column { c.m() } else { c.n() };
            let u = Subspace::rowspace(&corpus::random_matrix(&mut rng, c.field(), 1, ambient));
            let extra = Subspace::rowspace(&corpus::random_matrix(&mut rng, c.field(), 1, ambient));
            let bigger = u.sum(&extra).unwrap();
            let small = c.shorten(&u, side).unwrap();
            let large = c.shorten(&bigger, side).unwrap();
            prop_assert!(small.space().is_subspace_of(large.space()).unwrap());
            // oracle: count codewords whose column (row) space lies in u
            let mut count = 0u64;
            c.for_each_codeword(&g(), |_, m| {
                let sp = if side == Side::Column { Subspace::colspace(m) } else { Subspace::rowspace(m) };
                if sp.is_subspace_of(&u).unwrap() {
                    count += 1;
                }
            }).unwrap();
            prop_assert_eq!(count, (c.field().q() as u64).pow(small.k() as u32));
        }
    }

    #[test]
    fn embedding_preserves_distance(c in arb_code(false)) {
        let (e, _) = c.embed_nondegenerate().unwrap();
        prop_assert!(e.is_nondegenerate(Side::Row) && e.is_nondegenerate(Side::Column));
        prop_assert_eq!(e.min_distance(&g()).unwrap(), c.min_distance(&g()).unwrap());
        let (de, dc) = (e.rank_distribution(&g()).unwrap().counts, c.rank_distribution(&g()).unwrap().counts);
        prop_assert_eq!(&de[..], &dc[..de.len()]);
        prop_assert!(dc[de.len()..].iter().all(|&a| a == 0));
        prop_assert_eq!(e.m(), c.support(Side::Column).dim());
        prop_assert_eq!(e.n(), c.support(Side::Row).dim());
    }

    #[test]
    fn subcode_support_dimension_bounds(c in arb_code(false)) {
        for t in 0..=c.k() {
            for u in enumerate_subspaces(c.field(), c.k(), t).take(20) {
                let r = c.subcode_support(&u, Side::Row).unwrap().dim();
                prop_assert!(r <= c.n());
                if t > 0 {
                    prop_assert!(r >= 1);
                }
            }
        }
    }
}
