//! One PASS/FAIL line per acceptance criterion. Runs without the libtest harness.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankgeo::codes::MatrixRankCode;
use rankgeo::extension::{
    additive_generalized_weight, additive_weight_distribution, extend_hamming, transfer_weight, MProjectiveSystem,
};
use rankgeo::geometry::{self, column_system, knuth_orbit, rank_via_system, row_system, support_via_system, WeightMethod};
use rankgeo::identities::{
    self, as_i64, check_bound_sum, check_genweight_bounds, check_higher_delsarte, check_standard_eq,
    check_standard_eq_row, faithful_conditions, singleton_check, Quantity,
};
use rankgeo::linalg::for_each_vector;
use rankgeo::{corpus, ExtensionBasis, Field, Guards, Mat, Side, Subspace};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Check) -> (Check, Duration) {
    let start = Instant::now();
    let r = f();
    let took = start.elapsed();
    let r = match (r, limit) {
        (Ok(_), Some(l)) if took > l => Err(format!("took {took:?}, limit {l:?}")),
        (r, _) => r,
    };
    (r, took)
}

fn g() -> Guards {
    Guards::default()
}

fn criterion_1() -> Check {
    let t = corpus::toy_tensor();
    let c = MatrixRankCode::from_tensor(&t).map_err(|e| e.to_string())?;
    let dc = c.rank_distribution(&g()).unwrap().counts;
    ensure(dc == [1, 0, 11, 4], || format!("A(C) = {dc:?}"))?;
    let s = column_system(&t).unwrap();
    let ds = geometry::system_as_code(&s).rank_distribution(&g()).unwrap().counts;
    ensure(ds == [1, 0, 2, 5], || format!("A(S) = {ds:?}"))?;
    let r = row_system(&t).unwrap();
    let dr = r.matrix_space().rank_distribution(&g()).unwrap().counts;
    ensure(dr == [1, 0, 2, 5], || format!("A(T) = {dr:?}"))?;
    let rep = check_standard_eq(&t, &g()).unwrap();
    ensure(rep.passed && as_i64(&rep.lhs) == Some(11) && as_i64(&rep.rhs) == Some(11), || format!("{rep:?}"))?;
    let u = [1, 0, 1, 0];
    let rank = rank_via_system(&t, &u).unwrap();
    let perp = Subspace::span(t.field(), 4, &[u.to_vec()]).unwrap().orthogonal_complement();
    let cwt = s.cwt(&perp).unwrap();
    ensure(rank == 2 && cwt == 1, || format!("rank {rank}, cwt {cwt}"))?;
    Ok("A(C) = (1,0,11,4), A(S) = A(T) = (1,0,2,5), 11 = 11, rank 3 - 1 = 2".into())
}

fn criterion_2() -> Check {
    let c = corpus::toy_code();
    for side in [Side::Column, Side::Row] {
        for m in WeightMethod::ALL {
            let w = geometry::generalized_weights(&c, side, m, &g()).map_err(|e| e.to_string())?;
            ensure(w == [2, 2, 3, 3], || format!("{side} {m}: {w:?}"))?;
        }
    }
    Ok("d^c = d^r = (2,2,3,3) by subcode, shorten, system".into())
}

fn criterion_3() -> Check {
    let base = Field::new(2, 1).unwrap();
    let b = ExtensionBasis::standard(&base, 2).unwrap();
    let f = b.ext().clone();
    let alpha = f.x();
    let expected = [(1, "1,0;0,1"), (alpha, "0,1;1,1"), (f.mul(alpha, alpha), "1,1;1,0")];
    for (a, text) in expected {
        let m = b.mult_matrix_value(a);
        ensure(m == Mat::from_text(&base, text).unwrap(), || format!("M({a}) = {}", m.to_text()))?;
    }
    let nu = b.nu_gamma_values(&[1, alpha]);
    ensure(nu == Mat::from_text(&base, "1,0;0,1;0,1;1,1").unwrap(), || format!("nu(1, a) = {}", nu.to_text()))?;
    Ok("M(1), M(a), M(a^2) and nu(1, a) match".into())
}

/// Seeded nondegenerate codes over `q in {2, 3}`, `m, n <= 3`, `k <= 4`.
fn random_corpus(count: usize, seed: u64) -> Vec<MatrixRankCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let q = if rng.gen_bool(0.5) { 2 } else { 3 };
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let k = rng.gen_range(1..=4usize).min(m * n);
        if let Ok(c) = corpus::random_code(&mut rng, &common::gf(q), m, n, k, true, 50) {
            out.push(c);
        }
    }
    out
}

fn criterion_4(codes: &[MatrixRankCode]) -> Check {
    let mut count = 0;
    for c in codes {
        let t = c.generator_tensor();
        let mut reports = vec![
            check_standard_eq(&t, &g()),
            check_standard_eq_row(&t, &g()),
            check_bound_sum(&t, &g()),
            singleton_check(c, &g()),
            check_genweight_bounds(c, &g()),
        ];
        for side in [Side::Column, Side::Row] {
            for dim in 0..=c.k() {
                reports.push(check_higher_delsarte(&t, dim, side, &g()));
            }
        }
        for r in reports {
            let r = r.map_err(|e| e.to_string())?;
            ensure(r.passed, || format!("{} failed on {:?}", r.name, rankgeo::io::code_doc(c)))?;
            count += 1;
        }
    }
    Ok(format!("{} codes, {count} reports passed", codes.len()))
}

fn criterion_5(codes: &[MatrixRankCode]) -> Check {
    let mut all: Vec<MatrixRankCode> = codes.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..100 {
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let k = rng.gen_range(1..=4usize).min(m * n);
        if let Ok(c) = corpus::random_code(&mut rng, &common::gf(2), m, n, k, false, 50) {
            all.push(c);
        }
    }
    for (q, n) in [(2, 2), (2, 3), (3, 2), (4, 2), (2, 4)] {
        all.push(corpus::spread_code(q, n).unwrap());
    }
    let mut faithful = 0;
    for c in &all {
        let flags = faithful_conditions(&c.generator_tensor(), &g()).map_err(|e| e.to_string())?;
        ensure(flags.iter().all(|&b| b == flags[0]), || format!("flags {flags:?} on {:?}", rankgeo::io::code_doc(c)))?;
        if flags[0] {
            faithful += 1;
            let r = identities::amin_bound(c, &g()).unwrap();
            ensure(r.applicable && r.passed && r.context.get("positive") == Some(&true.into()), || format!("{r:?}"))?;
        }
    }
    let spread = corpus::spread_code(2, 2).unwrap();
    let r = identities::amin_bound(&spread, &g()).unwrap();
    let expect = Quantity::int(3);
    ensure(r.passed && r.lhs == expect && r.rhs == expect, || format!("GF(4) spread: {r:?}"))?;
    Ok(format!("{} codes agree, {faithful} faithful and positive, GF(4) spread A_2 = 3 = bound", all.len()))
}

fn criterion_6() -> Check {
    let mut sizes = Vec::new();
    for n in [2, 3] {
        let c = corpus::spread_code(2, n).unwrap();
        let orbit = knuth_orbit(&c, &g()).map_err(|e| e.to_string())?;
        for m in &orbit {
            let d = common::brute_rank_distribution(&m.code);
            let dmin = (1..d.len()).find(|&r| d[r] > 0);
            ensure(m.code.m() == n && m.code.n() == n && m.code.k() == n && dmin == Some(n), || {
                format!("member `{}`: {}x{}, k {}, d {dmin:?}", m.word, m.code.m(), m.code.n(), m.code.k())
            })?;
        }
        sizes.push(orbit.len());
    }
    Ok(format!("orbit sizes {sizes:?}, all members [n x n, n, n]"))
}

fn criterion_7() -> Check {
    let t = corpus::toy_tensor();
    let c = corpus::toy_code();
    let h = extend_hamming(&t, Side::Column, &g()).map_err(|e| e.to_string())?;
    ensure(h.length == 7 && h.kdim == 4 && h.alphabet().q() == 8, || {
        format!("length {}, dim {}, alphabet {}", h.length, h.kdim, h.alphabet().q())
    })?;
    let dist = additive_weight_distribution(&h, &g()).unwrap();
    ensure(dist == [1, 0, 0, 0, 0, 0, 11, 4], || format!("weights {dist:?}"))?;
    let mut law = true;
    for_each_vector(2, 4, |u| {
        let r = c.codeword(u).unwrap().rank();
        law &= h.weight(u).unwrap() as u64 == transfer_weight(2, 3, r);
    });
    ensure(law, || "weight law fails".into())?;
    let sys = MProjectiveSystem::from_code(&h);
    ensure(sys.length() == 7, || format!("system length {}", sys.length()))?;
    let dr = geometry::generalized_weights(&c, Side::Row, WeightMethod::Subcode, &g()).unwrap();
    for i in 1..=4 {
        let di = additive_generalized_weight(&h, i, &g()).unwrap() as u64;
        let expect = 8 - 2u64.pow(3 - dr[i - 1] as u32);
        ensure(di == expect, || format!("d_{i} = {di}, expected {expect}"))?;
    }
    Ok("length 7, dim 4 over GF(8), d = 6, {0:1, 6:11, 7:4}, d_i = (6,6,7,7)".into())
}

fn criterion_8(codes: &[MatrixRankCode]) -> Check {
    let mut tensors: Vec<_> = codes.iter().map(MatrixRankCode::generator_tensor).collect();
    tensors.push(corpus::toy_tensor());
    for (q, n) in [(2, 2), (2, 3), (3, 2), (4, 2)] {
        tensors.push(corpus::spread_code(q, n).unwrap().generator_tensor());
    }
    let mut checked = 0u64;
    for t in &tensors {
        let c = MatrixRankCode::from_tensor(t).unwrap();
        let s = column_system(t).map_err(|e| e.to_string())?;
        let mut bad = None;
        c.for_each_codeword(&g(), |u, m| {
            let direct = Subspace::rowspace(m);
            let perp = Subspace::span(t.field(), t.shape()[0], &[u.to_vec()]).unwrap().orthogonal_complement();
            let psi_inv = s.matrix_space().shorten_coefficients(&perp, Side::Column).unwrap();
            let ok = rank_via_system(t, u).unwrap() == m.rank()
                && support_via_system(t, u).unwrap() == direct
                && psi_inv == direct.orthogonal_complement();
            if !ok && bad.is_none() {
                bad = Some(u.to_vec());
            }
            checked += 1;
        })
        .unwrap();
        ensure(bad.is_none(), || format!("u = {bad:?} in a {:?} tensor", t.shape()))?;
    }
    Ok(format!("{} tensors, {checked} vectors u", tensors.len()))
}

fn criterion_9() -> Check {
    let f = common::gf(2);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut one_weight = 0;
    for _ in 0..1000 {
        let s = rng.gen_range(1..=3);
        let rows: Vec<Vec<u32>> = (0..s).map(|_| corpus::random_matrix(&mut rng, &f, 2, 2).into_data()).collect();
        let space = Subspace::span(&f, 4, &rows).unwrap();
        if space.dim() == 0 {
            continue;
        }
        let c = MatrixRankCode::from_subspace(&f, 2, 2, &space).unwrap();
        if let Some(d) = c.rank_distribution(&g()).unwrap().one_weight() {
            one_weight += 1;
            ensure(c.k() + d <= 4, || format!("k = {}, d = {d}", c.k()))?;
            let r = identities::one_weight_checks(&c, &g()).unwrap();
            ensure(r.passed, || format!("{r:?}"))?;
        }
    }
    for (q, n) in [(2, 2), (3, 2), (2, 3)] {
        let c = corpus::spread_code(q, n).unwrap();
        let d = c.rank_distribution(&g()).unwrap().one_weight();
        ensure(d == Some(n) && c.k() == 2 * n - n, || format!("spread GF({q}^{n}): d {d:?}"))?;
    }
    Ok(format!("{one_weight} one-weight codes in 1000 draws satisfy k <= 4 - d, spreads attain it"))
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let codes = random_corpus(200, 4);
    let results: Vec<(usize, &str, (Check, Duration))> = vec![
        (1, "toy exactness", timed(secs(1), criterion_1)),
        (2, "generalized weights", timed(secs(5), criterion_2)),
        (3, "GF(4) expansion", timed(None, criterion_3)),
        (4, "identity suite on random corpus", timed(secs(120), || criterion_4(&codes))),
        (5, "faithfulness equivalence", timed(None, || criterion_5(&codes))),
        (6, "Knuth orbits", timed(secs(5), criterion_6)),
        (7, "extended Hamming code", timed(secs(5), criterion_7)),
        (8, "rank and support via the system", timed(None, || criterion_8(&codes))),
        (9, "one-weight bound", timed(secs(60), criterion_9)),
    ];
    let mut failed = 0;
    for (i, name, (r, took)) in &results {
        match r {
            Ok(detail) => println!("PASS {i} {name}: {detail} [{took:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL {i} {name}: {why} [{took:.2?}]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
