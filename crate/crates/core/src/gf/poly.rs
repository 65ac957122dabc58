//! Dense polynomials over GF(p), coefficients low degree first.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &mi) in m.iter().enumerate() {
            let idx = i + shift;
            r[idx] = (r[idx] + p - c * mi % p) % p;
        }
        r = trim(r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    for _ in 0..p - 2 {
        acc = acc * a as u64 % p as u64;
    }
    if p == 2 {
        1
    } else {
        acc as u32
    }
}

fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// `a * b mod modulus`, padded to `deg(modulus)` digits.
pub(crate) fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut r = rem(&mul(a, b, p), modulus, p);
    r.resize(modulus.len() - 1, 0);
    r
}

/// Carry-less product of two GF(2)[x] bit vectors reduced by `modulus`.
pub(crate) fn clmul_reduce(a: u32, b: u32, modulus: &[u32]) -> u32 {
    let e = modulus.len() - 1;
    let m: u64 = modulus.iter().enumerate().map(|(i, &c)| (c as u64) << i).sum();
    let mut prod: u64 = 0;
    let mut b = b as u64;
    let mut a = a as u64;
    while b != 0 {
        if b & 1 == 1 {
            prod ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    for bit in (e..64).rev() {
        if prod >> bit & 1 == 1 {
            prod ^= m << (bit - e);
        }
    }
    prod as u32
}

fn monic_of_degree(p: u32, d: usize, index: u64) -> Vec<u32> {
    let mut c = vec![0u32; d + 1];
    let mut idx = index;
    for slot in c.iter_mut().take(d) {
        *slot = (idx % p as u64) as u32;
        idx /= p as u64;
    }
    c[d] = 1;
    c
}

/// Irreducibility by trial division with every monic polynomial of degree `<= deg/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let g = monic_of_degree(p, d, idx);
            if rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn is_primitive(f: &[u32], p: u32) -> bool {
    let e = f.len() - 1;
    let order = (p as u64).pow(e as u32) - 1;
    let mut factors = Vec::new();
    let mut n = order;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    let x = vec![0, 1];
    let pow = |mut k: u64| {
        let mut acc = vec![1u32];
        let mut base = x.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = mul_mod(&acc, &base, f, p);
            }
            base = mul_mod(&base, &base, f, p);
            k >>= 1;
        }
        trim(acc)
    };
    factors.iter().all(|&r| pow(order / r) != vec![1])
}

/// First monic primitive polynomial of degree `e` in lexicographic order of
/// the low coefficients.
pub(crate) fn first_primitive(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    (0..count)
        .map(|idx| monic_of_degree(p, e as usize, idx))
        .find(|f| f[0] != 0 && is_irreducible(f, p) && is_primitive(f, p))
        .expect("a primitive polynomial exists in every degree")
}
