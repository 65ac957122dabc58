use super::{Mat, Subspace};
use crate::gf::Field;

/// Visit every vector of `GF(q)^n` in lexicographic order (last coordinate fastest).
pub fn for_each_vector<F: FnMut(&[u32])>(q: u32, n: usize, mut f: F) {
    let mut v = vec![0u32; n];
    loop {
        f(&v);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < q {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Every `t`-dimensional subspace of `GF(q)^n`, each once.
///
/// Order: pivot sets in lexicographic order; within a pivot set, the free
/// entries of the reduced echelon basis run as an odometer, row-major, last
/// entry fastest.
pub fn enumerate_subspaces(field: &Field, n: usize, t: usize) -> SubspaceIter {
    SubspaceIter::new(field, n, t)
}

pub struct SubspaceIter {
    field: Field,
    n: usize,
    t: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    values: Vec<u32>,
    done: bool,
}

impl SubspaceIter {
    fn new(field: &Field, n: usize, t: usize) -> SubspaceIter {
        let mut it = SubspaceIter {
            field: field.clone(),
            n,
            t,
            pivots: (0..t).collect(),
            free: Vec::new(),
            values: Vec::new(),
            done: t > n,
        };
        if !it.done {
            it.reset_free();
        }
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (i, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((i, c));
                }
            }
        }
        self.values = vec![0; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let mut m = Mat::zeros(&self.field, self.t, self.n);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, 1);
        }
        for (&(i, c), &v) in self.free.iter().zip(&self.values) {
            m.set(i, c, v);
        }
        Subspace::from_rref(m, self.pivots.clone())
    }

    fn advance_values(&mut self) -> bool {
        let q = self.field.q();
        for v in self.values.iter_mut().rev() {
            *v += 1;
            if *v < q {
                return true;
            }
            *v = 0;
        }
        false
    }

    fn advance_pivots(&mut self) -> bool {
        let (n, t) = (self.n, self.t);
        let Some(i) = (0..t).rev().find(|&i| self.pivots[i] < n - t + i) else {
            return false;
        };
        self.pivots[i] += 1;
        for j in i + 1..t {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        true
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.current();
        if !self.advance_values() {
            if self.advance_pivots() {
                self.reset_free();
            } else {
                self.done = true;
            }
        }
        Some(out)
    }
}
