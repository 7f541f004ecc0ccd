//! Dense square bit matrices used as binary relations.

use crate::error::{Error, Result};

#[inline]
pub(crate) fn set_bit(row: &mut [u64], b: usize) {
    row[b / 64] |= 1 << (b % 64);
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitMatrix({}x{}, {} set)", self.size, self.size, self.count())
    }
}

impl BitMatrix {
    pub fn new(size: usize) -> Self {
        let words = size.div_ceil(64);
        Self { size, words, bits: vec![0; size * words] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::new(size);
        for a in 0..size {
            m.set(a, a);
        }
        m
    }

    /// Builds a matrix by filling rows in parallel; `fill(a, row)` sets the
    /// bits of row `a`.
    pub fn par_from_rows(size: usize, fill: impl Fn(usize, &mut [u64]) + Sync) -> Self {
        use rayon::prelude::*;
        let mut m = Self::new(size);
        let words = m.words.max(1);
        m.bits.par_chunks_mut(words).enumerate().for_each(|(a, row)| fill(a, row));
        m
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    #[inline]
    pub fn clear(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] &= !(1 << (b % 64));
    }

    #[inline]
    pub fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    #[inline]
    pub fn row_mut(&mut self, a: usize) -> &mut [u64] {
        &mut self.bits[a * self.words..(a + 1) * self.words]
    }

    /// Row `a |= row b`.
    pub fn or_row(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        let (src, dst) = if a < b {
            let (lo, hi) = self.bits.split_at_mut(b * w);
            (&hi[..w], &mut lo[a * w..(a + 1) * w])
        } else {
            let (lo, hi) = self.bits.split_at_mut(a * w);
            (&lo[b * w..(b + 1) * w], &mut hi[..w])
        };
        for (d, s) in dst.iter_mut().zip(src) {
            *d |= *s;
        }
    }

    /// Column indices set in row `a`.
    pub fn row_iter(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(a).iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }

    /// Set pairs `(a, b)` in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |a| self.row_iter(a).map(move |b| (a, b)))
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &BitMatrix) -> bool {
        self.size == other.size && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &BitMatrix) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= *b;
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.size);
        for (a, b) in self.pairs() {
            t.set(b, a);
        }
        t
    }

    /// First `(a, b)` with `a ≠ b` related both ways, if any.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        self.pairs().find(|&(a, b)| a < b && self.get(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    /// Some `(a, c)` with `a ≤ b ≤ c` but not `a ≤ c`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.size {
            let mut acc = vec![0u64; self.words];
            for b in self.row_iter(a) {
                for (x, y) in acc.iter_mut().zip(self.row(b)) {
                    *x |= *y;
                }
            }
            for (k, (&x, &y)) in acc.iter().zip(self.row(a)).enumerate() {
                let missing = x & !y;
                if missing != 0 {
                    return Some((a, k * 64 + missing.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    /// Topological order of the strict relation, or `None` on a cycle.
    fn topo_order(&self) -> Option<Vec<usize>> {
        let n = self.size;
        let mut indeg = vec![0usize; n];
        for (a, b) in self.pairs() {
            if a != b {
                indeg[b] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).rev().filter(|&a| indeg[a] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(a) = stack.pop() {
            order.push(a);
            for b in self.row_iter(a) {
                if b != a {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        stack.push(b);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Reflexive-transitive closure. Fails with the first antisymmetry
    /// witness when the closure would identify two distinct elements.
    pub fn transitive_closure(&self) -> Result<Self> {
        let mut m = self.clone();
        for a in 0..m.size {
            m.set(a, a);
        }
        let Some(order) = m.topo_order() else {
            let w = warshall(&m);
            let (a, b) = w.antisymmetry_witness().expect("a cycle gives a witness");
            return Err(Error::Antisymmetry(a, b));
        };
        let pos = topo_positions(&order);
        // reverse topological: rows of successors are final before their
        // predecessors are visited
        let mut covered = vec![0u64; m.words];
        for &a in order.iter().rev() {
            m.sweep_successors(a, &pos, &mut covered, |_| ());
            for (d, c) in m.row_mut(a).iter_mut().zip(&covered) {
                *d |= *c;
            }
        }
        Ok(m)
    }

    /// Visits the strict successors of `a` in topological order, skipping any
    /// already reachable through an earlier one, and leaves their union of
    /// rows in `covered`. `on_cover` sees the successors that were not skipped.
    fn sweep_successors(&self, a: usize, pos: &[usize], covered: &mut [u64], mut on_cover: impl FnMut(usize)) {
        covered.iter_mut().for_each(|w| *w = 0);
        let mut succ: Vec<usize> = self.row_iter(a).filter(|&b| b != a).collect();
        succ.sort_unstable_by_key(|&b| pos[b]);
        for b in succ {
            if covered[b / 64] >> (b % 64) & 1 == 1 {
                continue;
            }
            on_cover(b);
            for (c, s) in covered.iter_mut().zip(self.row(b)) {
                *c |= *s;
            }
        }
    }

    /// Transitive reduction of a transitive partial order (its Hasse covers),
    /// without the diagonal.
    pub fn hasse(&self) -> Self {
        let n = self.size;
        let mut h = Self::new(n);
        let order = self.topo_order().expect("hasse covers need an acyclic relation");
        let pos = topo_positions(&order);
        let mut covered = vec![0u64; self.words];
        for a in 0..n {
            let mut covers = Vec::new();
            self.sweep_successors(a, &pos, &mut covered, |b| covers.push(b));
            for b in covers {
                h.set(a, b);
            }
        }
        h
    }
}

fn topo_positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (k, &a) in order.iter().enumerate() {
        pos[a] = k;
    }
    pos
}

fn warshall(m: &BitMatrix) -> BitMatrix {
    let mut w = m.clone();
    for k in 0..w.size {
        for a in 0..w.size {
            if w.get(a, k) {
                w.or_row(a, k);
            }
        }
    }
    w
}
