//! Per-level lookup tables over the canonical index of `T_n`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::PartitionTable;
use crate::perm::pack_rows;
use crate::tableau::{delete_min, enumerate, Tableau};
use crate::vogan::{in_domain_rows, swapped_values, AdjacentPair};

/// Marks a missing image in index maps.
pub const NONE: u32 = u32::MAX;

/// Everything about `T_n` the order builders need, keyed by canonical index.
#[derive(Debug)]
pub struct Level {
    pub n: usize,
    pub tableaux: Vec<Tableau>,
    index: HashMap<u64, u32>,
    pub(crate) tau: Vec<u64>,
    /// Id of `sh(π_{i,j}(T))` among partitions of `j−i+1`, `n(n+1)/2` per tableau.
    pub(crate) grid: Vec<u16>,
    /// Index of `π_{1,n−1}(T)` in level `n−1`.
    pub(crate) trunc: Vec<u32>,
    /// Index of the standardized `π_{2,n}(T)` in level `n−1`.
    pub(crate) drop_first: Vec<u32>,
    pub(crate) transpose: Vec<u32>,
    pub(crate) pairs: Vec<AdjacentPair>,
    /// `tab[p][t]`: image of `t` under `pairs[p]`, or [`NONE`] off the domain.
    pub(crate) tab: Vec<Vec<u32>>,
    /// `row_lift[a−1][t']`: index of `(T̄'_a ⇓ a)` for `t'` in level `n−1`.
    pub(crate) row_lift: Vec<Vec<u32>>,
    /// `col_lift[a−1][t']`: index of `(a ⇒ T̄'_a)`.
    pub(crate) col_lift: Vec<Vec<u32>>,
}

pub(crate) fn window_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Offset of window `(i, j)` (1-based) inside a tableau's grid block.
#[inline]
pub(crate) fn window_slot(n: usize, i: usize, j: usize) -> usize {
    let a = i - 1;
    a * n - a * a.saturating_sub(1) / 2 + (j - i)
}

impl Level {
    /// Builds level `n`; `prev` must be level `n−1` when `n ≥ 2`.
    pub fn new(n: usize, prev: Option<&Level>, parts: &PartitionTable) -> Result<Self> {
        if n >= 16 {
            return Err(Error::Budget { n, limit: 15 });
        }
        let tableaux = enumerate(n)?;
        let index: HashMap<u64, u32> = tableaux
            .iter()
            .enumerate()
            .map(|(k, t)| (pack_rows(t.row_of()), k as u32))
            .collect();
        let tau = tableaux.iter().map(|t| t.tau().0).collect();
        let wc = window_count(n);
        let grid: Vec<u16> = tableaux
            .par_iter()
            .flat_map_iter(|t| {
                let g = t.varphi_grid();
                let mut ids = Vec::with_capacity(wc);
                for i in 1..=n {
                    for j in i..=n {
                        ids.push(parts.id(g.get(i, j)));
                    }
                }
                ids
            })
            .collect();
        let lookup = |t: &Tableau| index[&pack_rows(t.row_of())];
        let transpose = tableaux.iter().map(|t| lookup(&t.transpose())).collect();
        let pairs = AdjacentPair::all(n);
        let tab = pairs
            .iter()
            .map(|&p| {
                tableaux
                    .iter()
                    .map(|t| {
                        let r = t.row_of();
                        if !in_domain_rows(r, p) {
                            return NONE;
                        }
                        let mut img = r.to_vec();
                        let (x, y) = swapped_values(r, p);
                        img.swap(x - 1, y - 1);
                        index[&pack_rows(&img)]
                    })
                    .collect()
            })
            .collect();
        let (mut trunc, mut drop_first) = (Vec::new(), Vec::new());
        let (mut row_lift, mut col_lift) = (Vec::new(), Vec::new());
        if n >= 2 {
            let prev = prev.filter(|p| p.n + 1 == n).expect("level n−1 is required");
            for t in &tableaux {
                trunc.push(prev.index_of_rows(&t.row_of()[..n - 1]));
                let mut rows = t.rows();
                delete_min(&mut rows);
                let rest = Tableau::from_rows_unchecked(&rows).standardize();
                drop_first.push(prev.index_of(&rest).expect("window tableau is standard") as u32);
            }
            for a in 1..=n {
                let lifted: Vec<(u32, u32)> = prev
                    .tableaux
                    .par_iter()
                    .map(|t| {
                        let s = t.shift_entries(a).expect("shift position in range");
                        let r = s.row_insert(a).expect("a is absent after the shift");
                        let c = s.col_insert(a).expect("a is absent after the shift");
                        (lookup(&r), lookup(&c))
                    })
                    .collect();
                row_lift.push(lifted.iter().map(|x| x.0).collect());
                col_lift.push(lifted.iter().map(|x| x.1).collect());
            }
        }
        Ok(Self { n, tableaux, index, tau, grid, trunc, drop_first, transpose, pairs, tab, row_lift, col_lift })
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    /// Canonical index of a standard tableau on `1..=n`.
    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        if t.size() != self.n || t.lo() != 1 || !t.is_contiguous() {
            return None;
        }
        self.index.get(&pack_rows(t.row_of())).map(|&k| k as usize)
    }

    fn index_of_rows(&self, r: &[u8]) -> u32 {
        self.index[&pack_rows(r)]
    }

    pub(crate) fn index_of_packed(&self, key: u64) -> u32 {
        self.index[&key]
    }

    /// Adjacent pairs in the order used by the `T_{α,β}` tables.
    pub fn pairs(&self) -> &[AdjacentPair] {
        &self.pairs
    }

    /// Image of tableau `k` under `pairs()[p]`, if in the domain.
    pub fn t_ab(&self, p: usize, k: usize) -> Option<usize> {
        match self.tab[p][k] {
            NONE => None,
            x => Some(x as usize),
        }
    }

    pub fn transpose_index(&self, k: usize) -> usize {
        self.transpose[k] as usize
    }

    pub fn tableau(&self, k: usize) -> &Tableau {
        &self.tableaux[k]
    }

    /// Window shape ids of tableau `k`.
    #[inline]
    pub(crate) fn windows(&self, k: usize) -> &[u16] {
        let wc = window_count(self.n);
        &self.grid[k * wc..(k + 1) * wc]
    }
}
