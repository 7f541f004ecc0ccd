//! Construction of the four orders, level by level.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use super::level::{window_slot, Level, NONE};
use super::{io, OrderId, OrderRelation};
use crate::bitmat::{set_bit, BitMatrix};
use crate::error::{Error, Result};
use crate::partition::{shape_geq, PartitionTable};
use crate::perm::{factorial, next_permutation, p_row_of, pack_rows, unrank};
use crate::tableau::Tableau;

/// Largest level the order builders accept.
pub const MAX_ORDER_N: usize = 10;

/// Memoizing builder for levels and relations. Levels are built in
/// ascending order and frozen once built.
pub struct Engine {
    parts: Arc<PartitionTable>,
    levels: Vec<Arc<Level>>,
    relations: HashMap<(OrderId, usize), Arc<OrderRelation>>,
    cache_dir: Option<PathBuf>,
    max_n: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Self {
            parts: Arc::new(PartitionTable::new(MAX_ORDER_N)),
            levels: Vec::new(),
            relations: HashMap::new(),
            cache_dir: None,
            max_n: MAX_ORDER_N,
        }
    }

    /// Reads and writes relation files under `dir`.
    pub fn with_cache(dir: impl Into<PathBuf>) -> Self {
        Self { cache_dir: Some(dir.into()), ..Self::new() }
    }

    pub fn partitions(&self) -> &PartitionTable {
        &self.parts
    }

    fn check_budget(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.max_n {
            return Err(Error::Budget { n, limit: self.max_n });
        }
        Ok(())
    }

    pub fn level(&mut self, n: usize) -> Result<Arc<Level>> {
        self.check_budget(n)?;
        while self.levels.len() < n {
            let k = self.levels.len() + 1;
            let t0 = Instant::now();
            let lvl = Level::new(k, self.levels.last().map(|l| l.as_ref()), &self.parts)?;
            log::debug!("level {k}: {} tableaux in {:?}", lvl.len(), t0.elapsed());
            self.levels.push(Arc::new(lvl));
        }
        Ok(self.levels[n - 1].clone())
    }

    /// The relation `order` on `T_n`, building lower levels as needed.
    pub fn relation(&mut self, order: OrderId, n: usize) -> Result<Arc<OrderRelation>> {
        self.check_budget(n)?;
        if let Some(r) = self.relations.get(&(order, n)) {
            return Ok(r.clone());
        }
        let level = self.level(n)?;
        let rel = match self.load_cached(order, n, level.len()) {
            Some(r) => r,
            None => {
                let t0 = Instant::now();
                let bits = match order {
                    OrderId::D => build_duflo(&level)?,
                    OrderId::Ch => build_chain(&level, &self.parts, true),
                    OrderId::DV => {
                        let d = self.relation(OrderId::D, n)?;
                        let prev = if n > 1 { Some(self.relation(OrderId::DV, n - 1)?) } else { None };
                        build_duflo_vogan(&level, &d.bits, prev.as_ref().map(|p| &p.bits))?
                    }
                    OrderId::VCh => {
                        let ch = self.relation(OrderId::Ch, n)?;
                        let prev = if n > 1 { Some(self.relation(OrderId::VCh, n - 1)?) } else { None };
                        build_vogan_chain(&level, &ch.bits, prev.as_ref().map(|p| &p.bits))
                    }
                    OrderId::Kl => crate::kl::cell_order_bits(&level)?,
                    OrderId::Custom => {
                        return Err(Error::Parse("custom relations are not built by the engine".into()))
                    }
                };
                log::info!("{order}_{n}: {} pairs in {:?}", bits.count(), t0.elapsed());
                let rel = OrderRelation::new(n, order, bits);
                self.store_cached(&rel);
                rel
            }
        };
        let rel = Arc::new(rel);
        self.relations.insert((order, n), rel.clone());
        Ok(rel)
    }

    fn cache_path(&self, order: OrderId, n: usize) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        matches!(order, OrderId::D | OrderId::Ch | OrderId::DV | OrderId::VCh | OrderId::Kl)
            .then(|| dir.join(format!("{}_n{n}.tord", order.name())))
    }

    fn load_cached(&self, order: OrderId, n: usize, size: usize) -> Option<OrderRelation> {
        let path = self.cache_path(order, n)?;
        if !path.exists() {
            return None;
        }
        match io::read_relation_file(&path) {
            Ok(r) if r.n == n && r.order == order && r.len() == size => Some(r),
            Ok(_) => {
                log::warn!("{}: header does not match {order}_{n}, rebuilding", path.display());
                None
            }
            Err(e) => {
                log::warn!("{}: {e}, rebuilding", path.display());
                None
            }
        }
    }

    fn store_cached(&self, rel: &OrderRelation) {
        let Some(path) = self.cache_path(rel.order, rel.n) else { return };
        if let Some(dir) = path.parent() {
            if let Err(e) = std::fs::create_dir_all(dir) {
                log::warn!("cache dir {}: {e}", dir.display());
                return;
            }
        }
        if let Err(e) = io::write_relation_file(&path, rel) {
            log::warn!("writing {}: {e}", path.display());
        }
    }
}

/// Transitive closure of `P(w) ≤ P(w·s_i)` over all ascents of all `w ∈ S_n`.
pub(crate) fn build_duflo(level: &Level) -> Result<BitMatrix> {
    let n = level.n;
    let m = level.len();
    let total = factorial(n);
    let chunk = (total / 512).max(1);
    let chunks = total.div_ceil(chunk);
    let edges = (0..chunks)
        .into_par_iter()
        .fold(
            || BitMatrix::new(m),
            |mut acc, c| {
                let start = c * chunk;
                let end = (start + chunk).min(total);
                let mut perm = unrank(n, start);
                let mut rows = [0u8; 16];
                for _ in start..end {
                    p_row_of(&perm, &mut rows);
                    let a = level.index_of_packed(pack_rows(&rows[..n])) as usize;
                    for i in 0..n.saturating_sub(1) {
                        if perm[i] < perm[i + 1] {
                            perm.swap(i, i + 1);
                            p_row_of(&perm, &mut rows);
                            perm.swap(i, i + 1);
                            let b = level.index_of_packed(pack_rows(&rows[..n])) as usize;
                            acc.set(a, b);
                        }
                    }
                    next_permutation(&mut perm);
                }
                acc
            },
        )
        .reduce(
            || BitMatrix::new(m),
            |mut a, b| {
                a.union_with(&b);
                a
            },
        );
    edges.transitive_closure()
}

/// Chain comparison on window shape ids: every window of `a` is at most the
/// matching window of `b`; with `equality_clause`, a window where the shapes
/// agree forces agreement on its two maximal subwindows.
#[inline]
pub(crate) fn chain_ids(level: &Level, parts: &PartitionTable, a: usize, b: usize, equality_clause: bool) -> bool {
    let n = level.n;
    let (wa, wb) = (level.windows(a), level.windows(b));
    let full = window_slot(n, 1, n);
    if !parts.geq(n, wb[full], wa[full]) {
        return false;
    }
    let mut base = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let s = base + (j - i);
            if !parts.geq(j - i + 1, wb[s], wa[s]) {
                return false;
            }
        }
        base += n - i + 1;
    }
    if equality_clause {
        let mut base = 0;
        for i in 1..=n {
            for j in i + 2..=n {
                let s = base + (j - i);
                if wa[s] == wb[s] {
                    let left = s - 1;
                    let right = window_slot(n, i + 1, j);
                    if wa[left] != wb[left] || wa[right] != wb[right] {
                        return false;
                    }
                }
            }
            base += n - i + 1;
        }
    }
    true
}

pub(crate) fn build_chain(level: &Level, parts: &PartitionTable, equality_clause: bool) -> BitMatrix {
    let m = level.len();
    BitMatrix::par_from_rows(m, |a, row| {
        for b in 0..m {
            if chain_ids(level, parts, a, b, equality_clause) {
                set_bit(row, b);
            }
        }
    })
}

/// `T ≤_Ch S` for two tableaux on `1..=n`, straight from the window grids.
pub fn chain_pair(t: &Tableau, s: &Tableau) -> Result<bool> {
    chain_pair_impl(t, s, true)
}

/// Chain comparison with only the window-shape clause.
pub fn chain_pair_shapes_only(t: &Tableau, s: &Tableau) -> Result<bool> {
    chain_pair_impl(t, s, false)
}

fn chain_pair_impl(t: &Tableau, s: &Tableau, equality_clause: bool) -> Result<bool> {
    let n = t.size();
    if s.size() != n {
        return Err(Error::SizeMismatch(n, s.size()));
    }
    for x in [t, s] {
        if n > 0 && (x.lo() != 1 || !x.is_contiguous()) {
            return Err(Error::InvalidTableau(format!("{x} is not standard on 1..={n}")));
        }
    }
    let (gt, gs) = (t.varphi_grid(), s.varphi_grid());
    for i in 1..=n {
        for j in i + 1..=n {
            if !shape_geq(gs.get(i, j), gt.get(i, j))? {
                return Ok(false);
            }
        }
    }
    if equality_clause {
        for i in 1..=n {
            for j in i + 2..=n {
                if gt.get(i, j) == gs.get(i, j)
                    && (gt.get(i, j - 1) != gs.get(i, j - 1) || gt.get(i + 1, j) != gs.get(i + 1, j))
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Adds simultaneous `T_{α,β}` images until closed, starting from `stack`.
fn close_under_tab(level: &Level, r: &mut BitMatrix, mut stack: Vec<(u32, u32)>) -> usize {
    let mut added = 0;
    while let Some((a, b)) = stack.pop() {
        for tab in &level.tab {
            let (x, y) = (tab[a as usize], tab[b as usize]);
            if x != NONE && y != NONE && !r.get(x as usize, y as usize) {
                r.set(x as usize, y as usize);
                stack.push((x, y));
                added += 1;
            }
        }
    }
    added
}

/// Least relation containing `D_n` and the insertion lifts of `DV_{n−1}`,
/// closed under simultaneous `T_{α,β}` and transitivity.
pub(crate) fn build_duflo_vogan(level: &Level, d: &BitMatrix, prev: Option<&BitMatrix>) -> Result<BitMatrix> {
    let mut r = d.clone();
    if let Some(prev) = prev {
        for (a, b) in prev.pairs() {
            for (rl, cl) in level.row_lift.iter().zip(&level.col_lift) {
                r.set(rl[a] as usize, rl[b] as usize);
                r.set(cl[a] as usize, cl[b] as usize);
            }
        }
    }
    let mut frontier: Vec<(u32, u32)> = r.pairs().map(|(a, b)| (a as u32, b as u32)).collect();
    let mut rounds = 0;
    loop {
        rounds += 1;
        close_under_tab(level, &mut r, frontier);
        let closed = r.transitive_closure()?;
        if closed == r {
            log::debug!("dv_{}: stable after {rounds} rounds", level.n);
            return Ok(r);
        }
        frontier = closed
            .pairs()
            .filter(|&(a, b)| !r.get(a, b))
            .map(|(a, b)| (a as u32, b as u32))
            .collect();
        r = closed;
    }
}

/// Pairs of `Ch_n` whose truncations `π_{1,n−1}` and standardized tails
/// `π_{2,n}` are related in `VCh_{n−1}`.
pub(crate) fn vogan_chain_base(level: &Level, ch: &BitMatrix, prev: Option<&BitMatrix>) -> BitMatrix {
    match prev {
        None => ch.clone(),
        Some(prev) => BitMatrix::par_from_rows(level.len(), |a, row| {
            let (ta, da) = (level.trunc[a] as usize, level.drop_first[a] as usize);
            for b in ch.row_iter(a) {
                let (tb, db) = (level.trunc[b] as usize, level.drop_first[b] as usize);
                if prev.get(ta, tb) && prev.get(da, db) {
                    set_bit(row, b);
                }
            }
        }),
    }
}

/// Largest subset of the base closed under simultaneous `T_{α,β}`: the
/// operators are involutions, so a base pair survives exactly when its
/// whole orbit under simultaneous steps stays inside the base.
pub(crate) fn build_vogan_chain(level: &Level, ch: &BitMatrix, prev: Option<&BitMatrix>) -> BitMatrix {
    let base = vogan_chain_base(level, ch, prev);
    let mut out = base.clone();
    let mut visited = BitMatrix::new(level.len());
    let mut comp: Vec<(u32, u32)> = Vec::new();
    let mut pruned = 0usize;
    for (a, b) in base.pairs() {
        if visited.get(a, b) {
            continue;
        }
        visited.set(a, b);
        comp.clear();
        comp.push((a as u32, b as u32));
        let mut escaped = false;
        let mut k = 0;
        while k < comp.len() {
            let (x, y) = comp[k];
            k += 1;
            for tab in &level.tab {
                let (u, v) = (tab[x as usize], tab[y as usize]);
                if u == NONE || v == NONE {
                    continue;
                }
                let (u, v) = (u as usize, v as usize);
                if !base.get(u, v) {
                    escaped = true;
                } else if !visited.get(u, v) {
                    visited.set(u, v);
                    comp.push((u as u32, v as u32));
                }
            }
        }
        if escaped {
            pruned += comp.len();
            for &(x, y) in &comp {
                out.clear(x as usize, y as usize);
            }
        }
    }
    for a in 0..level.len() {
        out.set(a, a);
    }
    log::debug!("vch_{}: base {} pairs, pruned {pruned}", level.n, base.count());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{duflo_leq, rs, Word};
    use crate::vogan::{t_ab_tableau, AdjacentPair};

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn chain_pair_examples() {
        let (a, b) = (t("1,2,6;3,5;4,7"), t("1,2,6;3,7;4;5"));
        assert!(chain_pair(&a, &b).unwrap());
        assert!(!chain_pair(&b, &a).unwrap());
        let (a, b) = (t("1,3,4;2,6;5"), t("1,3,6;2,4;5"));
        assert!(!chain_pair(&a, &b).unwrap());
        assert!(chain_pair_shapes_only(&a, &b).unwrap());
        assert!(chain_pair(&a, &a).unwrap());
        assert!(chain_pair(&a, &t("1,2;3")).is_err());
    }

    #[test]
    fn bulk_chain_matches_pairwise() {
        let mut e = Engine::new();
        for n in 1..=6 {
            let level = e.level(n).unwrap();
            let ch = e.relation(OrderId::Ch, n).unwrap();
            for (a, x) in level.tableaux.iter().enumerate() {
                for (b, y) in level.tableaux.iter().enumerate() {
                    assert_eq!(ch.contains(a, b), chain_pair(x, y).unwrap(), "{x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn duflo_edges_match_projected_weak_order() {
        // closure of cover edges = closure of all projected weak-order pairs
        let mut e = Engine::new();
        for n in 1..=5 {
            let level = e.level(n).unwrap();
            let d = e.relation(OrderId::D, n).unwrap();
            let words: Vec<Word> = Word::all(n).collect();
            let ps: Vec<usize> = words.iter().map(|w| level.index_of(&rs(w).0).unwrap()).collect();
            let mut full = BitMatrix::identity(level.len());
            for (i, y) in words.iter().enumerate() {
                for (j, w) in words.iter().enumerate() {
                    if duflo_leq(y, w).unwrap() {
                        full.set(ps[i], ps[j]);
                    }
                }
            }
            assert_eq!(full.transitive_closure().unwrap(), d.bits);
        }
    }

    #[test]
    fn duflo_breakage_pair_at_six() {
        let mut e = Engine::new();
        let level = e.level(6).unwrap();
        let d = e.relation(OrderId::D, 6).unwrap();
        let dv = e.relation(OrderId::DV, 6).unwrap();
        let (x, y) = (t("1,2,4;3,5,6"), t("1,2,4;3,6;5"));
        assert!(d.relates(&level, &x, &y).unwrap());
        let pair = AdjacentPair::up(3);
        let (xi, yi) = (t_ab_tableau(&x, pair).unwrap(), t_ab_tableau(&y, pair).unwrap());
        assert_eq!(xi, t("1,2,3;4,5,6"));
        assert_eq!(yi, t("1,2,5;3,6;4"));
        assert!(!d.relates(&level, &xi, &yi).unwrap());
        assert!(dv.relates(&level, &xi, &yi).unwrap());
    }

    #[test]
    fn small_levels_coincide_and_are_partial_orders() {
        let mut e = Engine::new();
        for n in 1..=5 {
            let level = e.level(n).unwrap();
            let d = e.relation(OrderId::D, n).unwrap();
            for order in [OrderId::Ch, OrderId::DV, OrderId::VCh] {
                assert_eq!(e.relation(order, n).unwrap().bits, d.bits, "{order}_{n}");
            }
            assert!(d.is_reflexive() && d.is_antisymmetric() && d.is_transitive());
            assert!(d.tau_violations(&level).is_empty());
            assert!(d.transpose_violations(&level).is_empty());
        }
    }
}
