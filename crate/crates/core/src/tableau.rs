//! Standard Young tableaux stored as row-index vectors.
//!
//! A [`Tableau`] records, for each value `lo..=hi`, the (1-based) row it
//! sits in, or `0` when the value is absent. Absent values let the shifted
//! tableau `T̄_a` (entries `1..=n+1` without `a`) be represented directly;
//! everything else works on contiguous tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest level accepted by [`enumerate`].
pub const ENUMERATE_LIMIT: usize = 11;

/// A set of simple roots `α_i`, bit `i` standing for `α_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RootSet(pub u64);

impl RootSet {
    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// `{1, …, n−1}`.
    pub fn full(n: usize) -> Self {
        if n < 2 {
            Self(0)
        } else {
            Self(((1u64 << (n - 1)) - 1) << 1)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..64).filter(move |&i| self.contains(i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet(0);
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

impl Serialize for RootSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for RootSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&i| i == 0 || i >= 64) {
            return Err(serde::de::Error::custom(format!("root index {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    lo: usize,
    row_of: Vec<u8>,
    shape: Partition,
}

#[derive(Serialize, Deserialize)]
struct RowsRepr {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Self { lo: 1, row_of: Vec::new(), shape: Partition::empty() }
    }

    /// Builds a tableau from its row-index vector: `row_of[k]` is the row of
    /// value `lo + k`, `0` if absent.
    pub fn from_row_of(lo: usize, row_of: Vec<u8>) -> Result<Self> {
        if lo == 0 {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        let mut counts: Vec<usize> = Vec::new();
        for (k, &r) in row_of.iter().enumerate() {
            if r == 0 {
                continue;
            }
            let r = r as usize;
            if r > counts.len() + 1 {
                return Err(Error::InvalidTableau(format!(
                    "entry {} placed in row {r} below an empty row",
                    lo + k
                )));
            }
            if r == counts.len() + 1 {
                counts.push(0);
            }
            if r > 1 && counts[r - 2] <= counts[r - 1] {
                return Err(Error::InvalidTableau(format!(
                    "entry {} breaks the column condition in row {r}",
                    lo + k
                )));
            }
            counts[r - 1] += 1;
        }
        Ok(Self { lo, row_of, shape: Partition::from_row_lengths(counts) }.trimmed())
    }

    /// Builds a tableau from its rows, checking the shape, distinctness and
    /// that rows and columns increase.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let rows: Vec<&Vec<usize>> = rows.iter().filter(|r| !r.is_empty()).collect();
        let Some(lo) = rows.iter().flat_map(|r| r.iter()).copied().min() else {
            return Ok(Self::empty());
        };
        if lo == 0 {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if rows.len() > u8::MAX as usize {
            return Err(Error::InvalidTableau("too many rows".into()));
        }
        let hi = rows.iter().flat_map(|r| r.iter()).copied().max().unwrap();
        let mut row_of = vec![0u8; hi - lo + 1];
        for (ri, row) in rows.iter().enumerate() {
            if ri > 0 && rows[ri - 1].len() < row.len() {
                return Err(Error::InvalidTableau(format!("row {} is longer than row {ri}", ri + 1)));
            }
            for (c, &x) in row.iter().enumerate() {
                if row_of[x - lo] != 0 {
                    return Err(Error::DuplicateEntry { entry: x });
                }
                row_of[x - lo] = (ri + 1) as u8;
                if c > 0 && row[c - 1] >= x {
                    return Err(Error::InvalidTableau(format!("row {} is not increasing", ri + 1)));
                }
                if ri > 0 && rows[ri - 1][c] >= x {
                    return Err(Error::InvalidTableau(format!("column {} is not increasing", c + 1)));
                }
            }
        }
        let shape = Partition::from_row_lengths(rows.iter().map(|r| r.len()).collect());
        Ok(Self { lo, row_of, shape })
    }

    /// Rows of an already standard filling; skips validation.
    pub(crate) fn from_rows_unchecked(rows: &[Vec<usize>]) -> Self {
        let lo = rows.iter().flat_map(|r| r.iter()).copied().min();
        let Some(lo) = lo else { return Self::empty() };
        let hi = rows.iter().flat_map(|r| r.iter()).copied().max().unwrap();
        let mut row_of = vec![0u8; hi - lo + 1];
        for (ri, row) in rows.iter().enumerate() {
            for &x in row {
                row_of[x - lo] = (ri + 1) as u8;
            }
        }
        let shape = Partition::from_row_lengths(rows.iter().map(|r| r.len()).collect());
        Self { lo, row_of, shape }
    }

    /// The one-row tableau on `1..=n`.
    pub fn row(n: usize) -> Self {
        Self::from_row_of(1, vec![1; n]).unwrap()
    }

    /// The one-column tableau on `1..=n`.
    pub fn column(n: usize) -> Self {
        Self::from_row_of(1, (1..=n).map(|r| r as u8).collect()).unwrap()
    }

    fn trimmed(mut self) -> Self {
        let lead = self.row_of.iter().take_while(|&&r| r == 0).count();
        if lead == self.row_of.len() {
            return Self::empty();
        }
        if lead > 0 {
            self.row_of.drain(..lead);
            self.lo += lead;
        }
        while self.row_of.last() == Some(&0) {
            self.row_of.pop();
        }
        self
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    /// Largest value in range (`lo − 1` for the empty tableau).
    pub fn hi(&self) -> usize {
        self.lo + self.row_of.len() - 1
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.shape.total()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn row_of(&self) -> &[u8] {
        &self.row_of
    }

    /// True when every value of `lo..=hi` is present.
    pub fn is_contiguous(&self) -> bool {
        self.row_of.iter().all(|&r| r != 0)
    }

    /// Row (1-based) of `x`, `None` when absent.
    pub fn row_of_entry(&self, x: usize) -> Option<usize> {
        if x < self.lo || x > self.hi() {
            return None;
        }
        match self.row_of[x - self.lo] {
            0 => None,
            r => Some(r as usize),
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.row_of_entry(x).is_some()
    }

    /// Present entries in increasing order.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        let lo = self.lo;
        self.row_of.iter().enumerate().filter(|(_, &r)| r != 0).map(move |(k, _)| lo + k)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.shape.len()];
        for x in self.entries() {
            rows[self.row_of[x - self.lo] as usize - 1].push(x);
        }
        rows
    }

    /// `τ(T) = {α_i : r(i+1) > r(i)}` over consecutive present values.
    pub fn tau(&self) -> RootSet {
        let mut s = RootSet(0);
        for k in 1..self.row_of.len() {
            let (a, b) = (self.row_of[k - 1], self.row_of[k]);
            if a != 0 && b > a {
                s.insert(self.lo + k - 1);
            }
        }
        s
    }

    pub fn transpose(&self) -> Self {
        let mut counts = vec![0u8; self.shape.len()];
        let row_of = self
            .row_of
            .iter()
            .map(|&r| {
                if r == 0 {
                    0
                } else {
                    counts[r as usize - 1] += 1;
                    counts[r as usize - 1]
                }
            })
            .collect();
        Self { lo: self.lo, row_of, shape: self.shape.conjugate() }
    }

    /// `T̄_a`: entries `≥ a` move up by one, leaving `a` absent.
    pub fn shift_entries(&self, a: usize) -> Result<Self> {
        let max = self.hi() + 1;
        if a < self.lo || a > max {
            return Err(Error::ShiftOutOfRange { a, max });
        }
        if self.row_of.is_empty() {
            return Ok(Self::empty());
        }
        if a == self.lo {
            return Ok(Self { lo: self.lo + 1, ..self.clone() });
        }
        let mut row_of = self.row_of.clone();
        if a <= self.hi() {
            row_of.insert(a - self.lo, 0);
        }
        Ok(Self { lo: self.lo, row_of, shape: self.shape.clone() })
    }

    /// `(T ⇓ a)`: Schensted row insertion of `a`.
    pub fn row_insert(&self, a: usize) -> Result<Self> {
        if self.contains(a) {
            return Err(Error::DuplicateEntry { entry: a });
        }
        let mut rows = self.rows();
        bump_into(&mut rows, a);
        Ok(Self::from_rows_unchecked(&rows))
    }

    /// `(a ⇒ T)`: column insertion, computed as row insertion of `a` followed
    /// by the reading word of `T` (rows bottom to top, left to right).
    pub fn col_insert(&self, a: usize) -> Result<Self> {
        if self.contains(a) {
            return Err(Error::DuplicateEntry { entry: a });
        }
        let mut rows: Vec<Vec<usize>> = Vec::new();
        bump_into(&mut rows, a);
        for x in self.reading_word() {
            bump_into(&mut rows, x);
        }
        Ok(Self::from_rows_unchecked(&rows))
    }

    /// Rows from bottom to top, each left to right. Row inserting this word
    /// gives back `T`.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows().into_iter().rev().flatten().collect()
    }

    /// `π_{i,j}(T)`: delete entries above `j`, then remove the entries below
    /// `i` one at a time by jeu-de-taquin slides. Entries stay `i..=j`.
    pub fn taquin_project(&self, i: usize, j: usize) -> Result<Self> {
        if !self.is_contiguous() || i > j || i < self.lo || j > self.hi() {
            return Err(Error::InvalidWindow { i, j, lo: self.lo, hi: self.hi() });
        }
        let mut rows: Vec<Vec<usize>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().filter(|&x| x <= j).collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        for _ in self.lo..i {
            delete_min(&mut rows);
        }
        Ok(Self::from_rows_unchecked(&rows))
    }

    /// Relabels the present entries as `1, 2, …` keeping their rows.
    pub fn standardize(&self) -> Self {
        let row_of: Vec<u8> = self.row_of.iter().copied().filter(|&r| r != 0).collect();
        if row_of.is_empty() {
            return Self::empty();
        }
        Self { lo: 1, row_of, shape: self.shape.clone() }
    }

    /// `φ(T)`: shapes of the truncations to `1..=k`, `k = n, n−1, …, 1`.
    pub fn phi_chain(&self) -> DiagramChain {
        let mut counts = vec![0usize; self.shape.len()];
        let mut diagrams = Vec::with_capacity(self.size());
        for &r in &self.row_of {
            if r != 0 {
                counts[r as usize - 1] += 1;
                diagrams.push(Partition::from_row_lengths(counts.clone()));
            }
        }
        diagrams.reverse();
        DiagramChain { diagrams }
    }

    /// Shapes of every window `π_{i,j}(T)`.
    pub fn varphi_grid(&self) -> DiagramGrid {
        assert!(self.is_contiguous(), "window grid needs a contiguous tableau");
        let n = self.row_of.len();
        let mut cells = Vec::with_capacity(n * (n + 1) / 2);
        let mut rows = self.rows();
        for i in 0..n {
            // rows now hold π_{lo+i, hi}(T); window shapes are row counts of
            // its entries up to each j.
            let mut where_: Vec<usize> = vec![0; n];
            for (ri, row) in rows.iter().enumerate() {
                for &x in row {
                    where_[x - self.lo] = ri;
                }
            }
            let mut counts = vec![0usize; rows.len()];
            for j in i..n {
                counts[where_[j]] += 1;
                cells.push(Partition::from_row_lengths(counts.clone()));
            }
            delete_min(&mut rows);
        }
        DiagramGrid { lo: self.lo, n, cells }
    }
}

/// Row-inserts `x`, returning the row (0-based) where the new box appears.
pub(crate) fn bump_into(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (ri, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(p) => x = std::mem::replace(&mut row[p], x),
            None => {
                row.push(x);
                return ri;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Removes the corner entry at (1,1) and slides the hole outward, always
/// pulling in the smaller of the right and lower neighbours.
pub(crate) fn delete_min(rows: &mut Vec<Vec<usize>>) {
    let (mut r, mut c) = (0usize, 0usize);
    loop {
        let right = rows[r].get(c + 1).copied();
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
        match (right, below) {
            (None, None) => break,
            (Some(a), Some(b)) => {
                debug_assert_ne!(a, b);
                if a < b {
                    rows[r][c] = a;
                    c += 1;
                } else {
                    rows[r][c] = b;
                    r += 1;
                }
            }
            (Some(a), None) => {
                rows[r][c] = a;
                c += 1;
            }
            (None, Some(b)) => {
                rows[r][c] = b;
                r += 1;
            }
        }
    }
    rows[r].pop();
    if rows[r].is_empty() {
        rows.pop();
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RowsRepr { rows: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RowsRepr::deserialize(d)?;
        Self::from_rows(&repr.rows).map_err(serde::de::Error::custom)
    }
}

/// Shapes `sh(T), sh(π_{1,n−1}(T)), …, sh(π_{1,1}(T))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramChain {
    pub diagrams: Vec<Partition>,
}

impl DiagramChain {
    /// Rebuilds the tableau on `1..=n`: value `k` fills the box added between
    /// the diagrams of sizes `k−1` and `k`.
    pub fn to_tableau(&self) -> Result<Tableau> {
        let mut row_of = Vec::with_capacity(self.diagrams.len());
        let mut prev = Partition::empty();
        for (k, d) in self.diagrams.iter().rev().enumerate() {
            if d.total() != k + 1 {
                return Err(Error::InvalidPartition(format!("chain step {d} has the wrong size")));
            }
            let len = d.len().max(prev.len());
            let grown: Vec<usize> = (0..len).filter(|&r| d.part(r) != prev.part(r)).collect();
            if grown.len() != 1 || d.part(grown[0]) != prev.part(grown[0]) + 1 {
                return Err(Error::InvalidPartition(format!("{prev} to {d} is not a one-box step")));
            }
            row_of.push(grown[0] as u8 + 1);
            prev = d.clone();
        }
        Tableau::from_row_of(1, row_of)
    }
}

/// Window shapes `sh(π_{i,j}(T))` for `lo ≤ i ≤ j ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramGrid {
    lo: usize,
    n: usize,
    cells: Vec<Partition>,
}

impl DiagramGrid {
    pub fn get(&self, i: usize, j: usize) -> &Partition {
        assert!(self.lo <= i && i <= j && j < self.lo + self.n, "window ({i},{j})");
        let (a, b) = (i - self.lo, j - self.lo);
        // rows a' < a contribute n − a' cells each
        let start = a * self.n - a * (a.saturating_sub(1)) / 2;
        &self.cells[start + (b - a)]
    }

    /// Row `i` of the grid: `sh(π_{i,n}), sh(π_{i,n−1}), …, sh(π_{i,i})`.
    pub fn row(&self, i: usize) -> Vec<&Partition> {
        let hi = self.lo + self.n - 1;
        (i..=hi).rev().map(|j| self.get(i, j)).collect()
    }
}

/// All standard tableaux on `1..=n`, sorted lexicographically by their
/// row-index vectors.
pub fn enumerate(n: usize) -> Result<Vec<Tableau>> {
    if n > ENUMERATE_LIMIT {
        return Err(Error::Budget { n, limit: ENUMERATE_LIMIT });
    }
    let mut out = Vec::new();
    let mut row_of = Vec::with_capacity(n);
    let mut counts = Vec::with_capacity(n);
    enumerate_rec(n, &mut row_of, &mut counts, &mut out);
    Ok(out)
}

fn enumerate_rec(n: usize, row_of: &mut Vec<u8>, counts: &mut Vec<usize>, out: &mut Vec<Tableau>) {
    if row_of.len() == n {
        let shape = Partition::from_row_lengths(counts.clone());
        out.push(Tableau { lo: 1, row_of: row_of.clone(), shape });
        return;
    }
    for r in 0..=counts.len() {
        let ok = r == 0 || counts[r - 1] > counts.get(r).copied().unwrap_or(0);
        if !ok {
            continue;
        }
        if r == counts.len() {
            counts.push(0);
        }
        counts[r] += 1;
        row_of.push(r as u8 + 1);
        enumerate_rec(n, row_of, counts, out);
        row_of.pop();
        counts[r] -= 1;
        if counts[r] == 0 {
            counts.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let x = t("1,2,4;3,5,6");
        assert_eq!(x.to_string(), "1,2,4;3,5,6");
        assert_eq!(x.row_of(), &[1, 1, 2, 1, 2, 2]);
        assert_eq!(x.shape(), &p("3,3"));
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"rows":[[1,2,4],[3,5,6]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), x);
        assert!("1,3;2".parse::<Tableau>().is_ok());
        assert!("1,2;2".parse::<Tableau>().is_err());
        assert!("2,1".parse::<Tableau>().is_err());
        assert!("1;2,3".parse::<Tableau>().is_err());
        assert!("1,2;3,0".parse::<Tableau>().is_err());
    }

    #[test]
    fn row_of_validation() {
        assert!(Tableau::from_row_of(1, vec![1, 2, 2]).is_err());
        assert!(Tableau::from_row_of(1, vec![2]).is_err());
        assert!(Tableau::from_row_of(1, vec![1, 2, 1, 2]).is_ok());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(t("1,2,4;3,5,6").tau(), [2, 4].into_iter().collect());
        assert!(Tableau::row(6).tau().is_empty());
        assert_eq!(Tableau::column(6).tau(), RootSet::full(6));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(t("1,3,5;2,4").transpose(), t("1,2;3,4;5"));
        assert_eq!(Tableau::row(5).transpose(), Tableau::column(5));
        let x = t("1,2,6;3,5;4,7");
        assert_eq!(x.transpose().transpose(), x);
    }

    #[test]
    fn shift_examples() {
        let x = t("1,2,6;3,5;4,7");
        assert_eq!(x.shift_entries(8).unwrap(), x);
        let s5 = x.shift_entries(5).unwrap();
        assert_eq!(s5.rows(), vec![vec![1, 2, 7], vec![3, 6], vec![4, 8]]);
        assert!(!s5.contains(5));
        assert_eq!(x.shift_entries(1).unwrap().to_string(), "2,3,7;4,6;5,8");
        assert!(x.shift_entries(9).is_err());
        assert!(x.shift_entries(0).is_err());
    }

    #[test]
    fn row_insert_examples() {
        assert_eq!(Tableau::row(4).row_insert(5).unwrap(), Tableau::row(5));
        assert_eq!(Tableau::empty().row_insert(1).unwrap(), t("1"));
        // 5 bumps 7 out of the first row, and 7 lands at the end of the second.
        let x = t("1,2,6;3,5;4,7").shift_entries(5).unwrap();
        assert_eq!(x.row_insert(5).unwrap(), t("1,2,5;3,6,7;4,8"));
        assert!(matches!(x.row_insert(7), Err(Error::DuplicateEntry { entry: 7 })));
    }

    #[test]
    fn col_insert_examples() {
        let x = t("1,2,6;3,5;4,7").shift_entries(5).unwrap();
        assert_eq!(x.col_insert(5).unwrap(), t("1,2,7;3,6;4,8;5"));
        let y = t("1,2,6;3,7;4;5").shift_entries(5).unwrap();
        assert_eq!(y.col_insert(5).unwrap(), t("1,2,7;3,6,8;4;5"));
        assert_eq!(Tableau::empty().col_insert(1).unwrap(), t("1"));
    }

    #[test]
    fn taquin_examples() {
        let x = t("1,3,4;2,6;5");
        assert_eq!(x.taquin_project(1, 5).unwrap().shape(), &p("3,1,1"));
        assert_eq!(x.taquin_project(2, 6).unwrap(), t("2,3,4;5,6"));
        assert_eq!(x.taquin_project(1, 6).unwrap(), x);
        assert!(x.taquin_project(3, 2).is_err());
        assert!(x.taquin_project(1, 7).is_err());
        let y = t("1,2,6;3,5;4,7");
        assert_eq!(y.taquin_project(2, 7).unwrap().standardize().shape(), &p("3,2,1"));
    }

    #[test]
    fn standardize_examples() {
        let x = t("2,3,4;5,6");
        assert_eq!(x.standardize(), t("1,2,3;4,5"));
        let y = t("1,3;2");
        assert_eq!(y.standardize(), y);
    }

    #[test]
    fn phi_chain_example() {
        let chain = t("1,3,6;2,5;4").phi_chain();
        let want: Vec<Partition> =
            ["3,2,1", "2,2,1", "2,1,1", "2,1", "1,1", "1"].iter().map(|s| p(s)).collect();
        assert_eq!(chain.diagrams, want);
        let row = Tableau::row(4).phi_chain();
        assert_eq!(row.diagrams, vec![p("4"), p("3"), p("2"), p("1")]);
    }

    #[test]
    fn varphi_grid_example() {
        let g = t("1,3,4;2,6;5").varphi_grid();
        let rows: Vec<Vec<&str>> = vec![
            vec!["3,2,1", "3,1,1", "3,1", "2,1", "1,1", "1"],
            vec!["3,2", "3,1", "3", "2", "1"],
        ];
        for (i, want) in rows.iter().enumerate() {
            let got: Vec<String> = g.row(i + 1).iter().map(|x| x.to_string()).collect();
            assert_eq!(&got, want);
        }
        for k in 1..=6 {
            assert_eq!(g.get(k, k), &p("1"));
        }
    }

    #[test]
    fn grid_matches_direct_projection() {
        for n in 1..=7 {
            for x in enumerate(n).unwrap() {
                let g = x.varphi_grid();
                for i in 1..=n {
                    for j in i..=n {
                        assert_eq!(g.get(i, j), x.taquin_project(i, j).unwrap().shape());
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232, 764]);
        let e = enumerate(6).unwrap();
        assert!(e.windows(2).all(|w| w[0].row_of() < w[1].row_of()));
        assert!(enumerate(ENUMERATE_LIMIT + 1).is_err());
    }

    #[test]
    fn chain_round_trip() {
        for n in 1..=9 {
            let all = enumerate(n).unwrap();
            let mut seen = std::collections::HashSet::new();
            for x in &all {
                let c = x.phi_chain();
                assert_eq!(&c.to_tableau().unwrap(), x);
                assert!(seen.insert(c));
            }
        }
    }

    #[test]
    fn tau_of_transpose_is_complement() {
        for n in 1..=8 {
            for x in enumerate(n).unwrap() {
                assert_eq!(x.transpose().tau().0, RootSet::full(n).0 & !x.tau().0);
            }
        }
    }

    #[test]
    fn reading_word_reinserts_to_same_tableau() {
        for x in enumerate(6).unwrap() {
            let mut rows = Vec::new();
            for v in x.reading_word() {
                bump_into(&mut rows, v);
            }
            assert_eq!(Tableau::from_rows_unchecked(&rows), x);
        }
    }
}
