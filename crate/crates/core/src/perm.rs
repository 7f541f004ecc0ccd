//! Permutations in one-line notation, Robinson–Schensted, and the weak order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{bump_into, RootSet, Tableau};

/// `w = [a_1, …, a_n]`, meaning `w(i) = a_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &a in &letters {
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidWord(format!("{letters:?} is not a permutation of 1..={n}")));
            }
            seen[a] = true;
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_unchecked(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn identity(n: usize) -> Self {
        Self { letters: (1..=n).collect() }
    }

    /// The longest element `w_o = [n, n−1, …, 1]`.
    pub fn longest(n: usize) -> Self {
        Self { letters: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_i`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.letters.swap(i - 1, i);
        w
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    /// `w(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.letters[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &a) in self.letters.iter().enumerate() {
            inv[a - 1] = i + 1;
        }
        Self { letters: inv }
    }

    /// `(w·y)(i) = w(y(i))`.
    pub fn compose(&self, y: &Word) -> Result<Self> {
        if self.n() != y.n() {
            return Err(Error::SizeMismatch(self.n(), y.n()));
        }
        Ok(Self { letters: y.letters.iter().map(|&k| self.letters[k - 1]).collect() })
    }

    /// `w·s_i`: swaps the letters in positions `i`, `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.letters.swap(i - 1, i);
        w
    }

    /// `s_i·w`: swaps the values `i`, `i+1`.
    pub fn simple_times(&self, i: usize) -> Self {
        let letters = self
            .letters
            .iter()
            .map(|&a| if a == i { i + 1 } else if a == i + 1 { i } else { a })
            .collect();
        Self { letters }
    }

    /// Number of inversions `ℓ(w)`.
    pub fn length(&self) -> usize {
        let l = &self.letters;
        (0..l.len()).map(|i| (i + 1..l.len()).filter(|&j| l[i] > l[j]).count()).sum()
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Word> {
        let mut cur = Some((1..=n).collect::<Vec<usize>>());
        std::iter::from_fn(move || {
            let w = cur.take()?;
            let mut next = w.clone();
            if next_permutation(&mut next) {
                cur = Some(next);
            }
            Some(Word { letters: w })
        })
    }
}

/// Advances to the next permutation in lexicographic order; false at the last.
pub(crate) fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// The `rank`-th permutation of `0..n` in lexicographic order.
pub(crate) fn unrank(n: usize, mut rank: u64) -> Vec<u8> {
    let mut fact = vec![1u64; n + 1];
    for k in 1..=n {
        fact[k] = fact[k - 1] * k as u64;
    }
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let idx = (rank / fact[k]) as usize;
        rank %= fact[k];
        out.push(pool.remove(idx));
    }
    out
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(Self::identity(0));
        }
        let letters = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

impl TryFrom<Vec<usize>> for Word {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Self {
        w.letters
    }
}

/// Robinson–Schensted: insertion tableau `P(w)` and recording tableau `Q(w)`.
pub fn rs(w: &Word) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, &a) in w.letters.iter().enumerate() {
        let r = bump_into(&mut p, a);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k + 1);
    }
    (Tableau::from_rows_unchecked(&p), Tableau::from_rows_unchecked(&q))
}

/// The word with `rs(w) = (P, Q)`.
pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(p.shape().to_string(), q.shape().to_string()));
    }
    let n = p.size();
    for t in [p, q] {
        if !t.is_contiguous() || (n > 0 && t.lo() != 1) {
            return Err(Error::InvalidTableau(format!("{t} is not standard on 1..={n}")));
        }
    }
    let mut rows = p.rows();
    let mut letters = vec![0; n];
    for k in (1..=n).rev() {
        // the box where k was recorded is a corner of the current P
        let mut r = q.row_of_entry(k).unwrap() - 1;
        let mut x = rows[r].pop().unwrap();
        if rows[r].is_empty() {
            rows.pop();
        }
        while r > 0 {
            r -= 1;
            let row = &mut rows[r];
            let pos = row.iter().rposition(|&y| y < x).unwrap();
            x = std::mem::replace(&mut row[pos], x);
        }
        letters[k - 1] = x;
    }
    Ok(Word { letters })
}

/// Weak (Duflo) order `w ≤_D y`: every inversion of values of `w` is one of `y`.
pub fn duflo_leq(w: &Word, y: &Word) -> Result<bool> {
    if w.n() != y.n() {
        return Err(Error::SizeMismatch(w.n(), y.n()));
    }
    let (wi, yi) = (w.inverse(), y.inverse());
    let n = w.n();
    for i in 0..n {
        for j in i + 1..n {
            if wi.letters[i] > wi.letters[j] && yi.letters[i] < yi.letters[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `τ(w) = {α_i : w^{-1}(i) > w^{-1}(i+1)}`.
pub fn tau_word(w: &Word) -> RootSet {
    let inv = w.inverse();
    (1..w.n()).filter(|&i| inv.at(i) > inv.at(i + 1)).collect()
}

/// `w·s_i` for each ascent `a_i < a_{i+1}`.
pub fn right_cover_successors(w: &Word) -> Vec<Word> {
    (1..w.n()).filter(|&i| w.at(i) < w.at(i + 1)).map(|i| w.times_simple(i)).collect()
}

/// `π_{i,j}(w)`: keep the letters `i..=j`, relabelled to `1..=j−i+1`.
pub fn project_word(w: &Word, i: usize, j: usize) -> Result<Word> {
    if i == 0 || i > j || j > w.n() {
        return Err(Error::InvalidWindow { i, j, lo: 1, hi: w.n() });
    }
    let letters = w.letters.iter().filter(|&&a| a >= i && a <= j).map(|&a| a - i + 1).collect();
    Ok(Word { letters })
}

/// Row-index vector of `P(w)` for a word over `0..n` (0-based letters),
/// written into `out[0..n]` as 1-based rows. Allocation free; `n ≤ 16`.
pub(crate) fn p_row_of(letters: &[u8], out: &mut [u8]) {
    let n = letters.len();
    debug_assert!(n <= 16);
    let mut rows = [[0u8; 16]; 16];
    let mut lens = [0usize; 16];
    let mut nrows = 0;
    for &a in letters {
        let mut x = a;
        let mut r = 0;
        loop {
            if r == nrows {
                rows[r][0] = x;
                lens[r] = 1;
                nrows += 1;
                break;
            }
            let row = &mut rows[r][..lens[r]];
            match row.iter().position(|&y| y > x) {
                Some(p) => {
                    std::mem::swap(&mut row[p], &mut x);
                    r += 1;
                }
                None => {
                    rows[r][lens[r]] = x;
                    lens[r] += 1;
                    break;
                }
            }
        }
    }
    for r in 0..nrows {
        for &x in &rows[r][..lens[r]] {
            out[x as usize] = r as u8 + 1;
        }
    }
}

/// Packs a row-index vector (rows `< 16`) into a `u64` key, 4 bits per entry.
pub(crate) fn pack_rows(row_of: &[u8]) -> u64 {
    row_of.iter().rev().fold(0u64, |acc, &r| acc << 4 | r as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn rs_examples() {
        assert_eq!(rs(&w("[3,5,6,1,2,4]")).0, t("1,2,4;3,5,6"));
        assert_eq!(rs(&w("[5,3,6,1,2,4]")).0, t("1,2,4;3,6;5"));
        let (p, q) = rs(&Word::identity(5));
        assert_eq!(p, Tableau::row(5));
        assert_eq!(q, Tableau::row(5));
    }

    #[test]
    fn rs_round_trip_and_symmetry() {
        for n in 0..=6 {
            for x in Word::all(n) {
                let (p, q) = rs(&x);
                assert_eq!(rs_inverse(&p, &q).unwrap(), x);
                assert_eq!(rs(&x.inverse()), (q, p));
            }
        }
    }

    #[test]
    fn rs_inverse_of_equal_pair_is_involution() {
        for n in 1..=6 {
            for x in crate::tableau::enumerate(n).unwrap() {
                let v = rs_inverse(&x, &x).unwrap();
                assert_eq!(v.inverse(), v);
            }
        }
        assert_eq!(rs_inverse(&Tableau::row(4), &Tableau::row(4)).unwrap(), Word::identity(4));
        assert!(rs_inverse(&Tableau::row(3), &Tableau::column(3)).is_err());
    }

    #[test]
    fn cell_of_two_row_tableau() {
        let target = t("1,2,4;3,5,6");
        let mut by_q: Vec<Word> = crate::tableau::enumerate(6)
            .unwrap()
            .into_iter()
            .filter(|q| q.shape() == target.shape())
            .map(|q| rs_inverse(&target, &q).unwrap())
            .collect();
        let mut by_filter: Vec<Word> = Word::all(6).filter(|x| rs(x).0 == target).collect();
        by_q.sort();
        by_filter.sort();
        assert_eq!(by_q.len(), 5);
        assert_eq!(by_q, by_filter);
    }

    #[test]
    fn duflo_examples() {
        assert!(duflo_leq(&w("[3,5,6,1,2,4]"), &w("[5,3,6,1,2,4]")).unwrap());
        assert!(!duflo_leq(&w("[2,1,3]"), &w("[1,3,2]")).unwrap());
        assert!(!duflo_leq(&w("[1,3,2]"), &w("[2,1,3]")).unwrap());
        for x in Word::all(4) {
            assert!(duflo_leq(&Word::identity(4), &x).unwrap());
        }
        assert!(duflo_leq(&Word::identity(3), &Word::identity(4)).is_err());
    }

    #[test]
    fn duflo_is_a_partial_order_reversed_by_longest_element() {
        for n in 1..=5 {
            let all: Vec<Word> = Word::all(n).collect();
            let wo = Word::longest(n);
            for a in &all {
                for b in &all {
                    let ab = duflo_leq(a, b).unwrap();
                    if ab && duflo_leq(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    let rev = duflo_leq(&b.compose(&wo).unwrap(), &a.compose(&wo).unwrap()).unwrap();
                    assert_eq!(ab, rev);
                }
            }
        }
    }

    #[test]
    fn duflo_is_generated_by_ascents() {
        // y ≤_D w iff w is reachable from y along right ascent steps
        for n in 1..=5 {
            let all: Vec<Word> = Word::all(n).collect();
            for y in &all {
                let mut reach = std::collections::HashSet::new();
                let mut stack = vec![y.clone()];
                while let Some(x) = stack.pop() {
                    if reach.insert(x.clone()) {
                        stack.extend(right_cover_successors(&x));
                    }
                }
                for x in &all {
                    assert_eq!(duflo_leq(y, x).unwrap(), reach.contains(x));
                }
            }
        }
    }

    #[test]
    fn tau_word_examples() {
        assert_eq!(tau_word(&w("[3,5,6,1,2,4]")), [2, 4].into_iter().collect());
        assert!(tau_word(&Word::identity(5)).is_empty());
        assert_eq!(tau_word(&Word::longest(5)), RootSet::full(5));
        for x in Word::all(6) {
            assert_eq!(tau_word(&x), rs(&x).0.tau());
        }
    }

    #[test]
    fn successors_examples() {
        assert_eq!(right_cover_successors(&Word::identity(4)).len(), 3);
        assert!(right_cover_successors(&Word::longest(4)).is_empty());
        let s = right_cover_successors(&w("[3,5,6,1,2,4]"));
        assert_eq!(s.len(), 4);
        for x in s {
            assert_eq!(x.length(), 9);
        }
    }

    #[test]
    fn project_word_examples() {
        let x = w("[3,5,6,1,2,4]");
        assert_eq!(project_word(&x, 1, 6).unwrap(), x);
        assert_eq!(project_word(&x, 1, 3).unwrap(), w("[3,1,2]"));
        assert_eq!(project_word(&x, 4, 6).unwrap(), w("[2,3,1]"));
        assert!(project_word(&x, 4, 7).is_err());
    }

    #[test]
    fn projection_and_reversal_identities() {
        for n in 1..=6 {
            let wo = Word::longest(n);
            for x in Word::all(n) {
                let p = rs(&x).0;
                for i in 1..=n {
                    for j in i..=n {
                        let lhs = rs(&project_word(&x, i, j).unwrap()).0;
                        assert_eq!(lhs, p.taquin_project(i, j).unwrap().standardize());
                    }
                }
                assert_eq!(rs(&x.compose(&wo).unwrap()).0, p.transpose());
            }
        }
    }

    #[test]
    fn fast_rs_matches() {
        for x in Word::all(6) {
            let letters: Vec<u8> = x.letters().iter().map(|&a| a as u8 - 1).collect();
            let mut out = [0u8; 6];
            p_row_of(&letters, &mut out);
            assert_eq!(&out[..], rs(&x).0.row_of());
        }
    }

    #[test]
    fn unrank_agrees_with_iteration() {
        for (k, x) in Word::all(5).enumerate() {
            let u: Vec<usize> = unrank(5, k as u64).iter().map(|&a| a as usize + 1).collect();
            assert_eq!(u, x.letters());
        }
        assert_eq!(factorial(5), 120);
    }

    #[test]
    fn text_and_json_forms() {
        let x = w("[3,5,6,1,2,4]");
        assert_eq!(x.to_string(), "[3,5,6,1,2,4]");
        assert_eq!(serde_json::to_string(&x).unwrap(), "[3,5,6,1,2,4]");
        assert!("[1,1,2]".parse::<Word>().is_err());
        assert_eq!("3,1,2".parse::<Word>().unwrap(), w("[3,1,2]"));
    }
}
