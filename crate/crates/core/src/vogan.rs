//! Vogan's wall-crossing operators `T_{α,β}` for adjacent simple roots.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{tau_word, Word};
use crate::tableau::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `(α_i, α_{i+1})`
    Up,
    /// `(α_{i+1}, α_i)`
    Down,
}

/// The ordered pair of adjacent roots `(α, β)` on `{α_i, α_{i+1}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdjacentPair {
    pub i: usize,
    pub dir: Direction,
}

impl AdjacentPair {
    pub fn new(i: usize, dir: Direction, n: usize) -> Result<Self> {
        if i == 0 || i + 2 > n {
            let dir = match dir {
                Direction::Up => "up",
                Direction::Down => "down",
            };
            return Err(Error::PairOutOfRange { i, dir, n });
        }
        Ok(Self { i, dir })
    }

    pub fn up(i: usize) -> Self {
        Self { i, dir: Direction::Up }
    }

    pub fn down(i: usize) -> Self {
        Self { i, dir: Direction::Down }
    }

    /// Index of `α`.
    pub fn alpha(self) -> usize {
        match self.dir {
            Direction::Up => self.i,
            Direction::Down => self.i + 1,
        }
    }

    /// Index of `β`.
    pub fn beta(self) -> usize {
        match self.dir {
            Direction::Up => self.i + 1,
            Direction::Down => self.i,
        }
    }

    /// `(β, α)`.
    pub fn reversed(self) -> Self {
        let dir = match self.dir {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        };
        Self { i: self.i, dir }
    }

    /// Every adjacent pair for `S_n`, both directions.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n.saturating_sub(2)).flat_map(|i| [Self::up(i), Self::down(i)]).collect()
    }
}

impl fmt::Display for AdjacentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(α{},α{})", self.alpha(), self.beta())
    }
}

/// Text form `i,up` / `i,down`, or `i,j` naming `(α_i, α_j)`.
impl FromStr for AdjacentPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("pair {s:?}: expected `i,dir`")))?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}")));
        let i = num(a)?;
        match b.trim() {
            "up" => Ok(Self::up(i)),
            "down" => Ok(Self::down(i)),
            other => {
                let j = num(other)?;
                if j == i + 1 {
                    Ok(Self::up(i))
                } else if j + 1 == i {
                    Ok(Self::down(j))
                } else {
                    Err(Error::Parse(format!("roots α{i}, α{j} are not adjacent")))
                }
            }
        }
    }
}

/// `T ∈ D_{α,β}`: `α ∉ τ(T)` and `β ∈ τ(T)`.
pub fn in_domain(t: &Tableau, pair: AdjacentPair) -> bool {
    let tau = t.tau();
    !tau.contains(pair.alpha()) && tau.contains(pair.beta())
}

fn check_range(n: usize, lo: usize, pair: AdjacentPair) -> Result<()> {
    if lo != 1 || pair.i == 0 || pair.i + 2 > n {
        let dir = match pair.dir {
            Direction::Up => "up",
            Direction::Down => "down",
        };
        return Err(Error::PairOutOfRange { i: pair.i, dir, n });
    }
    Ok(())
}

/// The two values swapped by `T_{α,β}` on a row-index vector already known
/// to lie in the domain (`r[k]` = row of value `k+1`).
#[inline]
pub(crate) fn swapped_values(r: &[u8], pair: AdjacentPair) -> (usize, usize) {
    let i = pair.i;
    let (ri, rk) = (r[i - 1], r[i + 1]);
    match pair.dir {
        Direction::Up => {
            if ri < rk {
                (i + 1, i + 2)
            } else {
                (i, i + 1)
            }
        }
        Direction::Down => {
            if rk <= ri {
                (i + 1, i + 2)
            } else {
                (i, i + 1)
            }
        }
    }
}

/// Domain test on a row-index vector (`r[k]` = row of value `k+1`).
#[inline]
pub(crate) fn in_domain_rows(r: &[u8], pair: AdjacentPair) -> bool {
    let i = pair.i;
    let (a, b, c) = (r[i - 1], r[i], r[i + 1]);
    match pair.dir {
        Direction::Up => b <= a && c > b,
        Direction::Down => c <= b && b > a,
    }
}

/// `T_{α,β}(T)` on tableaux: swaps two neighbouring values.
pub fn t_ab_tableau(t: &Tableau, pair: AdjacentPair) -> Result<Tableau> {
    check_range(t.size(), t.lo(), pair)?;
    if !t.is_contiguous() || !in_domain(t, pair) {
        return Err(Error::DomainViolation(format!("{t} for {pair}")));
    }
    let mut r = t.row_of().to_vec();
    let (x, y) = swapped_values(&r, pair);
    r.swap(x - 1, y - 1);
    Tableau::from_row_of(1, r)
}

/// `T_{α,β}(w)`: `s_α w` if `β ∉ τ(s_α w)`, otherwise `s_β w`.
pub fn t_ab_word(w: &Word, pair: AdjacentPair) -> Result<Word> {
    check_range(w.n(), 1, pair)?;
    let tau = tau_word(w);
    if tau.contains(pair.alpha()) || !tau.contains(pair.beta()) {
        return Err(Error::DomainViolation(format!("{w} for {pair}")));
    }
    let candidate = w.simple_times(pair.alpha());
    if !tau_word(&candidate).contains(pair.beta()) {
        Ok(candidate)
    } else {
        Ok(w.simple_times(pair.beta()))
    }
}

/// The same operator read off the relative positions of `i, i+1, i+2`.
pub fn t_ab_word_by_pattern(w: &Word, pair: AdjacentPair) -> Result<Word> {
    check_range(w.n(), 1, pair)?;
    let inv = w.inverse();
    let i = pair.i;
    let (p0, p1, p2) = (inv.at(i), inv.at(i + 1), inv.at(i + 2));
    // positions in order, as value offsets 0,1,2
    let mut order = [(p0, 0usize), (p1, 1), (p2, 2)];
    order.sort();
    let pattern = [order[0].1, order[1].1, order[2].1];
    let target = match (pair.dir, pattern) {
        (Direction::Up, [0, 2, 1]) => [1, 2, 0],
        (Direction::Up, [2, 0, 1]) => [1, 0, 2],
        (Direction::Down, [1, 2, 0]) => [0, 2, 1],
        (Direction::Down, [1, 0, 2]) => [2, 0, 1],
        _ => return Err(Error::DomainViolation(format!("{w} for {pair}"))),
    };
    let mut letters = w.letters().to_vec();
    for (slot, &v) in order.iter().zip(target.iter()) {
        letters[slot.0 - 1] = i + v;
    }
    Word::new(letters)
}

/// Closure of a set of tableau pairs under simultaneous `T_{α,β}` steps
/// (both tableaux in the same domain).
pub fn t_ab_reachable(pairs: &[(Tableau, Tableau)]) -> Result<HashSet<(Tableau, Tableau)>> {
    closure(pairs, false)
}

/// As [`t_ab_reachable`], also closed under `(T, S) ↦ (S^†, T^†)`.
pub fn t_ab_transpose_orbit(pairs: &[(Tableau, Tableau)]) -> Result<HashSet<(Tableau, Tableau)>> {
    closure(pairs, true)
}

fn closure(pairs: &[(Tableau, Tableau)], transpose: bool) -> Result<HashSet<(Tableau, Tableau)>> {
    let n = pairs.first().map(|p| p.0.size()).unwrap_or(0);
    for (a, b) in pairs {
        if a.size() != n || b.size() != n {
            return Err(Error::SizeMismatch(n, a.size().max(b.size())));
        }
    }
    let mut seen: HashSet<(Tableau, Tableau)> = pairs.iter().cloned().collect();
    let mut queue: VecDeque<(Tableau, Tableau)> = pairs.iter().cloned().collect();
    while let Some((a, b)) = queue.pop_front() {
        let mut next = Vec::new();
        for pair in AdjacentPair::all(n) {
            if in_domain(&a, pair) && in_domain(&b, pair) {
                next.push((t_ab_tableau(&a, pair)?, t_ab_tableau(&b, pair)?));
            }
        }
        if transpose {
            next.push((b.transpose(), a.transpose()));
        }
        for p in next {
            if seen.insert(p.clone()) {
                queue.push_back(p);
            }
        }
    }
    Ok(seen)
}
