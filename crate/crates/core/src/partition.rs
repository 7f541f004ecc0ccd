//! Integer partitions and the diagram order on them.
//!
//! The order follows the orbit-closure convention: `shape_geq(λ, μ)` holds
//! when every prefix sum of `λ` is at most the matching prefix sum of `μ`.
//! The one-column diagram `(1,…,1)` is the maximum and the one-row diagram
//! `(n)` is the minimum. Every other module compares shapes through
//! [`shape_geq`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from row lengths, dropping trailing zeros.
    /// Panics (in debug builds) if the lengths are not weakly decreasing.
    pub(crate) fn from_row_lengths(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_row_lengths(vec![n])
    }

    /// The one-column partition `(1,…,1)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The total `n = Σ parts`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Self { parts }
    }

    /// Partial sums `λ_1, λ_1+λ_2, …`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// `D_λ ≥ D_μ`: every prefix sum of `λ` is bounded by the prefix sum of `μ`.
pub fn shape_geq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    let (a, b) = (lambda.total(), mu.total());
    if a != b {
        return Err(Error::IncomparableTotals(a, b));
    }
    Ok(geq_unchecked(lambda, mu))
}

pub(crate) fn geq_unchecked(lambda: &Partition, mu: &Partition) -> bool {
    let (mut sl, mut sm) = (0, 0);
    for i in 0..lambda.len().min(mu.len()) {
        sl += lambda.parts[i];
        sm += mu.parts[i];
        if sl > sm {
            return false;
        }
    }
    true
}

/// The partitions covering `λ` from above in the diagram order: the box
/// moves one row down (rule i), or a box jumps over a run of rows of length
/// `λ_i − 1` to the first row of length `λ_i − 2` (rule ii).
pub fn partition_covers(lambda: &Partition) -> Vec<Partition> {
    let j = lambda.len();
    let mut out = Vec::new();
    for i in 0..j {
        let li = lambda.part(i);
        if li >= lambda.part(i + 1) + 2 {
            let mut mu = lambda.parts.clone();
            mu.resize(j + 1, 0);
            mu[i] -= 1;
            mu[i + 1] += 1;
            out.push(Partition::from_row_lengths(mu));
        }
        if li >= 2 && lambda.part(i + 1) == li - 1 {
            let mut k = 2;
            while lambda.part(i + k) == li - 1 {
                k += 1;
            }
            if lambda.part(i + k) == li - 2 {
                let mut mu = lambda.parts.clone();
                mu.resize(j + 1, 0);
                mu[i] = li - 1;
                mu[i + k] = li - 1;
                out.push(Partition::from_row_lengths(mu));
            }
        }
    }
    out
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dense lookup tables for all partitions of `1..=max_n`: ids per size and the
/// diagram order as a boolean matrix per size. Used by the bulk order code.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    by_size: Vec<Vec<Partition>>,
    ids: std::collections::HashMap<Partition, u16>,
    geq: Vec<Vec<bool>>,
}

impl PartitionTable {
    pub fn new(max_n: usize) -> Self {
        let mut by_size = vec![vec![Partition::empty()]];
        let mut ids = std::collections::HashMap::new();
        ids.insert(Partition::empty(), 0);
        let mut geq = vec![vec![true]];
        for k in 1..=max_n {
            let ps = partitions_of(k);
            let m = ps.len();
            let mut g = vec![false; m * m];
            for (a, pa) in ps.iter().enumerate() {
                ids.insert(pa.clone(), a as u16);
                for (b, pb) in ps.iter().enumerate() {
                    g[a * m + b] = geq_unchecked(pa, pb);
                }
            }
            by_size.push(ps);
            geq.push(g);
        }
        Self { by_size, ids, geq }
    }

    pub fn max_n(&self) -> usize {
        self.by_size.len() - 1
    }

    /// Id of `p` among the partitions of its total.
    pub fn id(&self, p: &Partition) -> u16 {
        self.ids[p]
    }

    pub fn get(&self, size: usize, id: u16) -> &Partition {
        &self.by_size[size][id as usize]
    }

    /// `shape_geq` on ids of two partitions of `size`.
    #[inline]
    pub fn geq(&self, size: usize, a: u16, b: u16) -> bool {
        let m = self.by_size[size].len();
        self.geq[size][a as usize * m + b as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn geq_examples() {
        // (2,2,1) has prefix sums 2,4,5, below those of (3,1,1): 3,4,5.
        assert!(shape_geq(&p("2,2,1"), &p("3,1,1")).unwrap());
        assert!(!shape_geq(&p("3,1,1"), &p("2,2,1")).unwrap());
        assert!(shape_geq(&p("2,2"), &p("3,1")).unwrap());
        assert!(!shape_geq(&p("3,1"), &p("2,2")).unwrap());
        let l = p("4,2,2,1");
        assert!(shape_geq(&l, &l).unwrap());
    }

    #[test]
    fn geq_rejects_mismatched_totals() {
        assert!(matches!(
            shape_geq(&p("3,1"), &p("2,2,1")),
            Err(Error::IncomparableTotals(4, 5))
        ));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2,1").conjugate(), p("3,2,1"));
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn covers_examples() {
        assert_eq!(partition_covers(&p("3,1")), vec![p("2,2")]);
        assert_eq!(partition_covers(&p("2,2")), vec![p("2,1,1")]);
        assert!(partition_covers(&Partition::column(6)).is_empty());
        assert_eq!(partition_covers(&p("2,1")), vec![p("1,1,1")]);
    }

    #[test]
    fn text_and_json_forms() {
        let l = p("3,2,1");
        assert_eq!(l.to_string(), "3,2,1");
        assert_eq!(serde_json::to_string(&l).unwrap(), "[3,2,1]");
        let back: Partition = serde_json::from_str("[3,2,1]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    /// Brute-force Hasse reduction of `shape_geq` over all partitions of `n`.
    fn brute_covers(n: usize, lambda: &Partition) -> Vec<Partition> {
        let all = partitions_of(n);
        let strictly_above: Vec<&Partition> = all
            .iter()
            .filter(|m| *m != lambda && geq_unchecked(m, lambda))
            .collect();
        strictly_above
            .iter()
            .filter(|m| {
                !strictly_above
                    .iter()
                    .any(|c| c != *m && geq_unchecked(m, c))
            })
            .map(|m| (*m).clone())
            .collect()
    }

    #[test]
    fn covers_match_brute_force_hasse_reduction() {
        for n in 1..=12 {
            for lambda in partitions_of(n) {
                let mut got = partition_covers(&lambda);
                let mut want = brute_covers(n, &lambda);
                got.sort_by(|a, b| a.parts.cmp(&b.parts));
                want.sort_by(|a, b| a.parts.cmp(&b.parts));
                assert_eq!(got, want, "covers of {lambda}");
            }
        }
    }

    #[test]
    fn conjugation_reverses_the_order() {
        for n in 1..=12 {
            let all = partitions_of(n);
            for a in &all {
                assert_eq!(&a.conjugate().conjugate(), a);
                for b in &all {
                    assert_eq!(
                        geq_unchecked(a, b),
                        geq_unchecked(&b.conjugate(), &a.conjugate()),
                        "{a} vs {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn order_axioms() {
        for n in 1..=8 {
            let all = partitions_of(n);
            for a in &all {
                for b in &all {
                    if a != b && geq_unchecked(a, b) {
                        assert!(!geq_unchecked(b, a));
                    }
                    for c in &all {
                        if geq_unchecked(a, b) && geq_unchecked(b, c) {
                            assert!(geq_unchecked(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_agrees_with_direct_comparison() {
        let t = PartitionTable::new(7);
        for n in 1..=7 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    assert_eq!(t.geq(n, t.id(&a), t.id(&b)), geq_unchecked(&a, &b));
                }
            }
        }
    }
}
