//! Jordan types of window submatrices of generic nilpotent upper-triangular
//! matrices over `F_p`, checked against tableau window shapes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{rs_inverse, Word};
use crate::tableau::Tableau;

pub const DEFAULT_PRIME: u64 = 1_000_000_007;

/// Strictly upper-triangular `n × n` matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFp {
    pub n: usize,
    pub p: u64,
    entries: Vec<u64>,
}

/// Positions `(i, j)`, `i < j`, 1-based, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportSet {
    pub positions: Vec<(usize, usize)>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

impl MatrixFp {
    pub fn zero(n: usize, p: u64) -> Self {
        Self { n, p, entries: vec![0; n * n] }
    }

    /// Matrix with ones at the given 1-based positions.
    pub fn from_ones(n: usize, p: u64, ones: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::zero(n, p);
        for &(i, j) in ones {
            m.set(i, j, 1)?;
        }
        Ok(m)
    }

    /// Sets entry `(i, j)` (1-based, `i < j`).
    pub fn set(&mut self, i: usize, j: usize, v: u64) -> Result<()> {
        if i == 0 || i >= j || j > self.n {
            return Err(Error::InvalidWindow { i, j, lo: 1, hi: self.n });
        }
        self.entries[(i - 1) * self.n + j - 1] = v % self.p;
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[(i - 1) * self.n + j - 1]
    }

    /// Rows and columns `i..=j`.
    pub fn window(&self, i: usize, j: usize) -> Self {
        let k = j - i + 1;
        let mut m = Self::zero(k, self.p);
        for a in 0..k {
            for b in 0..k {
                m.entries[a * k + b] = self.entries[(i - 1 + a) * self.n + (i - 1 + b)];
            }
        }
        m
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n, self.p);
        for a in 0..n {
            for c in 0..n {
                let x = self.entries[a * n + c];
                if x == 0 {
                    continue;
                }
                for b in 0..n {
                    let y = other.entries[c * n + b];
                    if y != 0 {
                        let cell = &mut out.entries[a * n + b];
                        *cell = (*cell + mul_mod(x, y, self.p)) % self.p;
                    }
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination mod `p`.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let p = self.p;
        let mut m = self.entries.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| m[r * n + col] != 0) else { continue };
            for c in 0..n {
                m.swap(rank * n + c, piv * n + c);
            }
            let inv = pow_mod(m[rank * n + col], p - 2, p);
            for r in 0..n {
                if r == rank || m[r * n + col] == 0 {
                    continue;
                }
                let f = mul_mod(m[r * n + col], inv, p);
                for c in col..n {
                    let sub = mul_mod(f, m[rank * n + c], p);
                    m[r * n + c] = (m[r * n + c] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }

    /// `B`-conjugate `g M g^{-1}` by an upper-triangular `g` with given
    /// nonzero diagonal and strict upper part (row-major).
    pub fn conjugate_upper(&self, g: &[u64]) -> Self {
        let n = self.n;
        let p = self.p;
        let g = Self { n, p, entries: g.to_vec() };
        // invert g by back substitution, column by column
        let mut inv = Self::zero(n, p);
        for col in 0..n {
            for r in (0..=col).rev() {
                let mut acc = if r == col { 1 } else { 0 };
                for k in r + 1..=col {
                    acc = (acc + p - mul_mod(g.entries[r * n + k], inv.entries[k * n + col], p)) % p;
                }
                inv.entries[r * n + col] = mul_mod(acc, pow_mod(g.entries[r * n + r], p - 2, p), p);
            }
        }
        g.mul(self).mul(&inv)
    }
}

/// Jordan type from ranks of powers: `λ'_k = rank(M^{k−1}) − rank(M^k)`,
/// returned conjugated.
pub fn jordan_type(m: &MatrixFp) -> Partition {
    let n = m.n;
    let mut ranks = vec![n];
    let mut power = m.clone();
    loop {
        let r = power.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
        power = power.mul(m);
    }
    let dual: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).filter(|&d| d > 0).collect();
    Partition::new(dual).expect("rank drops of a nilpotent matrix decrease").conjugate()
}

/// Jordan types of the leading windows `1..=k`, `k = n, n−1, …, 1`.
pub fn theta(m: &MatrixFp) -> Vec<Partition> {
    (1..=m.n).rev().map(|k| jordan_type(&m.window(1, k))).collect()
}

/// `(i, j)`, `i < j`, with `w^{-1}(i) < w^{-1}(j)`.
pub fn steinberg_support(w: &Word) -> SupportSet {
    let inv = w.inverse();
    let n = w.n();
    let mut positions = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if inv.at(i) < inv.at(j) {
                positions.push((i, j));
            }
        }
    }
    SupportSet { positions }
}

/// Uniform nonzero residues on the support, zero elsewhere. Deterministic
/// for a fixed `(support, n, p, seed)`.
pub fn sample_generic(support: &SupportSet, n: usize, p: u64, seed: u64) -> MatrixFp {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = MatrixFp::zero(n, p);
    for &(i, j) in &support.positions {
        let v = rng.gen_range(1..p);
        m.set(i, j, v).expect("support lies in the strict upper triangle");
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub i: usize,
    pub j: usize,
    pub expected: Partition,
    pub found: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleChainReport {
    pub tableau: Tableau,
    #[serde(rename = "w_T")]
    pub w_t: Word,
    pub p: u64,
    pub trials_used: usize,
    pub status: Status,
    /// Window mismatches of the last failed trial (empty on success).
    pub mismatches: Vec<Mismatch>,
}

/// Samples generic matrices on the support of the involution `w_T` and
/// compares every window's Jordan type with the tableau's window shape.
pub fn verify_double_chain(t: &Tableau, trials: usize, p: u64, seed: u64) -> Result<DoubleChainReport> {
    let n = t.size();
    let w = rs_inverse(t, t)?;
    let support = steinberg_support(&w);
    let grid = t.varphi_grid();
    let mut mismatches = Vec::new();
    for trial in 0..trials {
        let m = sample_generic(&support, n, p, seed.wrapping_add(trial as u64));
        mismatches.clear();
        for i in 1..=n {
            for j in i + 1..=n {
                let found = jordan_type(&m.window(i, j));
                let expected = grid.get(i, j);
                if &found != expected {
                    mismatches.push(Mismatch { i, j, expected: expected.clone(), found });
                }
            }
        }
        if mismatches.is_empty() {
            return Ok(DoubleChainReport {
                tableau: t.clone(),
                w_t: w,
                p,
                trials_used: trial + 1,
                status: Status::Pass,
                mismatches,
            });
        }
    }
    Ok(DoubleChainReport { tableau: t.clone(), w_t: w, p, trials_used: trials, status: Status::Fail, mismatches })
}

/// [`verify_double_chain`] over all of `T_n`, tableau `k` seeded `seed + k`.
pub fn verify_level(n: usize, trials: usize, p: u64, seed: u64) -> Result<Vec<DoubleChainReport>> {
    let all = crate::tableau::enumerate(n)?;
    all.par_iter()
        .enumerate()
        .map(|(k, t)| verify_double_chain(t, trials, p, seed.wrapping_add(k as u64)))
        .collect()
}
