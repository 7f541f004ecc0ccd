//! Orders on `T_n` as bit-matrix relations over the canonical index.
//!
//! Orientation: `T ≤ S` means `S` is the larger tableau, e.g. `P(w) ≤ P(w·s_i)`
//! when `ℓ(w·s_i) > ℓ(w)`. Along any of these orders `τ(T) ⊆ τ(S)` and the
//! shape of `S` is at least the shape of `T` in the diagram order.

mod build;
pub mod covers;
pub mod io;
mod level;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitmat::BitMatrix;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{RootSet, Tableau};

pub use build::{chain_pair, chain_pair_shapes_only, Engine, MAX_ORDER_N};
pub use level::{Level, NONE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderId {
    /// Induced Duflo order.
    D,
    /// Chain order.
    Ch,
    /// Duflo-Vogan order.
    DV,
    /// Vogan-chain order.
    VCh,
    /// Left-cell order from Kazhdan–Lusztig μ-edges.
    Kl,
    Custom,
}

impl OrderId {
    /// Byte tag used in relation files.
    pub fn code(self) -> u8 {
        match self {
            OrderId::D => 1,
            OrderId::Ch => 2,
            OrderId::DV => 3,
            OrderId::VCh => 4,
            OrderId::Kl => 5,
            OrderId::Custom => 0,
        }
    }

    pub fn from_code(c: u8) -> Result<Self> {
        Ok(match c {
            1 => OrderId::D,
            2 => OrderId::Ch,
            3 => OrderId::DV,
            4 => OrderId::VCh,
            5 => OrderId::Kl,
            0 => OrderId::Custom,
            _ => return Err(Error::Format(format!("unknown order id {c}"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderId::D => "d",
            OrderId::Ch => "ch",
            OrderId::DV => "dv",
            OrderId::VCh => "vch",
            OrderId::Kl => "kl",
            OrderId::Custom => "custom",
        }
    }
}

impl fmt::Display for OrderId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "d" => OrderId::D,
            "ch" => OrderId::Ch,
            "dv" => OrderId::DV,
            "vch" => OrderId::VCh,
            "kl" => OrderId::Kl,
            "custom" => OrderId::Custom,
            _ => return Err(Error::Parse(format!("unknown order {s:?}"))),
        })
    }
}

/// A binary relation on `T_n`: `bits[a][b]` iff tableau `a ≤` tableau `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRelation {
    pub n: usize,
    pub order: OrderId,
    pub bits: BitMatrix,
}

/// One pair of a [`diff`] report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub lower: Tableau,
    pub upper: Tableau,
    pub tau_lower: RootSet,
    pub tau_upper: RootSet,
    pub shape_lower: Partition,
    pub shape_upper: Partition,
}

impl OrderRelation {
    pub fn new(n: usize, order: OrderId, bits: BitMatrix) -> Self {
        Self { n, order, bits }
    }

    pub fn len(&self) -> usize {
        self.bits.size()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.size() == 0
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits.get(a, b)
    }

    /// `(T, S)` with `T ≤ S` looked up through `level`.
    pub fn relates(&self, level: &Level, t: &Tableau, s: &Tableau) -> Result<bool> {
        let bad = |x: &Tableau| Error::InvalidTableau(format!("{x} is not in T_{}", self.n));
        let a = level.index_of(t).ok_or_else(|| bad(t))?;
        let b = level.index_of(s).ok_or_else(|| bad(s))?;
        Ok(self.contains(a, b))
    }

    /// Number of related pairs, diagonal included.
    pub fn pair_count(&self) -> usize {
        self.bits.count()
    }

    pub fn strict_pair_count(&self) -> usize {
        self.bits.pairs().filter(|(a, b)| a != b).count()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|a| self.bits.get(a, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.bits.antisymmetry_witness().is_none()
    }

    pub fn is_transitive(&self) -> bool {
        self.bits.is_transitive()
    }

    pub fn transitive_closure(&self) -> Result<Self> {
        Ok(Self::new(self.n, self.order, self.bits.transitive_closure()?))
    }

    /// Hasse covers (transitive reduction, no diagonal). The result carries
    /// the same order id but is not itself reflexive.
    pub fn hasse_covers(&self) -> Self {
        Self::new(self.n, self.order, self.bits.hasse())
    }

    /// Pairs `(T, S)` with `T ≤ S` but `τ(T) ⊄ τ(S)`.
    pub fn tau_violations(&self, level: &Level) -> Vec<(usize, usize)> {
        self.bits.pairs().filter(|&(a, b)| level.tau[a] & !level.tau[b] != 0).collect()
    }

    /// Pairs `(T, S)` in the relation whose dual `(S^†, T^†)` is not.
    pub fn transpose_violations(&self, level: &Level) -> Vec<(usize, usize)> {
        self.bits
            .pairs()
            .filter(|&(a, b)| {
                let (ta, tb) = (level.transpose[a] as usize, level.transpose[b] as usize);
                !self.bits.get(tb, ta)
            })
            .collect()
    }
}

/// `R1 ⊆ R2`.
pub fn is_extension(r1: &OrderRelation, r2: &OrderRelation) -> Result<bool> {
    if r1.n != r2.n {
        return Err(Error::SizeMismatch(r1.n, r2.n));
    }
    Ok(r1.bits.is_subset(&r2.bits))
}

/// Pairs of `R2 \ R1` with their τ-sets and shapes.
pub fn diff(r1: &OrderRelation, r2: &OrderRelation, level: &Level) -> Result<Vec<DiffEntry>> {
    if r1.n != r2.n || level.n != r1.n {
        return Err(Error::SizeMismatch(r1.n, r2.n));
    }
    Ok(r2
        .bits
        .pairs()
        .filter(|&(a, b)| !r1.bits.get(a, b))
        .map(|(a, b)| {
            let (t, s) = (level.tableau(a), level.tableau(b));
            DiffEntry {
                lower: t.clone(),
                upper: s.clone(),
                tau_lower: t.tau(),
                tau_upper: s.tau(),
                shape_lower: t.shape().clone(),
                shape_upper: s.shape().clone(),
            }
        })
        .collect())
}
