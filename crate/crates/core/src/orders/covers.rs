//! Cover (Hasse) phenomena: the box-move covers and their behaviour under
//! `T_{α,β}`.

use serde::{Deserialize, Serialize};

use super::{Level, OrderRelation, NONE};
use crate::tableau::Tableau;

/// Moves the box holding `n` from its row `i` down to row `i+k`, where `k ≥ 1`
/// is minimal with `λ_{i+k} ≤ λ_i − 2`. `None` when `λ_i < 2`.
pub fn jump_move(t: &Tableau) -> Option<Tableau> {
    let n = t.size();
    if n == 0 || t.lo() != 1 || !t.is_contiguous() {
        return None;
    }
    let i = t.row_of_entry(n)?;
    let shape = t.shape();
    let li = shape.part(i - 1);
    if li < 2 {
        return None;
    }
    let k = (1..).find(|&k| shape.part(i - 1 + k) + 2 <= li)?;
    let mut r = t.row_of().to_vec();
    r[n - 1] = (i + k) as u8;
    Tableau::from_row_of(1, r).ok()
}

/// `S` covers `T`: `T < S` with nothing strictly between.
pub fn is_cover(rel: &OrderRelation, a: usize, b: usize) -> bool {
    if a == b || !rel.contains(a, b) {
        return false;
    }
    !rel.bits.row_iter(a).any(|c| c != a && c != b && rel.contains(c, b))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCheck {
    pub checked: usize,
    pub failures: Vec<(Tableau, Tableau)>,
}

impl CoverCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `T` where the box move applies, checks that it yields a cover.
pub fn check_jump_covers(rel: &OrderRelation, level: &Level) -> CoverCheck {
    let covers = rel.bits.hasse();
    let mut out = CoverCheck::default();
    for (a, t) in level.tableaux.iter().enumerate() {
        let Some(s) = jump_move(t) else { continue };
        let b = level.index_of(&s).expect("box move keeps the tableau standard");
        out.checked += 1;
        if !covers.get(a, b) {
            out.failures.push((t.clone(), s));
        }
    }
    out
}

/// For every cover `T ⋖ S` and every `T_{α,β}` defined on both, checks that
/// the images form a cover again.
pub fn check_cover_preservation(rel: &OrderRelation, level: &Level) -> CoverCheck {
    let covers = rel.bits.hasse();
    let mut out = CoverCheck::default();
    for (a, b) in covers.pairs() {
        for tab in &level.tab {
            let (x, y) = (tab[a], tab[b]);
            if x == NONE || y == NONE {
                continue;
            }
            out.checked += 1;
            if !covers.get(x as usize, y as usize) {
                out.failures.push((level.tableau(a).clone(), level.tableau(b).clone()));
            }
        }
    }
    out
}
