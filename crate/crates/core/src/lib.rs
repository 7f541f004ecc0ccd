//! Orders on standard Young tableaux.
//!
//! Builds the induced Duflo, chain, Duflo-Vogan and Vogan-chain orders on
//! `T_n` together with the combinatorics they rest on: Robinson–Schensted,
//! jeu de taquin, τ-invariants, Vogan's `T_{α,β}`, Kazhdan–Lusztig cells and
//! Jordan types of window submatrices.

pub mod bitmat;
pub mod error;
pub mod kl;
pub mod orders;
pub mod partition;
pub mod perm;
pub mod spaltenstein;
pub mod tableau;
pub mod vogan;

pub use error::{Error, Result};
pub use orders::{Engine, OrderId, OrderRelation};
pub use partition::{partition_covers, partitions_of, shape_geq, Partition};
pub use perm::{duflo_leq, project_word, right_cover_successors, rs, rs_inverse, tau_word, Word};
pub use tableau::{enumerate, RootSet, Tableau};
pub use vogan::{in_domain, t_ab_reachable, t_ab_tableau, t_ab_word, AdjacentPair, Direction};
