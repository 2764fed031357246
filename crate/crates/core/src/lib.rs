//! Finite group toolkit for totally symmetric sets and braid group homomorphisms.
//!
//! * [`group`]: permutation, Cayley-table and semidirect-product groups with
//!   closures, conjugacy classes, centralizers and derived subgroups.
//! * [`constructions`]: standard families, direct products, the extremal
//!   group `S_n ⋉ V` and the textual group-spec language.
//! * [`tss`]: verification and search for totally symmetric sets, lower-bound
//!   certificates and closed-form bounds.
//! * [`braid`]: enumeration and classification of homomorphisms `B_n -> G`
//!   and catalog audits.

pub mod braid;
pub mod constructions;
pub mod group;
mod parallel;
pub mod tss;

pub use group::{Elem, GroupError, GroupHandle, Permutation};
