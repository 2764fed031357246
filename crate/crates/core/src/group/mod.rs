//! Exact computation in finite groups given by permutation generators,
//! Cayley tables, or the native semidirect-product encoding.

mod algorithms;
mod cayley;
mod handle;
pub mod io;
mod permutation;
pub(crate) mod semidirect;

pub use algorithms::{
    centralizer, centralizer_elements, class_with_transversal, compose, conjugacy_classes, conjugate_by,
    derived_subgroup, element_order, generate_closure, is_perfect, is_transitive, normal_closure_elements,
    permutations_transitive, ConjugacyClass,
};
pub use cayley::{AssocCheck, CayleyTable, EXHAUSTIVE_ASSOC_LIMIT, SAMPLED_ASSOC_TRIPLES};
pub use handle::{BackingKind, Elem, GroupHandle, DEFAULT_ORDER_CAP, DENSE_TABLE_LIMIT};
pub use io::{load_cayley, load_perm_group, parse_cayley, parse_perm_group};
pub use permutation::Permutation;
pub use semidirect::SharpElement;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cannot parse element '{text}': {reason}")]
    ElementSyntax { text: String, reason: String },
    #[error("not an element of the group: {0}")]
    NotAnElement(String),
    #[error("order cap {cap} exceeded (reached {reached} elements)")]
    CapExceeded { cap: usize, reached: usize },
    #[error("table is not associative: ({a} {b}) {c} != {a} ({b} {c})")]
    NotAssociative { a: u32, b: u32, c: u32 },
    #[error("element {0} has no two-sided inverse")]
    NoInverse(u32),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("operation requires a permutation-backed group, got {0}")]
    UnsupportedBacking(String),
}
