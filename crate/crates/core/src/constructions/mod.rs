//! Standard finite groups, direct products, the extremal group `S_n ⋉ V`
//! and the group-spec mini-language.

mod catalog;
mod product;
pub mod registry;
mod sharp;
mod spec;
mod standard;

pub use catalog::{builtin_catalog, builtin_catalog_names};
pub use product::{make_direct_product, permutation_action, MAX_REGULAR_DEGREE};
pub use registry::{ArgumentKind, FamilyRegistry, GroupFamily};
pub use sharp::{
    make_sharp_group, make_sharp_group_as, sharp_order, SharpGroup, SharpRealization, MAX_REGULAR_SHARP_ORDER,
};
pub use spec::{parse_group_spec, GroupSpec, SpecFactor};
pub use standard::{make_standard, standard_name, standard_order, StandardKind};

use crate::group::{AssocCheck, GroupError, DEFAULT_ORDER_CAP};

/// Knobs shared by every constructor and loader.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub cap: usize,
    pub assoc: AssocCheck,
    /// Realize `Sharp<n>` by its regular action instead of the native encoding.
    pub sharp_regular: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            cap: DEFAULT_ORDER_CAP,
            assoc: AssocCheck::Auto,
            sharp_regular: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("group spec position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("group spec position {position}: unknown group kind '{text}'")]
    UnknownKind { position: usize, text: String },
    #[error("{0}")]
    InvalidParameter(String),
    #[error("construction invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
