//! Named group families selectable from text.
//!
//! Each family owns a prefix of the group-spec grammar (`S`, `A`, `C`, `Dih`,
//! `Sharp`, `file:`, `perm:`). The parser picks the longest registered prefix at
//! each factor, so new families can be added without touching the grammar.

use std::path::Path;

use crate::group::{io, GroupHandle};

use super::sharp::{make_sharp_group_as, SharpRealization};
use super::standard::{make_standard, StandardKind};
use super::{BuildOptions, SpecError};

/// How a family reads the text following its prefix.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArgumentKind {
    /// A decimal integer, e.g. the `5` of `S5`.
    Integer,
    /// Everything up to the end of the spec.
    Path,
}

pub trait GroupFamily: Send + Sync {
    fn prefix(&self) -> &'static str;
    fn argument(&self) -> ArgumentKind {
        ArgumentKind::Integer
    }
    fn summary(&self) -> &'static str;
    fn build(&self, argument: &str, opts: &BuildOptions) -> Result<GroupHandle, SpecError>;
}

fn integer(prefix: &str, argument: &str) -> Result<usize, SpecError> {
    argument
        .parse::<usize>()
        .map_err(|_| SpecError::InvalidParameter(format!("{prefix}{argument}: expected an integer size")))
}

struct Standard {
    prefix: &'static str,
    kind: StandardKind,
    summary: &'static str,
}

impl GroupFamily for Standard {
    fn prefix(&self) -> &'static str {
        self.prefix
    }
    fn summary(&self) -> &'static str {
        self.summary
    }
    fn build(&self, argument: &str, opts: &BuildOptions) -> Result<GroupHandle, SpecError> {
        make_standard(self.kind, integer(self.prefix, argument)?, opts)
    }
}

struct Sharp;

impl GroupFamily for Sharp {
    fn prefix(&self) -> &'static str {
        "Sharp"
    }
    fn summary(&self) -> &'static str {
        "S_n ⋉ (Z/2)^n/<e_1+...+e_n>, order 2^(n-1) n!"
    }
    fn build(&self, argument: &str, opts: &BuildOptions) -> Result<GroupHandle, SpecError> {
        let realization = if opts.sharp_regular {
            SharpRealization::Regular
        } else {
            SharpRealization::Native
        };
        Ok(make_sharp_group_as(integer("Sharp", argument)?, realization, opts)?.handle)
    }
}

struct CayleyFile;

impl GroupFamily for CayleyFile {
    fn prefix(&self) -> &'static str {
        "file:"
    }
    fn argument(&self) -> ArgumentKind {
        ArgumentKind::Path
    }
    fn summary(&self) -> &'static str {
        "Cayley table file"
    }
    fn build(&self, argument: &str, opts: &BuildOptions) -> Result<GroupHandle, SpecError> {
        Ok(io::load_cayley(Path::new(argument), opts.cap, opts.assoc)?)
    }
}

struct PermFile;

impl GroupFamily for PermFile {
    fn prefix(&self) -> &'static str {
        "perm:"
    }
    fn argument(&self) -> ArgumentKind {
        ArgumentKind::Path
    }
    fn summary(&self) -> &'static str {
        "permutation generators file"
    }
    fn build(&self, argument: &str, opts: &BuildOptions) -> Result<GroupHandle, SpecError> {
        Ok(io::load_perm_group(Path::new(argument), opts.cap)?)
    }
}

pub struct FamilyRegistry {
    families: Vec<Box<dyn GroupFamily>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry { families: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut registry = FamilyRegistry::empty();
        registry.register(Box::new(Standard {
            prefix: "S",
            kind: StandardKind::Symmetric,
            summary: "symmetric group on n points",
        }));
        registry.register(Box::new(Standard {
            prefix: "A",
            kind: StandardKind::Alternating,
            summary: "alternating group on n points",
        }));
        registry.register(Box::new(Standard {
            prefix: "C",
            kind: StandardKind::Cyclic,
            summary: "cyclic group of order m",
        }));
        registry.register(Box::new(Standard {
            prefix: "Dih",
            kind: StandardKind::Dihedral,
            summary: "dihedral group of order 2m on m points",
        }));
        registry.register(Box::new(Sharp));
        registry.register(Box::new(CayleyFile));
        registry.register(Box::new(PermFile));
        registry
    }

    /// Adds a family; a later family with the same prefix replaces the earlier one.
    pub fn register(&mut self, family: Box<dyn GroupFamily>) {
        self.families.retain(|f| f.prefix() != family.prefix());
        self.families.push(family);
    }

    /// The family whose prefix is the longest prefix of `text`.
    pub fn longest_match(&self, text: &str) -> Option<&dyn GroupFamily> {
        self.families
            .iter()
            .filter(|f| text.starts_with(f.prefix()))
            .max_by_key(|f| f.prefix().len())
            .map(|f| f.as_ref())
    }

    pub fn families(&self) -> impl Iterator<Item = &dyn GroupFamily> {
        self.families.iter().map(|f| f.as_ref())
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        FamilyRegistry::builtin()
    }
}
