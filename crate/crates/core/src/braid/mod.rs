//! Homomorphisms from the braid group `B_n` into finite groups, encoded by the
//! images `t_1, .., t_{n-1}` of the Artin generators.

mod audit;
mod classify;
mod enumerate;
mod relations;

pub use audit::{
    audit_catalog, audit_group, perfect_scan, AuditOptions, AuditRegion, AuditReport, AuditStatus, GroupAudit,
    PerfectScan, ScanMode, Witness, MAX_WITNESSES_PER_GROUP, PERFECT_SCAN_LIMIT,
};
pub use classify::{
    classify, cyclicity_criterion, image_of_x, image_of_x_prime, BraidHom, Classification, CriterionReport,
};
pub use enumerate::{
    enumerate_homs, EnumOptions, Enumeration, HomCounts, HomStrategy, Naive, Reduced, StrategyRegistry,
};
pub use relations::{braid_relations_hold, relation_transcript, Relation, RelationCheck, RelationKind, RelationRecord};

use crate::group::GroupError;
use crate::tss::TssError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error("expected {expected} generator images, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unknown enumeration strategy `{0}`")]
    UnknownStrategy(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Tss(#[from] TssError),
}
