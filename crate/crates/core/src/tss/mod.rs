//! Totally symmetric sets: verification, search, lower-bound certificates and
//! the closed-form bounds for finite quotients of braid groups.

mod bounds;
mod certificates;
mod search;
mod verify;

pub use bounds::{thm1_bound, thm2_bound};
pub use certificates::{stabilizer_certificate, torsion_certificate, StabilizerCertificate, TorsionCertificate};
pub use search::{search_tss, SearchOptions, TssSearchResult};
pub use verify::{verify_totally_symmetric, TssFailure, TssWitness};

use crate::group::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TssError {
    #[error("the candidate set is empty")]
    EmptySet,
    #[error("elements {} and {} are equal", .i + 1, .j + 1)]
    Duplicate { i: usize, j: usize },
    #[error("not totally symmetric: {0}")]
    NotTotallySymmetric(TssFailure),
    #[error("certificate check failed (implementation bug): {0}")]
    CertificateViolation(String),
    #[error("bounds are stated for n >= 5, got n = {0}")]
    BoundDomain(u32),
    #[error("bound does not fit in 128 bits")]
    Overflow,
    #[error(transparent)]
    Group(#[from] GroupError),
}
