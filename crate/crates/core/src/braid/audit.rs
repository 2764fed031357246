use crate::group::{is_perfect, GroupHandle};
use crate::tss::thm1_bound;

use super::enumerate::{EnumOptions, HomCounts, StrategyRegistry};
use super::relations::{relation_transcript, RelationRecord};
use super::HomError;

/// How many non-cyclic orbit representatives are kept per group as witnesses.
pub const MAX_WITNESSES_PER_GROUP: usize = 32;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AuditRegion {
    /// `|G| < thm1_bound(n)`; any non-cyclic homomorphism here breaks the bound.
    BelowTheorem1,
    /// `thm1_bound(n) <= |G| < n!`; non-cyclic homomorphisms here are recorded as candidates.
    Question1Window,
    /// `|G| >= n!`.
    NotBelowSymmetric,
}

impl AuditRegion {
    pub fn as_str(self) -> &'static str {
        match self {
            AuditRegion::BelowTheorem1 => "below-theorem1",
            AuditRegion::Question1Window => "question1-window",
            AuditRegion::NotBelowSymmetric => "not-below-symmetric",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AuditStatus {
    Consistent,
    WitnessFound,
    Question1Candidate,
    Skipped,
    Incomplete,
    Error,
}

impl AuditStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            AuditStatus::Consistent => "consistent",
            AuditStatus::WitnessFound => "WITNESS-FOUND",
            AuditStatus::Question1Candidate => "question1-candidate",
            AuditStatus::Skipped => "skipped",
            AuditStatus::Incomplete => "incomplete",
            AuditStatus::Error => "error",
        }
    }
}

/// A non-cyclic homomorphism with every relation evaluated, so it can be rechecked by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub group: String,
    pub images: Vec<String>,
    pub transcript: Vec<RelationRecord>,
}

#[derive(Clone, Debug)]
pub struct GroupAudit {
    pub group: String,
    pub order: u64,
    pub bound: u128,
    pub region: AuditRegion,
    pub perfect: bool,
    pub counts: Option<HomCounts>,
    pub status: AuditStatus,
    pub witnesses: Vec<Witness>,
    /// Non-cyclic representatives in the Question 1 window, kept the same way as witnesses.
    pub candidates: Vec<Witness>,
    pub nodes: u64,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub n: usize,
    pub bound: u128,
    pub symmetric_order: u128,
    pub records: Vec<GroupAudit>,
    /// Groups left out by the `|G| < n!` filter, with their orders.
    pub excluded: Vec<(String, u64)>,
    pub status: AuditStatus,
}

impl AuditReport {
    pub fn witnesses(&self) -> impl Iterator<Item = &Witness> {
        self.records.iter().flat_map(|r| r.witnesses.iter())
    }
}

#[derive(Clone, Debug)]
pub struct AuditOptions {
    pub budget: u64,
    pub jobs: usize,
    /// Name of the enumeration strategy in [`StrategyRegistry::builtin`].
    pub strategy: String,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            budget: 1_000_000_000,
            jobs: 1,
            strategy: "reduced".into(),
        }
    }
}

fn symmetric_order(n: usize) -> u128 {
    (1..=n as u128)
        .try_fold(1u128, |a, k| a.checked_mul(k))
        .unwrap_or(u128::MAX)
}

fn region_of(order: u64, bound: u128, sym: u128) -> AuditRegion {
    let order = order as u128;
    if order < bound {
        AuditRegion::BelowTheorem1
    } else if order < sym {
        AuditRegion::Question1Window
    } else {
        AuditRegion::NotBelowSymmetric
    }
}

fn check_n(n: usize) -> Result<u128, HomError> {
    if n < 5 {
        return Err(HomError::NotApplicable(format!("audits need n >= 5, got {n}")));
    }
    Ok(thm1_bound(n as u32)?)
}

fn enumerate_region(
    n: usize,
    g: &GroupHandle,
    region: AuditRegion,
    bound: u128,
    opts: &AuditOptions,
) -> Result<GroupAudit, HomError> {
    let enum_opts = EnumOptions {
        non_cyclic_only: true,
        up_to_conjugacy: true,
        transitive_only: false,
        collect: true,
        budget: opts.budget,
        jobs: opts.jobs,
    };
    let registry = StrategyRegistry::builtin();
    let strategy = registry.get(&opts.strategy)?;
    let mut e = strategy.enumerate(n, g, &enum_opts)?;
    if e.homs.is_empty() && e.counts.non_cyclic > 0 {
        // no orbit was minimal: fall back to the raw tuples
        e.homs = strategy
            .enumerate(
                n,
                g,
                &EnumOptions {
                    up_to_conjugacy: false,
                    ..enum_opts
                },
            )?
            .homs;
    }
    let found: Vec<Witness> = e
        .homs
        .iter()
        .take(MAX_WITNESSES_PER_GROUP)
        .map(|h| {
            Ok(Witness {
                group: g.name().to_string(),
                images: h.format_images(),
                transcript: relation_transcript(n, &h.images, g)?,
            })
        })
        .collect::<Result<_, HomError>>()?;
    let mut record = GroupAudit {
        group: g.name().to_string(),
        order: g.order() as u64,
        bound,
        region,
        perfect: is_perfect(g),
        counts: Some(e.counts),
        status: AuditStatus::Consistent,
        witnesses: Vec::new(),
        candidates: Vec::new(),
        nodes: e.nodes,
        note: None,
    };
    match region {
        AuditRegion::BelowTheorem1 if !found.is_empty() => {
            record.status = AuditStatus::WitnessFound;
            record.witnesses = found;
            record.note = Some("non-cyclic homomorphism below the Theorem 1 bound".into());
        }
        AuditRegion::Question1Window if !found.is_empty() => {
            record.status = AuditStatus::Question1Candidate;
            record.candidates = found;
        }
        _ => {}
    }
    if !e.complete {
        if record.status == AuditStatus::Consistent {
            record.status = AuditStatus::Incomplete;
        }
        record.note = Some(format!("enumeration budget of {} nodes exhausted", opts.budget));
    }
    Ok(record)
}

/// Checks that every homomorphism `B_n -> G` is cyclic when `|G| < thm1_bound(n)`.
/// Groups at or above the bound are reported as skipped.
pub fn audit_group(n: usize, g: &GroupHandle, opts: &AuditOptions) -> Result<GroupAudit, HomError> {
    let bound = check_n(n)?;
    let region = region_of(g.order() as u64, bound, symmetric_order(n));
    if region != AuditRegion::BelowTheorem1 {
        return Ok(GroupAudit {
            group: g.name().to_string(),
            order: g.order() as u64,
            bound,
            region,
            perfect: is_perfect(g),
            counts: None,
            status: AuditStatus::Skipped,
            witnesses: Vec::new(),
            candidates: Vec::new(),
            nodes: 0,
            note: Some(format!("order {} is not below the bound {bound}", g.order())),
        });
    }
    enumerate_region(n, g, region, bound, opts)
}

/// Audits every catalog group with `|G| < n!`, both below the Theorem 1 bound and
/// in the Question 1 window. Per-group failures become `Error` records.
pub fn audit_catalog(n: usize, catalog: &[GroupHandle], opts: &AuditOptions) -> Result<AuditReport, HomError> {
    let bound = check_n(n)?;
    let sym = symmetric_order(n);
    let mut records = Vec::new();
    let mut excluded = Vec::new();
    for g in catalog {
        let region = region_of(g.order() as u64, bound, sym);
        if region == AuditRegion::NotBelowSymmetric {
            excluded.push((g.name().to_string(), g.order() as u64));
            continue;
        }
        let record = enumerate_region(n, g, region, bound, opts).unwrap_or_else(|err| GroupAudit {
            group: g.name().to_string(),
            order: g.order() as u64,
            bound,
            region,
            perfect: is_perfect(g),
            counts: None,
            status: AuditStatus::Error,
            witnesses: Vec::new(),
            candidates: Vec::new(),
            nodes: 0,
            note: Some(err.to_string()),
        });
        records.push(record);
    }
    let status = overall_status(&records);
    Ok(AuditReport {
        n,
        bound,
        symmetric_order: sym,
        records,
        excluded,
        status,
    })
}

fn overall_status(records: &[GroupAudit]) -> AuditStatus {
    let has = |s: AuditStatus| records.iter().any(|r| r.status == s);
    if has(AuditStatus::WitnessFound) {
        AuditStatus::WitnessFound
    } else if has(AuditStatus::Incomplete) {
        AuditStatus::Incomplete
    } else if has(AuditStatus::Question1Candidate) {
        AuditStatus::Question1Candidate
    } else {
        AuditStatus::Consistent
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// The catalog is whatever was available; absence of perfect groups is evidence only.
    Sampled,
    /// The caller vouches that the catalog contains every group below the limit.
    Exhaustive,
}

impl ScanMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ScanMode::Sampled => "sampled",
            ScanMode::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PerfectScan {
    pub mode: ScanMode,
    pub limit: u64,
    /// `(name, order, perfect)` for every catalog group below the limit.
    pub groups: Vec<(String, u64, bool)>,
    /// Nontrivial perfect groups found below the limit.
    pub perfect_below: Vec<String>,
}

/// Order below which no nontrivial perfect group exists; any nontrivial quotient of `B_5'` is perfect.
pub const PERFECT_SCAN_LIMIT: u64 = 60;

pub fn perfect_scan(catalog: &[GroupHandle], mode: ScanMode) -> PerfectScan {
    let mut groups = Vec::new();
    let mut perfect_below = Vec::new();
    for g in catalog.iter().filter(|g| (g.order() as u64) < PERFECT_SCAN_LIMIT) {
        let perfect = is_perfect(g);
        if perfect && g.order() > 1 {
            perfect_below.push(g.name().to_string());
        }
        groups.push((g.name().to_string(), g.order() as u64, perfect));
    }
    PerfectScan {
        mode,
        limit: PERFECT_SCAN_LIMIT,
        groups,
        perfect_below,
    }
}
