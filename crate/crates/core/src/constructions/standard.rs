use crate::group::{GroupHandle, Permutation};

use super::{BuildOptions, SpecError};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Symmetric,
    Alternating,
    Cyclic,
    /// Order `2m`, acting on `m` points.
    Dihedral,
}

fn perm(degree: usize, cycles: &[Vec<u32>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("well-formed cycle")
}

fn full_cycle(m: usize) -> Permutation {
    perm(m, &[(0..m as u32).collect()])
}

/// Name used for the group in reports, matching the spec grammar.
pub fn standard_name(kind: StandardKind, size: usize) -> String {
    match kind {
        StandardKind::Symmetric => format!("S{size}"),
        StandardKind::Alternating => format!("A{size}"),
        StandardKind::Cyclic => format!("C{size}"),
        StandardKind::Dihedral => format!("Dih{size}"),
    }
}

/// Exact order of the standard group, if it fits in `u128`.
pub fn standard_order(kind: StandardKind, size: usize) -> Option<u128> {
    let factorial = |n: usize| (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    match kind {
        StandardKind::Symmetric => factorial(size),
        StandardKind::Alternating => {
            if size < 2 {
                Some(1)
            } else {
                factorial(size).map(|f| f / 2)
            }
        }
        StandardKind::Cyclic => Some(size as u128),
        StandardKind::Dihedral => Some(2 * size as u128),
    }
}

pub fn make_standard(kind: StandardKind, size: usize, opts: &BuildOptions) -> Result<GroupHandle, SpecError> {
    if size < 1 {
        return Err(SpecError::InvalidParameter(format!(
            "{} needs size >= 1",
            standard_name(kind, size)
        )));
    }
    if kind == StandardKind::Dihedral && size < 3 {
        return Err(SpecError::InvalidParameter(format!(
            "Dih{size} has no faithful action on {size} points; use C2 or C2xC2"
        )));
    }
    let expected = standard_order(kind, size).unwrap_or(u128::MAX);
    if expected > opts.cap as u128 {
        return Err(SpecError::Group(crate::group::GroupError::CapExceeded {
            cap: opts.cap,
            reached: usize::try_from(expected).unwrap_or(usize::MAX),
        }));
    }
    let n = size;
    let gens: Vec<Permutation> = match kind {
        StandardKind::Symmetric if n == 1 => vec![],
        StandardKind::Symmetric if n == 2 => vec![perm(2, &[vec![0, 1]])],
        StandardKind::Symmetric => vec![perm(n, &[vec![0, 1]]), full_cycle(n)],
        StandardKind::Alternating => (2..n as u32).map(|k| perm(n, &[vec![0, 1, k]])).collect(),
        StandardKind::Cyclic if n == 1 => vec![],
        StandardKind::Cyclic => vec![full_cycle(n)],
        StandardKind::Dihedral => {
            let reflection: Vec<Vec<u32>> = (1..n as u32)
                .filter(|&i| i < n as u32 - i)
                .map(|i| vec![i, n as u32 - i])
                .collect();
            vec![full_cycle(n), perm(n, &reflection)]
        }
    };
    let handle = GroupHandle::from_permutations(standard_name(kind, size), n.max(1), &gens, opts.cap)?;
    debug_assert_eq!(handle.order() as u128, expected);
    Ok(handle)
}
