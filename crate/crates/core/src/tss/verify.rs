use std::fmt;

use crate::group::{Elem, GroupHandle, Permutation};

use super::TssError;

/// Why a candidate set is not totally symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TssFailure {
    /// Elements `i` and `j` (0-based) do not commute.
    NotCommuting { i: usize, j: usize },
    /// No single element swaps `i` and `i + 1` while fixing the rest.
    NoTranspositionWitness { i: usize },
}

impl fmt::Display for TssFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TssFailure::NotCommuting { i, j } => {
                write!(f, "elements {} and {} do not commute", i + 1, j + 1)
            }
            TssFailure::NoTranspositionWitness { i } => write!(
                f,
                "no element swaps elements {} and {} while fixing the others",
                i + 1,
                i + 2
            ),
        }
    }
}

/// A verified totally symmetric set with one witness per adjacent transposition.
///
/// `transposition_witnesses[i]` conjugates `set[i]` to `set[i+1]`, `set[i+1]` to
/// `set[i]` and fixes every other member.
#[derive(Clone, Debug)]
pub struct TssWitness<'g> {
    pub set: Vec<Elem>,
    pub transposition_witnesses: Vec<Elem>,
    pub ambient: &'g GroupHandle,
}

impl<'g> TssWitness<'g> {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Whether `h s_i h^-1 = s_{sigma(i)}` for every member.
    pub fn realizes(&self, h: Elem, sigma: &Permutation) -> bool {
        let g = self.ambient;
        self.set
            .iter()
            .enumerate()
            .all(|(i, &s)| g.conj(h, s) == self.set[sigma.apply(i as u32) as usize])
    }

    /// An element realizing `sigma` (a permutation of member indices), built by
    /// composing transposition witnesses.
    pub fn witness_for(&self, sigma: &Permutation) -> Elem {
        assert_eq!(sigma.degree(), self.len(), "permutation degree must match set size");
        let g = self.ambient;
        let mut images: Vec<u32> = sigma.images().to_vec();
        let mut witness = g.identity();
        // bubble sort: each swap at j replaces sigma by sigma * (j j+1)
        let n = images.len();
        for pass in 0..n {
            for j in 0..n.saturating_sub(1 + pass) {
                if images[j] > images[j + 1] {
                    images.swap(j, j + 1);
                    witness = g.mul(self.transposition_witnesses[j], witness);
                }
            }
        }
        witness
    }
}

fn transposition_witness(group: &GroupHandle, set: &[Elem], i: usize) -> Option<Elem> {
    let (a, b) = (set[i], set[i + 1]);
    group.elements().find(|&h| {
        group.conj(h, a) == b
            && group.conj(h, b) == a
            && set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && j != i + 1)
                .all(|(_, &s)| group.conj(h, s) == s)
    })
}

/// Checks pairwise commutation then searches, in element order, for a witness
/// of each adjacent transposition.
pub(crate) fn check_set<'g>(group: &'g GroupHandle, set: &[Elem]) -> Result<TssWitness<'g>, TssFailure> {
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if !group.commutes(set[i], set[j]) {
                return Err(TssFailure::NotCommuting { i, j });
            }
        }
    }
    let mut witnesses = Vec::with_capacity(set.len().saturating_sub(1));
    for i in 0..set.len().saturating_sub(1) {
        witnesses.push(transposition_witness(group, set, i).ok_or(TssFailure::NoTranspositionWitness { i })?);
    }
    Ok(TssWitness {
        set: set.to_vec(),
        transposition_witnesses: witnesses,
        ambient: group,
    })
}

pub fn verify_totally_symmetric<'g>(group: &'g GroupHandle, set: &[Elem]) -> Result<TssWitness<'g>, TssError> {
    if set.is_empty() {
        return Err(TssError::EmptySet);
    }
    for &s in set {
        group.check(s)?;
    }
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if set[i] == set[j] {
                return Err(TssError::Duplicate { i, j });
            }
        }
    }
    check_set(group, set).map_err(TssError::NotTotallySymmetric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_standard, BuildOptions, StandardKind};

    fn sym(n: usize) -> GroupHandle {
        make_standard(StandardKind::Symmetric, n, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn singleton_needs_no_witness() {
        let g = sym(3);
        let w = verify_totally_symmetric(&g, &[g.parse_element("(1 2)").unwrap()]).unwrap();
        assert!(w.transposition_witnesses.is_empty());
    }

    #[test]
    fn non_commuting_pair_reported() {
        let g = sym(3);
        let set = g.parse_elements("(1 2);(1 3)").unwrap();
        assert!(matches!(
            verify_totally_symmetric(&g, &set),
            Err(TssError::NotTotallySymmetric(TssFailure::NotCommuting { i: 0, j: 1 }))
        ));
    }

    #[test]
    fn commuting_but_not_swappable() {
        let g = sym(4);
        // a transposition and a double transposition commute but are not conjugate
        let set = g.parse_elements("(1 2);(1 2)(3 4)").unwrap();
        assert!(matches!(
            verify_totally_symmetric(&g, &set),
            Err(TssError::NotTotallySymmetric(TssFailure::NoTranspositionWitness {
                i: 0
            }))
        ));
    }

    #[test]
    fn duplicates_and_empty_rejected() {
        let g = sym(3);
        let t = g.parse_element("(1 2)").unwrap();
        assert!(matches!(
            verify_totally_symmetric(&g, &[t, t]),
            Err(TssError::Duplicate { i: 0, j: 1 })
        ));
        assert!(matches!(verify_totally_symmetric(&g, &[]), Err(TssError::EmptySet)));
        assert!(verify_totally_symmetric(&g, &[Elem::from_index(99)]).is_err());
    }

    #[test]
    fn witness_must_fix_the_other_members() {
        let g = sym(4);
        let set = g.parse_elements("(1 2)(3 4);(1 3)(2 4);(1 4)(2 3)").unwrap();
        let w = verify_totally_symmetric(&g, &set).unwrap();
        assert_eq!(w.transposition_witnesses.len(), 2);
        let swap01 = Permutation::parse_cycles("(1 2)", 3).unwrap();
        assert!(w.realizes(w.transposition_witnesses[0], &swap01));
    }
}
