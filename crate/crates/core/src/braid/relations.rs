use crate::group::{Elem, GroupHandle};

use super::HomError;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// `t_i t_j t_i = t_j t_i t_j` for `j = i + 1`.
    Braid,
    /// `t_i t_j = t_j t_i` for `j >= i + 2`.
    Commute,
}

/// A relation between generators `i < j` (1-based, as in `σ_i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub i: usize,
    pub j: usize,
    pub kind: RelationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub holds: bool,
    pub first_violation: Option<Relation>,
}

/// One evaluated relation with both sides written out, for reproducible witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationRecord {
    pub relation: Relation,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[inline]
pub(crate) fn braids(g: &GroupHandle, a: Elem, b: Elem) -> bool {
    let ab = g.mul(a, b);
    g.mul(ab, a) == g.mul(g.mul(b, a), b)
}

fn relations(n: usize) -> impl Iterator<Item = Relation> {
    let k = n.saturating_sub(1);
    (1..=k).flat_map(move |i| {
        (i + 1..=k).map(move |j| Relation {
            i,
            j,
            kind: if j == i + 1 {
                RelationKind::Braid
            } else {
                RelationKind::Commute
            },
        })
    })
}

fn sides(g: &GroupHandle, images: &[Elem], r: &Relation) -> (Elem, Elem) {
    let (a, b) = (images[r.i - 1], images[r.j - 1]);
    match r.kind {
        RelationKind::Braid => (g.mul(g.mul(a, b), a), g.mul(g.mul(b, a), b)),
        RelationKind::Commute => (g.mul(a, b), g.mul(b, a)),
    }
}

fn check_len(n: usize, images: &[Elem], g: &GroupHandle) -> Result<(), HomError> {
    if n < 1 || images.len() != n - 1 {
        return Err(HomError::LengthMismatch {
            expected: n.saturating_sub(1),
            got: images.len(),
        });
    }
    for &t in images {
        g.check(t)?;
    }
    Ok(())
}

/// Checks the Artin relations of `B_n` on `images = (t_1, .., t_{n-1})`,
/// reporting the first failing pair in lexicographic order.
pub fn braid_relations_hold(n: usize, images: &[Elem], g: &GroupHandle) -> Result<RelationCheck, HomError> {
    check_len(n, images, g)?;
    for r in relations(n) {
        let (lhs, rhs) = sides(g, images, &r);
        if lhs != rhs {
            return Ok(RelationCheck {
                holds: false,
                first_violation: Some(r),
            });
        }
    }
    Ok(RelationCheck {
        holds: true,
        first_violation: None,
    })
}

/// Every relation of `B_n` evaluated on `images`.
pub fn relation_transcript(n: usize, images: &[Elem], g: &GroupHandle) -> Result<Vec<RelationRecord>, HomError> {
    check_len(n, images, g)?;
    Ok(relations(n)
        .map(|r| {
            let (lhs, rhs) = sides(g, images, &r);
            RelationRecord {
                holds: lhs == rhs,
                lhs: g.format_element(lhs),
                rhs: g.format_element(rhs),
                relation: r,
            }
        })
        .collect())
}
