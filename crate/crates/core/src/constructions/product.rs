use crate::group::{BackingKind, GroupError, GroupHandle, Permutation};

use super::{sharp, BuildOptions, SpecError};

/// Largest regular action used to turn a table-backed factor into permutations.
pub const MAX_REGULAR_DEGREE: usize = 4096;

/// Generators of a faithful permutation action of `group`, with its degree.
///
/// Permutation-backed groups are used as they are; semidirect groups act
/// affinely on `V`; table-backed groups act on themselves by left multiplication.
pub fn permutation_action(group: &GroupHandle) -> Result<(usize, Vec<Permutation>), GroupError> {
    match group.backing() {
        BackingKind::Permutation => {
            let degree = group.degree().expect("permutation-backed");
            let gens = group
                .generators()
                .iter()
                .map(|&g| group.permutation(g).expect("permutation-backed").clone())
                .collect();
            Ok((degree, gens))
        }
        BackingKind::Semidirect => {
            let gens: Vec<_> = group
                .generators()
                .iter()
                .map(|&g| group.sharp_element(g).expect("semidirect").clone())
                .collect();
            let n = group.sharp_element(group.identity()).expect("semidirect").degree();
            Ok((1 << (n - 1), gens.iter().map(sharp::affine_permutation).collect()))
        }
        BackingKind::Table => {
            let gens = group.regular_permutations(MAX_REGULAR_DEGREE)?;
            Ok((group.order().max(1), gens))
        }
    }
}

/// `G x H` acting on the disjoint union of the two point sets.
pub fn make_direct_product(
    left: &GroupHandle,
    right: &GroupHandle,
    opts: &BuildOptions,
) -> Result<GroupHandle, SpecError> {
    let expected = (left.order() as u128) * (right.order() as u128);
    if expected > opts.cap as u128 {
        return Err(SpecError::Group(GroupError::CapExceeded {
            cap: opts.cap,
            reached: usize::try_from(expected).unwrap_or(usize::MAX),
        }));
    }
    let (dl, gl) = permutation_action(left)?;
    let (dr, gr) = permutation_action(right)?;
    let id_l = Permutation::identity(dl);
    let id_r = Permutation::identity(dr);
    let mut gens: Vec<Permutation> = gl.iter().map(|g| g.disjoint_sum(&id_r)).collect();
    gens.extend(gr.iter().map(|h| id_l.disjoint_sum(h)));
    let name = format!("{}x{}", left.name(), right.name());
    let product = GroupHandle::from_permutations(name, dl + dr, &gens, opts.cap)?;
    debug_assert_eq!(product.order() as u128, expected);
    Ok(product)
}
