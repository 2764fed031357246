//! The extremal group `S_n ⋉ V`, `V = (Z/2)^n / <e_1 + ... + e_n>`, of order
//! `2^(n-1) n!`, whose images of `e_1, .., e_n` form a totally symmetric set.

use crate::group::semidirect::{canonical_coset, permute_bits};
use crate::group::{Elem, GroupError, GroupHandle, Permutation, SharpElement};
use crate::tss::{verify_totally_symmetric, TssError};

use super::{BuildOptions, SpecError};

/// Which concrete form of the sharp group to work in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum SharpRealization {
    /// Pairs `(pi, v)` with canonical coset representatives.
    #[default]
    Native,
    /// Permutations of the `2^(n-1)` points of `V` under `x -> v + pi.x`.
    Affine,
    /// Left-regular action on all `2^(n-1) n!` elements.
    Regular,
}

/// Largest sharp group realized by its regular action.
pub const MAX_REGULAR_SHARP_ORDER: usize = 4096;

#[derive(Clone, Debug)]
pub struct SharpGroup {
    pub n: usize,
    pub handle: GroupHandle,
    /// Images of `e_1, .., e_n`.
    pub distinguished_tss: Vec<Elem>,
}

/// `2^(n-1) n!`, if it fits.
pub fn sharp_order(n: usize) -> Option<u128> {
    if n == 0 {
        return None;
    }
    let f = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
    1u128.checked_shl(n as u32 - 1)?.checked_mul(f)
}

/// Action of `(pi, v)` on the points of `V`, indexed by canonical coset bits shifted right once.
pub(crate) fn affine_permutation(g: &SharpElement) -> Permutation {
    let n = g.degree();
    let points = 1u32 << (n - 1);
    let images = (0..points)
        .map(|x| {
            let bits = x << 1;
            let image = canonical_coset(n, g.coset_bits() ^ permute_bits(g.perm(), bits));
            image >> 1
        })
        .collect();
    Permutation::from_images(images).expect("affine maps are bijections")
}

fn sn_generators(n: usize) -> Vec<Permutation> {
    let transposition = Permutation::from_cycles(n, &[vec![0, 1]]).expect("n >= 2");
    let cycle = Permutation::from_cycles(n, &[(0..n as u32).collect()]).expect("n >= 2");
    vec![transposition, cycle]
}

pub fn make_sharp_group(n: usize, opts: &BuildOptions) -> Result<SharpGroup, SpecError> {
    make_sharp_group_as(n, SharpRealization::Native, opts)
}

pub fn make_sharp_group_as(
    n: usize,
    realization: SharpRealization,
    opts: &BuildOptions,
) -> Result<SharpGroup, SpecError> {
    if n < 3 {
        return Err(SpecError::InvalidParameter(format!(
            "Sharp{n} requires n >= 3: for n = 2 the images of e_1 and e_2 in V coincide, \
             so the distinguished set collapses to one element"
        )));
    }
    if n > crate::group::semidirect::MAX_SHARP_DEGREE {
        return Err(SpecError::InvalidParameter(format!("Sharp{n} is too large")));
    }
    let expected = sharp_order(n).unwrap_or(u128::MAX);
    let cap = match realization {
        SharpRealization::Regular => opts.cap.min(MAX_REGULAR_SHARP_ORDER),
        _ => opts.cap,
    };
    if expected > cap as u128 {
        return Err(SpecError::Group(GroupError::CapExceeded {
            cap,
            reached: usize::try_from(expected).unwrap_or(usize::MAX),
        }));
    }

    let mut gens: Vec<SharpElement> = sn_generators(n).into_iter().map(|p| SharpElement::new(p, 0)).collect();
    gens.push(SharpElement::basis(n, 0));
    let basis: Vec<SharpElement> = (0..n).map(|i| SharpElement::basis(n, i)).collect();
    let name = format!("Sharp{n}");

    let native = GroupHandle::from_sharp_elements(&name, n, &gens, opts.cap)?;
    let (handle, distinguished) = match realization {
        SharpRealization::Native => {
            let tss = basis
                .iter()
                .map(|b| native.find_sharp(b).expect("basis vectors lie in the group"))
                .collect();
            (native, tss)
        }
        SharpRealization::Affine => {
            let perms: Vec<Permutation> = gens.iter().map(affine_permutation).collect();
            let handle = GroupHandle::from_permutations(&name, 1 << (n - 1), &perms, opts.cap)?;
            let tss = basis
                .iter()
                .map(|b| {
                    handle
                        .find_permutation(&affine_permutation(b))
                        .expect("basis vectors lie in the group")
                })
                .collect();
            (handle, tss)
        }
        SharpRealization::Regular => {
            let perms = native.regular_permutations(MAX_REGULAR_SHARP_ORDER)?;
            let handle = GroupHandle::from_permutations(&name, native.order(), &perms, opts.cap)?;
            let tss = basis
                .iter()
                .map(|b| {
                    let e = native.find_sharp(b).expect("basis vectors lie in the group");
                    let images = native.elements().map(|x| native.mul(e, x).index() as u32);
                    let p = Permutation::from_images(images.collect()).expect("bijection");
                    handle.find_permutation(&p).expect("image lies in the group")
                })
                .collect();
            (handle, tss)
        }
    };

    if handle.order() as u128 != expected {
        return Err(SpecError::InvariantViolated(format!(
            "{name} has order {}, expected {expected}",
            handle.order()
        )));
    }
    let sharp = SharpGroup {
        n,
        handle,
        distinguished_tss: distinguished,
    };
    match verify_totally_symmetric(&sharp.handle, &sharp.distinguished_tss) {
        Ok(_) => Ok(sharp),
        Err(TssError::NotTotallySymmetric(reason)) => Err(SpecError::InvariantViolated(format!(
            "distinguished set of {name} failed verification: {reason}"
        ))),
        Err(other) => Err(SpecError::InvariantViolated(other.to_string())),
    }
}
