use crate::group::{permutations_transitive, BackingKind, Elem, GroupHandle, Permutation};

use super::HomError;

/// A homomorphism `B_n -> G` given by the images `t_i` of the generators `σ_i`.
#[derive(Clone, Debug)]
pub struct BraidHom<'g> {
    pub n: usize,
    pub target: &'g GroupHandle,
    pub images: Vec<Elem>,
    /// All images equal, i.e. the map factors through the abelianization.
    pub cyclic: bool,
    /// `None` for targets that are not permutation-backed.
    pub transitive: Option<bool>,
    /// Order of the image subgroup.
    pub image_order: u64,
}

impl<'g> BraidHom<'g> {
    /// Wraps images already known to satisfy the relations and fills in the flags.
    pub fn new(n: usize, target: &'g GroupHandle, images: Vec<Elem>) -> BraidHom<'g> {
        let cyclic = images.windows(2).all(|w| w[0] == w[1]);
        let transitive = image_transitive(target, &images);
        let image_order = target.closure_in(&images).len() as u64;
        BraidHom {
            n,
            target,
            images,
            cyclic,
            transitive,
            image_order,
        }
    }

    /// The standard projection `σ_i -> (i i+1)` into a permutation-backed target of degree `n`.
    pub fn standard_projection(n: usize, target: &'g GroupHandle) -> Result<BraidHom<'g>, HomError> {
        if target.degree() != Some(n) {
            return Err(HomError::NotApplicable(format!(
                "standard projection needs a permutation group of degree {n}"
            )));
        }
        let images = (0..n as u32 - 1)
            .map(|i| {
                let p = Permutation::from_cycles(n, &[vec![i, i + 1]]).expect("valid transposition");
                target
                    .find_permutation(&p)
                    .ok_or_else(|| HomError::NotApplicable(format!("{p} is not in {}", target.name())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidHom::new(n, target, images))
    }

    pub fn format_images(&self) -> Vec<String> {
        self.images.iter().map(|&t| self.target.format_element(t)).collect()
    }
}

pub(crate) fn image_transitive(target: &GroupHandle, images: &[Elem]) -> Option<bool> {
    if target.backing() != BackingKind::Permutation {
        return None;
    }
    let degree = target.degree()?;
    let perms: Vec<&Permutation> = images
        .iter()
        .map(|&t| target.permutation(t).expect("permutation-backed"))
        .collect();
    Some(permutations_transitive(degree, &perms))
}

/// `f(X)` for `X = {σ_1, σ_3, σ_5, ..}` (`⌊n/2⌋` generators), as a sorted set.
pub fn image_of_x(n: usize, images: &[Elem]) -> Vec<Elem> {
    let mut set: Vec<Elem> = (1..=n / 2).map(|i| images[2 * i - 2]).collect();
    set.sort_unstable();
    set.dedup();
    set
}

/// `f(X')` for `X' = {σ_1 σ_{2i-1}^-1 : 2 <= i <= ⌊n/2⌋}`, as a sorted set.
pub fn image_of_x_prime(n: usize, images: &[Elem], g: &GroupHandle) -> Vec<Elem> {
    let mut set: Vec<Elem> = (2..=n / 2)
        .map(|i| g.mul(images[0], g.inverse(images[2 * i - 2])))
        .collect();
    set.sort_unstable();
    set.dedup();
    set
}

/// Flags of a homomorphism plus the images of the two totally symmetric sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub cyclic: bool,
    pub transitive: Option<bool>,
    pub image_order: u64,
    pub fx: Vec<Elem>,
    pub fx_prime: Vec<Elem>,
}

pub fn classify(h: &BraidHom<'_>) -> Classification {
    Classification {
        cyclic: h.cyclic,
        transitive: h.transitive,
        image_order: h.image_order,
        fx: image_of_x(h.n, &h.images),
        fx_prime: image_of_x_prime(h.n, &h.images, h.target),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    /// `t_1 = t_3`.
    pub first_equals_third: bool,
    /// All `t_i` equal.
    pub cyclic: bool,
    pub equivalent: bool,
}

/// Compares `t_1 = t_3` with cyclicity; for `n >= 5` the two agree on every homomorphism.
pub fn cyclicity_criterion(h: &BraidHom<'_>) -> Result<CriterionReport, HomError> {
    if h.n < 5 {
        return Err(HomError::NotApplicable(format!(
            "the t1 = t3 criterion needs n >= 5, got {}",
            h.n
        )));
    }
    let first_equals_third = h.images[0] == h.images[2];
    Ok(CriterionReport {
        first_equals_third,
        cyclic: h.cyclic,
        equivalent: first_equals_third == h.cyclic,
    })
}
