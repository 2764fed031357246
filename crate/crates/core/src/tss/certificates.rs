//! Executable forms of the two lower-bound arguments for a totally symmetric
//! set `S` of size `n` with finite-order members:
//!
//! * torsion: with `p` the least exponent in `[1, m]` making all `s^p` equal,
//!   `|<S>| >= p^(n-1) >= 2^(n-1)`;
//! * stabilizer: the setwise stabilizer `Γ` of `S` surjects onto `Sym(S)` with
//!   kernel containing `<S>`, so `|G| >= |Γ| = |ker| n! >= 2^(n-1) n!`.
//!
//! Any failed check means a bug in the group engine; it is returned as
//! [`TssError::CertificateViolation`] with the numbers involved.

use std::collections::{HashMap, HashSet};

use super::verify::TssWitness;
use super::TssError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCertificate {
    /// Least `p` in `[1, m]` with `s_i^p = s_j^p` for all members.
    pub p: u64,
    /// Common order of the members.
    pub m: u64,
    pub generated_order: u64,
    /// `p^(n-1)`.
    pub bound: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCertificate {
    /// `|Γ|`, the setwise stabilizer of `S` under conjugation.
    pub stabilizer_order: u64,
    /// Elements of `Γ` fixing every member.
    pub kernel_order: u64,
    /// Size of the induced permutation group on `S`.
    pub image_order: u64,
    pub generated_order: u64,
    pub group_order: u64,
    /// `2^(n-1) n!`.
    pub bound: u128,
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

fn violation(what: &str, details: String) -> TssError {
    TssError::CertificateViolation(format!("{what}: {details}"))
}

pub fn torsion_certificate(w: &TssWitness<'_>) -> Result<TorsionCertificate, TssError> {
    let g = w.ambient;
    let n = w.len();
    let orders: Vec<u64> = w.set.iter().map(|&s| g.order_of(s)).collect();
    let m = orders[0];
    if orders.iter().any(|&o| o != m) {
        return Err(violation("members differ in order", format!("{orders:?}")));
    }
    let p = (1..=m)
        .find(|&k| {
            let first = g.pow(w.set[0], k);
            w.set[1..].iter().all(|&s| g.pow(s, k) == first)
        })
        .expect("k = m always works");
    let generated_order = g.closure_in(&w.set).len() as u64;
    let bound = (p as u128).checked_pow(n as u32 - 1).unwrap_or(u128::MAX);
    let two_bound = 1u128 << (n - 1).min(127);

    let cert = TorsionCertificate {
        p,
        m,
        generated_order,
        bound,
    };
    if n >= 2 && p < 2 {
        return Err(violation("distinct members with p = 1", format!("{cert:?}")));
    }
    if (generated_order as u128) < bound || bound < two_bound {
        return Err(violation("|<S>| >= p^(n-1) >= 2^(n-1) fails", format!("{cert:?}")));
    }
    Ok(cert)
}

pub fn stabilizer_certificate(w: &TssWitness<'_>) -> Result<StabilizerCertificate, TssError> {
    let g = w.ambient;
    let n = w.len();
    let position: HashMap<_, usize> = w.set.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut stabilizer = 0u64;
    let mut kernel = vec![false; g.order()];
    let mut kernel_order = 0u64;
    let mut image: HashSet<Vec<u8>> = HashSet::new();
    for h in g.elements() {
        let action: Option<Vec<u8>> = w
            .set
            .iter()
            .map(|&s| position.get(&g.conj(h, s)).map(|&i| i as u8))
            .collect();
        let Some(action) = action else { continue };
        stabilizer += 1;
        if action.iter().enumerate().all(|(i, &j)| i == j as usize) {
            kernel[h.index()] = true;
            kernel_order += 1;
        }
        image.insert(action);
    }
    let generated = g.closure_in(&w.set);
    let bound = factorial(n)
        .and_then(|f| f.checked_mul(1u128 << (n - 1).min(127)))
        .unwrap_or(u128::MAX);
    let cert = StabilizerCertificate {
        stabilizer_order: stabilizer,
        kernel_order,
        image_order: image.len() as u64,
        generated_order: generated.len() as u64,
        group_order: g.order() as u64,
        bound,
    };
    if Some(cert.image_order as u128) != factorial(n) {
        return Err(violation(
            "stabilizer does not surject onto Sym(S)",
            format!("{cert:?}"),
        ));
    }
    if let Some(&outside) = generated.iter().find(|e| !kernel[e.index()]) {
        return Err(violation(
            "<S> is not contained in the kernel",
            format!("{} {cert:?}", g.format_element(outside)),
        ));
    }
    if cert.stabilizer_order != cert.kernel_order * cert.image_order {
        return Err(violation("|Γ| != |ker| |im|", format!("{cert:?}")));
    }
    if cert.group_order < cert.stabilizer_order || (cert.stabilizer_order as u128) < bound {
        return Err(violation("|G| >= |Γ| >= 2^(n-1) n! fails", format!("{cert:?}")));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_standard, BuildOptions, StandardKind};
    use crate::group::GroupHandle;
    use crate::tss::verify_totally_symmetric;

    fn build(kind: StandardKind, n: usize) -> GroupHandle {
        make_standard(kind, n, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn singleton_of_order_five() {
        let g = build(StandardKind::Cyclic, 5);
        let gen = g.generators()[0];
        let w = verify_totally_symmetric(&g, &[gen]).unwrap();
        let t = torsion_certificate(&w).unwrap();
        assert_eq!((t.p, t.m, t.generated_order, t.bound), (1, 5, 5, 1));
        let s = stabilizer_certificate(&w).unwrap();
        // Γ is the centralizer, all of the abelian group; Sym(S) is trivial
        assert_eq!((s.stabilizer_order, s.image_order, s.kernel_order), (5, 1, 5));
    }

    #[test]
    fn two_transpositions_in_s4() {
        let g = build(StandardKind::Symmetric, 4);
        let set = g.parse_elements("(1 2);(3 4)").unwrap();
        let w = verify_totally_symmetric(&g, &set).unwrap();
        let s = stabilizer_certificate(&w).unwrap();
        assert_eq!(s.image_order, 2);
        assert_eq!(s.generated_order, 4);
        assert!(s.kernel_order >= 4);
    }
}
