use std::fmt;

use super::{GroupError, Permutation};

/// An element `(pi, v)` of `S_n ⋉ (Z/2)^n / <e_1 + ... + e_n>`.
///
/// `coset` stores a vector of `(Z/2)^n` as bits (bit `i` is the coordinate of
/// `e_{i+1}`), always the lexicographically smaller of the two lifts, so its
/// first coordinate is zero. Multiplication is `(pi, v)(rho, w) = (pi rho, v + pi.w)`
/// where `pi` acts by permuting coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SharpElement {
    perm: Permutation,
    coset: u32,
}

pub(crate) const MAX_SHARP_DEGREE: usize = 31;

fn all_ones(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

pub(crate) fn canonical_coset(n: usize, bits: u32) -> u32 {
    if bits & 1 == 1 {
        bits ^ all_ones(n)
    } else {
        bits
    }
}

/// `pi . w`: coordinate `i` of `w` moves to coordinate `pi(i)`.
pub(crate) fn permute_bits(perm: &Permutation, bits: u32) -> u32 {
    let mut out = 0u32;
    for i in 0..perm.degree() {
        if bits >> i & 1 == 1 {
            out |= 1 << perm.apply(i as u32);
        }
    }
    out
}

impl SharpElement {
    pub fn new(perm: Permutation, bits: u32) -> Self {
        let n = perm.degree();
        let coset = canonical_coset(n, bits & all_ones(n));
        SharpElement { perm, coset }
    }

    pub fn identity(n: usize) -> Self {
        SharpElement::new(Permutation::identity(n), 0)
    }

    /// The image of the basis vector `e_{i+1}` (0-based `i`) in `V`.
    pub fn basis(n: usize, i: usize) -> Self {
        SharpElement::new(Permutation::identity(n), 1 << i)
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn coset_bits(&self) -> u32 {
        self.coset
    }

    pub fn mul(&self, other: &SharpElement) -> SharpElement {
        let perm = self.perm.compose_unchecked(&other.perm);
        SharpElement::new(perm, self.coset ^ permute_bits(&self.perm, other.coset))
    }

    pub fn inverse(&self) -> SharpElement {
        // (pi, v)^-1 = (pi^-1, pi^-1 . v)
        let inv = self.perm.inverse();
        let bits = permute_bits(&inv, self.coset);
        SharpElement::new(inv, bits)
    }

    /// Parses `[<cycles>|<bits>]`, e.g. `[(1 2)|0110]`; either lift of the coset is accepted.
    pub fn parse(text: &str, n: usize) -> Result<SharpElement, GroupError> {
        let bad = |reason: &str| GroupError::ElementSyntax {
            text: text.trim().to_string(),
            reason: reason.to_string(),
        };
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("expected [<cycles>|<bits>]"))?;
        let (cycles, bits) = inner.split_once('|').ok_or_else(|| bad("missing '|'"))?;
        let perm = Permutation::parse_cycles(cycles, n)?;
        let bits = bits.trim();
        if bits.len() != n {
            return Err(bad(&format!("expected {n} coordinate bits")));
        }
        let mut value = 0u32;
        for (i, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => value |= 1 << i,
                _ => return Err(bad("coordinate bits must be 0 or 1")),
            }
        }
        Ok(SharpElement::new(perm, value))
    }
}

impl fmt::Display for SharpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|", self.perm)?;
        for i in 0..self.degree() {
            write!(f, "{}", self.coset >> i & 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_vectors_collapse_for_two_coordinates() {
        assert_eq!(SharpElement::basis(2, 0), SharpElement::basis(2, 1));
        assert_ne!(SharpElement::basis(3, 0), SharpElement::basis(3, 1));
    }

    #[test]
    fn sum_of_all_basis_vectors_is_trivial() {
        let n = 4;
        let mut acc = SharpElement::identity(n);
        for i in 0..n {
            acc = acc.mul(&SharpElement::basis(n, i));
        }
        assert_eq!(acc, SharpElement::identity(n));
    }

    #[test]
    fn permutation_part_conjugates_basis_vectors() {
        let n = 4;
        let pi = Permutation::parse_cycles("(1 2 3)", n).unwrap();
        let h = SharpElement::new(pi, 0);
        for i in 0..n {
            let conj = h.mul(&SharpElement::basis(n, i)).mul(&h.inverse());
            let target = h.perm().apply(i as u32) as usize;
            assert_eq!(conj, SharpElement::basis(n, target));
        }
    }

    #[test]
    fn inverse_and_text_roundtrip() {
        let n = 4;
        let g = SharpElement::parse("[(1 3 4)|0110]", n).unwrap();
        assert!(g.mul(&g.inverse()) == SharpElement::identity(n));
        let text = g.to_string();
        assert_eq!(SharpElement::parse(&text, n).unwrap(), g);
        // the other lift names the same element
        assert_eq!(SharpElement::parse("[(1 3 4)|1001]", n).unwrap(), g);
    }
}
