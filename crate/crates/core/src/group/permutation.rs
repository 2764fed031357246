use std::fmt;

use super::GroupError;

/// A bijection on `{0, .., d-1}`; entry `k` of `images` is the image of point `k`.
///
/// Products follow `(p * q)(x) = p(q(x))`: the right factor acts first.
/// The derived ordering is lexicographic on the image sequence, which is the
/// fixed total order used for every enumeration over permutation groups.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        if images.is_empty() {
            return Err(GroupError::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    x + 1,
                    images.len()
                )));
            }
            if seen[x] {
                return Err(GroupError::InvalidPermutation(format!("image {} occurs twice", x + 1)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `degree` points from 0-based disjoint-or-not cycles.
    /// Cycles are multiplied right to left, matching the product convention.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut result = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            let mut seen = std::collections::HashSet::new();
            for (k, &a) in cycle.iter().enumerate() {
                if a as usize >= degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {} exceeds degree {}",
                        a + 1,
                        degree
                    )));
                }
                if !seen.insert(a) {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {} repeated within a cycle",
                        a + 1
                    )));
                }
                images[a as usize] = cycle[(k + 1) % cycle.len()];
            }
            result = Permutation { images }.compose_unchecked(&result);
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k as u32 == x)
    }

    /// `self * other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize] = k as u32;
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4)` or `()`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, GroupError> {
        let cycles = parse_cycle_list(text)?;
        Permutation::from_cycles(degree, &cycles)
    }

    /// Direct sum acting on the disjoint union: `self` on the first block, `other` shifted.
    pub fn disjoint_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.degree() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Permutation { images }
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<u32>>, GroupError> {
    let bad = |msg: String| GroupError::ElementSyntax {
        text: text.trim().to_string(),
        reason: msg,
    };
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(bad("empty element".into()));
    }
    while !rest.is_empty() {
        let inner = rest.strip_prefix('(').ok_or_else(|| bad("expected '('".into()))?;
        let close = inner.find(')').ok_or_else(|| bad("unclosed cycle".into()))?;
        let body = &inner[..close];
        let mut cycle = Vec::new();
        for token in body.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let point: u32 = token.parse().map_err(|_| bad(format!("'{token}' is not a point")))?;
            if point == 0 {
                return Err(bad("points are 1-based".into()));
            }
            cycle.push(point - 1);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = inner[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
