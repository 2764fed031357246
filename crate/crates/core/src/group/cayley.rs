use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GroupError;

/// Tables up to this order are checked for associativity on every triple.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;
/// Number of random triples checked above [`EXHAUSTIVE_ASSOC_LIMIT`].
pub const SAMPLED_ASSOC_TRIPLES: usize = 100_000;
const ASSOC_SEED: u64 = 0x7553_5f66_6f72_6765;

/// How associativity is validated when a table is accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AssocCheck {
    /// Exhaustive up to [`EXHAUSTIVE_ASSOC_LIMIT`], sampled with a fixed seed above.
    #[default]
    Auto,
    Exhaustive,
    /// No associativity check at all. Only for loading deliberately broken fixtures.
    Skip,
}

/// Full multiplication table of a finite group; `table[a * order + b]` is `a b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<u32>,
    identity_index: u32,
    inverses: Vec<u32>,
}

impl CayleyTable {
    pub fn from_rows(rows: Vec<Vec<u32>>, assoc: AssocCheck) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::InvalidTable("table is empty".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::InvalidTable(format!(
                    "row {r} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x as usize >= order {
                    return Err(GroupError::InvalidTable(format!(
                        "entry {x} in row {r} is out of range"
                    )));
                }
            }
            table.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| GroupError::InvalidTable("no two-sided identity".into()))?;

        let mut inverses = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse(a as u32))?;
            inverses.push(inv as u32);
        }

        let exhaustive = match assoc {
            AssocCheck::Skip => None,
            AssocCheck::Exhaustive => Some(true),
            AssocCheck::Auto => Some(order <= EXHAUSTIVE_ASSOC_LIMIT),
        };
        let check = |a: usize, b: usize, c: usize| -> Result<(), GroupError> {
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(GroupError::NotAssociative {
                    a: a as u32,
                    b: b as u32,
                    c: c as u32,
                });
            }
            Ok(())
        };
        match exhaustive {
            Some(true) => {
                for a in 0..order {
                    for b in 0..order {
                        for c in 0..order {
                            check(a, b, c)?;
                        }
                    }
                }
            }
            Some(false) => {
                let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
                for _ in 0..SAMPLED_ASSOC_TRIPLES {
                    let (a, b, c) = (
                        rng.gen_range(0..order),
                        rng.gen_range(0..order),
                        rng.gen_range(0..order),
                    );
                    check(a, b, c)?;
                }
            }
            None => {}
        }

        Ok(CayleyTable {
            order,
            table,
            identity_index: identity as u32,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity_index(&self) -> u32 {
        self.identity_index
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub(crate) fn into_parts(self) -> (Vec<u32>, Vec<u32>) {
        (self.table, self.inverses)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.table.chunks(self.order)
    }
}
