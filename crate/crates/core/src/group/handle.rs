use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use super::{CayleyTable, GroupError, Permutation, SharpElement};

/// Default upper bound on the order of any constructed group.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;
/// Groups up to this order carry a full multiplication table.
pub const DENSE_TABLE_LIMIT: usize = 2048;

/// Index of an element in its group's sorted element list.
///
/// Index order is the fixed total order on elements (lexicographic on images,
/// label order for tables), so iterating `0..order` is deterministic.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(index: usize) -> Elem {
        Elem(index as u32)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BackingKind {
    Permutation,
    Table,
    Semidirect,
}

#[derive(Clone, Debug)]
enum Store {
    Perm {
        degree: usize,
        elements: Vec<Permutation>,
        index: HashMap<Permutation, u32>,
    },
    Table {
        labels: Vec<u32>,
        by_label: HashMap<u32, u32>,
    },
    Sharp {
        n: usize,
        elements: Vec<SharpElement>,
        index: HashMap<SharpElement, u32>,
    },
}

/// An immutable finite group with its full element list.
///
/// Every handle carries a generating set, inverse table, and (for orders up
/// to [`DENSE_TABLE_LIMIT`]) a dense multiplication table. All caches are
/// filled at construction.
#[derive(Clone, Debug)]
pub struct GroupHandle {
    name: String,
    store: Store,
    identity: Elem,
    generators: Vec<Elem>,
    inverses: Vec<u32>,
    dense: Option<Vec<u32>>,
}

pub(crate) trait Repr: Clone + Eq + Hash + Ord {
    fn times(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Repr for Permutation {
    fn times(&self, other: &Self) -> Self {
        self.compose_unchecked(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl Repr for SharpElement {
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
}

struct Closure<R> {
    elements: Vec<R>,
    index: HashMap<R, u32>,
    generators: Vec<u32>,
    inverses: Vec<u32>,
    dense: Option<Vec<u32>>,
}

/// Breadth-first closure of `gens` under right multiplication.
fn close<R: Repr>(identity: R, gens: &[R], cap: usize) -> Result<Closure<R>, GroupError> {
    let gens: Vec<R> = {
        let mut seen = std::collections::HashSet::new();
        gens.iter().filter(|g| seen.insert((*g).clone())).cloned().collect()
    };
    let mut found: Vec<R> = vec![identity.clone()];
    let mut bfs_index: HashMap<R, u32> = HashMap::new();
    bfs_index.insert(identity, 0);
    // right_gen[x * k + j] = bfs id of found[x] * gens[j]
    let mut right_gen: Vec<u32> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = found[x].times(g);
            let id = match bfs_index.get(&y) {
                Some(&id) => id,
                None => {
                    if found.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            cap,
                            reached: found.len() + 1,
                        });
                    }
                    let id = found.len() as u32;
                    bfs_index.insert(y.clone(), id);
                    found.push(y);
                    queue.push_back(id as usize);
                    id
                }
            };
            right_gen.push(id);
        }
    }
    drop(bfs_index);

    let order = found.len();
    let mut by_rank: Vec<u32> = (0..order as u32).collect();
    by_rank.sort_by(|&a, &b| found[a as usize].cmp(&found[b as usize]));
    let mut rank = vec![0u32; order];
    for (pos, &id) in by_rank.iter().enumerate() {
        rank[id as usize] = pos as u32;
    }
    let mut slots: Vec<Option<R>> = found.into_iter().map(Some).collect();
    let elements: Vec<R> = by_rank
        .iter()
        .map(|&id| slots[id as usize].take().expect("each element taken once"))
        .collect();
    let index: HashMap<R, u32> = elements
        .iter()
        .enumerate()
        .map(|(k, e)| (e.clone(), k as u32))
        .collect();

    let k = gens.len();
    let generators: Vec<u32> = gens.iter().map(|g| index[g]).collect();
    let inverses: Vec<u32> = elements.iter().map(|e| index[&e.inv()]).collect();

    let dense = (order <= DENSE_TABLE_LIMIT).then(|| {
        // right multiplication by generator j, in sorted coordinates
        let mut right = vec![0u32; order * k];
        for id in 0..order {
            for j in 0..k {
                right[rank[id] as usize * k + j] = rank[right_gen[id * k + j] as usize];
            }
        }
        // express each element as parent * generator along a BFS tree rooted at the identity
        let mut recipe: Vec<(u32, u32, u32)> = Vec::with_capacity(order);
        let mut reached = vec![false; order];
        let root = rank[0];
        reached[root as usize] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for j in 0..k {
                let y = right[x as usize * k + j];
                if !reached[y as usize] {
                    reached[y as usize] = true;
                    recipe.push((y, x, j as u32));
                    queue.push_back(y);
                }
            }
        }
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            let row = &mut table[a * order..(a + 1) * order];
            row[root as usize] = a as u32;
            for &(b, parent, j) in &recipe {
                row[b as usize] = right[row[parent as usize] as usize * k + j as usize];
            }
        }
        table
    });

    Ok(Closure {
        elements,
        index,
        generators,
        inverses,
        dense,
    })
}

impl GroupHandle {
    /// The group generated by `generators` acting on `degree` points.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<GroupHandle, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidPermutation("degree must be at least 1".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let closure = close(Permutation::identity(degree), generators, cap)?;
        Ok(GroupHandle {
            name: name.into(),
            identity: Elem(0),
            generators: closure.generators.into_iter().map(Elem).collect(),
            inverses: closure.inverses,
            dense: closure.dense,
            store: Store::Perm {
                degree,
                elements: closure.elements,
                index: closure.index,
            },
        })
    }

    pub fn from_table(name: impl Into<String>, table: CayleyTable, cap: usize) -> Result<GroupHandle, GroupError> {
        let order = table.order();
        if order > cap {
            return Err(GroupError::CapExceeded { cap, reached: order });
        }
        let identity = Elem(table.identity_index());
        let (dense, inverses) = table.into_parts();
        let mut handle = GroupHandle {
            name: name.into(),
            identity,
            generators: Vec::new(),
            inverses,
            dense: Some(dense),
            store: Store::Table {
                labels: (0..order as u32).collect(),
                by_label: (0..order as u32).map(|k| (k, k)).collect(),
            },
        };
        let all: Vec<Elem> = handle.elements().collect();
        handle.generators = handle.greedy_generators(&all);
        Ok(handle)
    }

    /// `S_n ⋉ V` style groups in native `(pi, v)` form.
    pub fn from_sharp_elements(
        name: impl Into<String>,
        n: usize,
        generators: &[SharpElement],
        cap: usize,
    ) -> Result<GroupHandle, GroupError> {
        if n == 0 || n > super::semidirect::MAX_SHARP_DEGREE {
            return Err(GroupError::InvalidPermutation(format!(
                "semidirect degree {n} unsupported"
            )));
        }
        let closure = close(SharpElement::identity(n), generators, cap)?;
        Ok(GroupHandle {
            name: name.into(),
            identity: Elem(0),
            generators: closure.generators.into_iter().map(Elem).collect(),
            inverses: closure.inverses,
            dense: closure.dense,
            store: Store::Sharp {
                n,
                elements: closure.elements,
                index: closure.index,
            },
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> GroupHandle {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.inverses.len()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order() as u32).map(Elem)
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn backing(&self) -> BackingKind {
        match self.store {
            Store::Perm { .. } => BackingKind::Permutation,
            Store::Table { .. } => BackingKind::Table,
            Store::Sharp { .. } => BackingKind::Semidirect,
        }
    }

    /// Number of points acted on, for permutation-backed groups.
    pub fn degree(&self) -> Option<usize> {
        match self.store {
            Store::Perm { degree, .. } => Some(degree),
            _ => None,
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.index() < self.order()
    }

    pub fn check(&self, e: Elem) -> Result<Elem, GroupError> {
        if self.contains(e) {
            Ok(e)
        } else {
            Err(GroupError::NotAnElement(format!(
                "index {} in a group of order {}",
                e.0,
                self.order()
            )))
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if let Some(table) = &self.dense {
            return Elem(table[a.index() * self.order() + b.index()]);
        }
        match &self.store {
            Store::Perm { elements, index, .. } => Elem(index[&elements[a.index()].times(&elements[b.index()])]),
            Store::Sharp { elements, index, .. } => Elem(index[&elements[a.index()].times(&elements[b.index()])]),
            Store::Table { .. } => unreachable!("table-backed groups are always dense"),
        }
    }

    #[inline]
    pub fn inverse(&self, a: Elem) -> Elem {
        Elem(self.inverses[a.index()])
    }

    /// `h g h^-1`.
    #[inline]
    pub fn conj(&self, h: Elem, g: Elem) -> Elem {
        self.mul(self.mul(h, g), self.inverse(h))
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)))
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, g: Elem, mut k: u64) -> Elem {
        let mut base = g;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `g^k = 1`.
    pub fn order_of(&self, g: Elem) -> u64 {
        let mut k = 1u64;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, &a)| self.generators[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    pub fn permutation(&self, e: Elem) -> Option<&Permutation> {
        match &self.store {
            Store::Perm { elements, .. } => elements.get(e.index()),
            _ => None,
        }
    }

    pub fn sharp_element(&self, e: Elem) -> Option<&SharpElement> {
        match &self.store {
            Store::Sharp { elements, .. } => elements.get(e.index()),
            _ => None,
        }
    }

    /// Original table index for table-backed groups.
    pub fn label(&self, e: Elem) -> Option<u32> {
        match &self.store {
            Store::Table { labels, .. } => labels.get(e.index()).copied(),
            _ => None,
        }
    }

    pub fn find_permutation(&self, p: &Permutation) -> Option<Elem> {
        match &self.store {
            Store::Perm { index, .. } => index.get(p).map(|&k| Elem(k)),
            _ => None,
        }
    }

    pub fn find_sharp(&self, s: &SharpElement) -> Option<Elem> {
        match &self.store {
            Store::Sharp { index, .. } => index.get(s).map(|&k| Elem(k)),
            _ => None,
        }
    }

    pub fn find_label(&self, label: u32) -> Option<Elem> {
        match &self.store {
            Store::Table { by_label, .. } => by_label.get(&label).map(|&k| Elem(k)),
            _ => None,
        }
    }

    /// Maps an element of `other` to the element of `self` with the same representative.
    pub fn embed(&self, other: &GroupHandle, e: Elem) -> Option<Elem> {
        match &other.store {
            Store::Perm { elements, .. } => self.find_permutation(elements.get(e.index())?),
            Store::Sharp { elements, .. } => self.find_sharp(elements.get(e.index())?),
            Store::Table { labels, .. } => self.find_label(*labels.get(e.index())?),
        }
    }

    /// Text form accepted by [`GroupHandle::parse_element`].
    pub fn format_element(&self, e: Elem) -> String {
        match &self.store {
            Store::Perm { elements, .. } => elements[e.index()].to_string(),
            Store::Sharp { elements, .. } => elements[e.index()].to_string(),
            Store::Table { labels, .. } => format!("#{}", labels[e.index()]),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Elem, GroupError> {
        let trimmed = text.trim();
        let missing = || GroupError::NotAnElement(format!("{trimmed} is not in {}", self.name));
        match &self.store {
            Store::Perm { degree, .. } => {
                let p = Permutation::parse_cycles(trimmed, *degree)?;
                self.find_permutation(&p).ok_or_else(missing)
            }
            Store::Sharp { n, .. } => {
                let s = SharpElement::parse(trimmed, *n)?;
                self.find_sharp(&s).ok_or_else(missing)
            }
            Store::Table { .. } => {
                let digits = trimmed.strip_prefix('#').unwrap_or(trimmed);
                let label: u32 = digits.parse().map_err(|_| GroupError::ElementSyntax {
                    text: trimmed.to_string(),
                    reason: "table elements are written #k".into(),
                })?;
                self.find_label(label).ok_or_else(missing)
            }
        }
    }

    /// Parses a `;`-separated element list.
    pub fn parse_elements(&self, text: &str) -> Result<Vec<Elem>, GroupError> {
        text.split(';')
            .filter(|t| !t.trim().is_empty())
            .map(|t| self.parse_element(t))
            .collect()
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn closure_in(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order()];
        seen[self.identity.index()] = true;
        let mut found = vec![self.identity];
        let mut head = 0;
        while head < found.len() {
            let x = found[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    found.push(y);
                }
            }
        }
        found.sort_unstable();
        found
    }

    /// A generating set picked greedily in element order from a closed subset.
    pub fn greedy_generators(&self, elems: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order()];
        member[self.identity.index()] = true;
        let mut gens = Vec::new();
        for &x in elems {
            if !member[x.index()] {
                gens.push(x);
                for y in self.closure_in(&gens) {
                    member[y.index()] = true;
                }
            }
        }
        gens
    }

    /// Materializes a subgroup given its (closed) element set.
    pub fn subgroup(&self, elems: &[Elem], name: impl Into<String>) -> GroupHandle {
        let mut elems = elems.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut pos = vec![u32::MAX; self.order()];
        for (k, e) in elems.iter().enumerate() {
            pos[e.index()] = k as u32;
        }
        let local = |e: Elem| -> u32 {
            let p = pos[e.index()];
            assert!(p != u32::MAX, "subgroup element set is not closed");
            p
        };
        let store = match &self.store {
            Store::Perm { degree, elements, .. } => {
                let elements: Vec<Permutation> = elems.iter().map(|e| elements[e.index()].clone()).collect();
                let index = elements
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (p.clone(), k as u32))
                    .collect();
                Store::Perm {
                    degree: *degree,
                    elements,
                    index,
                }
            }
            Store::Sharp { n, elements, .. } => {
                let elements: Vec<SharpElement> = elems.iter().map(|e| elements[e.index()].clone()).collect();
                let index = elements
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (p.clone(), k as u32))
                    .collect();
                Store::Sharp { n: *n, elements, index }
            }
            Store::Table { labels, .. } => {
                let labels: Vec<u32> = elems.iter().map(|e| labels[e.index()]).collect();
                let by_label = labels.iter().enumerate().map(|(k, &l)| (l, k as u32)).collect();
                Store::Table { labels, by_label }
            }
        };
        let m = elems.len();
        let dense_needed = m <= DENSE_TABLE_LIMIT || matches!(self.store, Store::Table { .. });
        let dense = dense_needed.then(|| {
            let mut table = Vec::with_capacity(m * m);
            for &a in &elems {
                for &b in &elems {
                    table.push(local(self.mul(a, b)));
                }
            }
            table
        });
        let inverses = elems.iter().map(|&e| local(self.inverse(e))).collect();
        let generators = self
            .greedy_generators(&elems)
            .into_iter()
            .map(|g| Elem(local(g)))
            .collect();
        GroupHandle {
            name: name.into(),
            store,
            identity: Elem(local(self.identity)),
            generators,
            inverses,
            dense,
        }
    }

    /// The group generated by a subset of this one.
    pub fn generated_subgroup(&self, gens: &[Elem], name: impl Into<String>) -> GroupHandle {
        let elems = self.closure_in(gens);
        self.subgroup(&elems, name)
    }

    /// A faithful permutation action: the group itself when permutation-backed,
    /// otherwise the left-regular action on its elements.
    pub fn regular_permutations(&self, max_degree: usize) -> Result<Vec<Permutation>, GroupError> {
        let m = self.order();
        if m > max_degree {
            return Err(GroupError::CapExceeded {
                cap: max_degree,
                reached: m,
            });
        }
        Ok(self
            .generators
            .iter()
            .map(|&g| {
                let images = self.elements().map(|x| self.mul(g, x).0).collect();
                Permutation::from_images(images).expect("left multiplication is a bijection")
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupHandle {
        let gens = [
            Permutation::parse_cycles("(1 2)", 3).unwrap(),
            Permutation::parse_cycles("(1 2 3)", 3).unwrap(),
        ];
        GroupHandle::from_permutations("S3", 3, &gens, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn perm_closure_is_sorted_with_identity_first() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), Elem(0));
        assert!(g.permutation(Elem(0)).unwrap().is_identity());
        let perms: Vec<_> = g.elements().map(|e| g.permutation(e).unwrap().clone()).collect();
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dense_table_matches_direct_composition() {
        let g = s3();
        for a in g.elements() {
            for b in g.elements() {
                let direct = g.permutation(a).unwrap().compose(g.permutation(b).unwrap()).unwrap();
                assert_eq!(g.permutation(g.mul(a, b)).unwrap(), &direct);
            }
        }
    }

    #[test]
    fn cap_is_enforced_with_partial_count() {
        let gens = [
            Permutation::parse_cycles("(1 2)", 5).unwrap(),
            Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap(),
        ];
        match GroupHandle::from_permutations("S5", 5, &gens, 50) {
            Err(GroupError::CapExceeded { cap: 50, reached }) => assert!(reached > 50),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn subgroup_keeps_representatives() {
        let g = s3();
        let t = g.parse_element("(1 2 3)").unwrap();
        let c3 = g.generated_subgroup(&[t], "C3");
        assert_eq!(c3.order(), 3);
        for e in c3.elements() {
            let back = g.embed(&c3, e).unwrap();
            assert_eq!(g.format_element(back), c3.format_element(e));
        }
        assert!(c3.parse_element("(1 2)").is_err());
    }

    #[test]
    fn regular_action_is_faithful() {
        let g = s3();
        let gens = g.regular_permutations(100).unwrap();
        let reg = GroupHandle::from_permutations("reg", 6, &gens, 100).unwrap();
        assert_eq!(reg.order(), 6);
    }
}
