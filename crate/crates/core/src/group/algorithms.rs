//! Orbit-style algorithms over a [`GroupHandle`]: classes, centralizers,
//! derived subgroups and transitivity.

use super::{BackingKind, Elem, GroupError, GroupHandle, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least member in the element order.
    pub representative: Elem,
    /// Sorted members.
    pub members: Vec<Elem>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, GroupError> {
    p.compose(q)
}

/// `h g h^-1`.
pub fn conjugate_by(h: Elem, g: Elem, group: &GroupHandle) -> Result<Elem, GroupError> {
    group.check(h)?;
    group.check(g)?;
    Ok(group.conj(h, g))
}

/// Permutation group generated by `generators` on `degree` points.
pub fn generate_closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<GroupHandle, GroupError> {
    GroupHandle::from_permutations("closure", degree, generators, cap)
}

pub fn element_order(g: Elem, group: &GroupHandle) -> Result<u64, GroupError> {
    group.check(g)?;
    Ok(group.order_of(g))
}

/// Class members paired with a conjugator `c` such that `c r c^-1 = member`.
pub fn class_with_transversal(group: &GroupHandle, r: Elem) -> Vec<(Elem, Elem)> {
    let mut seen = vec![false; group.order()];
    seen[r.index()] = true;
    let mut out = vec![(r, group.identity())];
    let mut head = 0;
    while head < out.len() {
        let (y, c) = out[head];
        head += 1;
        for &g in group.generators() {
            let z = group.conj(g, y);
            if !seen[z.index()] {
                seen[z.index()] = true;
                out.push((z, group.mul(g, c)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Partition into conjugacy classes, ordered by least member.
pub fn conjugacy_classes(group: &GroupHandle) -> Vec<ConjugacyClass> {
    let mut assigned = vec![false; group.order()];
    let mut classes = Vec::new();
    for x in group.elements() {
        if assigned[x.index()] {
            continue;
        }
        let members: Vec<Elem> = class_with_transversal(group, x).into_iter().map(|(m, _)| m).collect();
        for m in &members {
            assigned[m.index()] = true;
        }
        classes.push(ConjugacyClass {
            representative: x,
            members,
        });
    }
    classes
}

pub fn centralizer_elements(group: &GroupHandle, g: Elem) -> Vec<Elem> {
    group.elements().filter(|&h| group.commutes(h, g)).collect()
}

pub fn centralizer(group: &GroupHandle, g: Elem) -> Result<GroupHandle, GroupError> {
    group.check(g)?;
    let elems = centralizer_elements(group, g);
    Ok(group.subgroup(&elems, format!("C({})", group.format_element(g))))
}

/// Normal closure of a set of elements, as a sorted element list.
pub fn normal_closure_elements(group: &GroupHandle, seeds: &[Elem]) -> Vec<Elem> {
    let mut gens: Vec<Elem> = seeds.iter().copied().filter(|&s| s != group.identity()).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut elems = group.closure_in(&gens);
    let mut member = vec![false; group.order()];
    for e in &elems {
        member[e.index()] = true;
    }
    loop {
        let mut added = false;
        let snapshot = gens.clone();
        'scan: for &g in group.generators() {
            for &k in &snapshot {
                let c = group.conj(g, k);
                if !member[c.index()] {
                    gens.push(c);
                    elems = group.closure_in(&gens);
                    for e in &elems {
                        member[e.index()] = true;
                    }
                    added = true;
                    break 'scan;
                }
            }
        }
        if !added {
            return elems;
        }
    }
}

/// The commutator subgroup: normal closure of the commutators of a generating set.
pub fn derived_subgroup(group: &GroupHandle) -> GroupHandle {
    let gens = group.generators();
    let mut commutators = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            commutators.push(group.commutator(a, b));
        }
    }
    let elems = normal_closure_elements(group, &commutators);
    group.subgroup(&elems, format!("[{0},{0}]", group.name()))
}

pub fn is_perfect(group: &GroupHandle) -> bool {
    derived_subgroup(group).order() == group.order()
}

/// Whether the point orbit of `0` under `perms` covers all `degree` points.
pub fn permutations_transitive(degree: usize, perms: &[&Permutation]) -> bool {
    let mut seen = vec![false; degree];
    seen[0] = true;
    let mut stack = vec![0u32];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for p in perms {
            let y = p.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == degree
}

pub fn is_transitive(group: &GroupHandle) -> Result<bool, GroupError> {
    let degree = match (group.backing(), group.degree()) {
        (BackingKind::Permutation, Some(d)) => d,
        (kind, _) => return Err(GroupError::UnsupportedBacking(format!("{kind:?}"))),
    };
    let perms: Vec<&Permutation> = group
        .generators()
        .iter()
        .map(|&g| group.permutation(g).expect("permutation-backed"))
        .collect();
    Ok(permutations_transitive(degree, &perms))
}
