use std::cmp::Ordering;

use crate::group::{centralizer_elements, class_with_transversal, conjugacy_classes, Elem, GroupHandle};
use crate::parallel::{run_partitions, PartitionRun};

use super::classify::BraidHom;
use super::relations::braids;
use super::HomError;

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub non_cyclic_only: bool,
    /// Emit one representative per conjugacy orbit of tuples.
    pub up_to_conjugacy: bool,
    /// Emit only homomorphisms with transitive image (permutation targets).
    pub transitive_only: bool,
    /// When false only the counts are produced.
    pub collect: bool,
    /// Maximum number of search nodes.
    pub budget: u64,
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            non_cyclic_only: false,
            up_to_conjugacy: false,
            transitive_only: false,
            collect: true,
            budget: 1_000_000_000,
            jobs: 1,
        }
    }
}

/// Exact counts over all homomorphisms `B_n -> G`, regardless of emission filters.
///
/// For an incomplete enumeration these cover only the part that was explored.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HomCounts {
    pub total: u64,
    pub cyclic: u64,
    pub non_cyclic: u64,
    /// Conjugacy orbits of cyclic homomorphisms (one per conjugacy class of `G`).
    pub cyclic_classes: u64,
    pub non_cyclic_classes: u64,
}

#[derive(Clone, Debug)]
pub struct Enumeration<'g> {
    pub n: usize,
    pub strategy: &'static str,
    /// Emitted homomorphisms, sorted lexicographically by images.
    pub homs: Vec<BraidHom<'g>>,
    pub counts: HomCounts,
    pub complete: bool,
    pub nodes: u64,
}

/// A way of enumerating homomorphisms; all strategies must agree on every output.
pub trait HomStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn enumerate<'g>(&self, n: usize, g: &'g GroupHandle, opts: &EnumOptions) -> Result<Enumeration<'g>, HomError>;
}

pub struct StrategyRegistry {
    strategies: Vec<Box<dyn HomStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> StrategyRegistry {
        StrategyRegistry { strategies: Vec::new() }
    }

    pub fn builtin() -> StrategyRegistry {
        let mut r = StrategyRegistry::empty();
        r.register(Box::new(Reduced));
        r.register(Box::new(Naive));
        r
    }

    /// Adds a strategy, replacing any existing one with the same name.
    pub fn register(&mut self, strategy: Box<dyn HomStrategy>) {
        self.strategies.retain(|s| s.name() != strategy.name());
        self.strategies.push(strategy);
    }

    pub fn get(&self, name: &str) -> Result<&dyn HomStrategy, HomError> {
        self.strategies
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| HomError::UnknownStrategy(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }
}

/// Enumerates with the default (conjugacy-reduced) strategy.
pub fn enumerate_homs<'g>(n: usize, g: &'g GroupHandle, opts: &EnumOptions) -> Result<Enumeration<'g>, HomError> {
    Reduced.enumerate(n, g, opts)
}

/// Depth-first completion of a prefix `(t_1, .., t_k)` to a full `(n-1)`-tuple.
///
/// Candidates equal to the previous image are skipped: if `t_i = t_{i+1}` then the
/// braid and commutation relations force every image to be equal, so such a branch
/// can only end in the constant tuple, which is counted separately.
struct Completer<'a> {
    g: &'a GroupHandle,
    len: usize,
    pool: &'a [Elem],
    budget: u64,
    nodes: u64,
    exhausted: bool,
    out: Vec<Vec<Elem>>,
}

impl Completer<'_> {
    fn run(g: &GroupHandle, len: usize, pool: &[Elem], prefix: Vec<Elem>, budget: u64) -> PartitionRun<Vec<Vec<Elem>>> {
        let mut c = Completer {
            g,
            len,
            pool,
            budget,
            nodes: 0,
            exhausted: false,
            out: Vec::new(),
        };
        let mut prefix = prefix;
        c.dfs(&mut prefix);
        PartitionRun {
            value: c.out,
            nodes: c.nodes,
            complete: !c.exhausted,
            stop: false,
        }
    }

    fn dfs(&mut self, prefix: &mut Vec<Elem>) {
        if prefix.len() == self.len {
            self.out.push(prefix.clone());
            return;
        }
        let g = self.g;
        let last = *prefix.last().expect("non-empty prefix");
        let earlier = prefix.len() - 1;
        for &c in self.pool {
            if c == last || !braids(g, last, c) || !prefix[..earlier].iter().all(|&t| g.commutes(t, c)) {
                continue;
            }
            if self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            prefix.push(c);
            self.dfs(prefix);
            prefix.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

fn conj_tuple(g: &GroupHandle, h: Elem, t: &[Elem]) -> Vec<Elem> {
    t.iter().map(|&x| g.conj(h, x)).collect()
}

/// True when no conjugate of `t` by an element of `by` is lexicographically smaller.
fn is_orbit_minimal(g: &GroupHandle, t: &[Elem], by: &[Elem]) -> bool {
    by.iter().all(|&h| {
        for &x in t {
            match g.conj(h, x).cmp(&x) {
                Ordering::Less => return false,
                Ordering::Greater => return true,
                Ordering::Equal => {}
            }
        }
        true
    })
}

fn check_arguments(n: usize) -> Result<(), HomError> {
    if n < 2 {
        return Err(HomError::NotApplicable(format!("B_n needs n >= 2, got {n}")));
    }
    Ok(())
}

fn into_homs<'g>(n: usize, g: &'g GroupHandle, opts: &EnumOptions, mut tuples: Vec<Vec<Elem>>) -> Vec<BraidHom<'g>> {
    tuples.sort_unstable();
    tuples
        .into_iter()
        .map(|t| BraidHom::new(n, g, t))
        .filter(|h| !opts.transitive_only || h.transitive == Some(true))
        .collect()
}

/// Fixes `t_1` to a conjugacy-class representative, restricts all images to its class,
/// and recovers raw counts by orbit-stabilizer.
pub struct Reduced;

impl HomStrategy for Reduced {
    fn name(&self) -> &'static str {
        "reduced"
    }

    fn summary(&self) -> &'static str {
        "t1 fixed to class representatives, completions deduplicated under its centralizer"
    }

    fn enumerate<'g>(&self, n: usize, g: &'g GroupHandle, opts: &EnumOptions) -> Result<Enumeration<'g>, HomError> {
        check_arguments(n)?;
        let len = n - 1;
        let classes = conjugacy_classes(g);

        let mut parts: Vec<(usize, Elem)> = Vec::new();
        if len >= 2 {
            for (ci, class) in classes.iter().enumerate() {
                let r = class.representative;
                for &t2 in &class.members {
                    if t2 != r && braids(g, r, t2) {
                        parts.push((ci, t2));
                    }
                }
            }
        }
        let merged = run_partitions(&parts, opts.jobs, opts.budget, |&(ci, t2), budget| {
            if budget == 0 {
                return PartitionRun {
                    value: Vec::new(),
                    nodes: 0,
                    complete: false,
                    stop: false,
                };
            }
            let class = &classes[ci];
            let mut run = Completer::run(g, len, &class.members, vec![class.representative, t2], budget - 1);
            run.nodes += 1;
            run
        });

        let mut per_class: Vec<Vec<Vec<Elem>>> = vec![Vec::new(); classes.len()];
        for ((ci, _), completions) in parts.iter().zip(merged.values) {
            per_class[*ci].extend(completions);
        }

        let mut counts = HomCounts {
            cyclic: g.order() as u64,
            cyclic_classes: classes.len() as u64,
            ..HomCounts::default()
        };
        let mut tuples: Vec<Vec<Elem>> = Vec::new();
        if opts.collect && !opts.non_cyclic_only {
            if opts.up_to_conjugacy {
                tuples.extend(classes.iter().map(|c| vec![c.representative; len]));
            } else {
                tuples.extend(g.elements().map(|x| vec![x; len]));
            }
        }
        for (class, completions) in classes.iter().zip(&per_class) {
            if completions.is_empty() {
                continue;
            }
            counts.non_cyclic += class.members.len() as u64 * completions.len() as u64;
            let cent = centralizer_elements(g, class.representative);
            let minimal: Vec<&Vec<Elem>> = completions
                .iter()
                .filter(|t| is_orbit_minimal(g, &t[1..], &cent))
                .collect();
            counts.non_cyclic_classes += minimal.len() as u64;
            if !opts.collect {
                continue;
            }
            if opts.up_to_conjugacy {
                tuples.extend(minimal.into_iter().cloned());
            } else {
                for (_, c) in class_with_transversal(g, class.representative) {
                    tuples.extend(completions.iter().map(|t| conj_tuple(g, c, t)));
                }
            }
        }
        counts.total = counts.cyclic + counts.non_cyclic;
        Ok(Enumeration {
            n,
            strategy: self.name(),
            homs: into_homs(n, g, opts, tuples),
            counts,
            complete: merged.complete,
            nodes: merged.nodes,
        })
    }
}

/// Every element is a candidate for every image; orbits are found by minimality
/// under conjugation by the whole group. Only suitable for small targets.
pub struct Naive;

impl HomStrategy for Naive {
    fn name(&self) -> &'static str {
        "naive"
    }

    fn summary(&self) -> &'static str {
        "all elements as candidates for every image, no conjugacy reduction"
    }

    fn enumerate<'g>(&self, n: usize, g: &'g GroupHandle, opts: &EnumOptions) -> Result<Enumeration<'g>, HomError> {
        check_arguments(n)?;
        let len = n - 1;
        let all: Vec<Elem> = g.elements().collect();

        let mut parts: Vec<(Elem, Elem)> = Vec::new();
        if len >= 2 {
            for &a in &all {
                for &b in &all {
                    if a != b && braids(g, a, b) {
                        parts.push((a, b));
                    }
                }
            }
        }
        let merged = run_partitions(&parts, opts.jobs, opts.budget, |&(a, b), budget| {
            if budget == 0 {
                return PartitionRun {
                    value: Vec::new(),
                    nodes: 0,
                    complete: false,
                    stop: false,
                };
            }
            let mut run = Completer::run(g, len, &all, vec![a, b], budget - 1);
            run.nodes += 1;
            run
        });
        let non_cyclic: Vec<Vec<Elem>> = merged.values.into_iter().flatten().collect();

        let cyclic_minimal: Vec<Elem> = all
            .iter()
            .copied()
            .filter(|&x| is_orbit_minimal(g, &[x], &all))
            .collect();
        let minimal: Vec<&Vec<Elem>> = non_cyclic.iter().filter(|t| is_orbit_minimal(g, t, &all)).collect();
        let counts = HomCounts {
            total: all.len() as u64 + non_cyclic.len() as u64,
            cyclic: all.len() as u64,
            non_cyclic: non_cyclic.len() as u64,
            cyclic_classes: cyclic_minimal.len() as u64,
            non_cyclic_classes: minimal.len() as u64,
        };

        let mut tuples: Vec<Vec<Elem>> = Vec::new();
        if opts.collect {
            if !opts.non_cyclic_only {
                if opts.up_to_conjugacy {
                    tuples.extend(cyclic_minimal.iter().map(|&x| vec![x; len]));
                } else {
                    tuples.extend(all.iter().map(|&x| vec![x; len]));
                }
            }
            if opts.up_to_conjugacy {
                tuples.extend(minimal.into_iter().cloned());
            } else {
                tuples.extend(non_cyclic.iter().cloned());
            }
        }
        Ok(Enumeration {
            n,
            strategy: self.name(),
            homs: into_homs(n, g, opts, tuples),
            counts,
            complete: merged.complete,
            nodes: merged.nodes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braid_relations_hold;
    use crate::constructions::{make_standard, BuildOptions, StandardKind};

    fn sym(k: usize) -> GroupHandle {
        make_standard(StandardKind::Symmetric, k, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn b3_to_s3() {
        let g = sym(3);
        let e = enumerate_homs(3, &g, &EnumOptions::default()).unwrap();
        assert!(e.complete);
        assert_eq!(e.counts.total, 12);
        assert_eq!(e.counts.non_cyclic, 6);
        assert_eq!(e.homs.len(), 12);
        for h in &e.homs {
            assert!(braid_relations_hold(3, &h.images, &g).unwrap().holds);
        }
    }

    #[test]
    fn strategies_agree() {
        let registry = StrategyRegistry::builtin();
        for (n, k) in [(3, 3), (4, 3), (4, 4), (5, 4)] {
            let g = sym(k);
            for up in [false, true] {
                let opts = EnumOptions {
                    up_to_conjugacy: up,
                    ..EnumOptions::default()
                };
                let a = registry.get("reduced").unwrap().enumerate(n, &g, &opts).unwrap();
                let b = registry.get("naive").unwrap().enumerate(n, &g, &opts).unwrap();
                assert_eq!(a.counts, b.counts, "B{n} -> S{k}");
                let ia: Vec<_> = a.homs.iter().map(|h| h.images.clone()).collect();
                let ib: Vec<_> = b.homs.iter().map(|h| h.images.clone()).collect();
                assert_eq!(ia, ib, "B{n} -> S{k}, up_to_conjugacy {up}");
            }
        }
    }

    #[test]
    fn b5_to_s5_single_orbit() {
        let g = sym(5);
        let opts = EnumOptions {
            non_cyclic_only: true,
            up_to_conjugacy: true,
            ..EnumOptions::default()
        };
        let e = enumerate_homs(5, &g, &opts).unwrap();
        assert_eq!(e.counts.non_cyclic_classes, 1);
        assert_eq!(e.counts.non_cyclic, 120);
        assert_eq!(e.homs.len(), 1);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = sym(4);
        let opts = EnumOptions {
            budget: 3,
            ..EnumOptions::default()
        };
        let e = enumerate_homs(4, &g, &opts).unwrap();
        assert!(!e.complete);
        assert!(e.nodes <= 3);
    }

    #[test]
    fn jobs_do_not_change_output() {
        let g = sym(4);
        for budget in [5, 40, 1_000_000] {
            let run = |jobs| {
                let opts = EnumOptions {
                    budget,
                    jobs,
                    ..EnumOptions::default()
                };
                let e = enumerate_homs(4, &g, &opts).unwrap();
                (
                    e.counts,
                    e.complete,
                    e.nodes,
                    e.homs.iter().map(|h| h.images.clone()).collect::<Vec<_>>(),
                )
            };
            assert_eq!(run(1), run(4));
        }
    }

    #[test]
    fn unknown_strategy() {
        assert!(matches!(
            StrategyRegistry::builtin().get("magic"),
            Err(HomError::UnknownStrategy(_))
        ));
    }
}
