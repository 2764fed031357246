use crate::group::{conjugacy_classes, Elem, GroupHandle};
use crate::parallel::{run_partitions, PartitionRun};

use super::verify::{check_set, TssWitness};

#[derive(Clone, Debug)]
pub struct TssSearchResult<'g> {
    /// Largest verified set found; ties go to the first in search order.
    pub best: Option<TssWitness<'g>>,
    /// The search space was exhausted (or `max_size` reached) within budget.
    pub complete: bool,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_size: usize,
    /// Candidate sets examined, summed over all branches.
    pub budget: u64,
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_size: usize::MAX,
            budget: 10_000_000,
            jobs: 1,
        }
    }
}

struct Branch<'a> {
    class: &'a [Elem],
    first: usize,
}

struct Dfs<'g, 'a> {
    group: &'g GroupHandle,
    class: &'a [Elem],
    max_size: usize,
    budget: u64,
    nodes: u64,
    best: Vec<Elem>,
    exhausted: bool,
}

impl Dfs<'_, '_> {
    /// Extends `set` (whose last member is `class[last]`) by later class members.
    fn extend(&mut self, set: &mut Vec<Elem>, last: usize) {
        if set.len() > self.best.len() {
            self.best = set.clone();
        }
        if set.len() >= self.max_size {
            return;
        }
        for k in last + 1..self.class.len() {
            if self.exhausted {
                return;
            }
            let c = self.class[k];
            if !set.iter().all(|&s| self.group.commutes(s, c)) {
                continue;
            }
            if self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            set.push(c);
            if check_set(self.group, set).is_ok() {
                self.extend(set, k);
                if self.best.len() >= self.max_size {
                    set.pop();
                    return;
                }
            }
            set.pop();
        }
    }
}

/// Backtracking search for a largest totally symmetric set.
///
/// Members of a totally symmetric set are conjugate, so each branch draws from a
/// single class (largest classes first) as an increasing tuple in element order;
/// subsets of totally symmetric sets stay totally symmetric, which makes prefix
/// pruning exact.
pub fn search_tss<'g>(group: &'g GroupHandle, opts: SearchOptions) -> TssSearchResult<'g> {
    let max_size = opts.max_size.max(1);
    let mut classes = conjugacy_classes(group);
    classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a.representative.cmp(&b.representative)));
    let branches: Vec<Branch> = classes
        .iter()
        .flat_map(|c| {
            (0..c.len()).map(move |first| Branch {
                class: &c.members,
                first,
            })
        })
        .collect();

    let merged = run_partitions(&branches, opts.jobs, opts.budget, |branch, budget| {
        if budget == 0 {
            return PartitionRun {
                value: Vec::new(),
                nodes: 0,
                complete: false,
                stop: false,
            };
        }
        let mut dfs = Dfs {
            group,
            class: branch.class,
            max_size,
            budget,
            nodes: 1,
            best: Vec::new(),
            exhausted: false,
        };
        let mut set = vec![branch.class[branch.first]];
        dfs.extend(&mut set, branch.first);
        let stop = dfs.best.len() >= max_size;
        PartitionRun {
            value: dfs.best,
            nodes: dfs.nodes,
            complete: !dfs.exhausted,
            stop,
        }
    });

    let mut best: Vec<Elem> = Vec::new();
    for candidate in merged.values {
        if candidate.len() > best.len() {
            best = candidate;
        }
    }
    let reached_max = best.len() >= max_size;
    TssSearchResult {
        best: (!best.is_empty()).then(|| check_set(group, &best).expect("search only keeps verified sets")),
        complete: merged.complete || reached_max,
        nodes: merged.nodes,
    }
}
