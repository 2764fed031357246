use rayon::prelude::*;

/// What one partition of a budgeted search produced.
pub(crate) struct PartitionRun<T> {
    pub value: T,
    pub nodes: u64,
    /// The partition finished within the node budget it was given.
    pub complete: bool,
    /// Later partitions need not be examined.
    pub stop: bool,
}

pub(crate) struct Merged<T> {
    pub values: Vec<T>,
    pub nodes: u64,
    pub complete: bool,
}

/// Runs `run(partition, node_budget)` over `parts` and keeps the longest prefix
/// whose cumulative node count fits in `budget`.
///
/// The kept prefix is the same for every `jobs` value: partitions run in
/// parallel each get the whole budget, and the merge replays them in order.
pub(crate) fn run_partitions<P, T, F>(parts: &[P], jobs: usize, budget: u64, run: F) -> Merged<T>
where
    P: Sync,
    T: Send,
    F: Fn(&P, u64) -> PartitionRun<T> + Sync,
{
    let mut merged = Merged {
        values: Vec::new(),
        nodes: 0,
        complete: true,
    };
    if jobs <= 1 || parts.len() <= 1 {
        for part in parts {
            let r = run(part, budget - merged.nodes);
            if !accept(&mut merged, r, budget) {
                break;
            }
        }
        return merged;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let runs: Vec<PartitionRun<T>> = pool.install(|| parts.par_iter().map(|p| run(p, budget)).collect());
    for r in runs {
        if !accept(&mut merged, r, budget) {
            break;
        }
    }
    merged
}

fn accept<T>(merged: &mut Merged<T>, r: PartitionRun<T>, budget: u64) -> bool {
    if !r.complete || merged.nodes + r.nodes > budget {
        merged.complete = false;
        return false;
    }
    merged.nodes += r.nodes;
    merged.values.push(r.value);
    !r.stop
}
