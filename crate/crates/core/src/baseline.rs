//! Reference solver: breadth-first search over `(permutation, remaining swaps)`
//! states, one layer per level. This is the search-tree approach whose cost
//! grows exponentially with the list length; with duplicate detection it
//! becomes a practical oracle for small instances.

use indexmap::IndexSet;

use crate::error::{Result, TangleError};
use crate::list::SwapList;
use crate::perm::{for_each_matching, pack_wires, unpack_wires, Permutation};
use crate::report::{Algo, Budget, Clock, SolveReport, Verdict};
use crate::tangle::Tangle;

const MAX_WIRES: usize = 16;

#[derive(Debug, Clone, Copy)]
pub struct BaselineOptions {
    pub budget: Budget,
    /// Skip states already seen. Off reproduces the plain search tree.
    pub dedup: bool,
}

impl Default for BaselineOptions {
    fn default() -> Self {
        BaselineOptions { budget: Budget::unlimited(), dedup: true }
    }
}

/// Report plus the number of states first reached at each depth.
#[derive(Debug, Clone)]
pub struct BaselineRun {
    pub report: SolveReport,
    pub level_sizes: Vec<u64>,
}

pub fn solve_baseline(list: &SwapList) -> Result<SolveReport> {
    Ok(solve_baseline_with(list, BaselineOptions::default())?.report)
}

/// Remaining multiset encoded as one mixed-radix number over the pairs of
/// the input list.
struct Remaining {
    pairs: Vec<(usize, usize)>,
    radix: Vec<u64>,
    stride: Vec<u64>,
    pair_at: Vec<Option<usize>>,
    n: usize,
}

impl Remaining {
    fn new(list: &SwapList) -> Option<(Self, u64)> {
        let n = list.n();
        let mut r =
            Remaining { pairs: Vec::new(), radix: Vec::new(), stride: Vec::new(), pair_at: vec![None; n * n], n };
        let mut scale = 1u64;
        let mut full = 0u64;
        for (k, (i, j, c)) in list.iter().enumerate() {
            r.pairs.push((i, j));
            r.radix.push(u64::from(c) + 1);
            r.stride.push(scale);
            full = full.checked_add(scale.checked_mul(u64::from(c))?)?;
            scale = scale.checked_mul(u64::from(c) + 1)?;
            r.pair_at[i * n + j] = Some(k);
            r.pair_at[j * n + i] = Some(k);
        }
        Some((r, full))
    }

    fn count(&self, code: u64, k: usize) -> u64 {
        (code / self.stride[k]) % self.radix[k]
    }

    fn pair(&self, a: usize, b: usize) -> Option<usize> {
        self.pair_at[a * self.n + b]
    }
}

enum Arena {
    Dedup { seen: IndexSet<(u64, u64)>, parent: Vec<u32> },
    Tree { nodes: Vec<(u64, u64, u32)> },
}

impl Arena {
    fn len(&self) -> usize {
        match self {
            Arena::Dedup { seen, .. } => seen.len(),
            Arena::Tree { nodes } => nodes.len(),
        }
    }

    fn get(&self, at: usize) -> (u64, u64, u32) {
        match self {
            Arena::Dedup { seen, parent } => {
                let (p, r) = seen[at];
                (p, r, parent[at])
            }
            Arena::Tree { nodes } => nodes[at],
        }
    }

    /// Returns the index of a newly created state, `None` for a duplicate.
    fn push(&mut self, perm: u64, rest: u64, parent_at: u32) -> Option<usize> {
        match self {
            Arena::Dedup { seen, parent } => {
                let (index, fresh) = seen.insert_full((perm, rest));
                fresh.then(|| {
                    parent.push(parent_at);
                    index
                })
            }
            Arena::Tree { nodes } => {
                nodes.push((perm, rest, parent_at));
                Some(nodes.len() - 1)
            }
        }
    }

    fn bytes(&self) -> usize {
        match self {
            Arena::Dedup { seen, .. } => seen.len() * 40,
            Arena::Tree { nodes } => nodes.len() * 24,
        }
    }
}

pub fn solve_baseline_with(list: &SwapList, options: BaselineOptions) -> Result<BaselineRun> {
    let n = list.n();
    if n > MAX_WIRES {
        return Err(TangleError::TooManyWires { n, max: MAX_WIRES });
    }
    let mut clock = options.budget.start();
    let finish = |verdict, tangle, states: usize, level_sizes, clock: &Clock| BaselineRun {
        report: SolveReport {
            algo: Algo::Baseline,
            verdict,
            tangle,
            states_explored: states as u64,
            elapsed: clock.elapsed(),
        },
        level_sizes,
    };
    let Some((rem, full)) = Remaining::new(list) else {
        return Ok(finish(Verdict::Memout, None, 0, Vec::new(), &clock));
    };

    let id = pack_wires(&(0..n).collect::<Vec<_>>()).expect("n <= 16");
    let mut arena = if options.dedup {
        Arena::Dedup { seen: IndexSet::new(), parent: Vec::new() }
    } else {
        Arena::Tree { nodes: Vec::new() }
    };
    arena.push(id, full, u32::MAX);
    let mut level_sizes = vec![1u64, 0];
    let mut level_end = 1usize;
    let mut goal = (full == 0).then_some(0usize);
    let mut head = 0usize;

    while goal.is_none() && head < arena.len() {
        if clock.expired() {
            return Ok(finish(Verdict::Timeout, None, arena.len(), level_sizes, &clock));
        }
        if clock.over_memory(arena.bytes()) {
            return Ok(finish(Verdict::Memout, None, arena.len(), level_sizes, &clock));
        }
        if head == level_end {
            level_end = arena.len();
            level_sizes.push(0);
        }
        let (perm, rest, _) = arena.get(head);
        let wires = unpack_wires(perm, n);
        let allowed = |p: usize| rem.pair(wires[p], wires[p + 1]).is_some_and(|k| rem.count(rest, k) > 0);
        let mut next = wires.clone();
        for_each_matching(n, allowed, |ps| {
            if goal.is_some() {
                return;
            }
            next.copy_from_slice(&wires);
            let mut used = 0u64;
            for &p in ps {
                used += rem.stride[rem.pair(next[p], next[p + 1]).expect("allowed")];
                next.swap(p, p + 1);
            }
            let left = rest - used;
            if let Some(index) = arena.push(pack_wires(&next).expect("n <= 16"), left, head as u32) {
                *level_sizes.last_mut().expect("non-empty") += 1;
                if left == 0 {
                    goal = Some(index);
                }
            }
        });
        head += 1;
    }
    if level_sizes.last() == Some(&0) {
        level_sizes.pop();
    }

    let Some(mut at) = goal else {
        return Ok(finish(Verdict::Infeasible, None, arena.len(), level_sizes, &clock));
    };
    let mut path = Vec::new();
    loop {
        let (perm, _, parent) = arena.get(at);
        path.push(Permutation::from_wires(unpack_wires(perm, n))?);
        if parent == u32::MAX {
            break;
        }
        at = parent as usize;
    }
    path.reverse();
    let tangle = Tangle::new(path)?;
    Ok(finish(Verdict::Feasible, Some(tangle), arena.len(), level_sizes, &clock))
}
