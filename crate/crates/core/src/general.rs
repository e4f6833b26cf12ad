//! Optimal tangles for arbitrary lists by dynamic programming over sublists.
//!
//! Every sublist `L'` of `L` is a mixed-radix number whose digits are the
//! multiplicities of the pairs present in `L`. For a consistent `L'` the last
//! permutation of any realization is `id * L'`, so an optimal realization of
//! `L'` is an optimal realization of some `L' - S(eps)` followed by the layer
//! `eps`, where `eps` is supported by `id * L'` and its swaps are still
//! available in `L'`:
//!
//! ```text
//! h(0)  = 1
//! h(L') = 1 + min { h(L' - S(eps)) : eps supported by id * L', S(eps) <= L' }
//! ```
//!
//! Sublists are filled in order of non-decreasing length so every lookup
//! hits a finished entry. Lists are first cut into independent blocks of
//! wires, which are solved separately and run side by side.

use std::collections::HashSet;

use crate::list::SwapList;
use crate::perm::{for_each_matching, Involution, Permutation};
use crate::report::{Algo, Budget, Clock, SolveReport, Verdict};
use crate::split::{split_free_wires, Split};
use crate::tangle::Tangle;

/// How much of the table is kept for reconstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableMode {
    /// Heights and predecessor indices.
    #[default]
    Full,
    /// Heights only; the path is re-derived from height differences.
    Compact,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GeneralOptions {
    pub budget: Budget,
    pub mode: TableMode,
}

/// Indexing of all sublists of one list.
#[derive(Debug, Clone)]
pub struct SublistSpace {
    n: usize,
    pairs: Vec<(usize, usize)>,
    caps: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
    // pair_at[i * n + j] = k + 1 for pair k, 0 when absent
    pair_at: Vec<u32>,
}

impl SublistSpace {
    /// `None` if the number of sublists does not fit in memory indices.
    pub fn new(list: &SwapList) -> Option<Self> {
        let n = list.n();
        let mut pairs = Vec::new();
        let mut caps = Vec::new();
        let mut strides = Vec::new();
        let mut pair_at = vec![0u32; n * n];
        let mut size = 1usize;
        for (k, (i, j, c)) in list.iter().enumerate() {
            pairs.push((i, j));
            caps.push(c);
            strides.push(size);
            size = size.checked_mul(c as usize + 1)?;
            pair_at[i * n + j] = k as u32 + 1;
            pair_at[j * n + i] = k as u32 + 1;
        }
        if size > u32::MAX as usize {
            return None;
        }
        Some(SublistSpace { n, pairs, caps, strides, size, pair_at })
    }

    /// Number of sublists, `prod (l_ij + 1)`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn full_index(&self) -> usize {
        self.size - 1
    }

    fn pair_index(&self, a: usize, b: usize) -> Option<usize> {
        match self.pair_at[a * self.n + b] {
            0 => None,
            k => Some(k as usize - 1),
        }
    }

    fn decode(&self, mut index: usize, digits: &mut [u32]) {
        for (k, &cap) in self.caps.iter().enumerate() {
            let radix = cap as usize + 1;
            digits[k] = (index % radix) as u32;
            index /= radix;
        }
    }

    pub fn to_list(&self, index: usize) -> SwapList {
        let mut digits = vec![0; self.pairs.len()];
        self.decode(index, &mut digits);
        let counts = self.pairs.iter().zip(&digits).map(|(&(i, j), &d)| (i, j, d));
        SwapList::from_counts(self.n, counts).expect("pairs come from a valid list")
    }

    /// Fills `wires` with `id * L'` and returns whether `L'` is consistent.
    fn final_wires(&self, digits: &[u32], pos: &mut [isize], wires: &mut [usize]) -> bool {
        for (w, p) in pos.iter_mut().enumerate() {
            *p = w as isize;
        }
        for (&(i, j), &d) in self.pairs.iter().zip(digits) {
            if d % 2 == 1 {
                pos[i] += 1;
                pos[j] -= 1;
            }
        }
        wires.fill(usize::MAX);
        for (w, &p) in pos.iter().enumerate() {
            let p = p as usize;
            if wires[p] != usize::MAX {
                return false;
            }
            wires[p] = w;
        }
        true
    }

    /// Index offsets of every layer available at `L'`, in canonical order.
    fn layer_offsets(&self, digits: &[u32], wires: &[usize], out: &mut Vec<(usize, u32)>) {
        out.clear();
        let allowed = |p: usize| self.pair_index(wires[p], wires[p + 1]).is_some_and(|k| digits[k] > 0);
        for_each_matching(self.n, allowed, |ps| {
            let delta =
                ps.iter().map(|&p| self.strides[self.pair_index(wires[p], wires[p + 1]).expect("allowed")]).sum();
            out.push((delta, ps.len() as u32));
        });
    }

    fn is_non_separable(&self, digits: &[u32], dense: &mut [u32]) -> bool {
        let n = self.n;
        dense.fill(0);
        for (&(i, j), &d) in self.pairs.iter().zip(digits) {
            dense[i * n + j] = d;
        }
        self.pairs
            .iter()
            .zip(digits)
            .all(|(&(i, j), &d)| d == 0 || (i + 1..j).all(|k| dense[i * n + k] > 0 || dense[k * n + j] > 0))
    }

    /// The swaps separating two comparable sublists, as an involution.
    fn layer_between(&self, upper: usize, lower: usize) -> Involution {
        let mut a = vec![0; self.pairs.len()];
        let mut b = vec![0; self.pairs.len()];
        self.decode(upper, &mut a);
        self.decode(lower, &mut b);
        let swaps = self.pairs.iter().zip(a.iter().zip(&b)).filter(|(_, (x, y))| x != y).map(|(&pair, _)| pair);
        Involution::new(self.n, swaps).expect("layers are disjoint")
    }
}

/// Optimal tangle for `list` from the identity, or an infeasibility verdict.
pub fn solve_general(list: &SwapList) -> SolveReport {
    solve_general_with(list, GeneralOptions::default())
}

pub fn solve_general_with(list: &SwapList, options: GeneralOptions) -> SolveReport {
    let mut clock = options.budget.start();
    run_blocks(list, &mut clock, |block, clock| fill_table(block, clock, options.mode))
}

/// Decides feasibility without building the whole table: the recurrence is
/// evaluated top-down from `L`, stopping at the first realization found.
/// Sublists that are separable are pruned, since separability rules out a
/// realization. The returned tangle realizes `list` but need not be optimal.
pub fn feasibility_search(list: &SwapList, budget: Budget) -> SolveReport {
    let mut clock = budget.start();
    run_blocks(list, &mut clock, search_block)
}

pub fn is_feasible(list: &SwapList) -> bool {
    feasibility_search(list, Budget::unlimited()).is_feasible()
}

enum BlockOutcome {
    Layers(Vec<Involution>),
    Stopped(Verdict),
}

fn run_blocks(
    list: &SwapList,
    clock: &mut Clock,
    mut solve: impl FnMut(&SwapList, &mut Clock) -> (BlockOutcome, u64),
) -> SolveReport {
    let n = list.n();
    let mut states = 0u64;
    let finish = |verdict, tangle, states, clock: &Clock| SolveReport {
        algo: Algo::General,
        verdict,
        tangle,
        states_explored: states,
        elapsed: clock.elapsed(),
    };
    let blocks = match split_free_wires(list) {
        Split::Infeasible { .. } => return finish(Verdict::Infeasible, None, 0, clock),
        Split::Blocks(blocks) => blocks,
    };
    let mut merged: Vec<Vec<(usize, usize)>> = Vec::new();
    for block in blocks.iter().filter(|b| !b.list.is_zero()) {
        let (outcome, explored) = solve(&block.list, clock);
        states += explored;
        let layers = match outcome {
            BlockOutcome::Layers(layers) => layers,
            BlockOutcome::Stopped(verdict) => return finish(verdict, None, states, clock),
        };
        if merged.len() < layers.len() {
            merged.resize(layers.len(), Vec::new());
        }
        for (t, eps) in layers.iter().enumerate() {
            merged[t].extend(eps.swaps().iter().map(|&(a, b)| (block.offset + a, block.offset + b)));
        }
    }
    let layers: Vec<Involution> =
        merged.into_iter().map(|swaps| Involution::new(n, swaps).expect("blocks are disjoint")).collect();
    let tangle = Tangle::from_layers(Permutation::identity(n), &layers).expect("solver layers are supported");
    finish(Verdict::Feasible, Some(tangle), states, clock)
}

const NO_PRED: u32 = u32::MAX;

fn fill_table(list: &SwapList, clock: &mut Clock, mode: TableMode) -> (BlockOutcome, u64) {
    let Some(space) = SublistSpace::new(list) else {
        return (BlockOutcome::Stopped(Verdict::Memout), 0);
    };
    let size = space.size();
    let per_entry = 4 + 4 + if mode == TableMode::Full { 4 } else { 0 };
    if clock.over_memory(size.saturating_mul(per_entry)) {
        return (BlockOutcome::Stopped(Verdict::Memout), 0);
    }

    // counting sort of all indices by length
    let total_len: usize = space.caps.iter().map(|&c| c as usize).sum();
    let mut digits = vec![0u32; space.pairs.len()];
    let mut lengths = vec![0u32; size];
    let mut bucket = vec![0usize; total_len + 2];
    let mut len = 0usize;
    for slot in lengths.iter_mut() {
        *slot = len as u32;
        bucket[len + 1] += 1;
        // mixed-radix increment
        for (k, d) in digits.iter_mut().enumerate() {
            if *d < space.caps[k] {
                *d += 1;
                len += 1;
                break;
            }
            len -= *d as usize;
            *d = 0;
        }
    }
    for l in 1..bucket.len() {
        bucket[l] += bucket[l - 1];
    }
    let mut order = vec![0u32; size];
    for (index, &l) in lengths.iter().enumerate() {
        order[bucket[l as usize]] = index as u32;
        bucket[l as usize] += 1;
    }
    drop(lengths);

    let mut height = vec![0u32; size];
    let mut pred = if mode == TableMode::Full { vec![NO_PRED; size] } else { Vec::new() };
    let n = space.n;
    let mut pos = vec![0isize; n];
    let mut wires = vec![0usize; n];
    let mut offsets = Vec::new();
    let mut explored = 0u64;

    for &index in &order {
        if clock.expired() {
            return (BlockOutcome::Stopped(Verdict::Timeout), explored);
        }
        let index = index as usize;
        space.decode(index, &mut digits);
        if !space.final_wires(&digits, &mut pos, &mut wires) {
            continue;
        }
        explored += 1;
        if index == 0 {
            height[0] = 1;
            continue;
        }
        space.layer_offsets(&digits, &wires, &mut offsets);
        let mut best = (u32::MAX, NO_PRED);
        for &(delta, _) in &offsets {
            let h = height[index - delta];
            // ties keep the first layer in canonical order
            if h > 0 && h < best.0 {
                best = (h, (index - delta) as u32);
            }
        }
        if best.1 != NO_PRED {
            height[index] = best.0 + 1;
            if mode == TableMode::Full {
                pred[index] = best.1;
            }
        }
    }

    let full = space.full_index();
    if height[full] == 0 {
        return (BlockOutcome::Stopped(Verdict::Infeasible), explored);
    }
    let mut layers = Vec::new();
    let mut at = full;
    while at != 0 {
        let prev = match mode {
            TableMode::Full => pred[at] as usize,
            TableMode::Compact => {
                space.decode(at, &mut digits);
                space.final_wires(&digits, &mut pos, &mut wires);
                space.layer_offsets(&digits, &wires, &mut offsets);
                offsets
                    .iter()
                    .map(|&(delta, _)| at - delta)
                    .find(|&p| height[p] > 0 && height[p] + 1 == height[at])
                    .expect("a finished entry has a predecessor")
            }
        };
        layers.push(space.layer_between(at, prev));
        at = prev;
    }
    layers.reverse();
    (BlockOutcome::Layers(layers), explored)
}

struct Search<'a> {
    space: &'a SublistSpace,
    dead: HashSet<usize>,
    explored: u64,
    stopped: Option<Verdict>,
    dense: Vec<u32>,
}

impl Search<'_> {
    /// Pushes the layers of a realization of sublist `index` (last layer
    /// first) onto `path` and returns `true`, or returns `false`.
    fn realize(&mut self, index: usize, clock: &mut Clock, path: &mut Vec<Involution>) -> bool {
        if index == 0 {
            return true;
        }
        if self.stopped.is_some() || self.dead.contains(&index) {
            return false;
        }
        if clock.expired() {
            self.stopped = Some(Verdict::Timeout);
            return false;
        }
        if clock.over_memory(self.dead.len() * 16) {
            self.stopped = Some(Verdict::Memout);
            return false;
        }
        self.explored += 1;
        let space = self.space;
        let n = space.n;
        let mut digits = vec![0u32; space.pairs.len()];
        space.decode(index, &mut digits);
        let mut pos = vec![0isize; n];
        let mut wires = vec![0usize; n];
        if !space.final_wires(&digits, &mut pos, &mut wires) || !space.is_non_separable(&digits, &mut self.dense) {
            self.dead.insert(index);
            return false;
        }
        let mut offsets = Vec::new();
        space.layer_offsets(&digits, &wires, &mut offsets);
        // fuller layers first; this only affects which realization is found
        offsets.sort_by_key(|&(_, swaps)| std::cmp::Reverse(swaps));
        for (delta, _) in offsets {
            if self.realize(index - delta, clock, path) {
                path.push(space.layer_between(index, index - delta));
                return true;
            }
            if self.stopped.is_some() {
                return false;
            }
        }
        self.dead.insert(index);
        false
    }
}

fn search_block(list: &SwapList, clock: &mut Clock) -> (BlockOutcome, u64) {
    let Some(space) = SublistSpace::new(list) else {
        return (BlockOutcome::Stopped(Verdict::Memout), 0);
    };
    let mut search =
        Search { space: &space, dead: HashSet::new(), explored: 0, stopped: None, dense: vec![0; space.n * space.n] };
    let mut path = Vec::new();
    let found = search.realize(space.full_index(), clock, &mut path);
    let outcome = match (found, search.stopped) {
        (true, _) => BlockOutcome::Layers(path),
        (false, Some(verdict)) => BlockOutcome::Stopped(verdict),
        (false, None) => BlockOutcome::Stopped(Verdict::Infeasible),
    };
    (outcome, search.explored)
}
