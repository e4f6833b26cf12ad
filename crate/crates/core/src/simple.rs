//! Optimal tangles for simple lists by breadth-first search in the graph of
//! permutations whose inversions stay inside the list.
//!
//! A vertex is a permutation `pi` with `L(pi) <= L`. From `pi` we may apply any
//! supported layer whose swaps are all still uninverted in `pi` and present in
//! `L`; every such path from the identity to `id * L` is a realization, and
//! the shortest one is optimal.

use indexmap::IndexSet;

use crate::consistency::final_permutation;
use crate::error::{Result, TangleError};
use crate::list::SwapList;
use crate::perm::{for_each_matching, pack_wires, unpack_wires, Permutation};
use crate::report::{Algo, Budget, SolveReport, Verdict};
use crate::tangle::Tangle;

const MAX_WIRES: usize = 16;
// packed key, hash slot and parent index
const BYTES_PER_VERTEX: usize = 32;

pub fn solve_simple(list: &SwapList) -> Result<SolveReport> {
    solve_simple_with(list, Budget::unlimited())
}

pub fn solve_simple_with(list: &SwapList, budget: Budget) -> Result<SolveReport> {
    if !list.is_simple() {
        return Err(TangleError::NotSimple);
    }
    let n = list.n();
    if n > MAX_WIRES {
        return Err(TangleError::TooManyWires { n, max: MAX_WIRES });
    }
    let mut clock = budget.start();
    let report = |verdict, tangle, states: usize, clock: &crate::report::Clock| SolveReport {
        algo: Algo::Simple,
        verdict,
        tangle,
        states_explored: states as u64,
        elapsed: clock.elapsed(),
    };

    let id = Permutation::identity(n);
    let Some(target) = final_permutation(&id, list)? else {
        return Ok(report(Verdict::Infeasible, None, 0, &clock));
    };
    let target_key = target.pack().expect("n <= 16");

    let mut in_list = vec![false; n * n];
    for (i, j, _) in list.iter() {
        in_list[i * n + j] = true;
    }

    let mut seen: IndexSet<u64> = IndexSet::new();
    let mut parent: Vec<u32> = Vec::new();
    seen.insert(id.pack().expect("n <= 16"));
    parent.push(u32::MAX);

    let mut head = 0usize;
    let mut found = (target_key == seen[0]).then_some(0usize);
    while found.is_none() && head < seen.len() {
        if clock.expired() {
            return Ok(report(Verdict::Timeout, None, seen.len(), &clock));
        }
        if clock.over_memory(seen.len() * BYTES_PER_VERTEX) {
            return Ok(report(Verdict::Memout, None, seen.len(), &clock));
        }
        let wires = unpack_wires(seen[head], n);
        // a swap may be used only while its pair is still in original order
        let allowed = |p: usize| wires[p] < wires[p + 1] && in_list[wires[p] * n + wires[p + 1]];
        let mut next = wires.clone();
        for_each_matching(n, allowed, |ps| {
            if found.is_some() {
                return;
            }
            next.copy_from_slice(&wires);
            for &p in ps {
                next.swap(p, p + 1);
            }
            let key = pack_wires(&next).expect("n <= 16");
            let (index, fresh) = seen.insert_full(key);
            if fresh {
                parent.push(head as u32);
                if key == target_key {
                    found = Some(index);
                }
            }
        });
        head += 1;
    }

    // every consistent simple list is reachable, so the search cannot run dry
    let Some(mut at) = found else {
        return Ok(report(Verdict::Infeasible, None, seen.len(), &clock));
    };
    let mut path = Vec::new();
    loop {
        path.push(Permutation::from_wires(unpack_wires(seen[at], n))?);
        if parent[at] == u32::MAX {
            break;
        }
        at = parent[at] as usize;
    }
    path.reverse();
    let tangle = Tangle::new(path)?;
    Ok(report(Verdict::Feasible, Some(tangle), seen.len(), &clock))
}
