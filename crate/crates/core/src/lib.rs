//! Tangle-height minimization.
//!
//! `n` wires hang in the order `1 2 ... n`. A *tangle* is a sequence of wire
//! orders in which consecutive orders differ by swapping disjoint pairs of
//! neighbouring wires; each such step is a *layer*. Given how often each pair
//! of wires has to swap (a [`SwapList`]), the task is to find a tangle that
//! performs exactly those swaps with as few orders as possible, or to show
//! that none exists.
//!
//! - [`simple::solve_simple`]: lists where every pair swaps at most once,
//!   by breadth-first search over permutations.
//! - [`general::solve_general`]: any list, by dynamic programming over all
//!   of its sublists.
//! - [`baseline::solve_baseline`]: a layer-by-layer search tree, used as a
//!   reference oracle and as the slow side of benchmarks.
//! - [`feasibility`]: fast feasibility rules for simple, odd and even lists.
//! - [`instances`]: instance families and seeded generators.
//! - [`render`]: SVG and text wire diagrams.
//!
//! Wires and positions are 0-based in the API; text notations (`"12 23"`,
//! `"4312"`) are 1-based.

pub mod baseline;
pub mod consistency;
pub mod error;
pub mod feasibility;
pub mod general;
pub mod instances;
pub mod list;
pub mod perm;
pub mod render;
pub mod report;
pub mod simple;
pub mod split;
pub mod tangle;

pub use baseline::{solve_baseline, solve_baseline_with, BaselineOptions, BaselineRun};
pub use consistency::{apply_list, final_permutation, is_consistent, is_consistent_from_identity, simple_list_of};
pub use error::{Result, TangleError};
pub use general::{feasibility_search, is_feasible, solve_general, solve_general_with, GeneralOptions, TableMode};
pub use list::SwapList;
pub use perm::{adjacency, is_adjacent, supported_involutions, Involution, Permutation};
pub use report::{Algo, Budget, SolveReport, Verdict};
pub use simple::{solve_simple, solve_simple_with};
pub use split::{split_free_wires, Block, Split};
pub use tangle::{list_of_tangle, Tangle};

/// `F(k)` with `F(1) = F(2) = 1`.
pub fn fibonacci(k: u32) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}
