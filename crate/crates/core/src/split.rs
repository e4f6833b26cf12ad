//! Splitting a list into independent contiguous blocks of wires.

use crate::list::SwapList;

/// A contiguous range of wires `offset..offset + list.n()` with its induced
/// sublist renumbered from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub offset: usize,
    pub list: SwapList,
}

impl Block {
    pub fn original_wire(&self, local: usize) -> usize {
        self.offset + local
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Split {
    /// `wire` takes part in no swap but some swap jumps over it.
    Infeasible {
        wire: usize,
    },
    Blocks(Vec<Block>),
}

/// Cuts the wire range wherever no swap crosses the gap between neighbouring
/// wires. A free wire becomes a block of its own; a free wire that is jumped
/// over by some swap makes the list infeasible.
pub fn split_free_wires(list: &SwapList) -> Split {
    let n = list.n();
    // reach[k]: largest j over swaps ij with i <= k
    let mut furthest = vec![0usize; n];
    for (i, j, _) in list.iter() {
        furthest[i] = furthest[i].max(j);
    }
    let used = list.participates();
    let mut reach = 0usize;
    let mut cut_after = vec![false; n];
    for k in 0..n {
        if !used[k] && reach > k {
            return Split::Infeasible { wire: k };
        }
        reach = reach.max(furthest[k]);
        cut_after[k] = reach <= k;
    }
    let mut blocks = Vec::new();
    let mut start = 0;
    for (k, &cut) in cut_after.iter().enumerate() {
        if cut {
            let wires: Vec<usize> = (start..=k).collect();
            let sub = list.restrict(&wires).expect("non-empty block");
            blocks.push(Block { offset: start, list: sub });
            start = k + 1;
        }
    }
    Split::Blocks(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, s: &str) -> SwapList {
        SwapList::from_notation(n, s).unwrap()
    }

    #[test]
    fn straddled_free_wire_is_infeasible() {
        assert_eq!(split_free_wires(&l(3, "13")), Split::Infeasible { wire: 1 });
        assert_eq!(split_free_wires(&l(5, "12 35")), Split::Infeasible { wire: 3 });
    }

    #[test]
    fn gap_between_blocks() {
        let Split::Blocks(blocks) = split_free_wires(&l(4, "12 34")) else { panic!() };
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0], Block { offset: 0, list: l(2, "12") });
        assert_eq!(blocks[1], Block { offset: 2, list: l(2, "12") });
        assert_eq!(blocks[1].original_wire(1), 3);
    }

    #[test]
    fn connected_list_is_one_block() {
        let e = l(3, "12 23 13");
        assert_eq!(split_free_wires(&e), Split::Blocks(vec![Block { offset: 0, list: e }]));
    }

    #[test]
    fn border_and_middle_free_wires_are_singletons() {
        let Split::Blocks(blocks) = split_free_wires(&l(5, "23 45")) else { panic!() };
        let shape: Vec<(usize, usize)> = blocks.iter().map(|b| (b.offset, b.list.n())).collect();
        assert_eq!(shape, [(0, 1), (1, 2), (3, 2)]);
        let Split::Blocks(blocks) = split_free_wires(&SwapList::new(3)) else { panic!() };
        assert_eq!(blocks.len(), 3);
    }
}
