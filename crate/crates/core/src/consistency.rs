//! Where a list sends the wires: the parity map, consistency, and the
//! inversion list of a permutation.

use crate::error::{Result, TangleError};
use crate::list::SwapList;
use crate::perm::Permutation;

/// Final position of every wire after applying the swaps of `list` to `pi`.
///
/// Only odd multiplicities move a wire. The result need not be a bijection;
/// that is exactly what [`is_consistent`] tests. Runs in `O(n + entries)`.
pub fn apply_list(pi: &Permutation, list: &SwapList) -> Result<Vec<usize>> {
    if pi.n() != list.n() {
        return Err(TangleError::WireCountMismatch { left: pi.n(), right: list.n() });
    }
    let mut pos: Vec<isize> = pi.positions().iter().map(|&p| p as isize).collect();
    for (i, j, c) in list.iter() {
        if c % 2 == 0 {
            continue;
        }
        if pi.position_of(i) < pi.position_of(j) {
            pos[i] += 1;
            pos[j] -= 1;
        } else {
            pos[i] -= 1;
            pos[j] += 1;
        }
    }
    // each wire moves at most n - 1 - p right and p left, so this stays in range
    Ok(pos.into_iter().map(|p| p as usize).collect())
}

/// `pi * list` as a permutation, or `None` if the list is not `pi`-consistent.
pub fn final_permutation(pi: &Permutation, list: &SwapList) -> Result<Option<Permutation>> {
    let map = apply_list(pi, list)?;
    Ok(Permutation::from_positions(map).ok())
}

pub fn is_consistent(pi: &Permutation, list: &SwapList) -> Result<bool> {
    Ok(final_permutation(pi, list)?.is_some())
}

/// Consistency from the identity order.
pub fn is_consistent_from_identity(list: &SwapList) -> bool {
    is_consistent(&Permutation::identity(list.n()), list).expect("same wire count")
}

/// The inversion indicator list of `pi`: `l_ij = 1` iff `i < j` and wire `j`
/// ends up left of wire `i`. It is the only simple list taking the identity
/// to `pi`.
pub fn simple_list_of(pi: &Permutation) -> SwapList {
    let n = pi.n();
    let mut out = SwapList::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if pi.position_of(i) > pi.position_of(j) {
                out.set(i, j, 1).expect("valid pair");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, s: &str) -> SwapList {
        SwapList::from_notation(n, s).unwrap()
    }

    /// The textbook formula, evaluated literally.
    fn formula(pi: &Permutation, list: &SwapList) -> Vec<usize> {
        let n = pi.n();
        (0..n)
            .map(|i| {
                let p = pi.position_of(i);
                let up = (0..n).filter(|&j| pi.position_of(j) > p && list.get(i, j) % 2 == 1).count();
                let down = (0..n).filter(|&j| pi.position_of(j) < p && list.get(i, j) % 2 == 1).count();
                p + up - down
            })
            .collect()
    }

    #[test]
    fn apply_list_examples() {
        let id = Permutation::identity(3);
        assert_eq!(apply_list(&id, &l(3, "12 23 13")).unwrap(), vec![2, 1, 0]);
        assert_eq!(apply_list(&id, &l(3, "13 13")).unwrap(), vec![0, 1, 2]);
        assert_eq!(apply_list(&id, &l(3, "13")).unwrap(), vec![1, 1, 1]);
        for list in [l(3, "12 23 13"), l(3, "13"), l(3, "12 12 23")] {
            assert_eq!(apply_list(&id, &list).unwrap(), formula(&id, &list));
        }
    }

    #[test]
    fn consistency_examples() {
        let id = Permutation::identity(3);
        assert!(is_consistent(&id, &l(3, "12 23 13")).unwrap());
        assert!(!is_consistent(&id, &l(3, "13")).unwrap());
        assert!(is_consistent(&id, &l(3, "13 13")).unwrap());
        assert!(is_consistent(&id, &l(4, "13")).is_err());
    }

    #[test]
    fn simple_list_examples() {
        assert!(simple_list_of(&Permutation::identity(4)).is_zero());
        assert_eq!(simple_list_of(&Permutation::from_notation("321").unwrap()), l(3, "12 13 23"));
        assert_eq!(simple_list_of(&Permutation::from_notation("213").unwrap()), l(3, "12"));
    }

    #[test]
    fn final_permutation_of_full_reversal() {
        let id = Permutation::identity(3);
        let fin = final_permutation(&id, &l(3, "12 23 13")).unwrap().unwrap();
        assert_eq!(fin.to_string(), "321");
    }
}
