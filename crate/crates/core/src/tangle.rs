//! Tangles: sequences of pairwise adjacent permutations.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};
use crate::list::SwapList;
use crate::perm::{adjacency, Involution, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Permutation>", into = "Vec<Permutation>")]
pub struct Tangle {
    perms: Vec<Permutation>,
}

impl Tangle {
    /// Validates that consecutive permutations are adjacent.
    pub fn new(perms: Vec<Permutation>) -> Result<Self> {
        let first = perms.first().ok_or(TangleError::EmptyTangle)?;
        let n = first.n();
        for (index, w) in perms.windows(2).enumerate() {
            if w[1].n() != n {
                return Err(TangleError::WireCountMismatch { left: n, right: w[1].n() });
            }
            if adjacency(&w[0], &w[1]).is_none() {
                return Err(TangleError::NotAdjacent { index });
            }
        }
        Ok(Tangle { perms })
    }

    /// Builds a tangle by applying `layers` one after another to `start`.
    pub fn from_layers(start: Permutation, layers: &[Involution]) -> Result<Self> {
        let mut perms = Vec::with_capacity(layers.len() + 1);
        perms.push(start);
        for eps in layers {
            let next = perms.last().expect("non-empty").apply(eps)?;
            perms.push(next);
        }
        Ok(Tangle { perms })
    }

    pub fn trivial(n: usize) -> Self {
        Tangle { perms: vec![Permutation::identity(n)] }
    }

    pub fn n(&self) -> usize {
        self.perms[0].n()
    }

    /// Number of permutations.
    pub fn height(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn first(&self) -> &Permutation {
        &self.perms[0]
    }

    pub fn last(&self) -> &Permutation {
        self.perms.last().expect("non-empty")
    }

    /// Swap set of every layer, top to bottom.
    pub fn layers(&self) -> Vec<Involution> {
        self.perms.windows(2).map(|w| adjacency(&w[0], &w[1]).expect("validated on construction")).collect()
    }

    /// All permutations are distinct.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.perms.len());
        self.perms.iter().all(|p| seen.insert(p))
    }

    /// The list realized by this tangle: how often each pair swaps.
    pub fn list(&self) -> SwapList {
        let mut out = SwapList::new(self.n());
        for eps in self.layers() {
            for &(a, b) in eps.swaps() {
                out.add(a, b, 1).expect("valid pair");
            }
        }
        out
    }
}

/// Counts swaps per pair over the layers of `tangle`.
pub fn list_of_tangle(tangle: &Tangle) -> SwapList {
    tangle.list()
}

impl TryFrom<Vec<Permutation>> for Tangle {
    type Error = TangleError;
    fn try_from(perms: Vec<Permutation>) -> Result<Self> {
        Tangle::new(perms)
    }
}

impl From<Tangle> for Vec<Permutation> {
    fn from(t: Tangle) -> Self {
        t.perms
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consistency::final_permutation;

    fn t(rows: &[&str]) -> Result<Tangle> {
        Tangle::new(rows.iter().map(|r| Permutation::from_notation(r).unwrap()).collect())
    }

    #[test]
    fn list_of_trivial_tangle_is_zero() {
        assert!(t(&["123"]).unwrap().list().is_zero());
    }

    #[test]
    fn list_of_small_tangle() {
        let tangle = t(&["123", "213", "231"]).unwrap();
        assert_eq!(tangle.height(), 3);
        assert_eq!(tangle.list(), SwapList::from_notation(3, "12 13").unwrap());
        let fin = final_permutation(tangle.first(), &tangle.list()).unwrap().unwrap();
        assert_eq!(&fin, tangle.last());
    }

    #[test]
    fn rejects_non_adjacent_rows() {
        assert_eq!(t(&["123", "321"]), Err(TangleError::NotAdjacent { index: 0 }));
        assert_eq!(t(&["123", "213", "213"]), Err(TangleError::NotAdjacent { index: 1 }));
        assert_eq!(Tangle::new(vec![]), Err(TangleError::EmptyTangle));
    }

    #[test]
    fn simplicity() {
        assert!(t(&["12", "21"]).unwrap().is_simple());
        assert!(!t(&["12", "21", "12"]).unwrap().is_simple());
    }

    #[test]
    fn from_layers_matches_rows() {
        let layers = [Involution::new(3, [(0, 1)]).unwrap(), Involution::new(3, [(0, 2)]).unwrap()];
        let tangle = Tangle::from_layers(Permutation::identity(3), &layers).unwrap();
        assert_eq!(tangle, t(&["123", "213", "231"]).unwrap());
        assert_eq!(tangle.layers(), layers);
    }
}
