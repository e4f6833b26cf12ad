//! Permutations of wires and the layer involutions that connect them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};

/// A bijection of the wires `0..n`.
///
/// Both views are kept: `wires[p]` is the wire at position `p` (the usual
/// written form, e.g. `4312`), `positions[w]` is the position of wire `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    wires: Vec<usize>,
    positions: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        let wires: Vec<usize> = (0..n).collect();
        Permutation { positions: wires.clone(), wires }
    }

    /// From the wire-at-position sequence (0-based wires).
    pub fn from_wires(wires: Vec<usize>) -> Result<Self> {
        let n = wires.len();
        if n == 0 {
            return Err(TangleError::EmptyWireSet);
        }
        let mut positions = vec![usize::MAX; n];
        for (p, &w) in wires.iter().enumerate() {
            if w >= n || positions[w] != usize::MAX {
                return Err(TangleError::InvalidPermutation(n));
            }
            positions[w] = p;
        }
        Ok(Permutation { wires, positions })
    }

    /// From the position-of-wire map (0-based positions).
    pub fn from_positions(positions: Vec<usize>) -> Result<Self> {
        let inverse = Permutation::from_wires(positions)?;
        Ok(Permutation { wires: inverse.positions, positions: inverse.wires })
    }

    /// Parses the written form with 1-based single digits, e.g. `"4312"`.
    pub fn from_notation(s: &str) -> Result<Self> {
        let wires = s
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d > 0 => Ok(d as usize - 1),
                _ => Err(TangleError::InvalidPermutation(s.chars().count())),
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_wires(wires)
    }

    pub fn n(&self) -> usize {
        self.wires.len()
    }

    pub fn wires(&self) -> &[usize] {
        &self.wires
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn wire_at(&self, position: usize) -> usize {
        self.wires[position]
    }

    pub fn position_of(&self, wire: usize) -> usize {
        self.positions[wire]
    }

    pub fn is_identity(&self) -> bool {
        self.wires.iter().enumerate().all(|(p, &w)| p == w)
    }

    /// Applies the involution: every swapped pair of wires trades positions.
    /// The involution must be supported by `self`.
    pub fn apply(&self, eps: &Involution) -> Result<Permutation> {
        if eps.n() != self.n() {
            return Err(TangleError::WireCountMismatch { left: self.n(), right: eps.n() });
        }
        if !self.supports(eps) {
            return Err(TangleError::InvalidInvolution(format!("{eps} is not supported by {self}")));
        }
        let mut next = self.clone();
        for &(a, b) in eps.swaps() {
            next.swap_positions(self.positions[a].min(self.positions[b]));
        }
        Ok(next)
    }

    /// Swaps the wires at positions `p` and `p + 1`.
    pub(crate) fn swap_positions(&mut self, p: usize) {
        self.wires.swap(p, p + 1);
        self.positions[self.wires[p]] = p;
        self.positions[self.wires[p + 1]] = p + 1;
    }

    /// Every swap of `eps` joins wires at neighbouring positions.
    pub fn supports(&self, eps: &Involution) -> bool {
        eps.n() == self.n() && eps.swaps().iter().all(|&(a, b)| self.positions[a].abs_diff(self.positions[b]) == 1)
    }

    /// Packs the wire sequence into 4-bit nibbles; `None` for more than 16 wires.
    pub fn pack(&self) -> Option<u64> {
        pack_wires(&self.wires)
    }
}

pub(crate) fn pack_wires(wires: &[usize]) -> Option<u64> {
    if wires.len() > 16 {
        return None;
    }
    Some(wires.iter().enumerate().fold(0u64, |acc, (p, &w)| acc | ((w as u64) << (4 * p))))
}

pub(crate) fn unpack_wires(code: u64, n: usize) -> Vec<usize> {
    (0..n).map(|p| ((code >> (4 * p)) & 0xf) as usize).collect()
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = TangleError;
    fn try_from(wires: Vec<usize>) -> Result<Self> {
        Permutation::from_wires(wires)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.wires
    }
}

impl fmt::Display for Permutation {
    /// Written form with 1-based wires; separated by spaces beyond nine wires.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { " " } else { "" };
        let parts: Vec<String> = self.wires.iter().map(|w| (w + 1).to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// An order-2 permutation, stored as its set of disjoint wire swaps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Involution {
    n: usize,
    swaps: Vec<(usize, usize)>,
}

impl Involution {
    /// Validates disjointness and non-emptiness; pairs are normalised to
    /// `(min, max)` and sorted.
    pub fn new(n: usize, swaps: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for (a, b) in swaps {
            if a >= n || b >= n {
                return Err(TangleError::WireOutOfRange { wire: a.max(b), n });
            }
            if a == b {
                return Err(TangleError::SelfSwap(a + 1));
            }
            if seen[a] || seen[b] {
                return Err(TangleError::InvalidInvolution("swaps are not disjoint".into()));
            }
            seen[a] = true;
            seen[b] = true;
            out.push((a.min(b), a.max(b)));
        }
        if out.is_empty() {
            return Err(TangleError::InvalidInvolution("the identity is not an involution layer".into()));
        }
        out.sort_unstable();
        Ok(Involution { n, swaps: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn swaps(&self) -> &[(usize, usize)] {
        &self.swaps
    }

    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .swaps
            .iter()
            .map(|&(a, b)| if self.n <= 9 { format!("{}{}", a + 1, b + 1) } else { format!("{}-{}", a + 1, b + 1) })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Enumerates every non-empty set of pairwise disjoint neighbouring position
/// pairs `(p, p + 1)` with `allowed(p)`, calling `visit` with the sorted left
/// positions. Sets come in lexicographic order of their position sequences.
pub(crate) fn for_each_matching(n: usize, allowed: impl Fn(usize) -> bool, mut visit: impl FnMut(&[usize])) {
    let open: Vec<usize> = (0..n.saturating_sub(1)).filter(|&p| allowed(p)).collect();
    let mut chosen = Vec::with_capacity(n / 2);
    fn rec(open: &[usize], start: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        for k in start..open.len() {
            let p = open[k];
            if let Some(&last) = chosen.last() {
                if p <= last + 1 {
                    continue;
                }
            }
            chosen.push(p);
            visit(chosen);
            rec(open, k + 1, chosen, visit);
            chosen.pop();
        }
    }
    rec(&open, 0, &mut chosen, &mut visit);
}

/// All involutions supported by `pi`, in canonical order (lexicographic in
/// the positions they touch). There are `F(n+1) - 1` of them.
pub fn supported_involutions(pi: &Permutation) -> Vec<Involution> {
    let n = pi.n();
    let mut out = Vec::new();
    for_each_matching(
        n,
        |_| true,
        |ps| {
            let swaps = ps.iter().map(|&p| (pi.wire_at(p), pi.wire_at(p + 1)));
            out.push(Involution::new(n, swaps).expect("matching is disjoint"));
        },
    );
    out
}

/// The involution `eps` with `sigma = pi * eps` and `pi` supporting `eps`,
/// if `pi` and `sigma` are adjacent.
pub fn adjacency(pi: &Permutation, sigma: &Permutation) -> Option<Involution> {
    if pi.n() != sigma.n() {
        return None;
    }
    let (a, b) = (pi.wires(), sigma.wires());
    let mut swaps = Vec::new();
    let mut p = 0;
    while p < a.len() {
        if a[p] == b[p] {
            p += 1;
            continue;
        }
        if p + 1 < a.len() && a[p] == b[p + 1] && a[p + 1] == b[p] {
            swaps.push((a[p], a[p + 1]));
            p += 2;
        } else {
            return None;
        }
    }
    if swaps.is_empty() {
        return None;
    }
    Involution::new(pi.n(), swaps).ok()
}

pub fn is_adjacent(pi: &Permutation, sigma: &Permutation) -> bool {
    adjacency(pi, sigma).is_some()
}
