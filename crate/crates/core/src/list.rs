//! Swap lists: symmetric multiplicity matrices stored as their upper triangle.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};

/// A multiset of swaps over `n` wires.
///
/// Wires are 0-based. Only pairs `i < j` with a non-zero multiplicity are
/// stored, so symmetry and the zero diagonal hold by construction. Iteration
/// order is the lexicographic order of `(i, j)`, which doubles as the
/// canonical key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SwapList {
    n: usize,
    mult: BTreeMap<(usize, usize), u32>,
    length: u64,
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl SwapList {
    /// The zero list over `n` wires.
    ///
    /// Panics if `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a swap list needs at least one wire");
        SwapList { n, mult: BTreeMap::new(), length: 0 }
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(TangleError::EmptyWireSet);
        }
        Ok(Self::new(n))
    }

    /// Builds a list from 0-based `(i, j, count)` triples. Repeated pairs add up.
    pub fn from_counts<I>(n: usize, counts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut list = Self::try_new(n)?;
        for (i, j, c) in counts {
            list.add(i, j, c)?;
        }
        Ok(list)
    }

    /// Builds a list from 0-based swaps, each occurrence counting once.
    pub fn from_swaps<I>(n: usize, swaps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_counts(n, swaps.into_iter().map(|(i, j)| (i, j, 1)))
    }

    /// Parses the compact notation used in the literature, e.g. `"12 23 13"`:
    /// every token is two 1-based wire digits, optionally followed by `xK`
    /// for `K` copies; repeated tokens add up.
    /// Only usable for `n <= 9`.
    pub fn from_notation(n: usize, notation: &str) -> Result<Self> {
        let mut list = Self::try_new(n)?;
        for token in
            notation.split(|c: char| c.is_whitespace() || c == ',' || c == '{' || c == '}').filter(|t| !t.is_empty())
        {
            let bad = || TangleError::InvalidInstance(format!("bad swap token {token:?}"));
            let (pair, times) = match token.split_once('x') {
                Some((p, k)) => (p, k.parse::<u32>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let digits: Vec<u32> = pair.chars().filter_map(|c| c.to_digit(10)).collect();
            if digits.len() != 2 || pair.chars().count() != 2 || digits.contains(&0) {
                return Err(bad());
            }
            list.add(digits[0] as usize - 1, digits[1] as usize - 1, times)?;
        }
        Ok(list)
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        for w in [i, j] {
            if w >= self.n {
                return Err(TangleError::WireOutOfRange { wire: w, n: self.n });
            }
        }
        if i == j {
            return Err(TangleError::SelfSwap(i + 1));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|L|`, the total number of swaps.
    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// Multiplicity of swap `ij`; zero on the diagonal and out of range.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 0;
        }
        self.mult.get(&ordered(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, count: u32) -> Result<()> {
        self.check_pair(i, j)?;
        let key = ordered(i, j);
        let old = if count == 0 { self.mult.remove(&key) } else { self.mult.insert(key, count) };
        self.length = self.length - u64::from(old.unwrap_or(0)) + u64::from(count);
        Ok(())
    }

    pub fn add(&mut self, i: usize, j: usize, count: u32) -> Result<()> {
        let current = if i < self.n && j < self.n { self.get(i, j) } else { 0 };
        let total =
            current.checked_add(count).ok_or_else(|| TangleError::InvalidInstance("multiplicity overflow".into()))?;
        self.set(i, j, total)
    }

    /// Non-zero entries as `(i, j, count)` with `i < j`, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.mult.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    /// Number of distinct swap pairs with non-zero multiplicity.
    pub fn support_size(&self) -> usize {
        self.mult.len()
    }

    /// Wires that take part in at least one swap.
    pub fn participates(&self) -> Vec<bool> {
        let mut used = vec![false; self.n];
        for (i, j, _) in self.iter() {
            used[i] = true;
            used[j] = true;
        }
        used
    }

    pub fn is_simple(&self) -> bool {
        self.mult.values().all(|&c| c == 1)
    }

    pub fn is_even(&self) -> bool {
        self.mult.values().all(|&c| c % 2 == 0)
    }

    /// Every non-zero entry is odd.
    pub fn is_odd(&self) -> bool {
        self.mult.values().all(|&c| c % 2 == 1)
    }

    /// Every entry is 0 or 2.
    pub fn is_zero_two(&self) -> bool {
        self.mult.values().all(|&c| c == 2)
    }

    /// Componentwise `self <= other`.
    pub fn is_sublist_of(&self, other: &SwapList) -> bool {
        self.n == other.n && self.iter().all(|(i, j, c)| c <= other.get(i, j))
    }

    fn map_counts(&self, f: impl Fn(u32) -> u32) -> SwapList {
        let mut out = SwapList::new(self.n);
        for (i, j, c) in self.iter() {
            out.set(i, j, f(c)).expect("pair already validated");
        }
        out
    }

    /// Entrywise multiplicity mod 2.
    pub fn parity_reduce(&self) -> SwapList {
        self.map_counts(|c| c % 2)
    }

    /// Entrywise cap: 0 stays 0, odd becomes 1, positive even becomes 2.
    pub fn cap_reduce(&self) -> SwapList {
        self.map_counts(|c| if c % 2 == 1 { 1 } else { 2 })
    }

    /// Every multiplicity multiplied by `factor`.
    pub fn scaled(&self, factor: u32) -> SwapList {
        self.map_counts(|c| c * factor)
    }

    /// The sublist on the wires in `subset`, renumbered by their relative order.
    pub fn restrict(&self, subset: &[usize]) -> Result<SwapList> {
        let mut wires = subset.to_vec();
        wires.sort_unstable();
        wires.dedup();
        if wires.is_empty() {
            return Err(TangleError::EmptyWireSet);
        }
        if let Some(&w) = wires.iter().find(|&&w| w >= self.n) {
            return Err(TangleError::WireOutOfRange { wire: w, n: self.n });
        }
        let mut out = SwapList::new(wires.len());
        for (a, &i) in wires.iter().enumerate() {
            for (b, &j) in wires.iter().enumerate().skip(a + 1) {
                let c = self.get(i, j);
                if c > 0 {
                    out.set(a, b, c)?;
                }
            }
        }
        Ok(out)
    }

    /// `true` iff for all `i < k < j`, `l_ik = l_kj = 0` implies `l_ij = 0`.
    pub fn is_non_separable(&self) -> bool {
        self.iter().all(|(i, j, _)| (i + 1..j).all(|k| self.get(i, k) > 0 || self.get(k, j) > 0))
    }

    /// Number of distinct sublists, `prod (l_ij + 1)`, or `None` on overflow.
    pub fn sublist_count(&self) -> Option<u128> {
        self.mult.values().try_fold(1u128, |acc, &c| acc.checked_mul(u128::from(c) + 1))
    }

    /// Sum of two lists over the same wires.
    pub fn plus(&self, other: &SwapList) -> Result<SwapList> {
        if self.n != other.n {
            return Err(TangleError::WireCountMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (i, j, c) in other.iter() {
            out.add(i, j, c)?;
        }
        Ok(out)
    }
}

impl fmt::Display for SwapList {
    /// `{12, 13x2}` for up to nine wires, `{1-12, 3-4x2}` beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j, c)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if self.n <= 9 {
                write!(f, "{}{}", i + 1, j + 1)?;
            } else {
                write!(f, "{}-{}", i + 1, j + 1)?;
            }
            if c > 1 {
                write!(f, "x{c}")?;
            }
        }
        write!(f, "}}")
    }
}
