//! Instance families: the rigid loop list `L_n`, the all-ones list `E`, the
//! 3-Partition gadget, and seeded random feasible lists.
//!
//! Random generation uses ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a seed reproduces the same instance on every platform.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};
use crate::general::is_feasible;
use crate::list::SwapList;

/// `L_n`: wires `1..n-2` swap pairwise once, `n-1` and `n` swap `n - 1`
/// times, and every other wire swaps twice with one of the last two.
/// Odd wires (1-based) loop around wire `n`, even ones around `n - 1`.
pub fn gen_ln(n: usize) -> Result<SwapList> {
    if n < 4 {
        return Err(TangleError::InvalidInstance(format!("L_n needs n >= 4, got {n}")));
    }
    let mut list = SwapList::new(n);
    let (a, b) = (n - 2, n - 1);
    for i in 0..a {
        for j in i + 1..a {
            list.set(i, j, 1)?;
        }
        // 0-based even index = 1-based odd wire
        let partner = if i % 2 == 0 { b } else { a };
        list.set(i, partner, 2)?;
    }
    list.set(a, b, (n - 1) as u32)?;
    Ok(list)
}

/// The list where every pair swaps exactly once.
pub fn gen_e(n: usize) -> Result<SwapList> {
    let mut list = SwapList::try_new(n)?;
    for i in 0..n {
        for j in i + 1..n {
            list.set(i, j, 1)?;
        }
    }
    Ok(list)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePartitionInstance {
    pub values: Vec<u64>,
}

impl ThreePartitionInstance {
    /// Checks `|values| = 3m`, positive values and `m | sum`; with `strict`
    /// also `B/4 < n_i < B/2`.
    pub fn new(values: Vec<u64>, strict: bool) -> Result<Self> {
        if values.is_empty() || !values.len().is_multiple_of(3) {
            return Err(TangleError::InvalidInstance("need 3m values".into()));
        }
        if values.contains(&0) {
            return Err(TangleError::InvalidInstance("values must be positive".into()));
        }
        let inst = ThreePartitionInstance { values };
        let m = inst.m() as u64;
        if inst.values.iter().sum::<u64>() % m != 0 {
            return Err(TangleError::InvalidInstance("sum is not divisible by m".into()));
        }
        if strict {
            let b = inst.target();
            if let Some(v) = inst.values.iter().find(|&&v| 4 * v <= b || 2 * v >= b) {
                return Err(TangleError::InvalidInstance(format!("value {v} outside (B/4, B/2) for B = {b}")));
            }
        }
        Ok(inst)
    }

    /// A seeded yes-instance: `m` triples, each summing to `target`, with
    /// every value strictly between `target/4` and `target/2`.
    pub fn random_yes(m: usize, target: u64, seed: u64) -> Result<Self> {
        let (lo, hi) = (target / 4 + 1, (target - 1) / 2);
        if m == 0 || lo > hi || 3 * lo > target || 3 * hi < target {
            return Err(TangleError::InvalidInstance(format!("no strict triples sum to {target}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut values = Vec::with_capacity(3 * m);
        while values.len() < 3 * m {
            let a = rng.gen_range(lo..=hi);
            let b = rng.gen_range(lo..=hi);
            let Some(c) = target.checked_sub(a + b) else { continue };
            if (lo..=hi).contains(&c) {
                values.extend([a, b, c]);
            }
        }
        Self::new(values, true)
    }

    pub fn m(&self) -> usize {
        self.values.len() / 3
    }

    /// `B = sum / m`.
    pub fn target(&self) -> u64 {
        self.values.iter().sum::<u64>() / self.m() as u64
    }
}

/// Named wires of the hardness gadget; indices are 1-based as in the
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WireRole {
    Gamma(usize),
    Delta(usize),
    Beta(usize),
    Alpha(usize),
    Omega,
    OmegaPrime,
    AlphaPrime(usize),
    DeltaPrime(usize),
    BetaPrime(usize),
    GammaPrime(usize),
}

impl fmt::Display for WireRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WireRole::Gamma(i) => write!(f, "gamma{i}"),
            WireRole::Delta(i) => write!(f, "delta{i}"),
            WireRole::Beta(i) => write!(f, "beta{i}"),
            WireRole::Alpha(i) => write!(f, "alpha{i}"),
            WireRole::Omega => write!(f, "omega"),
            WireRole::OmegaPrime => write!(f, "omega'"),
            WireRole::AlphaPrime(i) => write!(f, "alpha'{i}"),
            WireRole::DeltaPrime(i) => write!(f, "delta'{i}"),
            WireRole::BetaPrime(i) => write!(f, "beta'{i}"),
            WireRole::GammaPrime(i) => write!(f, "gamma'{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HardnessInstance {
    pub list: SwapList,
    /// Height bound `2 m^4 B + 7 m^2`.
    pub height_bound: u64,
    /// Role of every wire to its 0-based index.
    pub roles: BTreeMap<WireRole, usize>,
}

impl HardnessInstance {
    pub fn wire(&self, role: WireRole) -> usize {
        self.roles[&role]
    }
}

/// The 3-Partition gadget over `12m + 2` wires. A tangle of height at most
/// the returned bound exists iff the instance is a yes-instance.
pub fn gen_hardness(inst: &ThreePartitionInstance) -> Result<HardnessInstance> {
    let m = inst.m();
    let b = inst.target();
    let mu = m as u64;
    let big = 2 * mu * mu * mu; // 2 m^3
    let count = |c: u64| u32::try_from(c).map_err(|_| TangleError::InvalidInstance("multiplicity exceeds u32".into()));

    // initial left-to-right order
    let mut order = Vec::with_capacity(12 * m + 2);
    order.extend((1..=m).map(WireRole::Gamma));
    for i in (1..=m).rev() {
        order.extend([WireRole::Delta(i), WireRole::Beta(i)]);
    }
    order.extend((1..=3 * m).rev().map(WireRole::Alpha));
    order.extend([WireRole::Omega, WireRole::OmegaPrime]);
    order.extend((1..=3 * m).map(WireRole::AlphaPrime));
    for i in 1..=m {
        order.extend([WireRole::DeltaPrime(i), WireRole::BetaPrime(i), WireRole::GammaPrime(i)]);
    }
    let roles: BTreeMap<WireRole, usize> = order.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let w = |r: WireRole| roles[&r];

    let mut list = SwapList::new(order.len());
    let omega = w(WireRole::Omega);
    let omega_p = w(WireRole::OmegaPrime);
    list.set(omega, omega_p, count(2 * mu)?)?;

    let alphas: Vec<usize> = (1..=3 * m).map(|i| w(WireRole::Alpha(i))).collect();
    let alphas_p: Vec<usize> = (1..=3 * m).map(|i| w(WireRole::AlphaPrime(i))).collect();
    for (k, &value) in inst.values.iter().enumerate() {
        list.set(alphas[k], alphas_p[k], count(big * value)?)?;
        list.set(alphas[k], omega_p, 2)?;
        list.set(alphas_p[k], omega, 2)?;
    }
    for side in [&alphas, &alphas_p] {
        for (x, &a) in side.iter().enumerate() {
            for &c in &side[x + 1..] {
                list.set(a, c, 2)?;
            }
        }
    }

    let left: Vec<usize> = (1..=m).flat_map(|i| [w(WireRole::Beta(i)), w(WireRole::Delta(i))]).collect();
    let right: Vec<usize> = (1..=m).flat_map(|i| [w(WireRole::BetaPrime(i)), w(WireRole::DeltaPrime(i))]).collect();
    for side in [&left, &right] {
        for (x, &a) in side.iter().enumerate() {
            for &c in &side[x + 1..] {
                list.set(a, c, 1)?;
            }
        }
    }
    for i in 1..=m {
        list.set(w(WireRole::Beta(i)), omega, 2)?;
        list.set(w(WireRole::Delta(i)), omega_p, 2)?;
        list.set(w(WireRole::DeltaPrime(i)), omega, 2)?;
        list.set(w(WireRole::BetaPrime(i)), omega_p, 2)?;
        for k in 0..3 * m {
            list.set(w(WireRole::Beta(i)), alphas[k], 2)?;
            list.set(w(WireRole::Delta(i)), alphas[k], 2)?;
            list.set(w(WireRole::BetaPrime(i)), alphas_p[k], 2)?;
            list.set(w(WireRole::DeltaPrime(i)), alphas_p[k], 2)?;
        }
    }

    for i in 1..=m {
        let iu = i as u64;
        list.set(w(WireRole::Gamma(i)), w(WireRole::Beta(i)), count((mu - iu + 1) * big * b)?)?;
        list.set(w(WireRole::GammaPrime(i)), w(WireRole::BetaPrime(i)), count(iu * big * b)?)?;
        for j in 1..i {
            list.set(w(WireRole::Gamma(i)), w(WireRole::Beta(j)), 1)?;
            list.set(w(WireRole::Gamma(i)), w(WireRole::Delta(j)), 1)?;
        }
        for j in i + 1..=m {
            list.set(w(WireRole::GammaPrime(i)), w(WireRole::BetaPrime(j)), 1)?;
            list.set(w(WireRole::GammaPrime(i)), w(WireRole::DeltaPrime(j)), 1)?;
        }
    }

    let height_bound = 2 * mu.pow(4) * b + 7 * mu * mu;
    Ok(HardnessInstance { list, height_bound, roles })
}

/// Draws `total` swaps uniformly over the `n(n-1)/2` wire pairs (a uniform
/// multinomial) and redraws until the list is feasible.
pub fn gen_random(n: usize, total: u64, seed: u64, max_rounds: usize) -> Result<SwapList> {
    if n < 2 || total == 0 {
        return Err(TangleError::InvalidInstance("need n >= 2 and total >= 1".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_rounds {
        let mut counts = vec![0u32; pairs.len()];
        for _ in 0..total {
            counts[rng.gen_range(0..pairs.len())] += 1;
        }
        let list = SwapList::from_counts(n, pairs.iter().zip(&counts).map(|(&(i, j), &c)| (i, j, c)))?;
        if is_feasible(&list) {
            return Ok(list);
        }
    }
    Err(TangleError::RejectionCapExceeded(max_rounds))
}
