//! Feasibility characterizations for structured lists, the even-list
//! conjecture tooling, and the odd-even connecting tangle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::consistency::{final_permutation, is_consistent_from_identity};
use crate::error::{Result, TangleError};
use crate::general::{feasibility_search, is_feasible};
use crate::list::SwapList;
use crate::perm::Permutation;
use crate::report::{Budget, Verdict};
use crate::tangle::Tangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SimpleConsistency,
    OddConsistency,
    /// Non-separability, assuming every non-separable even list is feasible.
    Conjecture,
    /// A solver found a realization.
    Solver,
    /// A solver exhausted every sublist without finding one.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub method: Method,
    pub witness: Option<Tangle>,
}

/// A simple list is feasible iff it is consistent. The witness comes from
/// the odd-even connecting tangle.
pub fn feasible_simple(list: &SwapList) -> Result<FeasibilityVerdict> {
    if !list.is_simple() {
        return Err(TangleError::NotSimple);
    }
    let id = Permutation::identity(list.n());
    let witness = match final_permutation(&id, list)? {
        Some(target) => Some(connect_wang(&id, &target)?),
        None => None,
    };
    Ok(FeasibilityVerdict { feasible: witness.is_some(), method: Method::SimpleConsistency, witness })
}

/// An odd list is feasible iff it is consistent.
pub fn feasible_odd(list: &SwapList) -> Result<FeasibilityVerdict> {
    if !list.is_odd() {
        return Err(TangleError::NotOdd);
    }
    Ok(FeasibilityVerdict {
        feasible: is_consistent_from_identity(list),
        method: Method::OddConsistency,
        witness: None,
    })
}

/// The eight equivalent statements about an odd list, each evaluated on
/// its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddListStatements {
    pub feasible: bool,
    pub parity_feasible: bool,
    pub triples_feasible: bool,
    pub triples_parity_feasible: bool,
    pub consistent: bool,
    pub parity_consistent: bool,
    pub triples_consistent: bool,
    pub triples_parity_consistent: bool,
}

impl OddListStatements {
    pub fn as_array(&self) -> [bool; 8] {
        [
            self.feasible,
            self.parity_feasible,
            self.triples_feasible,
            self.triples_parity_feasible,
            self.consistent,
            self.parity_consistent,
            self.triples_consistent,
            self.triples_parity_consistent,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
}

/// Evaluates all eight statements; feasibility by exact search, consistency
/// by the parity map.
pub fn odd_list_statements(list: &SwapList) -> Result<OddListStatements> {
    if !list.is_odd() {
        return Err(TangleError::NotOdd);
    }
    if list.n() < 3 {
        return Err(TangleError::Hypothesis("needs at least three wires".into()));
    }
    let parity = list.parity_reduce();
    let restricted: Vec<SwapList> = triples(list.n()).map(|t| list.restrict(&t)).collect::<Result<_>>()?;
    Ok(OddListStatements {
        feasible: is_feasible(list),
        parity_feasible: is_feasible(&parity),
        triples_feasible: restricted.iter().all(is_feasible),
        triples_parity_feasible: restricted.iter().all(|r| is_feasible(&r.parity_reduce())),
        consistent: is_consistent_from_identity(list),
        parity_consistent: is_consistent_from_identity(&parity),
        triples_consistent: restricted.iter().all(is_consistent_from_identity),
        triples_parity_consistent: restricted.iter().all(|r| is_consistent_from_identity(&r.parity_reduce())),
    })
}

pub fn odd_statements_agree(list: &SwapList) -> Result<bool> {
    Ok(odd_list_statements(list)?.all_agree())
}

/// Even lists are always consistent. Without `decisive`, the verdict is
/// non-separability and is tagged as conjectural; with it, the exact search
/// decides.
pub fn feasible_even_conjectured(list: &SwapList, decisive: bool) -> Result<FeasibilityVerdict> {
    if !list.is_even() {
        return Err(TangleError::NotEven);
    }
    if !decisive {
        return Ok(FeasibilityVerdict { feasible: list.is_non_separable(), method: Method::Conjecture, witness: None });
    }
    Ok(decide(list))
}

/// Exact verdict through the sublist search.
pub fn decide(list: &SwapList) -> FeasibilityVerdict {
    let report = feasibility_search(list, Budget::unlimited());
    match report.verdict {
        Verdict::Feasible => FeasibilityVerdict { feasible: true, method: Method::Solver, witness: report.tangle },
        _ => FeasibilityVerdict { feasible: false, method: Method::Exhausted, witness: None },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub entry_bound: u32,
    pub lists_enumerated: u64,
    pub separable: u64,
    pub checked: u64,
    pub counterexamples: Vec<SwapList>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks every even list over `n` wires with entries in `{0, 2, ..., entry_bound}`:
/// each non-separable one must be feasible. Lists are split across `workers`
/// threads; the report does not depend on the worker count.
pub fn verify_conjecture(n: usize, entry_bound: u32, workers: usize) -> Result<ConjectureReport> {
    if n < 3 {
        return Err(TangleError::Hypothesis("needs at least three wires".into()));
    }
    if entry_bound % 2 == 1 {
        return Err(TangleError::Hypothesis("entry bound must be even".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let radix = u64::from(entry_bound / 2 + 1);
    let total =
        radix.checked_pow(pairs.len() as u32).ok_or_else(|| TangleError::Hypothesis("enumeration too large".into()))?;

    let list_at = |mut code: u64| {
        let mut list = SwapList::new(n);
        for &(i, j) in &pairs {
            let digit = (code % radix) as u32;
            code /= radix;
            if digit > 0 {
                list.set(i, j, 2 * digit).expect("valid pair");
            }
        }
        list
    };
    let check = |code: u64| -> (bool, Option<SwapList>) {
        let list = list_at(code);
        if !list.is_non_separable() {
            return (false, None);
        }
        let bad = (!is_feasible(&list)).then_some(list);
        (true, bad)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| TangleError::Hypothesis(format!("thread pool: {e}")))?;
    let results: Vec<(bool, Option<SwapList>)> = pool.install(|| (0..total).into_par_iter().map(check).collect());

    let checked = results.iter().filter(|r| r.0).count() as u64;
    Ok(ConjectureReport {
        n,
        entry_bound,
        lists_enumerated: total,
        separable: total - checked,
        checked,
        counterexamples: results.into_iter().filter_map(|r| r.1).collect(),
    })
}

/// Even, non-separable lists whose non-zero entries are all at least `n`
/// are feasible; returns what the exact search says about `list`.
pub fn check_large_even_instance(list: &SwapList) -> Result<bool> {
    if !list.is_even() {
        return Err(TangleError::NotEven);
    }
    if !list.is_non_separable() {
        return Err(TangleError::Hypothesis("list is separable".into()));
    }
    let n = list.n() as u32;
    if let Some((i, j, c)) = list.iter().find(|&(_, _, c)| c < n) {
        return Err(TangleError::Hypothesis(format!("entry {}{} = {c} is below {n}", i + 1, j + 1)));
    }
    Ok(is_feasible(list))
}

/// Removes pairs of swaps while the list stays feasible and no entry drops
/// to zero. Pairs are tried in canonical order, restarting after each
/// successful removal.
pub fn minimize_even_list(list: &SwapList) -> Result<SwapList> {
    if !list.is_even() {
        return Err(TangleError::NotEven);
    }
    if !is_feasible(list) {
        return Err(TangleError::NotFeasible);
    }
    let mut current = list.clone();
    'outer: loop {
        let entries: Vec<(usize, usize, u32)> = current.iter().filter(|&(_, _, c)| c > 2).collect();
        for (i, j, c) in entries {
            let mut smaller = current.clone();
            smaller.set(i, j, c - 2)?;
            if is_feasible(&smaller) {
                current = smaller;
                continue 'outer;
            }
        }
        return Ok(current);
    }
}

/// Odd-even transposition sort from `from` towards `to`: alternate rounds
/// of even and odd neighbouring positions, swapping a pair when its wires
/// are in the wrong order relative to `to`. Rounds without a swap are
/// dropped. Both starting parities are tried and the shorter tangle kept;
/// either way the height is at most `n + 1` and no pair swaps twice.
pub fn connect_wang(from: &Permutation, to: &Permutation) -> Result<Tangle> {
    if from.n() != to.n() {
        return Err(TangleError::WireCountMismatch { left: from.n(), right: to.n() });
    }
    let run = |first_parity: usize| {
        let n = from.n();
        let mut current = from.clone();
        let mut perms = vec![current.clone()];
        let mut round = 0;
        while current != *to {
            let mut changed = false;
            let mut p = (first_parity + round) % 2;
            while p + 1 < n {
                if to.position_of(current.wire_at(p)) > to.position_of(current.wire_at(p + 1)) {
                    current.swap_positions(p);
                    changed = true;
                }
                p += 2;
            }
            if changed {
                perms.push(current.clone());
            }
            round += 1;
        }
        perms
    };
    let (a, b) = (run(0), run(1));
    let perms = if b.len() < a.len() { b } else { a };
    Tangle::new(perms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, s: &str) -> SwapList {
        SwapList::from_notation(n, s).unwrap()
    }

    fn p(s: &str) -> Permutation {
        Permutation::from_notation(s).unwrap()
    }

    #[test]
    fn simple_lists_by_consistency() {
        let v = feasible_simple(&l(3, "12 23 13")).unwrap();
        assert!(v.feasible);
        assert_eq!(v.witness.unwrap().list(), l(3, "12 23 13"));
        assert!(!feasible_simple(&l(3, "13")).unwrap().feasible);
        let zero = feasible_simple(&SwapList::new(3)).unwrap();
        assert_eq!(zero.witness.unwrap().height(), 1);
        assert_eq!(feasible_simple(&l(3, "13 13")), Err(TangleError::NotSimple));
    }

    #[test]
    fn odd_lists_by_consistency() {
        let three = SwapList::from_counts(2, [(0, 1, 3)]).unwrap();
        assert!(feasible_odd(&three).unwrap().feasible);
        assert!(!feasible_odd(&l(3, "13")).unwrap().feasible);
        assert!(feasible_odd(&l(3, "12 23 13")).unwrap().feasible);
        assert_eq!(feasible_odd(&l(3, "13 13")), Err(TangleError::NotOdd));
    }

    #[test]
    fn odd_statements_small() {
        let yes = odd_list_statements(&l(3, "12 23 13")).unwrap();
        assert_eq!(yes.as_array(), [true; 8]);
        let no = odd_list_statements(&l(3, "13")).unwrap();
        assert_eq!(no.as_array(), [false; 8]);
        let mixed = SwapList::from_counts(4, [(0, 1, 3), (1, 2, 1), (0, 2, 1), (2, 3, 3)]).unwrap();
        assert!(odd_statements_agree(&mixed).unwrap());
    }

    #[test]
    fn even_conjecture_verdicts() {
        let sep = feasible_even_conjectured(&l(3, "13 13"), false).unwrap();
        assert!(!sep.feasible);
        assert_eq!(sep.method, Method::Conjecture);
        assert!(!feasible_even_conjectured(&l(3, "13 13"), true).unwrap().feasible);
        let pair = feasible_even_conjectured(&l(2, "12 12"), true).unwrap();
        assert!(pair.feasible);
        assert_eq!(pair.method, Method::Solver);
        assert!(feasible_even_conjectured(&l(3, "12 23 13").scaled(2), false).unwrap().feasible);
        assert_eq!(feasible_even_conjectured(&l(2, "12"), false), Err(TangleError::NotEven));
    }

    #[test]
    fn conjecture_tiny() {
        let r = verify_conjecture(3, 2, 1).unwrap();
        assert_eq!(r.lists_enumerated, 8);
        assert!(r.holds());
        // {13x2} alone is the only separable 0-2 list on three wires
        assert_eq!(r.separable, 1);
        let vacuous = verify_conjecture(3, 0, 1).unwrap();
        assert_eq!((vacuous.lists_enumerated, vacuous.checked), (1, 1));
        assert!(verify_conjecture(3, 3, 1).is_err());
    }

    #[test]
    fn large_even_instances() {
        assert!(check_large_even_instance(&l(3, "12 13 23").scaled(4)).unwrap());
        let path = SwapList::from_counts(4, [(0, 1, 4), (1, 2, 4), (2, 3, 4)]).unwrap();
        assert!(check_large_even_instance(&path).unwrap());
        let lone = SwapList::from_counts(3, [(0, 1, 4)]).unwrap();
        assert!(check_large_even_instance(&lone).unwrap());
        assert!(check_large_even_instance(&l(3, "12 12")).is_err());
        assert!(check_large_even_instance(&l(3, "13").scaled(4)).is_err());
    }

    #[test]
    fn minimize_examples() {
        let e2 = l(3, "12 13 23").scaled(2);
        assert_eq!(minimize_even_list(&e2).unwrap(), e2);
        assert_eq!(minimize_even_list(&l(3, "12 13 23").scaled(4)).unwrap(), e2);
        assert_eq!(minimize_even_list(&l(2, "12 12")).unwrap(), l(2, "12 12"));
        assert_eq!(minimize_even_list(&l(3, "13 13")), Err(TangleError::NotFeasible));
    }

    #[test]
    fn wang_examples() {
        assert_eq!(connect_wang(&p("123"), &p("123")).unwrap().height(), 1);
        let t = connect_wang(&p("123"), &p("321")).unwrap();
        assert!(t.height() <= 4);
        assert_eq!(t.list(), l(3, "12 13 23"));
        let t = connect_wang(&p("1234"), &p("4321")).unwrap();
        assert!(t.height() <= 5);
        assert_eq!(t.last(), &p("4321"));
        assert!(t.list().is_simple());
    }
}
