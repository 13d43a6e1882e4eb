//! Exhaustive search for a symmetric chain decomposition of a small poset.
//!
//! Chains are grown one level at a time from the bottom. A chain started at
//! rank `s` must stop at rank `height − s`; every other chain alive at rank
//! `r` is matched to a distinct upper cover at rank `r + 1`, and elements left
//! unmatched start new chains, which is only legal at ranks `≤ height/2`.

use super::{Chain, ChainDecomposition};
use crate::poset::GradedPoset;

/// Default cap on the number of chain-extension assignments tried.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ChainDecomposition),
    /// The search space was exhausted: no decomposition exists.
    NotFound {
        nodes: u64,
    },
    /// The budget ran out before the search finished.
    BudgetExhausted {
        nodes: u64,
    },
}

struct Search<'a> {
    poset: &'a GradedPoset,
    levels: Vec<Vec<usize>>,
    height: usize,
    /// Chains bottom-up as element indices, paired with their start rank.
    chains: Vec<(usize, Vec<usize>)>,
    taken: Vec<bool>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

impl Search<'_> {
    fn open_at(&self, rank: usize) -> Vec<usize> {
        (0..self.chains.len())
            .filter(|&c| self.height - self.chains[c].0 > rank)
            .collect()
    }

    /// Extends every chain still open at `rank` onto `rank + 1`.
    fn level(&mut self, rank: usize) -> Step {
        if rank == self.height {
            return Step::Done;
        }
        let open = self.open_at(rank);
        let next = self.levels[rank + 1].len();
        let fresh_allowed = 2 * (rank + 1) <= self.height;
        if open.len() > next || (!fresh_allowed && open.len() < next) {
            return Step::Dead;
        }
        self.extend(rank, &open, 0)
    }

    fn extend(&mut self, rank: usize, open: &[usize], i: usize) -> Step {
        if i == open.len() {
            let fresh: Vec<usize> = self.levels[rank + 1]
                .iter()
                .copied()
                .filter(|&e| !self.taken[e])
                .collect();
            for &e in &fresh {
                self.taken[e] = true;
                self.chains.push((rank + 1, vec![e]));
            }
            let outcome = self.level(rank + 1);
            if !matches!(outcome, Step::Done) {
                for &e in &fresh {
                    self.taken[e] = false;
                    self.chains.pop();
                }
            }
            return outcome;
        }
        let chain = open[i];
        let top = *self.chains[chain].1.last().expect("chains are never empty");
        let candidates: Vec<usize> = self.poset.upper_covers(top).to_vec();
        for up in candidates {
            if self.taken[up] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            self.taken[up] = true;
            self.chains[chain].1.push(up);
            match self.extend(rank, open, i + 1) {
                Step::Dead => {
                    self.chains[chain].1.pop();
                    self.taken[up] = false;
                }
                other => return other,
            }
        }
        Step::Dead
    }
}

/// Searches for a symmetric chain decomposition of `p`, trying at most
/// `budget` chain extensions. Deterministic for a given poset.
pub fn brute_force_scd(p: &GradedPoset, budget: u64) -> SearchOutcome {
    let levels = p.levels();
    if levels.is_empty() {
        let d = ChainDecomposition::new(p.label(), Vec::new());
        return SearchOutcome::Found(d);
    }
    let mut search = Search {
        poset: p,
        height: p.height(),
        taken: vec![false; p.len()],
        chains: Vec::new(),
        nodes: 0,
        budget,
        levels,
    };
    for &e in &search.levels[0] {
        search.taken[e] = true;
        search.chains.push((0, vec![e]));
    }
    match search.level(0) {
        Step::Done => {
            let chains = search
                .chains
                .iter()
                .map(|(_, idx)| {
                    Chain::new(idx.iter().rev().map(|&i| p.elements()[i].clone()).collect())
                })
                .collect();
            let label = match p.shape() {
                Some(s) => format!("L'({},{})", s.m, s.n),
                None => p.label().to_string(),
            };
            let mut d = ChainDecomposition::new(label, chains);
            d.sort_by_rank(|e| p.rank_of(e).unwrap_or(usize::MAX));
            SearchOutcome::Found(d)
        }
        Step::Dead => SearchOutcome::NotFound {
            nodes: search.nodes,
        },
        Step::OutOfBudget => SearchOutcome::BudgetExhausted {
            nodes: search.nodes,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{Shape, WeakComposition};
    use crate::poset::{build_lattice, Coordinates};
    use crate::scd::{lindstrom, verify_scd};

    fn vee() -> GradedPoset {
        let k = |s: &str| s.parse::<WeakComposition>().unwrap();
        GradedPoset::from_parts(
            "vee",
            None,
            vec![(k("00"), 0), (k("10"), 1), (k("01"), 1)],
            vec![(k("00"), k("10"), 0), (k("00"), k("01"), 0)],
        )
        .unwrap()
    }

    #[test]
    fn finds_l33() {
        let p = build_lattice(Shape::new(3, 3), Coordinates::Composition);
        let SearchOutcome::Found(d) = brute_force_scd(&p, DEFAULT_BUDGET) else {
            panic!("no decomposition of L(3,3)");
        };
        assert!(verify_scd(&d, &p).passed());
        assert_eq!(d.length_multiset(), lindstrom(3).length_multiset());
    }

    #[test]
    fn vee_has_none() {
        assert!(matches!(
            brute_force_scd(&vee(), DEFAULT_BUDGET),
            SearchOutcome::NotFound { .. }
        ));
    }

    #[test]
    fn budget_is_reported() {
        let p = build_lattice(Shape::new(4, 3), Coordinates::Composition);
        assert_eq!(
            brute_force_scd(&p, 3),
            SearchOutcome::BudgetExhausted { nodes: 4 }
        );
    }

    #[test]
    fn deterministic() {
        let p = build_lattice(Shape::new(3, 3), Coordinates::Partition);
        assert_eq!(
            brute_force_scd(&p, DEFAULT_BUDGET),
            brute_force_scd(&p, DEFAULT_BUDGET)
        );
    }
}
