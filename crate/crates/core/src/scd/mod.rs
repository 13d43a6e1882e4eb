//! Symmetric chains, decompositions and the generators that produce them.

mod brute;
mod io;
mod lindstrom;
mod n2;
mod verify;

pub use brute::{brute_force_scd, SearchOutcome, DEFAULT_BUDGET};
pub use io::{parse_decomposition, write_decomposition};
pub use lindstrom::{lindstrom, lindstrom_even, lindstrom_odd};
pub use n2::scd_n2;
pub use verify::{is_symmetric_chain, verify_scd, ScdReport};

use crate::error::Result;
use crate::partition::{Partition, Shape, WeakComposition};

/// A chain listed from its top element down.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    elements: Vec<WeakComposition>,
}

impl Chain {
    pub fn new(elements: Vec<WeakComposition>) -> Self {
        Chain { elements }
    }

    pub fn elements(&self) -> &[WeakComposition] {
        &self.elements
    }

    /// Number of coverings, one less than the number of elements.
    pub fn length(&self) -> usize {
        self.elements.len().saturating_sub(1)
    }

    pub fn top(&self) -> Option<&WeakComposition> {
        self.elements.first()
    }

    pub fn bottom(&self) -> Option<&WeakComposition> {
        self.elements.last()
    }

    pub fn map<F>(&self, f: F) -> Chain
    where
        F: FnMut(&WeakComposition) -> WeakComposition,
    {
        Chain::new(self.elements.iter().map(f).collect())
    }

    pub fn try_map<F>(&self, f: F) -> Result<Chain>
    where
        F: FnMut(&WeakComposition) -> Result<WeakComposition>,
    {
        Ok(Chain::new(
            self.elements.iter().map(f).collect::<Result<_>>()?,
        ))
    }
}

/// A family of chains meant to partition a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    label: String,
    chains: Vec<Chain>,
}

impl ChainDecomposition {
    pub fn new(label: impl Into<String>, chains: Vec<Chain>) -> Self {
        ChainDecomposition {
            label: label.into(),
            chains,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn into_chains(self) -> Vec<Chain> {
        self.chains
    }

    pub fn element_count(&self) -> usize {
        self.chains.iter().map(|c| c.elements.len()).sum()
    }

    /// Chain lengths in ascending order.
    pub fn length_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.chains.iter().map(Chain::length).collect();
        v.sort_unstable();
        v
    }

    /// Orders chains by `(rank of bottom, bottom key)` using `rank`.
    pub fn sort_by_rank<F>(&mut self, rank: F)
    where
        F: Fn(&WeakComposition) -> usize,
    {
        self.chains.sort_by_cached_key(|c| {
            let bottom = c.bottom().cloned();
            (bottom.as_ref().map(&rank), bottom)
        });
    }

    /// Canonical order for Young-lattice decompositions: bottom rank, then bottom key.
    pub fn sort_canonical(&mut self) {
        self.sort_by_rank(WeakComposition::rank);
    }
}

/// Adds `shift` to the first and last entries of every element; on
/// `L'(m, n)` this embeds a decomposition into `L'(m + 2·shift, n)`, raising
/// ranks by `n·shift`.
pub fn embed(d: &ChainDecomposition, shift: usize, label: impl Into<String>) -> ChainDecomposition {
    let chains = d
        .chains
        .iter()
        .map(|c| {
            c.map(|e| {
                let mut v = e.entries().to_vec();
                let last = v.len() - 1;
                v[0] += shift;
                v[last] += shift;
                WeakComposition::new(v)
            })
        })
        .collect();
    ChainDecomposition::new(label, chains)
}

/// Carries a decomposition of `L'(m, n)` to `L'(n, m)` through partitions
/// and conjugation, an order isomorphism `L(m, n) → L(n, m)`.
pub fn transpose_decomposition(d: &ChainDecomposition, shape: Shape) -> Result<ChainDecomposition> {
    let target = shape.transpose();
    let chains = d
        .chains
        .iter()
        .map(|c| {
            c.try_map(|e| {
                Partition::from_multiplicity(e, shape)?
                    .conjugate()
                    .to_multiplicity(target)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = ChainDecomposition::new(format!("L'({},{})", target.m, target.n), chains);
    out.sort_canonical();
    Ok(out)
}
