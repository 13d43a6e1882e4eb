use std::collections::HashMap;
use std::fmt;

use super::{Chain, ChainDecomposition};
use crate::error::{Error, Result};
use crate::partition::WeakComposition;
use crate::poset::GradedPoset;

/// True iff `c` is saturated in `p` and its end ranks sum to the height.
pub fn is_symmetric_chain(c: &Chain, p: &GradedPoset) -> Result<bool> {
    let idx = c
        .elements()
        .iter()
        .map(|e| {
            p.index_of(e)
                .ok_or_else(|| Error::UnknownElement(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let (Some(&top), Some(&bottom)) = (idx.first(), idx.last()) else {
        return Ok(false);
    };
    Ok(saturated(&idx, p) && p.ranks()[top] + p.ranks()[bottom] == p.height())
}

fn saturated(idx: &[usize], p: &GradedPoset) -> bool {
    idx.windows(2).all(|w| p.is_cover(w[1], w[0]))
}

/// Defects found by [`verify_scd`]. Chains are referred to by position.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScdReport {
    pub label: String,
    pub chain_count: usize,
    pub element_count: usize,
    /// Poset elements on no chain.
    pub missing: Vec<WeakComposition>,
    /// Elements on more than one chain (or twice on one).
    pub repeated: Vec<WeakComposition>,
    /// Chain entries that are not poset elements.
    pub unknown: Vec<WeakComposition>,
    /// Chains with a step that is not a cover, or with no elements.
    pub unsaturated: Vec<usize>,
    /// Saturated chains whose end ranks do not sum to the height.
    pub asymmetric: Vec<usize>,
    /// Number of chains whose bottom has rank `s`, for `s ≤ height/2`.
    pub starts: Vec<usize>,
}

impl ScdReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
            && self.repeated.is_empty()
            && self.unknown.is_empty()
            && self.unsaturated.is_empty()
            && self.asymmetric.is_empty()
    }
}

impl fmt::Display for ScdReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn line<T: ToString>(f: &mut fmt::Formatter<'_>, name: &str, items: &[T]) -> fmt::Result {
            if items.is_empty() {
                return writeln!(f, "{name} 0");
            }
            let list: Vec<String> = items.iter().map(ToString::to_string).collect();
            writeln!(f, "{name} {}: {}", items.len(), list.join(" "))
        }
        writeln!(
            f,
            "verify {} chains={} elements={}",
            self.label, self.chain_count, self.element_count
        )?;
        line(f, "missing", &self.missing)?;
        line(f, "repeated", &self.repeated)?;
        line(f, "unknown", &self.unknown)?;
        line(f, "unsaturated", &self.unsaturated)?;
        line(f, "asymmetric", &self.asymmetric)?;
        let starts: Vec<String> = self
            .starts
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(s, n)| format!("{s}:{n}"))
            .collect();
        writeln!(f, "starts {}", starts.join(" "))?;
        writeln!(f, "result {}", if self.passed() { "pass" } else { "fail" })
    }
}

/// Checks `d` against the definition of a symmetric chain decomposition of `p`.
pub fn verify_scd(d: &ChainDecomposition, p: &GradedPoset) -> ScdReport {
    let mut seen: HashMap<usize, usize> = HashMap::with_capacity(p.len());
    let mut report = ScdReport {
        label: d.label().to_string(),
        chain_count: d.chains().len(),
        element_count: p.len(),
        starts: vec![0; p.height() / 2 + 1],
        ..ScdReport::default()
    };
    for (ci, chain) in d.chains().iter().enumerate() {
        let mut idx = Vec::with_capacity(chain.elements().len());
        for e in chain.elements() {
            match p.index_of(e) {
                Some(i) => {
                    *seen.entry(i).or_default() += 1;
                    idx.push(i);
                }
                None => report.unknown.push(e.clone()),
            }
        }
        if idx.len() != chain.elements().len() {
            continue;
        }
        let (Some(&top), Some(&bottom)) = (idx.first(), idx.last()) else {
            report.unsaturated.push(ci);
            continue;
        };
        if !saturated(&idx, p) {
            report.unsaturated.push(ci);
        } else if p.ranks()[top] + p.ranks()[bottom] != p.height() {
            report.asymmetric.push(ci);
        } else if let Some(slot) = report.starts.get_mut(p.ranks()[bottom]) {
            *slot += 1;
        }
    }
    for (i, e) in p.elements().iter().enumerate() {
        match seen.get(&i) {
            None => report.missing.push(e.clone()),
            Some(&k) if k > 1 => report.repeated.push(e.clone()),
            _ => {}
        }
    }
    report
}
