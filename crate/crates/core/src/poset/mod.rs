//! Explicit graded posets: `L(m, n)` materialized with its cover edges.

mod io;
mod rank;

pub use io::{parse_poset, write_poset};
pub use rank::{
    check_splitting_identities, gaussian_binomial, largest_part_split, rank_profile,
    RankPolynomial, SplitReport,
};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{
    enumerate_compositions, enumerate_partitions, Partition, Shape, WeakComposition,
};
use crate::rootsys::edge_color;

/// Which description of `L(m, n)` drives construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Coordinates {
    /// Partitions in the `m x n` box; covers decrement one part.
    #[default]
    Partition,
    /// Weak compositions of `m`; covers shift one unit right.
    Composition,
}

/// A cover `lower ⋖ upper` between element indices. `color` is the 1-based
/// simple-root index, or 0 for posets without a root structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub color: usize,
}

#[derive(Clone, Debug)]
pub struct GradedPoset {
    label: String,
    shape: Option<Shape>,
    elements: Vec<WeakComposition>,
    ranks: Vec<usize>,
    covers: Vec<Cover>,
    height: usize,
    index: HashMap<WeakComposition, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl GradedPoset {
    /// Assembles a poset from ranked elements and covers given by key.
    ///
    /// Elements are reordered rank-major then by key, covers by `(lower, upper)`.
    /// Every cover must join adjacent ranks and keys must be distinct.
    pub fn from_parts(
        label: impl Into<String>,
        shape: Option<Shape>,
        elements: Vec<(WeakComposition, usize)>,
        covers: Vec<(WeakComposition, WeakComposition, usize)>,
    ) -> Result<Self> {
        let mut elements = elements;
        elements.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        let mut index = HashMap::with_capacity(elements.len());
        for (i, (key, _)) in elements.iter().enumerate() {
            if index.insert(key.clone(), i).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate element {key}")));
            }
        }
        let ranks: Vec<usize> = elements.iter().map(|e| e.1).collect();
        let mut edges = Vec::with_capacity(covers.len());
        for (lower, upper, color) in covers {
            let l = *index
                .get(&lower)
                .ok_or_else(|| Error::UnknownElement(lower.to_string()))?;
            let u = *index
                .get(&upper)
                .ok_or_else(|| Error::UnknownElement(upper.to_string()))?;
            if ranks[u] != ranks[l] + 1 {
                return Err(Error::InvalidPoset(format!(
                    "cover {lower} ⋖ {upper} joins ranks {} and {}",
                    ranks[l], ranks[u]
                )));
            }
            edges.push(Cover {
                lower: l,
                upper: u,
                color,
            });
        }
        edges.sort();
        edges.dedup();
        let n = elements.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for e in &edges {
            up[e.lower].push(e.upper);
            down[e.upper].push(e.lower);
        }
        Ok(GradedPoset {
            label: label.into(),
            shape,
            height: ranks.iter().copied().max().unwrap_or(0),
            elements: elements.into_iter().map(|e| e.0).collect(),
            ranks,
            covers: edges,
            index,
            up,
            down,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn shape(&self) -> Option<Shape> {
        self.shape
    }

    pub fn elements(&self) -> &[WeakComposition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn index_of(&self, key: &WeakComposition) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn rank_of(&self, key: &WeakComposition) -> Option<usize> {
        self.index_of(key).map(|i| self.ranks[i])
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// True iff element `upper` covers element `lower` (by index).
    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        self.up[lower].contains(&upper)
    }

    /// Element indices grouped by rank `0..=height`.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.height + 1];
        if self.elements.is_empty() {
            return Vec::new();
        }
        for (i, &r) in self.ranks.iter().enumerate() {
            levels[r].push(i);
        }
        levels
    }

    /// Partition form of element `i`, when the poset is a Young lattice.
    pub fn partition_of(&self, i: usize) -> Option<Partition> {
        let shape = self.shape?;
        Partition::from_multiplicity(&self.elements[i], shape).ok()
    }
}

/// `L(m, n)` with covers and root colors. Element keys are always the
/// multiplicity compositions, whichever coordinates drive construction.
pub fn build_lattice(shape: Shape, coordinates: Coordinates) -> GradedPoset {
    let (elements, covers) = match coordinates {
        Coordinates::Partition => {
            let parts = enumerate_partitions(shape);
            let key = |p: &Partition| p.to_multiplicity(shape).expect("enumerated inside shape");
            let mut covers = Vec::new();
            for p in &parts {
                for (lower, decremented) in p.lower_covers() {
                    // reducing a part v to v-1 moves a unit along α_{n+1-v}
                    covers.push((key(&lower), key(p), shape.n + 1 - decremented));
                }
            }
            let elements = parts.iter().map(|p| (key(p), p.rank())).collect();
            (elements, covers)
        }
        Coordinates::Composition => {
            let comps = enumerate_compositions(shape.m, shape.n + 1);
            let mut covers = Vec::new();
            for c in &comps {
                for (lower, _) in c.lower_covers() {
                    let color = edge_color(&lower, c).expect("generated cover");
                    covers.push((lower, c.clone(), color));
                }
            }
            let elements = comps.into_iter().map(|c| {
                let r = c.rank();
                (c, r)
            });
            (elements.collect(), covers)
        }
    };
    GradedPoset::from_parts(shape.to_string(), Some(shape), elements, covers)
        .expect("lattice construction is consistent")
}
