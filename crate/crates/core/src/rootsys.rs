//! Type `A_n` simple roots acting on the dilated simplex `L'(m, n)`.
//!
//! Weights are kept in translated non-negative coordinates, so the weight
//! diagram of `m·ω₁` is exactly the set of weak compositions of `m` with
//! `n + 1` entries. A Hasse edge moves one unit between adjacent entries,
//! which is a step along exactly one simple root `α_i = e_i − e_{i+1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Shape, WeakComposition};
use crate::scd::Chain;

/// The simple root `α_index = e_index − e_{index+1}` of `A_rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleRoot {
    index: usize,
    rank: usize,
}

impl SimpleRoot {
    /// `index` is 1-based and must lie in `1..=rank`.
    pub fn new(index: usize, rank: usize) -> Result<Self> {
        if index == 0 || index > rank {
            return Err(Error::InvalidElement {
                element: format!("α{index}"),
                reason: format!("A_{rank} has simple roots α1..α{rank}"),
            });
        }
        Ok(SimpleRoot { index, rank })
    }

    /// All `n` simple roots of `A_n`.
    pub fn all(rank: usize) -> Vec<SimpleRoot> {
        (1..=rank).map(|index| SimpleRoot { index, rank }).collect()
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Coordinates in `R^{n+1}`.
    pub fn vector(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank + 1];
        v[self.index - 1] = 1;
        v[self.index] = -1;
        v
    }
}

impl fmt::Display for SimpleRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α{}", self.index)
    }
}

const PALETTE: [&str; 12] = [
    "green", "red", "blue", "orange", "purple", "brown", "magenta", "cyan", "gold", "navy",
    "olive", "teal",
];

/// Assignment of a color name to each simple root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorMap {
    colors: Vec<String>,
}

impl ColorMap {
    /// Green, red, blue for `α1..α3`, then a fixed extended palette; past the
    /// palette, distinct gray levels.
    pub fn standard(rank: usize) -> Self {
        let colors = (0..rank)
            .map(|i| match PALETTE.get(i) {
                Some(name) => name.to_string(),
                None => {
                    let level = 16 + (i - PALETTE.len()) * 7 % 200;
                    format!("#{level:02x}{level:02x}{:02x}", (i - PALETTE.len()) % 256)
                }
            })
            .collect();
        ColorMap { colors }
    }

    /// Explicit names for `α1, α2, …`; rejects duplicates.
    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let colors: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, c) in colors.iter().enumerate() {
            if colors[..i].contains(c) {
                return Err(Error::InvalidElement {
                    element: c.clone(),
                    reason: "color assigned to two roots".into(),
                });
            }
        }
        Ok(ColorMap { colors })
    }

    /// Color of root `index` (1-based). Index 0 marks an uncolored edge.
    pub fn color(&self, index: usize) -> Option<&str> {
        index
            .checked_sub(1)
            .and_then(|i| self.colors.get(i))
            .map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// Index `j` of the simple root with `lower = upper − α_j`.
pub fn edge_color(lower: &WeakComposition, upper: &WeakComposition) -> Result<usize> {
    let not_cover = || Error::NotACover {
        lower: lower.to_string(),
        upper: upper.to_string(),
    };
    if lower.len() != upper.len() {
        return Err(not_cover());
    }
    let diff: Vec<i64> = upper
        .entries()
        .iter()
        .zip(lower.entries())
        .map(|(&u, &l)| u as i64 - l as i64)
        .collect();
    let moved: Vec<usize> = (0..diff.len()).filter(|&i| diff[i] != 0).collect();
    match moved.as_slice() {
        [i, j] if *j == i + 1 && diff[*i] == 1 && diff[*j] == -1 => Ok(i + 1),
        _ => Err(not_cover()),
    }
}

/// The maximal `root`-string through `gamma` inside `L'(m, n)`, top first.
pub fn weight_string(gamma: &WeakComposition, root: SimpleRoot, shape: Shape) -> Result<Chain> {
    shape.check_composition(gamma)?;
    if root.rank != shape.n {
        return Err(Error::InvalidElement {
            element: root.to_string(),
            reason: format!("not a simple root of A_{}", shape.n),
        });
    }
    let i = root.index - 1;
    let mut top = gamma.clone();
    while let Some(up) = top.raise_by(i) {
        top = up;
    }
    let mut elements = vec![top];
    while let Some(down) = elements.last().and_then(|c| c.lower_by(i)) {
        elements.push(down);
    }
    Ok(Chain::new(elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn c(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    #[test]
    fn colors_of_single_edges() {
        assert_eq!(edge_color(&c("1210"), &c("1300")).unwrap(), 2);
        assert_eq!(edge_color(&c("0100"), &c("1000")).unwrap(), 1);
        assert_eq!(edge_color(&c("1002"), &c("1011")).unwrap(), 3);
        assert!(matches!(
            edge_color(&c("1300"), &c("1210")),
            Err(Error::NotACover { .. })
        ));
        assert_eq!(edge_color(&c("0220"), &c("1120")).unwrap(), 1);
        assert!(edge_color(&c("1030"), &c("1120")).is_ok());
        assert!(edge_color(&c("0121"), &c("1120")).is_err());
    }

    #[test]
    fn red_string_through_3222() {
        let shape = Shape::new(4, 3);
        let alpha2 = SimpleRoot::new(2, 3).unwrap();
        let s = weight_string(&c("1300"), alpha2, shape).unwrap();
        let keys: Vec<String> = s.elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(keys, ["1300", "1210", "1120", "1030"]);
        let parts: Vec<String> = s
            .elements()
            .iter()
            .map(|e| Partition::from_multiplicity(e, shape).unwrap().to_string())
            .collect();
        assert_eq!(parts, ["3222", "3221", "3211", "3111"]);
        // any point of the string gives the same string
        assert_eq!(weight_string(&c("1120"), alpha2, shape).unwrap(), s);
    }

    #[test]
    fn singleton_string() {
        let alpha1 = SimpleRoot::new(1, 3).unwrap();
        let s = weight_string(&c("0040"), alpha1, Shape::new(4, 3)).unwrap();
        assert_eq!(s.elements(), &[c("0040")]);
    }

    #[test]
    fn string_rejects_foreign_points() {
        let alpha1 = SimpleRoot::new(1, 3).unwrap();
        assert!(weight_string(&c("0030"), alpha1, Shape::new(4, 3)).is_err());
        let alpha1_a2 = SimpleRoot::new(1, 2).unwrap();
        assert!(weight_string(&c("0040"), alpha1_a2, Shape::new(4, 3)).is_err());
        assert!(SimpleRoot::new(0, 3).is_err());
        assert!(SimpleRoot::new(4, 3).is_err());
    }

    #[test]
    fn root_vectors() {
        assert_eq!(SimpleRoot::new(2, 3).unwrap().vector(), vec![0, 1, -1, 0]);
        assert_eq!(SimpleRoot::all(3).len(), 3);
    }

    #[test]
    fn palette() {
        let cm = ColorMap::standard(3);
        assert_eq!(cm.color(1), Some("green"));
        assert_eq!(cm.color(2), Some("red"));
        assert_eq!(cm.color(3), Some("blue"));
        assert_eq!(cm.color(0), None);
        let big = ColorMap::standard(40);
        let mut names: Vec<&str> = (1..=40).map(|i| big.color(i).unwrap()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 40);
        assert!(ColorMap::from_names(["red", "red"]).is_err());
    }
}
