//! Partitions, weak compositions and the multiplicity bijection between them.
//!
//! A partition is stored without trailing zeros; shape-dependent operations
//! pad it to `m` parts internally. A weak composition of `m` with `n + 1`
//! entries records multiplicities of part sizes, largest first: entry `j`
//! (0-based) counts the parts of size `n - j`, so the last entry counts the
//! zero parts.
//!
//! Text form: a run of digits (`3211`, `1120`) when every entry is at most 9,
//! otherwise a bracketed list (`[12,3,0]`). Both forms are accepted on input;
//! `∅`, `0` and `[]` all denote the empty partition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Bounding box of `L(m, n)`: at most `m` parts, each at most `n`.
///
/// A zero dimension is allowed and gives the one-element lattice `{∅}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
}

impl Shape {
    pub fn new(m: usize, n: usize) -> Self {
        Shape { m, n }
    }

    /// Rank of the maximal element, `mn`.
    pub fn height(&self) -> usize {
        self.m * self.n
    }

    /// Length of a composition in `L'(m, n)`.
    pub fn composition_len(&self) -> usize {
        self.n + 1
    }

    /// The conjugate box `L(n, m)`.
    pub fn transpose(&self) -> Shape {
        Shape::new(self.n, self.m)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.len() <= self.m && p.largest() <= self.n
    }

    pub fn check(&self, p: &Partition) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                element: p.to_string(),
                reason: format!("does not fit in L({},{})", self.m, self.n),
            })
        }
    }

    pub fn check_composition(&self, c: &WeakComposition) -> Result<()> {
        if c.len() != self.composition_len() {
            return Err(Error::InvalidComposition {
                composition: c.to_string(),
                reason: format!("expected {} entries, found {}", self.n + 1, c.len()),
            });
        }
        if c.total() != self.m {
            return Err(Error::InvalidComposition {
                composition: c.to_string(),
                reason: format!("entries sum to {}, expected {}", c.total(), self.m),
            });
        }
        Ok(())
    }

    /// Number of elements, `C(m + n, m)`.
    pub fn element_count(&self) -> u128 {
        binomial(self.m + self.n, self.m)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.m, self.n)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// An integer partition: non-increasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from parts in non-increasing order. Trailing zeros
    /// are dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidElement {
                element: format_entries(&parts),
                reason: "parts must be non-increasing".into(),
            });
        }
        if parts.contains(&0) {
            return Err(Error::InvalidElement {
                element: format_entries(&parts),
                reason: "zero part before a positive part".into(),
            });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Sum of parts (number of boxes in the Young diagram).
    pub fn rank(&self) -> usize {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `m`.
    pub fn padded(&self, m: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(m.max(v.len()), 0);
        v
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest();
        let parts = (1..=cols)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// Entry-wise comparison inside `shape`.
    pub fn leq(&self, other: &Partition, shape: Shape) -> Result<bool> {
        shape.check(self)?;
        shape.check(other)?;
        let a = self.padded(shape.m);
        let b = other.padded(shape.m);
        Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
    }

    /// True iff `self` covers `lower`: exactly one padded entry is larger by one.
    pub fn covers(&self, lower: &Partition, shape: Shape) -> Result<bool> {
        shape.check(self)?;
        shape.check(lower)?;
        let a = lower.padded(shape.m);
        let b = self.padded(shape.m);
        let mut bumped = 0;
        for (x, y) in a.iter().zip(&b) {
            if *y == x + 1 {
                bumped += 1;
            } else if y != x {
                return Ok(false);
            }
        }
        Ok(bumped == 1)
    }

    /// Complement in the `m x n` box: parts `n - λ_i`, listed in reverse.
    pub fn complement(&self, shape: Shape) -> Result<Partition> {
        shape.check(self)?;
        let parts = self
            .padded(shape.m)
            .iter()
            .rev()
            .map(|&p| shape.n - p)
            .collect();
        Partition::new(parts)
    }

    /// Partitions covered by `self`, each with the size of the part that was
    /// decremented. Decrements the last occurrence of each distinct part value.
    pub fn lower_covers(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            let last_of_run = i + 1 == self.0.len() || self.0[i + 1] < self.0[i];
            if last_of_run {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push((Partition(parts), self.0[i]));
            }
        }
        out
    }

    /// Multiplicity vector in `L'(m, n)`: entry `j` counts parts of size `n - j`.
    pub fn to_multiplicity(&self, shape: Shape) -> Result<WeakComposition> {
        shape.check(self)?;
        let mut entries = vec![0; shape.n + 1];
        for p in self.padded(shape.m) {
            entries[shape.n - p] += 1;
        }
        Ok(WeakComposition(entries))
    }

    /// Inverse of [`Partition::to_multiplicity`].
    pub fn from_multiplicity(c: &WeakComposition, shape: Shape) -> Result<Partition> {
        shape.check_composition(c)?;
        let parts =
            c.0.iter()
                .enumerate()
                .flat_map(|(j, &count)| std::iter::repeat_n(shape.n - j, count))
                .filter(|&p| p > 0)
                .collect();
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("∅")
        } else {
            f.write_str(&format_entries(&self.0))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = parse_entries(s).map_err(|reason| Error::InvalidElement {
            element: s.to_string(),
            reason,
        })?;
        Partition::new(parts)
    }
}

/// A weak composition: ordered non-negative entries.
///
/// Ordering is lexicographic on the entries, which is also the order of the
/// digit-string keys whenever every entry is a single digit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(entries: Vec<usize>) -> Self {
        WeakComposition(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Σ (p - 1 - j)·entry_j`: each entry weighted by the part size it counts.
    pub fn rank(&self) -> usize {
        let p = self.0.len();
        self.0
            .iter()
            .enumerate()
            .map(|(j, &e)| (p - 1 - j) * e)
            .sum()
    }

    /// Rank in `L'(m, n)`, after checking that `self` belongs to it.
    pub fn composition_rank(&self, shape: Shape) -> Result<usize> {
        shape.check_composition(self)?;
        Ok(self.rank())
    }

    /// Moves one unit from entry `i` to entry `i + 1` (a step down along the
    /// simple root `α_{i+1}`). `None` if entry `i` is zero.
    pub fn lower_by(&self, i: usize) -> Option<WeakComposition> {
        if i + 1 >= self.0.len() || self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        e[i + 1] += 1;
        Some(WeakComposition(e))
    }

    /// Inverse of [`WeakComposition::lower_by`].
    pub fn raise_by(&self, i: usize) -> Option<WeakComposition> {
        if i + 1 >= self.0.len() || self.0[i + 1] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] += 1;
        e[i + 1] -= 1;
        Some(WeakComposition(e))
    }

    /// Elements covered by `self`, paired with the 1-based simple-root index.
    pub fn lower_covers(&self) -> impl Iterator<Item = (WeakComposition, usize)> + '_ {
        (0..self.0.len().saturating_sub(1)).filter_map(|i| self.lower_by(i).map(|c| (c, i + 1)))
    }

    /// The composition with entries in reverse order. On `L'(m, n)` this is
    /// the complement: an order-reversing involution sending rank `r` to `mn - r`.
    pub fn reversed(&self) -> WeakComposition {
        WeakComposition(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<usize>> for WeakComposition {
    fn from(v: Vec<usize>) -> Self {
        WeakComposition(v)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.0))
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries = parse_entries(s).map_err(|reason| Error::InvalidComposition {
            composition: s.to_string(),
            reason,
        })?;
        Ok(WeakComposition(entries))
    }
}

/// All weak compositions of `k` into `p` entries, lexicographically ascending.
pub fn enumerate_compositions(k: usize, p: usize) -> Vec<WeakComposition> {
    fn go(k: usize, p: usize, prefix: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
        if p == 1 {
            prefix.push(k);
            out.push(WeakComposition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in 0..=k {
            prefix.push(first);
            go(k - first, p - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if p > 0 {
        go(k, p, &mut Vec::with_capacity(p), &mut out);
    }
    out
}

/// All partitions in `L(m, n)`, lexicographically ascending by padded parts.
pub fn enumerate_partitions(shape: Shape) -> Vec<Partition> {
    fn go(m: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if m == 0 {
            let parts: Vec<usize> = prefix.iter().copied().filter(|&p| p > 0).collect();
            out.push(Partition(parts));
            return;
        }
        for p in 0..=max {
            prefix.push(p);
            go(m - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(shape.m, shape.n, &mut Vec::with_capacity(shape.m), &mut out);
    out
}

pub(crate) fn format_entries(entries: &[usize]) -> String {
    if entries.iter().all(|&e| e <= 9) {
        entries
            .iter()
            .map(|e| char::from(b'0' + *e as u8))
            .collect()
    } else {
        let inner: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

fn parse_entries(s: &str) -> std::result::Result<Vec<usize>, String> {
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| "unterminated bracketed list".to_string())?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad entry {:?}", t.trim()))
            })
            .collect()
    } else if s.chars().all(|c| c.is_ascii_digit()) {
        Ok(s.bytes().map(|b| (b - b'0') as usize).collect())
    } else {
        Err("expected digits or a bracketed list".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    #[test]
    fn entrywise_order() {
        let l43 = Shape::new(4, 3);
        assert!(p("22").leq(&p("32"), l43).unwrap());
        assert!(!p("1111").leq(&p("22"), l43).unwrap());
        assert!(!p("22").leq(&p("1111"), l43).unwrap());
        assert!(p("321").leq(&p("321"), l43).unwrap());
    }

    #[test]
    fn shape_violation_is_an_error() {
        let l43 = Shape::new(4, 3);
        assert!(matches!(
            p("4").leq(&p("3"), l43),
            Err(Error::InvalidElement { .. })
        ));
        assert!(p("11111").covers(&p("1111"), l43).is_err());
        assert!(p("4").complement(l43).is_err());
        assert!(p("4").to_multiplicity(l43).is_err());
    }

    #[test]
    fn covers_from_worked_example() {
        let l43 = Shape::new(4, 3);
        let top = p("3211");
        for lower in ["2211", "3111", "321"] {
            assert!(top.covers(&p(lower), l43).unwrap(), "{lower}");
        }
        assert!(!top.covers(&p("2111"), l43).unwrap());
        assert!(!top.covers(&top, l43).unwrap());
        let mut lowers: Vec<String> = top
            .lower_covers()
            .iter()
            .map(|(q, _)| q.to_string())
            .collect();
        lowers.sort();
        assert_eq!(lowers, ["2211", "3111", "321"]);
    }

    #[test]
    fn conjugates() {
        let cases = [
            ("5", "11111"),
            ("41", "2111"),
            ("32", "221"),
            ("311", "311"),
            ("221", "32"),
        ];
        for (a, b) in cases {
            assert_eq!(p(a).conjugate(), p(b));
        }
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn complements() {
        // the worked example removes 322 from a 3-row, 4-column box
        assert_eq!(p("322").complement(Shape::new(3, 4)).unwrap(), p("221"));
        assert_eq!(p("322").complement(Shape::new(3, 3)).unwrap(), p("11"));
        // 322 in L(4,3): parts 3-0, 3-2, 3-2, 3-3
        let star = p("322").complement(Shape::new(4, 3)).unwrap();
        assert_eq!(star, p("311"));
        assert_eq!(star.rank() + 7, 12);
        assert_eq!(
            p("333").complement(Shape::new(3, 3)).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(p("3211").rank(), 7);
        assert_eq!(Partition::empty().rank(), 0);
        assert_eq!(p("333").rank(), 9);
    }

    #[test]
    fn multiplicities() {
        let l43 = Shape::new(4, 3);
        assert_eq!(p("3211").to_multiplicity(l43).unwrap(), c("1120"));
        assert_eq!(p("321").to_multiplicity(l43).unwrap(), c("1111"));
        assert_eq!(p("2211").to_multiplicity(l43).unwrap(), c("0220"));
        assert_eq!(p("3111").to_multiplicity(l43).unwrap(), c("1030"));
        assert_eq!(Partition::empty().to_multiplicity(l43).unwrap(), c("0004"));
        assert_eq!(
            Partition::from_multiplicity(&c("1120"), l43).unwrap(),
            p("3211")
        );
        assert_eq!(
            Partition::from_multiplicity(&c("1300"), l43).unwrap(),
            p("3222")
        );
        assert_eq!(
            Partition::from_multiplicity(&c("0004"), l43).unwrap(),
            Partition::empty()
        );
        assert!(matches!(
            Partition::from_multiplicity(&c("1111"), Shape::new(3, 3)),
            Err(Error::InvalidComposition { .. })
        ));
        assert!(Partition::from_multiplicity(&c("11110"), l43).is_err());
    }

    #[test]
    fn composition_ranks() {
        let l43 = Shape::new(4, 3);
        assert_eq!(c("1120").composition_rank(l43).unwrap(), 7);
        assert_eq!(c("1300").composition_rank(l43).unwrap(), 9);
        assert_eq!(c("0004").composition_rank(l43).unwrap(), 0);
        assert!(c("1000").composition_rank(l43).is_err());
    }

    #[test]
    fn compositions_of_two_into_three() {
        let got: Vec<String> = enumerate_compositions(2, 3)
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(got, ["002", "011", "020", "101", "110", "200"]);
        assert_eq!(enumerate_compositions(0, 4), vec![c("0000")]);
        assert_eq!(enumerate_compositions(3, 4).len(), 20);
        assert!(enumerate_compositions(3, 0).is_empty());
    }

    #[test]
    fn partitions_of_a_box() {
        assert_eq!(enumerate_partitions(Shape::new(3, 3)).len(), 20);
        assert_eq!(
            enumerate_partitions(Shape::new(0, 4)),
            vec![Partition::empty()]
        );
        assert_eq!(
            enumerate_partitions(Shape::new(4, 0)),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("3210"), p("321"));
        assert_eq!(p("[12,3]").parts(), &[12, 3]);
        assert_eq!(p("[12,3]").to_string(), "[12,3]");
        assert_eq!(p("∅"), Partition::empty());
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "∅");
        assert!("123".parse::<Partition>().is_err());
        assert!("3a".parse::<Partition>().is_err());
        assert_eq!(c("[10,0,2]").entries(), &[10, 0, 2]);
        assert!("[1,2".parse::<WeakComposition>().is_err());
    }

    #[test]
    fn element_counts() {
        assert_eq!(Shape::new(3, 3).element_count(), 20);
        assert_eq!(Shape::new(30, 3).element_count(), 5456);
        assert_eq!(Shape::new(5, 0).element_count(), 1);
    }
}
