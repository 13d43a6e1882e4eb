//! Lindström's recursive symmetric chain decomposition of `L'(m, 3)`.
//!
//! Elements are `abcd` with `a+b+c+d = m` and rank `3a+2b+c`. A step down
//! along `α1` (green) moves a unit `a→b`, `α2` (red) `b→c`, `α3` (blue) `c→d`.
//!
//! Odd `m`: the points with `a, d ≥ 1` are `L'(m−2, 3)` shifted by `1001`;
//! the rest lies on the faces `d = 0` and `a = 0` and is swept by chains
//! that start on the edge `ab00`.
//!
//! Even `m`: the points with `a, d ≥ 2` are `L'(m−4, 3)` shifted by `2002`.
//! The outer layer (`a = 0` or `d = 0`) and inner layer (`a = 1` or `d = 1`)
//! are filled around the red string `0m00 ⋗ … ⋗ 00m0`, which occupies the
//! intersection of the outer faces; chains coming down the outer face `d = 0`
//! detour through the inner corner `1bc1` to get past it.

use super::{embed, scd_n2, transpose_decomposition, Chain, ChainDecomposition};
use crate::partition::{Shape, WeakComposition};

const GREEN: usize = 0;
const RED: usize = 1;
const BLUE: usize = 2;

struct Walk {
    cur: [usize; 4],
    elements: Vec<WeakComposition>,
}

impl Walk {
    fn from(start: [usize; 4]) -> Self {
        Walk {
            cur: start,
            elements: vec![WeakComposition::new(start.to_vec())],
        }
    }

    fn step(&mut self, root: usize) {
        assert!(
            self.cur[root] > 0,
            "step {root} leaves the simplex at {:?}",
            self.cur
        );
        self.cur[root] -= 1;
        self.cur[root + 1] += 1;
        self.elements.push(WeakComposition::new(self.cur.to_vec()));
    }

    /// `pairs` rounds of green then red.
    fn green_red(&mut self, pairs: usize) {
        for _ in 0..pairs {
            self.step(GREEN);
            self.step(RED);
        }
    }

    /// Sweep of a face triangle entered at second entry `b`: `b` steps
    /// alternating red and blue (red first), then blue until the last entry
    /// is `size − ⌊b/2⌋` above where the sweep began.
    fn staircase(&mut self, size: usize) {
        let b = self.cur[1];
        let base = self.cur[3];
        for i in 0..b {
            self.step(if i % 2 == 0 { RED } else { BLUE });
        }
        while self.cur[3] < base + size - b / 2 {
            self.step(BLUE);
        }
    }

    fn finish(self) -> Chain {
        Chain::new(self.elements)
    }
}

fn label(m: usize) -> String {
    format!("L'({m},3)")
}

/// Decomposition of `L'(2t+1, 3)`.
pub fn lindstrom_odd(t: usize) -> ChainDecomposition {
    let m = 2 * t + 1;
    if t == 0 {
        let mut w = Walk::from([1, 0, 0, 0]);
        for root in [GREEN, RED, BLUE] {
            w.step(root);
        }
        return ChainDecomposition::new(label(1), vec![w.finish()]);
    }
    let mut chains = embed(&lindstrom_odd(t - 1), 1, label(m)).into_chains();
    for j in 0..=t {
        let mut w = Walk::from([m - 2 * j, 2 * j, 0, 0]);
        w.green_red(m - 2 * j);
        w.step(BLUE);
        w.staircase(m - 1);
        chains.push(w.finish());
    }
    let mut d = ChainDecomposition::new(label(m), chains);
    d.sort_canonical();
    d
}

/// Decomposition of `L'(2t, 3)`, `t ≥ 1`.
pub fn lindstrom_even(t: usize) -> ChainDecomposition {
    assert!(t >= 1, "L'(0,3) has no chains to build");
    let m = 2 * t;
    if t == 1 {
        return transpose_decomposition(&scd_n2(3), Shape::new(3, 2))
            .expect("L'(3,2) decomposition transposes into L'(2,3)");
    }
    let mut chains = if t == 2 {
        vec![Chain::new(vec![WeakComposition::new(vec![2, 0, 0, 2])])]
    } else {
        embed(&lindstrom_even(t - 2), 2, label(m)).into_chains()
    };

    let mut red = Walk::from([0, m, 0, 0]);
    for _ in 0..m {
        red.step(RED);
    }
    chains.push(red.finish());

    // outer face d = 0, then through the inner corner onto the outer face a = 0
    for j in 0..t {
        let mut w = Walk::from([m - 2 * j, 2 * j, 0, 0]);
        w.green_red(m - 2 * j - 1);
        w.step(BLUE);
        w.step(GREEN);
        w.staircase(m - 1);
        chains.push(w.finish());
    }
    // inner face d = 1, then through the inner corner onto the inner face a = 1
    for k in 0..t - 1 {
        let mut w = Walk::from([m - 1 - 2 * k, 2 * k, 0, 1]);
        w.green_red(m - 3 - 2 * k);
        w.step(GREEN);
        w.step(BLUE);
        w.staircase(m - 3);
        chains.push(w.finish());
    }
    let mut d = ChainDecomposition::new(label(m), chains);
    d.sort_canonical();
    d
}

/// Decomposition of `L'(m, 3)`, `m ≥ 1`.
pub fn lindstrom(m: usize) -> ChainDecomposition {
    assert!(m >= 1, "L'(0,3) has no chains to build");
    if m % 2 == 1 {
        lindstrom_odd(m / 2)
    } else {
        lindstrom_even(m / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{build_lattice, gaussian_binomial, Coordinates};
    use crate::scd::verify_scd;

    fn keys(c: &Chain) -> Vec<String> {
        c.elements().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn base_chain() {
        let d = lindstrom_odd(0);
        assert_eq!(d.chains().len(), 1);
        assert_eq!(keys(&d.chains()[0]), ["1000", "0100", "0010", "0001"]);
    }

    #[test]
    fn l33_contains_the_embedded_base() {
        let d = lindstrom_odd(1);
        let embedded = d
            .chains()
            .iter()
            .find(|c| c.top().unwrap().to_string() == "2001")
            .unwrap();
        assert_eq!(keys(embedded), ["2001", "1101", "1011", "1002"]);
        let p = build_lattice(Shape::new(3, 3), Coordinates::Composition);
        let r = verify_scd(&d, &p);
        assert!(r.passed(), "{r}");
        assert_eq!(r.starts, [1, 0, 1, 1, 0]);
    }

    #[test]
    fn l43_has_the_singleton_2002() {
        let d = lindstrom_even(2);
        assert!(d.chains().iter().any(|c| keys(c) == ["2002"]));
        let p = build_lattice(Shape::new(4, 3), Coordinates::Composition);
        let r = verify_scd(&d, &p);
        assert!(r.passed(), "{r}");
        assert_eq!(r.starts, [1, 0, 1, 1, 1, 0, 1]);
        assert_eq!(Some(r.starts), gaussian_binomial(4, 3).chain_starts());
    }

    #[test]
    fn l63_is_valid() {
        let p = build_lattice(Shape::new(6, 3), Coordinates::Composition);
        assert_eq!(p.len(), 84);
        assert!(verify_scd(&lindstrom_even(3), &p).passed());
    }

    #[test]
    fn dispatch() {
        assert_eq!(lindstrom(1), lindstrom_odd(0));
        assert_eq!(lindstrom(4), lindstrom_even(2));
        assert_eq!(lindstrom(2).label(), "L'(2,3)");
    }
}
