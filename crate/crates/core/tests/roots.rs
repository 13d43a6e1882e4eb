use std::collections::{BTreeSet, HashSet};

use young_lattice::partition::{enumerate_compositions, Shape, WeakComposition};
use young_lattice::poset::{build_lattice, Coordinates};
use young_lattice::rootsys::{edge_color, weight_string, ColorMap, SimpleRoot};

fn colors_used(m: usize, n: usize) -> BTreeSet<usize> {
    build_lattice(Shape::new(m, n), Coordinates::Composition)
        .covers()
        .iter()
        .map(|c| c.color)
        .collect()
}

#[test]
fn one_color_per_simple_root() {
    for m in 1..=5 {
        for n in 1..=5 {
            assert_eq!(colors_used(m, n), (1..=n).collect(), "L'({m},{n})");
        }
    }
    assert_eq!(colors_used(3, 2).len(), 2);
    assert_eq!(colors_used(2, 3).len(), 3);
}

#[test]
fn cover_colors_agree_with_edge_color() {
    let p = build_lattice(Shape::new(4, 4), Coordinates::Partition);
    for c in p.covers() {
        let got = edge_color(&p.elements()[c.lower], &p.elements()[c.upper]).unwrap();
        assert_eq!(got, c.color);
    }
}

#[test]
fn weight_strings_partition_the_lattice() {
    for m in 1..=5 {
        for n in 1..=4 {
            let s = Shape::new(m, n);
            let p = build_lattice(s, Coordinates::Composition);
            for root in SimpleRoot::all(n) {
                let mut seen = HashSet::new();
                let mut strings = BTreeSet::new();
                for gamma in enumerate_compositions(m, n + 1) {
                    let chain = weight_string(&gamma, root, s).unwrap();
                    assert!(chain.elements().contains(&gamma));
                    for w in chain.elements().windows(2) {
                        assert_eq!(edge_color(&w[1], &w[0]).unwrap(), root.index());
                        let (hi, lo) = (p.index_of(&w[0]).unwrap(), p.index_of(&w[1]).unwrap());
                        assert!(p.is_cover(lo, hi));
                    }
                    strings.insert(chain);
                }
                for chain in &strings {
                    for e in chain.elements() {
                        assert!(seen.insert(e.clone()), "{e} on two {root} strings");
                    }
                }
                assert_eq!(seen.len(), p.len());
            }
        }
    }
}

#[test]
fn weight_string_is_maximal() {
    let s = Shape::new(4, 3);
    let gamma: WeakComposition = "1120".parse().unwrap();
    let root = SimpleRoot::new(2, 3).unwrap();
    let chain = weight_string(&gamma, root, s).unwrap();
    assert!(chain.top().unwrap().raise_by(1).is_none());
    assert!(chain.bottom().unwrap().lower_by(1).is_none());
}

#[test]
fn palette_is_distinct() {
    for rank in [1, 3, 12, 30] {
        let map = ColorMap::standard(rank);
        let names: HashSet<_> = (1..=rank).map(|i| map.color(i).unwrap()).collect();
        assert_eq!(names.len(), rank);
    }
}
