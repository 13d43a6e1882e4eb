use std::collections::BTreeSet;

use young_lattice::partition::Shape;
use young_lattice::poset::{build_lattice, gaussian_binomial, Coordinates, GradedPoset};
use young_lattice::scd::{
    brute_force_scd, embed, lindstrom, scd_n2, transpose_decomposition, verify_scd, Chain,
    ChainDecomposition, SearchOutcome, DEFAULT_BUDGET,
};

fn lattice(m: usize, n: usize) -> GradedPoset {
    build_lattice(Shape::new(m, n), Coordinates::Composition)
}

fn assert_scd(d: &ChainDecomposition, p: &GradedPoset) {
    let r = verify_scd(d, p);
    assert!(r.passed(), "{r}");
    let starts = gaussian_binomial(p.shape().unwrap().m, p.shape().unwrap().n).chain_starts();
    assert_eq!(Some(r.starts), starts, "{}", p.label());
}

#[test]
fn lindstrom_is_valid_up_to_sixty() {
    for m in 1..=60 {
        assert_scd(&lindstrom(m), &lattice(m, 3));
    }
}

#[test]
fn lindstrom_is_deterministic() {
    assert_eq!(lindstrom(17), lindstrom(17));
    assert_eq!(lindstrom(18), lindstrom(18));
}

fn chain_set(d: &ChainDecomposition) -> BTreeSet<Chain> {
    d.chains().iter().cloned().collect()
}

#[test]
fn odd_case_embeds_the_previous_odd_case() {
    for m in (3..=15).step_by(2) {
        let inner = lindstrom(m - 2);
        let outer = chain_set(&lindstrom(m));
        for c in embed(&inner, 1, "").chains() {
            assert!(outer.contains(c), "m={m}: embedded chain missing");
        }
        for (a, b) in inner.chains().iter().zip(embed(&inner, 1, "").chains()) {
            for (x, y) in a.elements().iter().zip(b.elements()) {
                assert_eq!(y.rank(), x.rank() + 3);
            }
        }
    }
}

#[test]
fn even_case_embeds_two_steps_back() {
    for m in (6..=16).step_by(2) {
        let inner = lindstrom(m - 4);
        let outer = chain_set(&lindstrom(m));
        for (a, b) in inner.chains().iter().zip(embed(&inner, 2, "").chains()) {
            assert!(outer.contains(b), "m={m}: embedded chain missing");
            for (x, y) in a.elements().iter().zip(b.elements()) {
                assert_eq!(y.rank(), x.rank() + 6);
            }
        }
    }
}

#[test]
fn new_chains_stay_on_the_outer_faces() {
    for m in 2..=21 {
        let d = lindstrom(m);
        let (shift, depth) = if m % 2 == 1 { (1, 0) } else { (2, 1) };
        let embedded = match m {
            2 => BTreeSet::new(),
            4 => BTreeSet::from([Chain::new(vec!["2002".parse().unwrap()])]),
            _ => chain_set(&embed(&lindstrom(m - 2 * shift), shift, "")),
        };
        for c in d.chains() {
            let inside = c
                .elements()
                .iter()
                .all(|e| e.entries()[0] > depth && e.entries()[3] > depth);
            if embedded.contains(c) {
                assert!(inside, "m={m}");
            } else {
                for e in c.elements() {
                    let (a, dd) = (e.entries()[0], e.entries()[3]);
                    assert!(a.min(dd) <= depth, "m={m}: {e} off the faces");
                }
            }
        }
    }
}

#[test]
fn n2_decompositions() {
    for m in 0..=30 {
        let d = scd_n2(m);
        assert_scd(&d, &lattice(m, 2));
        let shortest = d.chains().iter().map(Chain::length).min().unwrap();
        assert_eq!(shortest == 0, m % 2 == 0, "m={m}");
        if m % 2 == 1 {
            assert_eq!(shortest, 2);
        }
    }
}

#[test]
fn transposed_n2_decomposes_l2m() {
    for m in 1..=10 {
        let d = transpose_decomposition(&scd_n2(m), Shape::new(m, 2)).unwrap();
        assert!(verify_scd(&d, &lattice(2, m)).passed(), "L'(2,{m})");
    }
}

fn level_counts(p: &GradedPoset) -> Vec<usize> {
    p.levels().iter().map(Vec::len).collect()
}

#[test]
fn brute_force_agrees_with_rank_data() {
    for m in 0..=4 {
        for n in 0..=4 {
            if m * n > 12 {
                continue;
            }
            let p = lattice(m, n);
            let SearchOutcome::Found(d) = brute_force_scd(&p, DEFAULT_BUDGET) else {
                panic!("no decomposition of L({m},{n})");
            };
            assert_scd(&d, &p);
            let counts = level_counts(&p);
            let middle = counts.iter().max().copied().unwrap_or(0);
            assert_eq!(d.chains().len(), middle);
        }
    }
}

#[test]
fn brute_force_matches_generators() {
    let SearchOutcome::Found(d) = brute_force_scd(&lattice(3, 3), DEFAULT_BUDGET) else {
        panic!("L(3,3)");
    };
    assert_eq!(d.length_multiset(), lindstrom(3).length_multiset());
    let SearchOutcome::Found(d) = brute_force_scd(&lattice(4, 3), DEFAULT_BUDGET) else {
        panic!("L(4,3)");
    };
    assert_eq!(d.length_multiset(), lindstrom(4).length_multiset());
    let SearchOutcome::Found(d) = brute_force_scd(&lattice(5, 2), DEFAULT_BUDGET) else {
        panic!("L(5,2)");
    };
    assert_eq!(d.length_multiset(), scd_n2(5).length_multiset());
}
