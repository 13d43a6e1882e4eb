//! Exhaustive search for symmetric chain decompositions of small lattices.

use young_lattice::partition::Shape;
use young_lattice::poset::{build_lattice, Coordinates, GradedPoset};
use young_lattice::scd::{brute_force_scd, SearchOutcome, DEFAULT_BUDGET};

fn main() {
    for (m, n) in [(3, 3), (4, 3), (4, 4)] {
        let p = build_lattice(Shape::new(m, n), Coordinates::Composition);
        match brute_force_scd(&p, DEFAULT_BUDGET) {
            SearchOutcome::Found(d) => println!(
                "L({m},{n}): {} chains, lengths {:?}",
                d.chains().len(),
                d.length_multiset()
            ),
            other => println!("L({m},{n}): {other:?}"),
        }
    }

    // a poset with no symmetric chain decomposition: two minimal elements below one top
    let key = |s: &str| s.parse().unwrap();
    let vee = GradedPoset::from_parts(
        "vee",
        None,
        vec![(key("10"), 0), (key("01"), 0), (key("11"), 1)],
        vec![(key("10"), key("11"), 1), (key("01"), key("11"), 1)],
    )
    .unwrap();
    println!("vee: {:?}", brute_force_scd(&vee, DEFAULT_BUDGET));
}
