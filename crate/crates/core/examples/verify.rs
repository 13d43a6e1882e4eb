//! Checks a decomposition, then breaks it and checks again.

use young_lattice::partition::Shape;
use young_lattice::poset::{build_lattice, Coordinates};
use young_lattice::scd::{lindstrom, verify_scd, Chain, ChainDecomposition};

fn main() {
    let p = build_lattice(Shape::new(4, 3), Coordinates::Composition);
    let d = lindstrom(4);
    print!("{}", verify_scd(&d, &p));

    // move the bottom of the first chain onto the second
    let mut chains = d.into_chains();
    let moved = chains[0].elements().last().cloned().unwrap();
    chains[0] = Chain::new(chains[0].elements()[..chains[0].elements().len() - 1].to_vec());
    let mut second = chains[1].elements().to_vec();
    second.push(moved);
    chains[1] = Chain::new(second);
    print!(
        "{}",
        verify_scd(&ChainDecomposition::new("L'(4,3)", chains), &p)
    );
}
