//! Builds L(m,n) and prints its poset file.
//!
//!     cargo run --example lattice -- 3 3

use young_lattice::partition::Shape;
use young_lattice::poset::{build_lattice, write_poset, Coordinates};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (m, n) = match args[..] {
        [m, n] => (m, n),
        _ => (3, 3),
    };
    let p = build_lattice(Shape::new(m, n), Coordinates::Partition);
    eprintln!(
        "{} has {} elements, height {}",
        p.label(),
        p.len(),
        p.height()
    );
    for level in p.levels() {
        let names: Vec<String> = level
            .iter()
            .map(|&i| p.partition_of(i).unwrap().to_string())
            .collect();
        eprintln!("  {}", names.join(" "));
    }
    print!("{}", write_poset(&p));
}
