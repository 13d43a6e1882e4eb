//! The alternating-color decomposition of L(m,2), printed as partitions.

use young_lattice::partition::{Partition, Shape};
use young_lattice::scd::scd_n2;

fn main() {
    for m in [3, 4] {
        let shape = Shape::new(m, 2);
        println!("L({m},2):");
        for chain in scd_n2(m).chains() {
            let parts: Vec<String> = chain
                .elements()
                .iter()
                .map(|c| Partition::from_multiplicity(c, shape).unwrap().to_string())
                .collect();
            println!("  {}", parts.join(" > "));
        }
    }
}
