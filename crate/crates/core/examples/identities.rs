//! Both splitting identities of the Gaussian binomials, and the split of
//! L(m,n) by largest part.

use young_lattice::partition::Shape;
use young_lattice::poset::{check_splitting_identities, largest_part_split};

fn main() {
    for (m, n) in [(3, 3), (4, 3), (6, 5)] {
        let r = check_splitting_identities(m, n);
        println!(
            "L({m},{n}): with part {n}: {}, without: {}, fewer than {m} parts: {}, exactly {m}: {}, holds: {}",
            r.with_part_n, r.without_part_n, r.short, r.full, r.holds()
        );
    }
    for (k, block) in largest_part_split(Shape::new(3, 3)) {
        let names: Vec<String> = block.iter().map(ToString::to_string).collect();
        println!("largest part {k}: {}", names.join(" "));
    }
}
