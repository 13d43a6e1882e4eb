//! Symmetric chain decomposition of L'(m,3), checked by the verifier.
//!
//!     cargo run --example lindstrom -- 7

use young_lattice::partition::Shape;
use young_lattice::poset::{build_lattice, Coordinates};
use young_lattice::scd::{lindstrom, verify_scd, write_decomposition};

fn main() {
    let m = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let d = lindstrom(m);
    print!("{}", write_decomposition(&d));
    let report = verify_scd(
        &d,
        &build_lattice(Shape::new(m, 3), Coordinates::Composition),
    );
    eprint!("{report}");
}
