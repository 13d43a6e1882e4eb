//! Writes L(3,2) with its chain decomposition highlighted, as DOT and SVG.
//!
//!     cargo run --example render > l32.dot

use young_lattice::partition::Shape;
use young_lattice::poset::{build_lattice, Coordinates};
use young_lattice::render::{to_dot, to_svg, LabelMode, RenderSpec};
use young_lattice::scd::scd_n2;

fn main() {
    let p = build_lattice(Shape::new(3, 2), Coordinates::Partition);
    let spec = RenderSpec::for_poset(&p)
        .labels(LabelMode::Young)
        .highlight(scd_n2(3));
    print!("{}", to_dot(&p, &spec));
    let svg = to_svg(&p, &spec).unwrap();
    let path = std::env::temp_dir().join("l32.svg");
    std::fs::write(&path, svg).unwrap();
    eprintln!("svg written to {}", path.display());
}
