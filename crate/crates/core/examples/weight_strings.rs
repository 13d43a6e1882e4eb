//! Root strings through an element of L'(4,3), in both coordinate systems.

use young_lattice::partition::{Partition, Shape, WeakComposition};
use young_lattice::rootsys::{weight_string, ColorMap, SimpleRoot};

fn main() {
    let shape = Shape::new(4, 3);
    let colors = ColorMap::standard(shape.n);
    let gamma: WeakComposition = "1210".parse().unwrap();
    for root in SimpleRoot::all(shape.n) {
        let chain = weight_string(&gamma, root, shape).unwrap();
        let keys: Vec<String> = chain.elements().iter().map(ToString::to_string).collect();
        let parts: Vec<String> = chain
            .elements()
            .iter()
            .map(|c| Partition::from_multiplicity(c, shape).unwrap().to_string())
            .collect();
        println!(
            "{root} ({}): {}  =  {}",
            colors.color(root.index()).unwrap(),
            keys.join(" "),
            parts.join(" ")
        );
    }
}
