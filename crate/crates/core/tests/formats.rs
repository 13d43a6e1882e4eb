use proptest::prelude::*;

use young_lattice::partition::{Partition, Shape, WeakComposition};
use young_lattice::poset::{build_lattice, parse_poset, write_poset, Coordinates};
use young_lattice::scd::{lindstrom, parse_decomposition, scd_n2, write_decomposition};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..15, 0..8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn partition_text_round_trip(p in partition()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn composition_text_round_trip(v in prop::collection::vec(0usize..25, 1..7)) {
        let c = WeakComposition::new(v);
        let back: WeakComposition = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn multiplicity_round_trip(p in partition(), extra in 0usize..3) {
        let shape = Shape::new(p.len() + extra, p.largest() + extra);
        let c = p.to_multiplicity(shape).unwrap();
        prop_assert_eq!(c.total(), shape.m);
        prop_assert_eq!(Partition::from_multiplicity(&c, shape).unwrap(), p);
    }

    #[test]
    fn conjugate_and_complement_are_involutions(p in partition(), extra in 0usize..3) {
        let shape = Shape::new(p.len() + extra, p.largest() + extra);
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().rank(), p.rank());
        let c = p.complement(shape).unwrap();
        prop_assert_eq!(c.complement(shape).unwrap(), p.clone());
        prop_assert_eq!(c.rank() + p.rank(), shape.m * shape.n);
    }

    #[test]
    fn poset_file_round_trip(m in 0usize..6, n in 0usize..6, composition in any::<bool>()) {
        let coords = if composition { Coordinates::Composition } else { Coordinates::Partition };
        let text = write_poset(&build_lattice(Shape::new(m, n), coords));
        prop_assert_eq!(write_poset(&parse_poset(&text).unwrap()), text);
    }

    #[test]
    fn decomposition_file_round_trip(m in 1usize..25, n2 in any::<bool>()) {
        let d = if n2 { scd_n2(m) } else { lindstrom(m) };
        let text = write_decomposition(&d);
        let back = parse_decomposition(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(write_decomposition(&back), text);
    }
}
