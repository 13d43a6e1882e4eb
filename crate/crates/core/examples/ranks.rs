//! Rank numbers of L(m,n) as Gaussian binomial coefficients.

use young_lattice::poset::gaussian_binomial;

fn main() {
    for (m, n) in [(3, 3), (4, 3), (5, 5), (40, 40)] {
        let g = gaussian_binomial(m, n);
        println!(
            "G({m},{n}): degree {}, total {}, symmetric {}, unimodal {}",
            g.degree(),
            g.total(),
            g.is_symmetric(),
            g.is_unimodal()
        );
        if g.degree() <= 25 {
            println!("  {g}");
        }
    }
}
