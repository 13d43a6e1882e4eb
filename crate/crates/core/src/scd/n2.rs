use super::{Chain, ChainDecomposition};
use crate::partition::WeakComposition;

/// Symmetric chain decomposition of `L(m, 2)`, keyed in `L'(m, 2)`.
///
/// Chain `i` starts at `(m−2i, 2i, 0)` and alternates green (`α1`) and red
/// (`α2`) steps until the first entry is exhausted, sweeping the strip of
/// middle entry `2i` or `2i+1`. For even `m` the last chain is the singleton
/// `(0, m, 0)`.
pub fn scd_n2(m: usize) -> ChainDecomposition {
    let chains = (0..=m / 2)
        .map(|i| {
            let mut cur = [m - 2 * i, 2 * i, 0];
            let mut elements = vec![WeakComposition::new(cur.to_vec())];
            while cur[0] > 0 {
                for step in [0, 1] {
                    cur[step] -= 1;
                    cur[step + 1] += 1;
                    elements.push(WeakComposition::new(cur.to_vec()));
                }
            }
            Chain::new(elements)
        })
        .collect();
    let mut d = ChainDecomposition::new(format!("L'({m},2)"), chains);
    d.sort_canonical();
    d
}
