use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::GradedPoset;
use crate::partition::{enumerate_partitions, Partition, Shape};

/// Coefficients `c[0..=deg]` of a polynomial in `q` with non-negative
/// integer coefficients, such as a Gaussian binomial coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankPolynomial {
    coefficients: Vec<BigUint>,
}

impl RankPolynomial {
    pub fn new(mut coefficients: Vec<BigUint>) -> Self {
        while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RankPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Coefficient of `q^k`, zero past the degree.
    pub fn coefficient(&self, k: usize) -> BigUint {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    /// `c[k] = c[deg - k]` for all `k`.
    pub fn is_symmetric(&self) -> bool {
        let c = &self.coefficients;
        c.iter().eq(c.iter().rev())
    }

    /// Weakly increasing, then weakly decreasing.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coefficients;
        let peak = c
            .windows(2)
            .position(|w| w[1] < w[0])
            .unwrap_or(c.len().saturating_sub(1));
        c[peak..].windows(2).all(|w| w[1] <= w[0])
    }

    /// `q^k · self`.
    pub fn shifted(&self, k: usize) -> RankPolynomial {
        let mut c = vec![BigUint::zero(); k];
        c.extend(self.coefficients.iter().cloned());
        RankPolynomial::new(c)
    }

    /// Number of chains a symmetric chain decomposition must start at each
    /// rank `s ≤ deg/2`: `c[s] − c[s−1]`, or `None` past a strict descent.
    pub fn chain_starts(&self) -> Option<Vec<usize>> {
        let half = self.degree() / 2;
        (0..=half)
            .map(|s| {
                let prev = if s == 0 {
                    BigUint::zero()
                } else {
                    self.coefficient(s - 1)
                };
                let cur = self.coefficient(s);
                if cur < prev {
                    return None;
                }
                usize::try_from(cur - prev).ok()
            })
            .collect()
    }

    /// Coefficients as machine integers, if they fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.coefficients
            .iter()
            .map(|c| u64::try_from(c).ok())
            .collect()
    }
}

impl std::ops::Add for &RankPolynomial {
    type Output = RankPolynomial;

    fn add(self, rhs: &RankPolynomial) -> RankPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        RankPolynomial::new(
            (0..len)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }
}

impl<T: Into<BigUint> + Copy> From<&[T]> for RankPolynomial {
    fn from(c: &[T]) -> Self {
        RankPolynomial::new(c.iter().map(|&x| x.into()).collect())
    }
}

impl fmt::Display for RankPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coefficients.iter().map(ToString::to_string).collect();
        f.write_str(&terms.join(" "))
    }
}

fn mul_one_minus(p: &mut Vec<BigInt>, k: usize) {
    p.resize(p.len() + k, BigInt::zero());
    for i in (k..p.len()).rev() {
        let lower = p[i - k].clone();
        p[i] -= lower;
    }
}

/// Exact quotient `p / (1 − q^k)`; panics if the division leaves a remainder.
fn div_one_minus(p: &[BigInt], k: usize) -> Vec<BigInt> {
    let qlen = p.len() - k;
    let mut q: Vec<BigInt> = Vec::with_capacity(qlen);
    for i in 0..qlen {
        let carry = if i >= k {
            q[i - k].clone()
        } else {
            BigInt::zero()
        };
        q.push(&p[i] + carry);
    }
    for i in qlen..p.len() {
        let expect = if i >= k && i - k < qlen {
            -q[i - k].clone()
        } else {
            BigInt::zero()
        };
        assert_eq!(p[i], expect, "inexact division by 1 - q^{k}");
    }
    q
}

/// Gaussian binomial `[m+n choose m]_q`, the rank polynomial of `L(m, n)`.
///
/// Computed as `Π_{i=1..m} (1 − q^{n+i}) / (1 − q^i)`, dividing after each
/// factor so every intermediate is itself a Gaussian binomial.
pub fn gaussian_binomial(m: usize, n: usize) -> RankPolynomial {
    let mut p = vec![BigInt::one()];
    for i in 1..=m {
        mul_one_minus(&mut p, n + i);
        p = div_one_minus(&p, i);
    }
    RankPolynomial::new(
        p.into_iter()
            .map(|c| match c.into_parts() {
                (Sign::Minus, _) => panic!("negative Gaussian binomial coefficient"),
                (_, mag) => mag,
            })
            .collect(),
    )
}

/// Number of elements on each level of `p`.
pub fn rank_profile(p: &GradedPoset) -> RankPolynomial {
    let counts: Vec<BigUint> = p.levels().iter().map(|l| BigUint::from(l.len())).collect();
    RankPolynomial::new(counts)
}

/// Outcome of checking both splitting identities for `L(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    /// `G(m,n) = q^n G(m−1,n) + G(m,n−1)` coefficient-wise.
    pub by_largest_part: bool,
    /// `G(m,n) = G(m−1,n) + q^m G(m,n−1)` coefficient-wise.
    pub by_part_count: bool,
    /// Elements with a part of size `n`, matched with `L(m−1, n)`.
    pub with_part_n: usize,
    /// Elements without a part of size `n`, matched with `L(m, n−1)`.
    pub without_part_n: usize,
    /// Elements with fewer than `m` parts, matched with `L(m−1, n)`.
    pub short: usize,
    /// Elements with exactly `m` parts, matched with `L(m, n−1)`.
    pub full: usize,
    /// Both element-level bijections hold (including the rank shifts).
    pub bijections: bool,
}

impl SplitReport {
    pub fn holds(&self) -> bool {
        self.by_largest_part && self.by_part_count && self.bijections
    }
}

/// Checks both splitting identities for `L(m, n)`, `m, n ≥ 1`, by exact
/// coefficient arithmetic and by explicit bijections on the elements.
pub fn check_splitting_identities(m: usize, n: usize) -> SplitReport {
    assert!(m >= 1 && n >= 1, "splitting identities need m, n >= 1");
    let whole = gaussian_binomial(m, n);
    let drop_m = gaussian_binomial(m - 1, n);
    let drop_n = gaussian_binomial(m, n - 1);
    let by_largest_part = whole == &drop_m.shifted(n) + &drop_n;
    let by_part_count = whole == &drop_m + &drop_n.shifted(m);

    let rows = as_set(Shape::new(m - 1, n));
    let cols = as_set(Shape::new(m, n - 1));
    let (mut with_n, mut without_n) = (BTreeSet::new(), BTreeSet::new());
    let (mut short, mut full) = (BTreeSet::new(), BTreeSet::new());
    let mut ranks_ok = true;
    for p in enumerate_partitions(Shape::new(m, n)) {
        if p.largest() == n {
            let rest = Partition::new(p.parts()[1..].to_vec()).expect("suffix of a partition");
            ranks_ok &= rest.rank() + n == p.rank();
            with_n.insert(rest);
        } else {
            without_n.insert(p.clone());
        }
        if p.len() < m {
            short.insert(p);
        } else {
            let shrunk = Partition::new(p.parts().iter().map(|x| x - 1).collect())
                .expect("subtracting 1 keeps order");
            ranks_ok &= shrunk.rank() + m == p.rank();
            full.insert(shrunk);
        }
    }
    let bijections =
        ranks_ok && with_n == rows && without_n == cols && short == rows && full == cols;
    SplitReport {
        by_largest_part,
        by_part_count,
        with_part_n: with_n.len(),
        without_part_n: without_n.len(),
        short: short.len(),
        full: full.len(),
        bijections,
    }
}

fn as_set(shape: Shape) -> BTreeSet<Partition> {
    enumerate_partitions(shape).into_iter().collect()
}

/// Blocks of `L(m, n)` by largest part `k`; removing one part `k` maps the
/// block for `k ≥ 1` onto `L(m−1, k)`, and the block for `k = 0` is `{∅}`.
pub fn largest_part_split(shape: Shape) -> BTreeMap<usize, Vec<Partition>> {
    let mut blocks: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
    for p in enumerate_partitions(shape) {
        blocks.entry(p.largest()).or_default().push(p);
    }
    blocks
}
