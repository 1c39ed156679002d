//! Height distributions and their dual partitions.
//!
//! For an ideal `I` with height distribution `(i_1, .., i_m)`, the exponents
//! are `(0^{l - i_1}, 1^{i_1 - i_2}, .., (m-1)^{i_{m-1} - i_m}, m^{i_m})`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootposet::Ideal;
use crate::rootsys::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HeightDistribution {
    counts: Vec<usize>,
}

impl HeightDistribution {
    pub fn new(counts: Vec<usize>) -> Self {
        HeightDistribution { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `m`, the largest height present.
    pub fn max_height(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Exponents sorted ascending, zeros included.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ExponentRecord {
    exponents: Vec<u32>,
}

impl ExponentRecord {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        exponents.sort_unstable();
        ExponentRecord { exponents }
    }

    pub fn zeros(rank: usize) -> Self {
        ExponentRecord {
            exponents: vec![0; rank],
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn sum(&self) -> u64 {
        self.exponents.iter().map(|&d| d as u64).sum()
    }

    pub fn max(&self) -> u32 {
        self.exponents.last().copied().unwrap_or(0)
    }

    /// Multiplicity of the largest exponent.
    pub fn top_multiplicity(&self) -> usize {
        let d = self.max();
        self.exponents.iter().filter(|&&e| e == d).count()
    }

    /// Whether `d -> h - d` permutes the nonzero exponents. Advisory only.
    pub fn is_symmetric_about(&self, h: i64) -> bool {
        let mut nonzero: Vec<i64> = self.exponents.iter().filter(|&&d| d > 0).map(|&d| d as i64).collect();
        let mut mirrored: Vec<i64> = nonzero.iter().map(|d| h - d).collect();
        nonzero.sort_unstable();
        mirrored.sort_unstable();
        nonzero == mirrored
    }

    /// Componentwise comparison after ascending sort.
    pub fn dominated_by(&self, other: &ExponentRecord) -> bool {
        self.rank() == other.rank() && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }
}

impl std::fmt::Display for ExponentRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

pub fn height_distribution(rs: &RootSystem, ideal: &Ideal) -> HeightDistribution {
    let m = ideal.height(rs) as usize;
    let mut counts = vec![0usize; m];
    for i in ideal.members() {
        counts[rs.height(i) as usize - 1] += 1;
    }
    HeightDistribution { counts }
}

/// The conjugate of `dist` padded with zeros to length `rank`.
pub fn dual_partition(rank: usize, dist: &HeightDistribution) -> Result<ExponentRecord> {
    let c = &dist.counts;
    if let Some(j) = c.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::NotAPartition {
            index: j + 1,
            left: c[j],
            right: c[j + 1],
        });
    }
    let first = c.first().copied().unwrap_or(0);
    if first > rank {
        return Err(Error::FirstLayerTooLarge { count: first, rank });
    }
    let mut exponents = Vec::with_capacity(rank);
    exponents.extend(std::iter::repeat_n(0, rank - first));
    for (j, &count) in c.iter().enumerate() {
        let next = c.get(j + 1).copied().unwrap_or(0);
        exponents.extend(std::iter::repeat_n(j as u32 + 1, count - next));
    }
    Ok(ExponentRecord { exponents })
}

pub fn ideal_exponents(rs: &RootSystem, ideal: &Ideal) -> Result<ExponentRecord> {
    dual_partition(rs.rank(), &height_distribution(rs, ideal))
}

/// Exponents of a product arrangement: the multiset union of the factors.
pub fn product_exponents(records: &[ExponentRecord]) -> ExponentRecord {
    ExponentRecord::new(records.iter().flat_map(|r| r.exponents.iter().copied()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootposet::{enumerate_ideals, ideal_closure};
    use crate::rootset::RootSet;
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn full(r: &RootSystem) -> Ideal {
        Ideal::from_members(r, r.all_roots()).unwrap()
    }

    fn exps(v: &[u32]) -> ExponentRecord {
        ExponentRecord::new(v.to_vec())
    }

    #[test]
    fn distributions() {
        let a3 = rs("A3");
        assert_eq!(height_distribution(&a3, &full(&a3)).counts(), &[3, 2, 1]);
        assert!(height_distribution(&a3, &Ideal::empty()).counts().is_empty());
        let g2 = rs("G2");
        assert_eq!(height_distribution(&g2, &full(&g2)).counts(), &[2, 1, 1, 1, 1]);
    }

    #[test]
    fn dual_partitions() {
        let dp = |l, c: &[usize]| dual_partition(l, &HeightDistribution::new(c.to_vec())).unwrap();
        assert_eq!(dp(3, &[3, 2, 1]), exps(&[1, 2, 3]));
        assert_eq!(dp(2, &[]), exps(&[0, 0]));
        assert_eq!(dp(2, &[2, 1, 1, 1, 1]), exps(&[1, 5]));
    }

    #[test]
    fn dual_partition_errors() {
        let err = dual_partition(3, &HeightDistribution::new(vec![1, 2])).unwrap_err();
        assert!(matches!(err, Error::NotAPartition { index: 1, left: 1, right: 2 }));
        assert!(err.to_string().contains("not a partition"));
        assert!(matches!(
            dual_partition(1, &HeightDistribution::new(vec![2])),
            Err(Error::FirstLayerTooLarge { .. })
        ));
    }

    #[test]
    fn ideal_exponent_examples() {
        let a2 = rs("A2");
        assert_eq!(ideal_exponents(&a2, &full(&a2)).unwrap(), exps(&[1, 2]));
        let b2 = rs("B2");
        let i = ideal_closure(&b2, RootSet::singleton(b2.index_of(&[1, 1]).unwrap())).unwrap();
        assert_eq!(ideal_exponents(&b2, &i).unwrap(), exps(&[1, 2]));
        let f4 = rs("F4");
        assert_eq!(ideal_exponents(&f4, &full(&f4)).unwrap(), exps(&[1, 5, 7, 11]));
    }

    #[test]
    fn products() {
        assert_eq!(product_exponents(&[exps(&[1, 2]), exps(&[1])]), exps(&[1, 1, 2]));
        assert_eq!(product_exponents(&[exps(&[0, 0]), exps(&[0])]), exps(&[0, 0, 0]));
        assert_eq!(product_exponents(&[exps(&[1, 3]), exps(&[1, 5])]), exps(&[1, 1, 3, 5]));
    }

    #[test]
    fn symmetry_advisory() {
        for t in ["A4", "B3", "D4", "E6", "F4", "G2"] {
            let r = rs(t);
            let e = ideal_exponents(&r, &full(&r)).unwrap();
            assert_eq!(e.max() as i64, r.coxeter_number() - 1, "{t}");
            assert!(e.is_symmetric_about(r.coxeter_number()), "{t}");
        }
    }

    #[test]
    fn record_invariants_over_b3() {
        let b3 = rs("B3");
        for i in enumerate_ideals(&b3) {
            let dist = height_distribution(&b3, &i);
            let e = dual_partition(3, &dist).unwrap();
            assert_eq!(e.rank(), 3);
            assert_eq!(e.sum(), i.len() as u64);
            let zeros = e.exponents().iter().filter(|&&d| d == 0).count();
            assert_eq!(zeros, 3 - dist.counts().first().copied().unwrap_or(0));
        }
    }

    fn conjugate(parts: &[u32]) -> Vec<usize> {
        let m = parts.iter().copied().max().unwrap_or(0) as usize;
        (1..=m).map(|j| parts.iter().filter(|&&p| p as usize >= j).count()).collect()
    }

    proptest! {
        // Conjugating back recovers the distribution.
        #[test]
        fn dual_is_an_involution(mut c in prop::collection::vec(1usize..6, 0..6), extra in 0usize..3) {
            c.sort_unstable_by(|a, b| b.cmp(a));
            let rank = c.first().copied().unwrap_or(0) + extra;
            let e = dual_partition(rank, &HeightDistribution::new(c.clone())).unwrap();
            prop_assert_eq!(e.rank(), rank);
            prop_assert_eq!(e.sum() as usize, c.iter().sum::<usize>());
            prop_assert_eq!(conjugate(e.exponents()), c);
        }
    }
}
