//! Crystallographic root systems built from their Cartan matrices.
//!
//! Conventions: simple roots are numbered as in Bourbaki, and
//! `cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`,
//! so the simple reflection is `s_i(a) = a - <a, alpha_i^vee> alpha_i` with
//! `<a, alpha_i^vee> = sum_j a_j cartan[j][i]`. The inner product is scaled so
//! that long roots have squared length 2.
//!
//! Positive roots are generated height by height from the root-string
//! criterion and stored in the canonical global order: ascending height, ties
//! broken by descending lexicographic order on coefficient vectors (so the
//! simple roots occupy indices `0..rank` in their natural order).

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootset::RootSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn from_char(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An irreducible type such as `F4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let fail = |reason: &str| Error::InvalidType {
            input: format!("{series}{rank}"),
            reason: reason.to_string(),
        };
        // Upper bounds keep |positive roots| within RootSet::CAPACITY.
        match series {
            Series::A if !(1..=15).contains(&rank) => Err(fail("A requires 1 <= rank <= 15")),
            Series::B | Series::C if !(2..=11).contains(&rank) => {
                Err(fail("B and C require 2 <= rank <= 11"))
            }
            Series::D if !(3..=11).contains(&rank) => Err(fail("D requires 3 <= rank <= 11")),
            Series::E if !(6..=8).contains(&rank) => Err(fail("E requires rank 6, 7 or 8")),
            Series::F if rank != 4 => Err(fail("F requires rank 4")),
            Series::G if rank != 2 => Err(fail("G requires rank 2")),
            _ => Ok(CartanType { series, rank }),
        }
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E)
    }

    /// Types that coincide with another entry of the classification.
    pub fn alias_note(self) -> Option<&'static str> {
        match (self.series, self.rank) {
            (Series::D, 3) => Some("D3 is isomorphic to A3 (nodes relabelled)"),
            (Series::C, 2) => Some("C2 is isomorphic to B2 (long and short roots swapped)"),
            _ => None,
        }
    }

    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.series {
            Series::A => (0..l - 1).for_each(|i| bond(i, i + 1, -1, -1)),
            Series::B => {
                (0..l - 2).for_each(|i| bond(i, i + 1, -1, -1));
                // alpha_l short
                bond(l - 2, l - 1, -2, -1);
            }
            Series::C => {
                (0..l - 2).for_each(|i| bond(i, i + 1, -1, -1));
                // alpha_l long
                bond(l - 2, l - 1, -1, -2);
            }
            Series::D => {
                (0..l - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(l - 3, l - 1, -1, -1);
            }
            Series::E => {
                bond(0, 2, -1, -1);
                bond(1, 3, -1, -1);
                (2..l - 1).for_each(|i| bond(i, i + 1, -1, -1));
            }
            Series::F => {
                bond(0, 1, -1, -1);
                // alpha_1, alpha_2 long; alpha_3, alpha_4 short
                bond(1, 2, -2, -1);
                bond(2, 3, -1, -1);
            }
            Series::G => bond(0, 1, -1, -3), // alpha_1 short
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let fail = |reason: &str| Error::InvalidType {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_char)
            .ok_or_else(|| fail("expected a series letter A-G"))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| fail("expected a rank after the series letter"))?;
        CartanType::new(series, rank)
    }
}

/// A possibly reducible type, written with an `x` separator (`A2xA1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemType {
    pub components: Vec<CartanType>,
}

impl RootSystemType {
    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }
}

impl From<CartanType> for RootSystemType {
    fn from(c: CartanType) -> Self {
        RootSystemType {
            components: vec![c],
        }
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split(['x', '×'])
            .map(str::parse)
            .collect::<Result<Vec<CartanType>>>()?;
        Ok(RootSystemType { components })
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A root written over the simple basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    coeffs: Vec<i64>,
    height: i64,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        let height = coeffs.iter().sum();
        Root { coeffs, height }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An irreducible root system with its positive roots in canonical order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    gram: Vec<Vec<Rational64>>,
    highest: usize,
    coxeter_number: i64,
    lookup: HashMap<Vec<i64>, usize>,
    below: Vec<RootSet>,
    above: Vec<RootSet>,
}

/// Builds `Phi^+` for an irreducible type.
pub fn build_root_system(ctype: CartanType) -> RootSystem {
    RootSystem::new(ctype)
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Self {
        let cartan = ctype.cartan_matrix();
        let l = ctype.rank();
        let mut roots = generate_positive_roots(&cartan);
        roots.sort_by(|a, b| {
            a.height
                .cmp(&b.height)
                .then_with(|| b.coeffs.cmp(&a.coeffs))
        });
        let lookup: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
        let n = roots.len();
        let mut below = vec![RootSet::empty(); n];
        let mut above = vec![RootSet::empty(); n];
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate() {
                if crate::rootposet::leq(b, a) {
                    below[i].insert(j);
                    above[j].insert(i);
                }
            }
        }
        let highest = n - 1;
        debug_assert!(
            (0..n).all(|j| below[highest].contains(j)),
            "{ctype}: last root is not the unique maximum"
        );
        let coxeter_number = roots[highest].height + 1;
        let gram = symmetrized_gram(&cartan);
        debug_assert_eq!(gram.len(), l);
        RootSystem {
            ctype,
            cartan,
            roots,
            gram,
            highest,
            coxeter_number,
            lookup,
            below,
            above,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rational64>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].height
    }

    pub fn all_roots(&self) -> RootSet {
        RootSet::prefix(self.roots.len())
    }

    /// Canonical index of a positive root given by coefficients.
    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.roots.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                count: self.roots.len(),
            })
        }
    }

    /// Indices of the roots `<= root(i)`, including `i`.
    pub fn down_set(&self, i: usize) -> RootSet {
        self.below[i]
    }

    /// Indices of the roots `>= root(i)`, including `i`.
    pub fn up_set(&self, i: usize) -> RootSet {
        self.above[i]
    }

    pub fn roots_of_height(&self, h: i64) -> RootSet {
        self.roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.height == h)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    /// The unique maximal positive root; its height is `h - 1`.
    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn max_coefficient(&self) -> i64 {
        self.highest_root().coeffs.iter().copied().max().unwrap_or(0)
    }

    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> Result<Rational64> {
        let l = self.rank();
        for v in [a, b] {
            if v.len() != l {
                return Err(Error::DimensionMismatch {
                    expected: l,
                    got: v.len(),
                });
            }
        }
        let mut acc = Rational64::zero();
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                acc += self.gram[i][j] * Rational64::from(a[i] * b[j]);
            }
        }
        Ok(acc)
    }

    pub fn inner_product_idx(&self, i: usize, j: usize) -> Rational64 {
        self.inner_product(&self.roots[i].coeffs, &self.roots[j].coeffs)
            .expect("positive roots have the system's rank")
    }

    /// `<a, alpha_i^vee>`
    pub fn coroot_pairing(&self, a: &[i64], i: usize) -> i64 {
        a.iter().zip(&self.cartan).map(|(c, row)| c * row[i]).sum()
    }

    /// Simple reflection `s_i(a)`; fails if the image is not a root.
    pub fn reflect(&self, a: &Root, i: usize) -> Result<Root> {
        let l = self.rank();
        if a.rank() != l {
            return Err(Error::DimensionMismatch {
                expected: l,
                got: a.rank(),
            });
        }
        if i >= l {
            return Err(Error::IndexOutOfRange { index: i, count: l });
        }
        let mut c = a.coeffs.clone();
        c[i] -= self.coroot_pairing(&a.coeffs, i);
        let image = Root::new(c);
        if self.is_root(&image) {
            Ok(image)
        } else {
            Err(Error::Inconsistent(format!(
                "s_{}{} = {} is not a root of {}",
                i + 1,
                a,
                image,
                self.ctype
            )))
        }
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.lookup.contains_key(&r.coeffs) || self.lookup.contains_key(&r.negated().coeffs)
    }

    /// Verifies closure under simple reflections and the Cartan-matrix invariants.
    pub fn self_check(&self) -> Result<()> {
        let l = self.rank();
        for i in 0..l {
            for j in 0..l {
                let (a, b) = (self.cartan[i][j], self.cartan[j][i]);
                let ok = if i == j { a == 2 } else { a <= 0 && (a == 0) == (b == 0) };
                if !ok {
                    return Err(Error::Inconsistent(format!("bad Cartan entry ({i},{j})")));
                }
                if self.gram[i][j] != self.gram[j][i] {
                    return Err(Error::Inconsistent("gram matrix is not symmetric".into()));
                }
            }
        }
        for r in &self.roots {
            for i in 0..l {
                self.reflect(r, i)?;
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct View<'a> {
            #[serde(rename = "type")]
            ty: String,
            cartan: &'a [Vec<i64>],
            positive_roots: Vec<&'a [i64]>,
        }
        serde_json::to_value(View {
            ty: self.ctype.to_string(),
            cartan: &self.cartan,
            positive_roots: self.roots.iter().map(|r| r.coeffs()).collect(),
        })
        .expect("root system serializes")
    }
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let l = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; l];
        v[i] = 1;
        v
    };
    let mut known: HashSet<Vec<i64>> = (0..l).map(unit).collect();
    let mut layer: BTreeSet<Vec<i64>> = (0..l).map(unit).collect();
    let mut all: Vec<Vec<i64>> = layer.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for alpha in &layer {
            for i in 0..l {
                // p = largest k with alpha - k alpha_i a positive root
                let mut p = 0;
                loop {
                    let mut v = alpha.clone();
                    v[i] -= p + 1;
                    if known.contains(&v) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = alpha.iter().zip(cartan).map(|(c, row)| c * row[i]).sum();
                if p - pairing > 0 {
                    let mut v = alpha.clone();
                    v[i] += 1;
                    next.insert(v);
                }
            }
        }
        for v in &next {
            known.insert(v.clone());
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter().map(Root::new).collect()
}

fn symmetrized_gram(cartan: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let l = cartan.len();
    // squared lengths, propagated along the Dynkin graph
    let mut len: Vec<Option<Rational64>> = vec![None; l];
    len[0] = Some(Rational64::from(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let li = len[i].unwrap();
        for j in 0..l {
            if j != i && cartan[i][j] != 0 && len[j].is_none() {
                len[j] = Some(li * Rational64::new(cartan[j][i], cartan[i][j]));
                stack.push(j);
            }
        }
    }
    let len: Vec<Rational64> = len.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let max = *len.iter().max().unwrap();
    let scale = Rational64::from(2) / max;
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| Rational64::from(cartan[i][j]) * len[j] * scale / Rational64::from(2))
                .collect()
        })
        .collect()
}

/// A product of irreducible root systems, kept as a component list.
#[derive(Clone, Debug)]
pub struct ProductRootSystem {
    rtype: RootSystemType,
    components: Vec<RootSystem>,
}

impl ProductRootSystem {
    pub fn new(rtype: &RootSystemType) -> Self {
        ProductRootSystem {
            rtype: rtype.clone(),
            components: rtype.components.iter().map(|&c| RootSystem::new(c)).collect(),
        }
    }

    pub fn root_system_type(&self) -> &RootSystemType {
        &self.rtype
    }

    pub fn components(&self) -> &[RootSystem] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.rtype.rank()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.components.iter().map(RootSystem::num_positive_roots).sum()
    }

    pub fn highest_root(&self) -> Result<&Root> {
        match self.components.as_slice() {
            [only] => Ok(only.highest_root()),
            _ => Err(Error::Reducible(self.rtype.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn coeffs(r: &RootSystem) -> Vec<Vec<i64>> {
        r.positive_roots().iter().map(|x| x.coeffs().to_vec()).collect()
    }

    #[test]
    fn a2_roots() {
        let a2 = rs("A2");
        assert_eq!(coeffs(&a2), vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a2.coxeter_number(), 3);
    }

    #[test]
    fn a1_roots() {
        let a1 = rs("A1");
        assert_eq!(coeffs(&a1), vec![vec![1]]);
        assert_eq!(a1.coxeter_number(), 2);
    }

    #[test]
    fn g2_roots() {
        let g2 = rs("G2");
        let heights: Vec<i64> = g2.positive_roots().iter().map(Root::height).collect();
        assert_eq!(heights, vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(g2.coxeter_number(), 6);
        assert_eq!(g2.cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.num_positive_roots() as i64 * 2, 2 * g2.coxeter_number());
    }

    #[test]
    fn classical_counts() {
        let cases = [
            ("A5", 15),
            ("B3", 9),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ];
        for (t, n) in cases {
            let r = rs(t);
            assert_eq!(r.num_positive_roots(), n, "{t}");
            assert_eq!(2 * n as i64, r.rank() as i64 * r.coxeter_number(), "{t}");
            r.self_check().unwrap();
        }
    }

    #[test]
    fn inner_products() {
        let a2 = rs("A2");
        assert_eq!(a2.inner_product(&[1, 0], &[0, 1]).unwrap(), Rational64::from(-1));
        let g2 = rs("G2");
        // alpha_2 long, alpha_1 short
        assert_eq!(g2.inner_product(&[0, 1], &[0, 1]).unwrap(), Rational64::from(2));
        assert_eq!(g2.inner_product(&[1, 0], &[1, 0]).unwrap(), Rational64::new(2, 3));
        let f4 = rs("F4");
        let hi = f4.highest_root().coeffs().to_vec();
        assert_eq!(f4.inner_product(&hi, &hi).unwrap(), Rational64::from(2));
        assert!(matches!(
            a2.inner_product(&[1, 0, 0], &[1, 0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reflections() {
        let a2 = rs("A2");
        assert_eq!(a2.reflect(&Root::new(vec![1, 1]), 0).unwrap().coeffs(), &[0, 1]);
        assert_eq!(a2.reflect(&Root::new(vec![1, 0]), 0).unwrap().coeffs(), &[-1, 0]);
        let g2 = rs("G2");
        assert_eq!(g2.reflect(&Root::new(vec![0, 1]), 0).unwrap().coeffs(), &[3, 1]);
        assert!(matches!(
            a2.reflect(&Root::new(vec![2, 0]), 1),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A2").highest_root().coeffs(), &[1, 1]);
        assert_eq!(rs("B2").highest_root().coeffs(), &[1, 2]);
        assert_eq!(rs("G2").highest_root().coeffs(), &[3, 2]);
        assert_eq!(rs("F4").highest_root().coeffs(), &[2, 3, 4, 2]);
        assert_eq!(rs("E8").highest_root().coeffs(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        let prod = ProductRootSystem::new(&"A2xA1".parse().unwrap());
        assert!(matches!(prod.highest_root(), Err(Error::Reducible(_))));
    }

    #[test]
    fn b2_alpha2_is_short() {
        let b2 = rs("B2");
        assert_eq!(b2.inner_product(&[0, 1], &[0, 1]).unwrap(), Rational64::from(1));
        assert_eq!(b2.inner_product(&[1, 0], &[1, 0]).unwrap(), Rational64::from(2));
    }

    #[test]
    fn simple_roots_first_in_order() {
        for t in ["A4", "D5", "E6", "F4"] {
            let r = rs(t);
            for i in 0..r.rank() {
                let mut e = vec![0; r.rank()];
                e[i] = 1;
                assert_eq!(r.index_of(&e), Some(i));
            }
            let hs: Vec<i64> = r.positive_roots().iter().map(Root::height).collect();
            assert!(hs.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn type_parsing() {
        assert!("E5".parse::<CartanType>().is_err());
        assert!("F3".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("D2".parse::<CartanType>().is_err());
        assert!("Q3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
        let err = "G3".parse::<CartanType>().unwrap_err().to_string();
        assert!(err.contains("G requires rank 2"), "{err}");
        assert!("D3".parse::<CartanType>().unwrap().alias_note().is_some());
        let p: RootSystemType = "A2xA1".parse().unwrap();
        assert_eq!(p.components.len(), 2);
        assert_eq!(p.rank(), 3);
        assert_eq!(p.to_string(), "A2xA1");
    }

    #[test]
    fn d3_matches_a3() {
        let d3 = rs("D3");
        assert_eq!(d3.num_positive_roots(), 6);
        assert_eq!(d3.coxeter_number(), 4);
    }

    #[test]
    fn json_shape() {
        let v = rs("A2").to_json();
        assert_eq!(v["type"], "A2");
        assert_eq!(v["positive_roots"], serde_json::json!([[1, 0], [0, 1], [1, 1]]));
        assert_eq!(v["cartan"], serde_json::json!([[2, -1], [-1, 2]]));
    }
}
