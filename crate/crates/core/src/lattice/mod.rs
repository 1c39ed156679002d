//! Intersection lattices of ideal subarrangements.
//!
//! A flat is identified with its localization: the set of hyperplanes (root
//! indices) containing it. Two flats are equal iff their localizations are,
//! so the lattice is built without ever writing down a subspace basis.

mod intpoly;
mod pointcount;

use std::collections::HashSet;

use serde::Serialize;

pub use intpoly::IntPoly;
pub use pointcount::{default_primes, is_prime, point_count, point_count_charpoly, prime_bound};

use crate::linalg::Span;
use crate::partition::ExponentRecord;
use crate::rootposet::Ideal;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

/// Characteristic polynomials are integer polynomials in `t`.
pub type CharPoly = IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Flat {
    #[serde(rename = "loc")]
    localization: RootSet,
    dim: usize,
}

impl Flat {
    /// The ambient space `V` of a rank-`rank` arrangement.
    pub fn ambient(rank: usize) -> Self {
        Flat {
            localization: RootSet::empty(),
            dim: rank,
        }
    }

    pub fn localization(&self) -> RootSet {
        self.localization
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `rank(localization roots) = l - dim`.
    pub fn span_rank(&self, rank: usize) -> usize {
        rank - self.dim
    }
}

pub(crate) fn span_of(rs: &RootSystem, roots: RootSet) -> Span {
    let mut span = Span::new(rs.rank());
    for i in roots {
        span.insert(rs.root(i).coeffs());
    }
    span
}

/// Closure of `roots` inside `universe`: every root of `universe` lying in
/// the rational span of `roots`.
pub fn span_closure_in(rs: &RootSystem, roots: RootSet, universe: RootSet) -> Flat {
    let span = span_of(rs, roots);
    let localization = universe
        .difference(roots)
        .iter()
        .filter(|&i| span.contains(rs.root(i).coeffs()))
        .collect::<RootSet>()
        .union(roots);
    Flat {
        localization,
        dim: rs.rank() - span.rank(),
    }
}

/// `Phi^+ ∩ span_Q(roots)` together with the dimension of the flat.
pub fn span_closure(rs: &RootSystem, roots: RootSet) -> Flat {
    span_closure_in(rs, roots, rs.all_roots())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeFlat {
    #[serde(flatten)]
    pub flat: Flat,
    pub mu: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionLattice {
    #[serde(skip)]
    rank: usize,
    flats: Vec<LatticeFlat>,
}

impl IntersectionLattice {
    /// Flats sorted by increasing codimension, then by localization.
    pub fn flats(&self) -> &[LatticeFlat] {
        &self.flats
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn characteristic_polynomial(&self) -> CharPoly {
        let mut c = vec![0i64; self.rank + 1];
        for f in &self.flats {
            c[f.flat.dim] += f.mu;
        }
        IntPoly::new(c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "flats": self.flats,
            "charpoly": self.characteristic_polynomial().coeffs(),
        })
    }
}

/// All flats of `L(A(I))` with their Möbius values.
pub fn build_lattice(rs: &RootSystem, ideal: &Ideal) -> IntersectionLattice {
    let universe = ideal.members();
    let l = rs.rank();
    let mut levels: Vec<Vec<(RootSet, Span)>> = vec![vec![(RootSet::empty(), Span::new(l))]];
    let mut seen: HashSet<RootSet> = HashSet::new();
    seen.insert(RootSet::empty());
    loop {
        let mut next = Vec::new();
        for (loc, span) in levels.last().unwrap() {
            for h in universe.difference(*loc) {
                let mut wider = span.clone();
                wider.insert(rs.root(h).coeffs());
                let closed = universe
                    .difference(*loc)
                    .iter()
                    .filter(|&j| j == h || wider.contains(rs.root(j).coeffs()))
                    .collect::<RootSet>()
                    .union(*loc);
                if seen.insert(closed) {
                    next.push((closed, wider));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    let mut flats: Vec<LatticeFlat> = Vec::new();
    for (r, level) in levels.iter().enumerate() {
        let mut level: Vec<RootSet> = level.iter().map(|(loc, _)| *loc).collect();
        level.sort_by_cached_key(|s| s.to_vec());
        for loc in level {
            // mu(X) = -sum over flats Y strictly containing X, i.e. with a
            // strictly smaller localization; those all sit at lower ranks.
            let mu = if r == 0 {
                1
            } else {
                -flats
                    .iter()
                    .filter(|y| y.flat.localization.is_proper_subset(loc))
                    .map(|y| y.mu)
                    .sum::<i64>()
            };
            flats.push(LatticeFlat {
                flat: Flat {
                    localization: loc,
                    dim: l - r,
                },
                mu,
            });
        }
    }
    IntersectionLattice { rank: l, flats }
}

/// `chi(A(I), t) = sum_X mu(X) t^{dim X}`.
pub fn characteristic_polynomial(rs: &RootSystem, ideal: &Ideal) -> CharPoly {
    build_lattice(rs, ideal).characteristic_polynomial()
}

/// The distinct codimension-2 flats `K ∩ H_alpha` for `K` in `A(I) \ {H_alpha}`.
///
/// Localizations are taken inside `I ∪ {alpha}`.
pub fn restriction(rs: &RootSystem, ideal: &Ideal, alpha: usize) -> Vec<Flat> {
    let universe = ideal.members().with(alpha);
    let mut out: Vec<Flat> = Vec::new();
    let mut seen = HashSet::new();
    for beta in universe {
        if beta == alpha {
            continue;
        }
        let flat = span_closure_in(rs, RootSet::singleton(alpha).with(beta), universe);
        if seen.insert(flat.localization) {
            out.push(flat);
        }
    }
    out.sort_by_cached_key(|f| f.localization.to_vec());
    out
}

/// `Poin(t) = prod (1 + d_i t)`.
pub fn poincare_polynomial(exps: &ExponentRecord) -> IntPoly {
    exps.exponents()
        .iter()
        .fold(IntPoly::one(), |acc, &d| acc.mul(&IntPoly::new(vec![1, d as i64])))
}
