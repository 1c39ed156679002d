//! Sub-root-systems `Phi_X`, local heights, and the local-global height formula.
//!
//! `Phi_X` is realized as `Phi^+ ∩ span_Q(localization of X)`. Its simple
//! system is the set of indecomposable elements (those that are not a sum of
//! two elements of the subsystem), and its irreducible components are the
//! connected pieces of the non-orthogonality graph on that simple system.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{restriction, span_closure, Flat};
use crate::linalg;
use crate::rootposet::Ideal;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

#[derive(Clone, Debug, Serialize)]
pub struct SubRootSystem {
    flat: Flat,
    positive_roots: RootSet,
    simple_system: Vec<usize>,
    components: Vec<Vec<usize>>,
    /// Coefficients of each member over `simple_system`, keyed by member.
    #[serde(skip)]
    expansions: Vec<(usize, Vec<i64>)>,
}

impl SubRootSystem {
    pub fn flat(&self) -> &Flat {
        &self.flat
    }

    pub fn positive_roots(&self) -> RootSet {
        self.positive_roots
    }

    pub fn simple_system(&self) -> &[usize] {
        &self.simple_system
    }

    /// Each component lists its simple roots by global root index.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.simple_system.len()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn expansion(&self, alpha: usize) -> Option<&[i64]> {
        self.expansions
            .iter()
            .find(|(i, _)| *i == alpha)
            .map(|(_, c)| c.as_slice())
    }

    /// Index of the component containing `alpha`.
    pub fn component_of(&self, alpha: usize) -> Option<usize> {
        let coeffs = self.expansion(alpha)?;
        let support: Vec<usize> = self
            .simple_system
            .iter()
            .zip(coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(&s, _)| s)
            .collect();
        self.components
            .iter()
            .position(|comp| comp.contains(&support[0]))
    }
}

/// The root subsystem `Phi_X` attached to a flat.
pub fn sub_root_system(rs: &RootSystem, flat: &Flat) -> Result<SubRootSystem> {
    let flat = span_closure(rs, flat.localization());
    let members = flat.localization();

    let simple_system: Vec<usize> = members
        .iter()
        .filter(|&a| {
            !members.iter().any(|b| {
                let diff: Vec<i64> = rs
                    .root(a)
                    .coeffs()
                    .iter()
                    .zip(rs.root(b).coeffs())
                    .map(|(x, y)| x - y)
                    .collect();
                rs.index_of(&diff).is_some_and(|c| members.contains(c))
            })
        })
        .collect();
    let rank = flat.span_rank(rs.rank());
    if simple_system.len() != rank {
        return Err(Error::Inconsistent(format!(
            "subsystem {:?} has {} indecomposables but rank {}",
            members,
            simple_system.len(),
            rank
        )));
    }

    let basis: Vec<Vec<i64>> = simple_system.iter().map(|&s| rs.root(s).coeffs().to_vec()).collect();
    let mut expansions = Vec::with_capacity(members.len());
    for a in members {
        let x = linalg::solve(&basis, rs.root(a).coeffs()).ok_or_else(|| {
            Error::Inconsistent(format!("{} is outside the span of its subsystem", rs.root(a)))
        })?;
        let mut coeffs = Vec::with_capacity(x.len());
        for c in x {
            if !c.is_integer() || c < Zero::zero() {
                return Err(Error::Inconsistent(format!(
                    "{} has coefficient {} over the simple system of Phi_X",
                    rs.root(a),
                    c
                )));
            }
            coeffs.push(c.to_integer());
        }
        expansions.push((a, coeffs));
    }

    let components = connected_components(rs, &simple_system);
    Ok(SubRootSystem {
        flat,
        positive_roots: members,
        simple_system,
        components,
        expansions,
    })
}

fn connected_components(rs: &RootSystem, simple: &[usize]) -> Vec<Vec<usize>> {
    let n = simple.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        comp[start] = id;
        let mut members = Vec::new();
        while let Some(u) = stack.pop() {
            members.push(simple[u]);
            for v in 0..n {
                if comp[v] == usize::MAX && !rs.inner_product_idx(simple[u], simple[v]).is_zero() {
                    comp[v] = id;
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// `Ht_X(alpha)`: height of `alpha` in its irreducible component of `Phi_X`.
pub fn local_height(sub: &SubRootSystem, alpha: usize) -> Result<i64> {
    let coeffs = sub.expansion(alpha).ok_or(Error::NotInSubsystem(alpha))?;
    let comp = &sub.components[sub.component_of(alpha).ok_or(Error::NotInSubsystem(alpha))?];
    let mut height = 0;
    for (s, &c) in sub.simple_system.iter().zip(coeffs) {
        if comp.contains(s) {
            height += c;
        } else if c != 0 {
            return Err(Error::Inconsistent(format!(
                "root {alpha} has support outside its component"
            )));
        }
    }
    Ok(height)
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalTerm {
    pub flat: Flat,
    pub local_height: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalGlobalReport {
    pub alpha: usize,
    pub root: Vec<i64>,
    /// `Ht(alpha) - 1`
    pub lhs: i64,
    /// `sum over X in A^alpha of (Ht_X(alpha) - 1)`
    pub rhs: i64,
    pub terms: Vec<LocalTerm>,
    pub pass: bool,
}

/// Evaluates both sides of `Ht(alpha) - 1 = sum_{X in A^alpha} (Ht_X(alpha) - 1)`.
pub fn verify_local_global(rs: &RootSystem, alpha: usize) -> Result<LocalGlobalReport> {
    rs.check_index(alpha)?;
    let full = Ideal::from_members(rs, rs.all_roots())?;
    let mut terms = Vec::new();
    for flat in restriction(rs, &full, alpha) {
        let sub = sub_root_system(rs, &flat)?;
        terms.push(LocalTerm {
            flat,
            local_height: local_height(&sub, alpha)?,
        });
    }
    let lhs = rs.height(alpha) - 1;
    let rhs = terms.iter().map(|t| t.local_height - 1).sum();
    Ok(LocalGlobalReport {
        alpha,
        root: rs.root(alpha).coeffs().to_vec(),
        lhs,
        rhs,
        terms,
        pass: lhs == rhs,
    })
}

fn positive_multiple(target: &[i64], v: &[i64]) -> Option<i64> {
    let k = target.iter().zip(v).find(|(_, &y)| y != 0).map(|(&x, &y)| (x, y))?;
    if k.0 % k.1 != 0 {
        return None;
    }
    let b = k.0 / k.1;
    (b >= 1 && target.iter().zip(v).all(|(&x, &y)| x == b * y)).then_some(b)
}

/// Unordered pairs `{b1, b2}` of distinct roots from `pool` with
/// `alpha = a*b1 + b*b2` for positive integers `a, b`.
pub fn decomposition_pairs_in(rs: &RootSystem, pool: RootSet, alpha: usize) -> Vec<(usize, usize)> {
    let target = rs.root(alpha).coeffs();
    let height = rs.height(alpha);
    let mut pairs = Vec::new();
    let members = pool.to_vec();
    for (k, &b1) in members.iter().enumerate() {
        for &b2 in &members[k + 1..] {
            let r1 = rs.root(b1).coeffs();
            let r2 = rs.root(b2).coeffs();
            let found = (1..=height / rs.height(b1)).any(|a| {
                let rest: Vec<i64> = target.iter().zip(r1).map(|(x, y)| x - a * y).collect();
                positive_multiple(&rest, r2).is_some()
            });
            if found {
                pairs.push((b1, b2));
            }
        }
    }
    pairs
}

/// Number of unordered pairs of distinct positive roots with
/// `alpha` in `Z_{>0} b1 + Z_{>0} b2`. Equals `Ht(alpha) - 1`.
pub fn decomposition_pair_count(rs: &RootSystem, alpha: usize) -> usize {
    decomposition_pairs_in(rs, rs.all_roots(), alpha).len()
}

/// Pairs with `alpha = b1 + b2` exactly; agrees with the general count in
/// simply-laced types.
pub fn sum_pair_count(rs: &RootSystem, alpha: usize) -> usize {
    let target = rs.root(alpha).coeffs();
    (0..rs.num_positive_roots())
        .filter(|&b1| {
            let rest: Vec<i64> = target.iter().zip(rs.root(b1).coeffs()).map(|(x, y)| x - y).collect();
            rs.index_of(&rest).is_some_and(|b2| b1 < b2)
        })
        .count()
}

/// `|A| - |A^theta|` for the full Weyl arrangement and the highest root `theta`.
pub fn coxeter_deficit(rs: &RootSystem) -> Result<i64> {
    let full = Ideal::from_members(rs, rs.all_roots())?;
    let restricted = restriction(rs, &full, rs.highest_root_index());
    Ok(rs.num_positive_roots() as i64 - restricted.len() as i64)
}
