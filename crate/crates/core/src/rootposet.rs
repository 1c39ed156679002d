//! The root poset, its order ideals, and height layers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Root, RootSystem};

/// `a <= b` in the root poset: `b - a` has only nonnegative coefficients.
pub fn leq(a: &Root, b: &Root) -> bool {
    a.rank() == b.rank() && a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| y >= x)
}

/// A lower-closed set of positive roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ideal {
    members: RootSet,
    generators: RootSet,
}

impl Ideal {
    pub fn empty() -> Self {
        Ideal {
            members: RootSet::empty(),
            generators: RootSet::empty(),
        }
    }

    /// Wraps `members` after checking that it is lower-closed.
    pub fn from_members(rs: &RootSystem, members: RootSet) -> Result<Self> {
        check_members(rs, members)?;
        if let Some(i) = members.iter().find(|&i| !rs.down_set(i).is_subset(members)) {
            return Err(Error::Inconsistent(format!(
                "{members:?} is not an ideal: misses roots below {}",
                rs.root(i)
            )));
        }
        Ok(Ideal {
            members,
            generators: maximal_elements(rs, members),
        })
    }

    pub fn members(&self) -> RootSet {
        self.members
    }

    /// The antichain of maximal elements.
    pub fn generators(&self) -> RootSet {
        self.generators
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    /// `Ht(I)`: the largest height in the ideal, 0 when empty.
    pub fn height(&self, rs: &RootSystem) -> i64 {
        self.members.iter().map(|i| rs.height(i)).max().unwrap_or(0)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(other.members)
    }
}

fn check_members(rs: &RootSystem, set: RootSet) -> Result<()> {
    match set.last() {
        Some(i) => rs.check_index(i),
        None => Ok(()),
    }
}

fn maximal_elements(rs: &RootSystem, members: RootSet) -> RootSet {
    members
        .iter()
        .filter(|&i| {
            let mut strictly_above = rs.up_set(i);
            strictly_above.remove(i);
            strictly_above.intersection(members).is_empty()
        })
        .collect()
}

/// The smallest ideal containing every index in `generators`.
pub fn ideal_closure(rs: &RootSystem, generators: RootSet) -> Result<Ideal> {
    check_members(rs, generators)?;
    let members = generators
        .iter()
        .fold(RootSet::empty(), |acc, i| acc.union(rs.down_set(i)));
    Ok(Ideal {
        members,
        generators: maximal_elements(rs, members),
    })
}

pub fn is_antichain(rs: &RootSystem, set: RootSet) -> bool {
    set.iter().all(|i| {
        let mut comparable = rs.down_set(i).union(rs.up_set(i));
        comparable.remove(i);
        comparable.intersection(set).is_empty()
    })
}

/// All ideals of the root poset, depth-first over the canonical order.
///
/// At each position the "exclude" branch is explored before the "include"
/// branch, so the empty ideal comes first and `Phi^+` last.
pub fn enumerate_ideals(rs: &RootSystem) -> Ideals<'_> {
    Ideals {
        rs,
        stack: vec![(0, RootSet::empty())],
    }
}

pub struct Ideals<'a> {
    rs: &'a RootSystem,
    stack: Vec<(usize, RootSet)>,
}

impl Iterator for Ideals<'_> {
    type Item = Ideal;

    fn next(&mut self) -> Option<Ideal> {
        let n = self.rs.num_positive_roots();
        while let Some((pos, members)) = self.stack.pop() {
            if pos == n {
                return Some(Ideal {
                    members,
                    generators: maximal_elements(self.rs, members),
                });
            }
            let mut strictly_below = self.rs.down_set(pos);
            strictly_below.remove(pos);
            if strictly_below.is_subset(members) {
                self.stack.push((pos + 1, members.with(pos)));
            }
            self.stack.push((pos + 1, members));
        }
        None
    }
}

/// `I_j`: the roots of `I` with height at most `j`.
pub fn height_layer(rs: &RootSystem, ideal: &Ideal, j: i64) -> Ideal {
    let members: RootSet = ideal.members.iter().filter(|&i| rs.height(i) <= j).collect();
    Ideal {
        members,
        generators: maximal_elements(rs, members),
    }
}

/// The roots of `I` with height exactly `j`.
pub fn layer_roots(rs: &RootSystem, ideal: &Ideal, j: i64) -> RootSet {
    ideal.members.iter().filter(|&i| rs.height(i) == j).collect()
}

/// `Phi_t`: the first `t` roots of the canonical order.
pub fn truncation_ideal(rs: &RootSystem, t: usize) -> Result<Ideal> {
    let n = rs.num_positive_roots();
    if t > n {
        return Err(Error::TruncationOutOfRange { t, count: n });
    }
    Ideal::from_members(rs, RootSet::prefix(t))
}
