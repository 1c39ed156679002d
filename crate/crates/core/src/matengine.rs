//! Layer-by-layer freeness certificates for ideal subarrangements.
//!
//! Starting from the empty arrangement (exponents `0^l`), each height layer
//! `I_{k+1} \ I_k` is added as one multiple-addition step. Every step checks
//! its three hypotheses from scratch:
//!
//! 1. the new roots are linearly independent (`X` has codimension `q`);
//! 2. no root of `I_k` lies in their span (`X` avoids every old hyperplane);
//! 3. `|A(I_k)| - |A''_j| = d` for each new root, where `A''_j` is the set of
//!    distinct intersections of old hyperplanes with the new one.
//!
//! If they hold, `q <= p` and the top `q` exponents `d` become `d + 1`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{span_closure_in, Flat};
use crate::linalg::bareiss_rank;
use crate::partition::{ideal_exponents, ExponentRecord};
use crate::rootposet::{height_layer, layer_roots, Ideal};
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

/// Condition (1): the roots, all of one height, are linearly independent.
pub fn check_condition_codim(rs: &RootSystem, betas: RootSet) -> Result<bool> {
    let mut heights = betas.iter().map(|b| rs.height(b));
    if let Some(h) = heights.next() {
        if heights.any(|x| x != h) {
            return Err(Error::UnequalHeights);
        }
    }
    let rows: Vec<Vec<i64>> = betas.iter().map(|b| rs.root(b).coeffs().to_vec()).collect();
    Ok(bareiss_rank(&rows) == betas.len())
}

/// Condition (2): no root of `lower` lies in the span of `betas`.
pub fn check_condition_avoid(rs: &RootSystem, lower: RootSet, betas: RootSet) -> bool {
    let span = crate::lattice::span_of(rs, betas);
    lower.iter().all(|a| !span.contains(rs.root(a).coeffs()))
}

/// A flat `Y = H ∩ H_beta` together with the old hyperplanes through it.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionClass {
    pub flat: Flat,
    /// Roots `h` of the lower ideal with `H_h ∩ H_beta = Y`, ascending.
    pub through: Vec<usize>,
}

/// `A''` for adding `H_beta` to `A(lower)`, grouped by flat.
pub fn restriction_classes(rs: &RootSystem, lower: RootSet, beta: usize) -> Vec<RestrictionClass> {
    let universe = lower.with(beta);
    let mut classes: BTreeMap<Vec<usize>, RestrictionClass> = BTreeMap::new();
    for h in lower {
        let flat = span_closure_in(rs, RootSet::singleton(h).with(beta), universe);
        classes
            .entry(flat.localization().to_vec())
            .or_insert_with(|| RestrictionClass {
                flat,
                through: Vec::new(),
            })
            .through
            .push(h);
    }
    classes.into_values().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub beta: usize,
    /// `|A'| - |A''|`
    pub lhs: i64,
    /// `Ht(beta) - 1`
    pub k: i64,
    pub ok: bool,
}

/// Condition (3) for adding `beta` to `A(lower)`.
pub fn check_condition_count(rs: &RootSystem, lower: &Ideal, beta: usize) -> Result<CountCheck> {
    rs.check_index(beta)?;
    let classes = restriction_classes(rs, lower.members(), beta);
    let lhs = lower.len() as i64 - classes.len() as i64;
    let k = rs.height(beta) - 1;
    Ok(CountCheck {
        beta,
        lhs,
        k,
        ok: lhs == k,
    })
}

/// Restriction deficit `|B'| - |B''|` for `alpha` in `ideal`, where `B'` holds
/// the roots of `ideal` strictly below `alpha`'s height.
pub fn restriction_deficit(rs: &RootSystem, ideal: &Ideal, alpha: usize) -> Result<CountCheck> {
    let lower = height_layer(rs, ideal, rs.height(alpha) - 1);
    check_condition_count(rs, &lower, alpha)
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerRecord {
    /// Height of the roots added in this step.
    pub layer: i64,
    /// Top exponent before the step.
    pub d: u32,
    /// Multiplicity of `d`.
    pub p: usize,
    pub q: usize,
    pub betas: Vec<usize>,
    pub codim: bool,
    pub avoid: bool,
    pub counts: Vec<CountCheck>,
    /// Every count equals `d`.
    pub count_ok: bool,
    pub q_le_p: bool,
    pub exponents: ExponentRecord,
    /// `exponents` equals the dual partition of `I_layer`.
    pub matches_dp: bool,
}

impl LayerRecord {
    pub fn passed(&self) -> bool {
        self.codim && self.avoid && self.count_ok && self.q_le_p && self.matches_dp
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MatCertificate {
    pub ideal: Ideal,
    pub layers: Vec<LayerRecord>,
    pub exponents: ExponentRecord,
    pub passed: bool,
    pub failed_layer: Option<i64>,
}

/// Runs one multiple-addition step per height layer of `ideal`.
pub fn run_induction(rs: &RootSystem, ideal: &Ideal) -> Result<MatCertificate> {
    let l = rs.rank();
    let mut current = ExponentRecord::zeros(l);
    let mut layers = Vec::new();
    let mut failed_layer = None;
    for k in 0..ideal.height(rs) {
        let lower = height_layer(rs, ideal, k);
        let betas = layer_roots(rs, ideal, k + 1);
        let d = current.max();
        let p = current.top_multiplicity();
        let q = betas.len();
        let codim = check_condition_codim(rs, betas)?;
        let avoid = check_condition_avoid(rs, lower.members(), betas);
        let counts = betas
            .iter()
            .map(|b| check_condition_count(rs, &lower, b))
            .collect::<Result<Vec<_>>>()?;
        let count_ok = counts.iter().all(|c| c.lhs == d as i64);
        let q_le_p = q <= p;
        let next = if q_le_p {
            let mut e = current.exponents().to_vec();
            e[l - q..].iter_mut().for_each(|x| *x = d + 1);
            ExponentRecord::new(e)
        } else {
            current.clone()
        };
        let upper = height_layer(rs, ideal, k + 1);
        let matches_dp = ideal_exponents(rs, &upper).is_ok_and(|dp| dp == next);
        let record = LayerRecord {
            layer: k + 1,
            d,
            p,
            q,
            betas: betas.to_vec(),
            codim,
            avoid,
            counts,
            count_ok,
            q_le_p,
            exponents: next.clone(),
            matches_dp,
        };
        let ok = record.passed();
        layers.push(record);
        if !ok {
            failed_layer = Some(k + 1);
            break;
        }
        current = next;
    }
    Ok(MatCertificate {
        ideal: *ideal,
        layers,
        exponents: current,
        passed: failed_layer.is_none(),
        failed_layer,
    })
}
