//! Layer-by-layer construction of a free basis of `D(A(I))`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{
    b_polynomial_with_nu, boolean_basis, c_matrix, defining_polynomial, is_logarithmic_on,
    linear_form, Derivation, NuPolicy, Poly,
};
use crate::error::{Error, Result};
use crate::partition::ideal_exponents;
use crate::rootposet::{height_layer, layer_roots, Ideal};
use crate::rootsys::RootSystem;

fn rat_str<S: Serializer>(c: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

fn matrix_str<S: Serializer>(m: &[Vec<BigRational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = m
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    rows.serialize(s)
}

/// Elementary row operation applied while reducing the C matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum RowOp {
    Swap {
        a: usize,
        b: usize,
    },
    Scale {
        row: usize,
        #[serde(serialize_with = "rat_str")]
        factor: BigRational,
    },
    /// `row[target] -= factor * row[source]`
    Eliminate {
        target: usize,
        source: usize,
        #[serde(serialize_with = "rat_str")]
        factor: BigRational,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerBuild {
    pub layer: i64,
    pub betas: Vec<usize>,
    pub nu_policy: Option<NuPolicy>,
    /// `nu_j(Y)` for each flat `Y` of `A''_j`.
    pub nu: Vec<Vec<usize>>,
    pub b: Vec<Poly>,
    #[serde(serialize_with = "matrix_str")]
    pub c: Vec<Vec<BigRational>>,
    pub row_ops: Vec<RowOp>,
    pub degrees: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisBuild {
    pub ideal: Ideal,
    pub basis: Vec<Derivation>,
    pub layers: Vec<LayerBuild>,
    #[serde(skip)]
    next: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub rank_limit: usize,
    pub nu_policy: NuPolicy,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            rank_limit: 4,
            nu_policy: NuPolicy::SmallestIndex,
        }
    }
}

fn sorted_degrees(basis: &[Derivation]) -> Result<Vec<u32>> {
    let mut d = basis
        .iter()
        .map(|t| {
            t.degree()
                .ok_or_else(|| Error::Inconsistent("basis member is not homogeneous".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    d.sort_unstable();
    Ok(d)
}

/// Checks degrees, logarithmicity and Saito against `I_layer`.
fn verify_layer(rs: &RootSystem, ideal: &Ideal, layer: i64, basis: &[Derivation]) -> Result<Vec<u32>> {
    let upper = height_layer(rs, ideal, layer);
    let degrees = sorted_degrees(basis)?;
    let dp = ideal_exponents(rs, &upper)?;
    if degrees != dp.exponents() {
        return Err(Error::Inconsistent(format!(
            "layer {layer}: degrees {degrees:?} differ from {dp}"
        )));
    }
    if !saito_check(rs, basis, &upper) {
        return Err(Error::Inconsistent(format!("layer {layer}: Saito criterion fails")));
    }
    Ok(degrees)
}

impl BasisBuild {
    /// The Boolean base case `I_1`.
    pub fn new(rs: &RootSystem, ideal: &Ideal) -> Result<Self> {
        let simple = height_layer(rs, ideal, 1);
        let basis = boolean_basis(rs, &simple)?;
        let mut layers = Vec::new();
        if !simple.is_empty() {
            let degrees = verify_layer(rs, ideal, 1, &basis)?;
            layers.push(LayerBuild {
                layer: 1,
                betas: simple.members().to_vec(),
                nu_policy: None,
                nu: Vec::new(),
                b: Vec::new(),
                c: Vec::new(),
                row_ops: Vec::new(),
                degrees,
            });
        }
        Ok(BasisBuild {
            ideal: *ideal,
            basis,
            layers,
            next: 2,
        })
    }

    /// Height of the next layer to add, if any remain.
    pub fn next_layer(&self, rs: &RootSystem) -> Option<i64> {
        (self.next <= self.ideal.height(rs)).then_some(self.next)
    }

    pub fn is_complete(&self, rs: &RootSystem) -> bool {
        self.next_layer(rs).is_none()
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.basis.iter().filter_map(Derivation::degree).collect();
        d.sort_unstable();
        d
    }

    /// Adds the next layer; returns `false` once the ideal is exhausted.
    pub fn advance(&mut self, rs: &RootSystem, policy: NuPolicy) -> Result<bool> {
        if self.is_complete(rs) {
            return Ok(false);
        }
        *self = mat_basis_step(rs, self, policy)?;
        Ok(true)
    }
}

/// One multiple-addition step: computes `b_j` and `C`, row-reduces `C` to
/// `(E_q; O)`, and multiplies the pivot combinations by their new forms.
pub fn mat_basis_step(rs: &RootSystem, build: &BasisBuild, policy: NuPolicy) -> Result<BasisBuild> {
    let layer = build.next;
    let l = rs.rank();
    let lower = height_layer(rs, &build.ideal, layer - 1);
    let betas = layer_roots(rs, &build.ideal, layer).to_vec();
    let mut out = build.clone();
    out.next += 1;
    if betas.is_empty() {
        return Ok(out);
    }
    let degree = |t: &Derivation| t.degree().unwrap_or(0);
    let d = build.basis.iter().map(degree).max().unwrap_or(0);
    let (top, low): (Vec<Derivation>, Vec<Derivation>) =
        build.basis.iter().cloned().partition(|t| degree(t) == d);

    let mut b = Vec::new();
    let mut nu = Vec::new();
    for &beta in &betas {
        let (bj, nj) = b_polynomial_with_nu(rs, &lower, beta, policy)?;
        b.push(bj);
        nu.push(nj);
    }
    let c = c_matrix(rs, &top, &betas, &b)?;

    let (p, q) = (top.len(), betas.len());
    let mut red = c.clone();
    let mut m: Vec<Vec<BigRational>> = (0..p)
        .map(|i| (0..p).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let mut ops = Vec::new();
    for col in 0..q {
        let Some(r) = (col..p).find(|&r| !red[r][col].is_zero()) else {
            return Err(Error::Inconsistent(format!("layer {layer}: C has rank below {q}")));
        };
        if r != col {
            red.swap(r, col);
            m.swap(r, col);
            ops.push(RowOp::Swap { a: col, b: r });
        }
        let pivot = red[col][col].clone();
        if !pivot.is_one() {
            let inv = pivot.recip();
            red[col].iter_mut().for_each(|x| *x *= &inv);
            m[col].iter_mut().for_each(|x| *x *= &inv);
            ops.push(RowOp::Scale { row: col, factor: inv });
        }
        for t in 0..p {
            if t == col || red[t][col].is_zero() {
                continue;
            }
            let f = red[t][col].clone();
            let (pr, pm) = (red[col].clone(), m[col].clone());
            red[t].iter_mut().zip(&pr).for_each(|(x, y)| *x -= &f * y);
            m[t].iter_mut().zip(&pm).for_each(|(x, y)| *x -= &f * y);
            ops.push(RowOp::Eliminate {
                target: t,
                source: col,
                factor: f,
            });
        }
    }
    let combos: Vec<Derivation> = m.iter().map(|w| Derivation::combination(l, w, &top)).collect();

    let upper = height_layer(rs, &build.ideal, layer);
    if let Some(bad) = low.iter().find(|t| !is_logarithmic_on(rs, t, upper.members())) {
        return Err(Error::Inconsistent(format!(
            "layer {layer}: carried-over derivation {bad} is not logarithmic"
        )));
    }
    let mut basis = low;
    basis.extend(combos[q..].iter().cloned());
    basis.extend(
        betas
            .iter()
            .zip(&combos[..q])
            .map(|(&beta, phi)| phi.scale_by(&linear_form(rs, beta))),
    );
    let degrees = verify_layer(rs, &build.ideal, layer, &basis)?;
    out.basis = basis;
    out.layers.push(LayerBuild {
        layer,
        betas,
        nu_policy: Some(policy),
        nu,
        b,
        c,
        row_ops: ops,
        degrees,
    });
    Ok(out)
}

/// Determinant of the coefficient matrix (row `i` holds the coefficients of
/// `basis[i]`), by cofactor expansion memoized over column subsets.
pub fn saito_determinant(basis: &[Derivation]) -> Poly {
    let n = basis.len();
    let nvars = basis.first().map_or(0, Derivation::nvars);
    let mut f: Vec<Poly> = vec![Poly::zero(nvars); 1 << n];
    f[0] = Poly::one(nvars);
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = Poly::zero(nvars);
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &basis[row].coeffs()[col];
            let minor = &f[mask ^ (1 << col)];
            if entry.is_zero() || minor.is_zero() {
                continue;
            }
            let term = entry * minor;
            acc = if (mask >> (col + 1)).count_ones() % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        f[mask] = acc;
    }
    f.pop().unwrap()
}

/// Saito's criterion: `rank` homogeneous logarithmic derivations whose
/// determinant is a nonzero scalar multiple of `Q(A(I))`.
pub fn saito_check(rs: &RootSystem, basis: &[Derivation], ideal: &Ideal) -> bool {
    let l = rs.rank();
    if basis.len() != l || basis.iter().any(|t| t.nvars() != l || t.degree().is_none()) {
        return false;
    }
    if !basis.iter().all(|t| is_logarithmic_on(rs, t, ideal.members())) {
        return false;
    }
    let det = saito_determinant(basis);
    let q = defining_polynomial(rs, ideal.members());
    matches!(det.ratio_to(&q), Some(c) if !c.is_zero())
}

/// Full build from the Boolean base through every height layer.
pub fn build_basis_for_ideal(rs: &RootSystem, ideal: &Ideal, opts: &BuildOptions) -> Result<BasisBuild> {
    if rs.rank() > opts.rank_limit {
        return Err(Error::RankLimit {
            rank: rs.rank(),
            limit: opts.rank_limit,
        });
    }
    let mut build = BasisBuild::new(rs, ideal)?;
    while build.advance(rs, opts.nu_policy)? {}
    Ok(build)
}
