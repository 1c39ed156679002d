//! Logarithmic derivations of ideal subarrangements.
//!
//! Coordinates are `x_i := alpha_i`, so the linear form of a positive root is
//! its coefficient vector and `d/dx_i` is the dual-basis derivation.

mod basis;
mod poly;

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matengine::restriction_classes;
use crate::rootposet::Ideal;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

pub use basis::{
    build_basis_for_ideal, mat_basis_step, saito_check, saito_determinant, BasisBuild,
    BuildOptions, LayerBuild, RowOp,
};
pub use poly::{Monomial, Poly};

/// `theta = sum_i coeffs[i] d/dx_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    coeffs: Vec<Poly>,
}

impl Derivation {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        let n = coeffs.len();
        assert!(coeffs.iter().all(|p| p.nvars() == n), "coefficient arity");
        Derivation { coeffs }
    }

    pub fn zero(nvars: usize) -> Self {
        Derivation::new(vec![Poly::zero(nvars); nvars])
    }

    /// `d/dx_i`.
    pub fn partial(nvars: usize, i: usize) -> Self {
        let mut d = Derivation::zero(nvars);
        d.coeffs[i] = Poly::one(nvars);
        d
    }

    /// `x_i d/dx_i`.
    pub fn x_partial(nvars: usize, i: usize) -> Self {
        let mut d = Derivation::zero(nvars);
        d.coeffs[i] = Poly::var(nvars, i);
        d
    }

    pub fn euler(nvars: usize) -> Self {
        Derivation::new((0..nvars).map(|i| Poly::var(nvars, i)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// Common total degree of the nonzero coefficients; `None` for the zero
    /// derivation or a non-homogeneous one.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.coeffs.iter().filter(|p| !p.is_zero()).map(|p| {
            if p.is_homogeneous() {
                p.degree()
            } else {
                None
            }
        });
        let d = degs.next()??;
        degs.all(|e| e == Some(d)).then_some(d)
    }

    /// `theta(f) = sum_i coeffs[i] df/dx_i`.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(self.nvars()), |acc, (i, c)| {
                let d = f.partial(i);
                if d.is_zero() {
                    acc
                } else {
                    &acc + &(c * &d)
                }
            })
    }

    /// `theta(sum a_i x_i) = sum a_i coeffs[i]`.
    pub fn apply_linear(&self, form: &[i64]) -> Poly {
        form.iter()
            .zip(&self.coeffs)
            .filter(|(&a, _)| a != 0)
            .fold(Poly::zero(self.nvars()), |acc, (&a, c)| {
                &acc + &c.scale(&BigRational::from_integer(a.into()))
            })
    }

    pub fn scale_by(&self, f: &Poly) -> Derivation {
        Derivation::new(self.coeffs.iter().map(|c| c * f).collect())
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Derivation {
        Derivation::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// `sum_k weights[k] * derivs[k]`.
    pub fn combination(nvars: usize, weights: &[BigRational], derivs: &[Derivation]) -> Derivation {
        weights
            .iter()
            .zip(derivs)
            .filter(|(w, _)| !w.is_zero())
            .fold(Derivation::zero(nvars), |acc, (w, d)| acc.add(&d.scale(w)))
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c}) d{}", i + 1))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Serialize for Derivation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            degree: Option<u32>,
            coeffs: &'a [Poly],
        }
        Json {
            degree: self.degree(),
            coeffs: &self.coeffs,
        }
        .serialize(s)
    }
}

/// The linear form `alpha_beta` of a positive root.
pub fn linear_form(rs: &RootSystem, beta: usize) -> Poly {
    Poly::linear(rs.root(beta).coeffs())
}

/// `Q(A) = prod alpha_beta` over the given roots (ascending index order).
pub fn defining_polynomial(rs: &RootSystem, roots: RootSet) -> Poly {
    roots
        .iter()
        .fold(Poly::one(rs.rank()), |acc, b| &acc * &linear_form(rs, b))
}

/// `theta(alpha_beta)` is divisible by `alpha_beta` for every `beta` in `ideal`.
pub fn is_logarithmic(rs: &RootSystem, theta: &Derivation, ideal: &Ideal) -> bool {
    is_logarithmic_on(rs, theta, ideal.members())
}

pub(crate) fn is_logarithmic_on(rs: &RootSystem, theta: &Derivation, roots: RootSet) -> bool {
    roots.iter().all(|b| {
        let form = rs.root(b).coeffs();
        theta.apply_linear(form).reduce_mod_linear(form).is_zero()
    })
}

/// Basis of `D(A(I_1))` for `I_1` inside the simple roots: `x_i d_i` for
/// `alpha_i` in `I_1` and `d_i` otherwise.
pub fn boolean_basis(rs: &RootSystem, simple: &Ideal) -> Result<Vec<Derivation>> {
    let l = rs.rank();
    if let Some(bad) = simple.members().iter().find(|&i| i >= l) {
        return Err(Error::Inconsistent(format!(
            "root {} is not simple",
            rs.root(bad)
        )));
    }
    Ok((0..l)
        .map(|i| {
            if simple.contains(i) {
                Derivation::x_partial(l, i)
            } else {
                Derivation::partial(l, i)
            }
        })
        .collect())
}

/// How `nu` picks one old hyperplane through each flat of `A''`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NuPolicy {
    #[default]
    SmallestIndex,
    LargestIndex,
}

impl NuPolicy {
    fn pick(self, through: &[usize]) -> usize {
        match self {
            NuPolicy::SmallestIndex => through[0],
            NuPolicy::LargestIndex => *through.last().unwrap(),
        }
    }
}

/// `b = Q(A') / prod_Y alpha_{nu(Y)}` together with the chosen roots `nu(Y)`.
pub fn b_polynomial_with_nu(
    rs: &RootSystem,
    lower: &Ideal,
    beta: usize,
    policy: NuPolicy,
) -> Result<(Poly, Vec<usize>)> {
    rs.check_index(beta)?;
    let nu: Vec<usize> = restriction_classes(rs, lower.members(), beta)
        .iter()
        .map(|c| policy.pick(&c.through))
        .collect();
    let mut b = defining_polynomial(rs, lower.members());
    for &h in &nu {
        b = b.div_exact(&linear_form(rs, h)).ok_or_else(|| {
            Error::Inconsistent(format!("alpha of {} does not divide Q(A')", rs.root(h)))
        })?;
    }
    Ok((b, nu))
}

pub fn b_polynomial(rs: &RootSystem, lower: &Ideal, beta: usize, policy: NuPolicy) -> Result<Poly> {
    b_polynomial_with_nu(rs, lower, beta, policy).map(|(b, _)| b)
}

/// `c_ij` with `phi_i(alpha_j) = c_ij b_j` modulo `alpha_j`.
pub fn c_matrix(
    rs: &RootSystem,
    top: &[Derivation],
    betas: &[usize],
    b_polys: &[Poly],
) -> Result<Vec<Vec<BigRational>>> {
    if betas.len() != b_polys.len() {
        return Err(Error::DimensionMismatch {
            expected: betas.len(),
            got: b_polys.len(),
        });
    }
    let reduced_b: Vec<Poly> = betas
        .iter()
        .zip(b_polys)
        .map(|(&beta, b)| {
            let r = b.reduce_mod_linear(rs.root(beta).coeffs());
            if r.is_zero() {
                Err(Error::Inconsistent(format!(
                    "b vanishes modulo the form of {}",
                    rs.root(beta)
                )))
            } else {
                Ok(r)
            }
        })
        .collect::<Result<_>>()?;
    top.iter()
        .map(|phi| {
            betas
                .iter()
                .zip(&reduced_b)
                .map(|(&beta, rb)| {
                    let form = rs.root(beta).coeffs();
                    phi.apply_linear(form)
                        .reduce_mod_linear(form)
                        .ratio_to(rb)
                        .ok_or_else(|| {
                            Error::Inconsistent(format!(
                                "phi(alpha) is not a multiple of b modulo the form of {}",
                                rs.root(beta)
                            ))
                        })
                })
                .collect()
        })
        .collect()
}
