//! Characteristic polynomials by counting points over prime fields.
//!
//! For a prime `q` at which no rank drops, `chi(A, q)` is the number of
//! points of `F_q^l` off every hyperplane. Sampling `l + 1` primes and
//! interpolating recovers `chi` without touching the intersection lattice.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::IntPoly;
use crate::error::{Error, Result};
use crate::rootposet::Ideal;
use crate::rootsys::RootSystem;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes must exceed this value: `max(|I|, 2 * max_coefficient * l!)`.
pub fn prime_bound(rs: &RootSystem, ideal: &Ideal) -> u64 {
    let factorial: u64 = (1..=rs.rank() as u64).product();
    let minors = 2 * rs.max_coefficient() as u64 * factorial;
    minors.max(ideal.len() as u64)
}

/// The `l + 1` smallest primes above [`prime_bound`].
pub fn default_primes(rs: &RootSystem, ideal: &Ideal) -> Vec<u64> {
    (prime_bound(rs, ideal) + 1..)
        .filter(|&n| is_prime(n))
        .take(rs.rank() + 1)
        .collect()
}

fn validate(rs: &RootSystem, ideal: &Ideal, q: u64) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::InvalidPrime {
            prime: q,
            reason: "not prime".into(),
        });
    }
    let bound = prime_bound(rs, ideal);
    if q <= bound {
        return Err(Error::InvalidPrime {
            prime: q,
            reason: format!("must exceed {bound} so that no rank drops mod q"),
        });
    }
    if let Some(i) = ideal
        .members()
        .iter()
        .find(|&i| rs.root(i).coeffs().iter().all(|&c| c % q as i64 == 0))
    {
        return Err(Error::InvalidPrime {
            prime: q,
            reason: format!("hyperplane of {} degenerates mod q", rs.root(i)),
        });
    }
    Ok(())
}

fn inverse_mod(a: u64, q: u64) -> u64 {
    // q is prime: a^(q-2)
    let (mut base, mut exp, mut acc) = (a % q, q - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// Number of points of `F_q^l` lying on no hyperplane of `A(I)`.
pub fn point_count(rs: &RootSystem, ideal: &Ideal, q: u64) -> Result<u64> {
    validate(rs, ideal, q)?;
    let l = rs.rank();
    if ideal.is_empty() {
        return Ok(q.pow(l as u32));
    }
    let forms: Vec<Vec<u64>> = ideal
        .members()
        .iter()
        .map(|i| rs.root(i).coeffs().iter().map(|&c| c.rem_euclid(q as i64) as u64).collect())
        .collect();
    // The complement is stable under scaling, so count projective points
    // normalized to have first nonzero coordinate 1, then multiply by q - 1.
    let projective: u64 = (0..l).map(|lead| count_slice(&forms, l, lead, q)).sum();
    Ok(projective * (q - 1))
}

/// Points with `x_0 = .. = x_{lead-1} = 0`, `x_lead = 1`, rest free.
fn count_slice(forms: &[Vec<u64>], l: usize, lead: usize, q: u64) -> u64 {
    let last = l - 1;
    if lead == last {
        return forms.iter().all(|f| f[last] != 0) as u64;
    }
    // Any form vanishing identically on the slice kills it.
    if forms.iter().any(|f| f[lead..].iter().all(|&c| c == 0)) {
        return 0;
    }
    let inv_last: Vec<Option<u64>> = forms
        .iter()
        .map(|f| (f[last] != 0).then(|| inverse_mod(f[last], q)))
        .collect();
    let middle = last - lead - 1;
    let mut x = vec![0u64; middle];
    let mut stamp = vec![0u32; q as usize];
    let mut epoch = 0u32;
    let mut total = 0u64;
    'tuples: loop {
        epoch += 1;
        let mut forbidden = 0u64;
        for (f, inv) in forms.iter().zip(&inv_last) {
            let mut partial = f[lead];
            for (k, &xk) in x.iter().enumerate() {
                partial = (partial + f[lead + 1 + k] * xk) % q;
            }
            match inv {
                Some(inv) => {
                    // c * x_last + partial = 0  =>  x_last = -partial / c
                    let v = (q - partial) % q * inv % q;
                    if stamp[v as usize] != epoch {
                        stamp[v as usize] = epoch;
                        forbidden += 1;
                    }
                }
                None if partial == 0 => forbidden = q,
                None => {}
            }
            if forbidden == q {
                break;
            }
        }
        total += q - forbidden;
        // odometer over the middle coordinates
        for xk in x.iter_mut() {
            *xk += 1;
            if *xk < q {
                continue 'tuples;
            }
            *xk = 0;
        }
        break;
    }
    total
}

/// Interpolates `chi(A(I), t)` from point counts at the given primes.
///
/// Needs at least `l + 1` distinct valid primes. The result is checked to be
/// an integer polynomial, monic of degree `l`.
pub fn point_count_charpoly(rs: &RootSystem, ideal: &Ideal, primes: &[u64]) -> Result<IntPoly> {
    let l = rs.rank();
    let mut distinct = primes.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < l + 1 {
        return Err(Error::NotEnoughPrimes {
            needed: l + 1,
            got: distinct.len(),
        });
    }
    for &q in &distinct {
        validate(rs, ideal, q)?;
    }
    let samples: Vec<(u64, u64)> = distinct
        .par_iter()
        .map(|&q| point_count(rs, ideal, q).map(|n| (q, n)))
        .collect::<Result<_>>()?;
    let coeffs = lagrange(&samples);
    let mut ints = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        if !c.is_integer() {
            return Err(Error::Inconsistent(format!("non-integer interpolated coefficient {c}")));
        }
        let v = c.to_integer().to_i64().ok_or_else(|| Error::Inconsistent("coefficient overflow".into()))?;
        ints.push(v);
    }
    let chi = IntPoly::new(ints);
    if chi.degree() != Some(l) || !chi.is_monic() {
        return Err(Error::Inconsistent(format!(
            "interpolated polynomial {chi} is not monic of degree {l}"
        )));
    }
    Ok(chi)
}

/// Coefficients (ascending) of the polynomial through the samples.
fn lagrange(samples: &[(u64, u64)]) -> Vec<BigRational> {
    let n = samples.len();
    let mut out = vec![BigRational::zero(); n];
    for (i, &(xi, yi)) in samples.iter().enumerate() {
        // basis numerator prod_{j != i} (t - x_j), ascending coefficients
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &(xj, _)) in samples.iter().enumerate() {
            if j == i {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xi)) - xj;
        }
        let scale = BigRational::from_integer(BigInt::from(yi)) / denom;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += b * &scale;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootposet::truncation_ideal;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    // Direct enumeration of F_q^l.
    fn brute_count(rs: &RootSystem, ideal: &Ideal, q: u64) -> u64 {
        let l = rs.rank();
        let total = q.pow(l as u32);
        (0..total)
            .filter(|&code| {
                let x: Vec<i64> = (0..l).map(|k| (code / q.pow(k as u32) % q) as i64).collect();
                ideal.members().iter().all(|i| {
                    let s: i64 = rs.root(i).coeffs().iter().zip(&x).map(|(c, v)| c * v).sum();
                    s.rem_euclid(q as i64) != 0
                })
            })
            .count() as u64
    }

    #[test]
    fn a2_counts() {
        let a2 = rs("A2");
        let full = truncation_ideal(&a2, 3).unwrap();
        assert_eq!(point_count(&a2, &full, 5).unwrap(), 12);
        assert_eq!(point_count(&a2, &full, 7).unwrap(), 30);
        assert_eq!(point_count(&a2, &Ideal::empty(), 5).unwrap(), 25);
    }

    #[test]
    fn fast_count_matches_enumeration() {
        for t in ["A3", "B3", "C3"] {
            let r = rs(t);
            for k in 0..=r.num_positive_roots() {
                let i = truncation_ideal(&r, k).unwrap();
                let q = default_primes(&r, &i)[0];
                assert_eq!(point_count(&r, &i, q).unwrap(), brute_count(&r, &i, q), "{t} t={k}");
            }
        }
    }

    #[test]
    fn rejects_bad_primes() {
        let g2 = rs("G2");
        let full = truncation_ideal(&g2, 6).unwrap();
        match point_count(&g2, &full, 3) {
            Err(Error::InvalidPrime { prime: 3, .. }) => {}
            other => panic!("expected rejection, got {other:?}"),
        }
        assert!(matches!(point_count(&g2, &full, 25), Err(Error::InvalidPrime { prime: 25, .. })));
        assert!(matches!(
            point_count_charpoly(&g2, &full, &[29, 31]),
            Err(Error::NotEnoughPrimes { needed: 3, got: 2 })
        ));
    }

    #[test]
    fn interpolation_recovers_a2() {
        let a2 = rs("A2");
        let full = truncation_ideal(&a2, 3).unwrap();
        let chi = point_count_charpoly(&a2, &full, &[5, 7, 11]).unwrap();
        assert_eq!(chi, IntPoly::new(vec![2, -3, 1]));
        let chi = point_count_charpoly(&a2, &Ideal::empty(), &default_primes(&a2, &Ideal::empty())).unwrap();
        assert_eq!(chi, IntPoly::new(vec![0, 0, 1]));
    }

    #[test]
    fn prime_helpers() {
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
        let b2 = rs("B2");
        let full = truncation_ideal(&b2, 4).unwrap();
        assert_eq!(prime_bound(&b2, &full), 8);
        assert_eq!(default_primes(&b2, &full), vec![11, 13, 17]);
    }
}
