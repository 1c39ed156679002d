//! Characteristic polynomials from the intersection lattice, checked against
//! finite-field point counts and the exponents.

use idealarr::lattice::{build_lattice, default_primes, point_count_charpoly, IntPoly};
use idealarr::partition::ideal_exponents;
use idealarr::rootposet::truncation_ideal;
use idealarr::rootsys::RootSystem;

fn main() -> idealarr::error::Result<()> {
    let c3 = RootSystem::new("C3".parse()?);
    for t in 0..=c3.num_positive_roots() {
        let ideal = truncation_ideal(&c3, t)?;
        let lattice = build_lattice(&c3, &ideal);
        let chi = lattice.characteristic_polynomial();
        let counted = point_count_charpoly(&c3, &ideal, &default_primes(&c3, &ideal))?;
        let exps = ideal_exponents(&c3, &ideal)?;
        let factored = IntPoly::from_roots(exps.exponents().iter().map(|&d| d as i64));
        println!(
            "t={t:<2} flats={:<3} chi = {chi:<24} exponents {exps} point count {} factorization {}",
            lattice.flats().len(),
            if counted == chi { "agrees" } else { "DISAGREES" },
            if factored == chi { "holds" } else { "FAILS" },
        );
    }
    Ok(())
}
