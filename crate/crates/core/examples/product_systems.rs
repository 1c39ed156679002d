//! Exponents of ideals in a reducible system are the union of the
//! exponents of the components.

use idealarr::lattice::characteristic_polynomial;
use idealarr::partition::{ideal_exponents, product_exponents};
use idealarr::rootposet::enumerate_ideals;
use idealarr::rootsys::ProductRootSystem;

fn main() -> idealarr::error::Result<()> {
    let p = ProductRootSystem::new(&"B2xA2".parse()?);
    let [b2, a2] = p.components() else {
        unreachable!("two components")
    };
    for i in enumerate_ideals(b2) {
        for j in enumerate_ideals(a2) {
            let exps = product_exponents(&[ideal_exponents(b2, &i)?, ideal_exponents(a2, &j)?]);
            let chi = characteristic_polynomial(b2, &i).mul(&characteristic_polynomial(a2, &j));
            println!("|I| = {}+{}  exponents {exps}  chi = {chi}", i.len(), j.len());
        }
    }
    Ok(())
}
