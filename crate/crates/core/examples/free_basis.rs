//! Explicit basis of the logarithmic derivation module of the full B3
//! arrangement, checked with Saito's criterion.

use idealarr::derivations::{build_basis_for_ideal, saito_check, saito_determinant, BuildOptions};
use idealarr::rootposet::Ideal;
use idealarr::rootsys::RootSystem;

fn main() -> idealarr::error::Result<()> {
    let b3 = RootSystem::new("B3".parse()?);
    let full = Ideal::from_members(&b3, b3.all_roots())?;
    let build = build_basis_for_ideal(&b3, &full, &BuildOptions::default())?;
    for layer in &build.layers {
        println!("layer {}: degrees {:?}", layer.layer, layer.degrees);
        for (beta, b) in layer.betas.iter().zip(&layer.b) {
            println!("  b for {} = {b}", b3.root(*beta));
        }
    }
    for (i, theta) in build.basis.iter().enumerate() {
        println!("theta_{} (degree {:?}) = {theta}", i + 1, theta.degree());
    }
    println!("det has {} terms", saito_determinant(&build.basis).num_terms());
    println!("Saito criterion: {}", saito_check(&b3, &build.basis, &full));
    Ok(())
}
