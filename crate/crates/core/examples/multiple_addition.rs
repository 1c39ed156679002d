//! Layer-by-layer certificate for the full D4 arrangement.

use idealarr::matengine::run_induction;
use idealarr::rootposet::Ideal;
use idealarr::rootsys::RootSystem;

fn main() -> idealarr::error::Result<()> {
    let d4 = RootSystem::new("D4".parse()?);
    let full = Ideal::from_members(&d4, d4.all_roots())?;
    let cert = run_induction(&d4, &full)?;
    for layer in &cert.layers {
        let lhs: Vec<i64> = layer.counts.iter().map(|c| c.lhs).collect();
        println!(
            "height {}: d={} p={} q={} independent={} avoids={} counts={lhs:?} -> {}",
            layer.layer, layer.d, layer.p, layer.q, layer.codim, layer.avoid, layer.exponents
        );
    }
    println!("passed: {}, exponents {}", cert.passed, cert.exponents);
    Ok(())
}
