//! The heights of F4 roots as sums of local heights over rank-2 flats.

use idealarr::localheight::{decomposition_pair_count, verify_local_global};
use idealarr::rootsys::RootSystem;

fn main() -> idealarr::error::Result<()> {
    let f4 = RootSystem::new("F4".parse()?);
    for alpha in 0..f4.num_positive_roots() {
        let rep = verify_local_global(&f4, alpha)?;
        let local: Vec<String> = rep.terms.iter().map(|t| t.local_height.to_string()).collect();
        println!(
            "{:<10} Ht-1 = {:>2}  local heights [{}]  pairs {}  {}",
            f4.root(alpha).to_string(),
            rep.lhs,
            local.join(","),
            decomposition_pair_count(&f4, alpha),
            if rep.pass { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
