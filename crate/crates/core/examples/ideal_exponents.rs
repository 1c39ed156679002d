//! Height distributions and dual partitions for every ideal of B3.

use idealarr::partition::{height_distribution, ideal_exponents};
use idealarr::rootposet::enumerate_ideals;
use idealarr::rootsys::RootSystem;

fn main() -> idealarr::error::Result<()> {
    let b3 = RootSystem::new("B3".parse()?);
    for (id, ideal) in enumerate_ideals(&b3).enumerate() {
        let gens: Vec<String> = ideal.generators().iter().map(|g| b3.root(g).to_string()).collect();
        println!(
            "#{id:<2} generators [{}] heights {:?} exponents {}",
            gens.join(" "),
            height_distribution(&b3, &ideal).counts(),
            ideal_exponents(&b3, &ideal)?
        );
    }
    Ok(())
}
