//! Positive roots, heights and Coxeter numbers of the exceptional types.

use idealarr::rootsys::RootSystem;

fn main() -> idealarr::error::Result<()> {
    for name in ["G2", "F4", "E6", "E7", "E8"] {
        let rs = RootSystem::new(name.parse()?);
        rs.self_check()?;
        println!(
            "{name}: {} positive roots, highest root {}, h = {}",
            rs.num_positive_roots(),
            rs.highest_root(),
            rs.coxeter_number()
        );
    }
    let g2 = RootSystem::new("G2".parse()?);
    for (i, r) in g2.positive_roots().iter().enumerate() {
        println!("  G2 root {i}: {r} (height {})", r.height());
    }
    Ok(())
}
