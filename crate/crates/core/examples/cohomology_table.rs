//! `H^i(G, Z/n)` for the shipped group corpus, degrees 0 through 3.
//!
//! ```text
//! cargo run --example cohomology_table -- 2
//! ```

use arith_cs::algebra::ZnModule;
use arith_cs::cochains::cohomology;
use arith_cs::groups::{catalog, GModule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args().nth(1).map_or(Ok(2), |s| s.parse())?;
    println!(
        "{:<8} {:>6}  H^0 .. H^3 with Z/{n} coefficients",
        "group", "order"
    );
    for (name, g) in catalog::corpus() {
        let m = GModule::trivial(&g, ZnModule::cyclic(n)?);
        let mut cols = Vec::new();
        for i in 0..=3 {
            cols.push(format!("{:?}", cohomology(&m, i)?.invariant_factors()));
        }
        println!("{name:<8} {:>6}  {}", g.order(), cols.join("  "));
    }
    Ok(())
}
