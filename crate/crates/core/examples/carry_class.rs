//! Cup product and Bockstein on `Z/n`: `alpha ∪ δalpha` is the carry class
//! `(x, y, z) -> x * [y + z >= n]` and generates `H^3(Z/n, Z/n)`.

use arith_cs::cochains::cohomology;
use arith_cs::cs::fixtures;
use arith_cs::ops::{bockstein, cup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=5u32 {
        let alpha = fixtures::alpha(n);
        let beta = bockstein(&alpha)?;
        let c = cup(&alpha, &beta)?;
        let h3 = cohomology(c.coeffs(), 3)?;
        println!(
            "n = {n}: δalpha(1, {}) = {}, H^3 = {:?}, [alpha ∪ δalpha] = {:?}",
            n - 1,
            beta.scalar_at(&[1, n as usize - 1]),
            h3.invariant_factors(),
            h3.coordinates(&c)?
        );
    }
    Ok(())
}
