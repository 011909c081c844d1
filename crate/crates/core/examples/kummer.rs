//! Kummer trivialization of `f^*(alpha ∪ δalpha)` for characters onto `Z/p`
//! that lift to `Z/p^2`.

use arith_cs::cochains::{differential, pullback};
use arith_cs::cs::{fixtures, kummer_trivialization};
use arith_cs::groups::{catalog, GroupHom};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, m) in [(2usize, 4usize), (2, 8), (3, 9)] {
        let f = GroupHom::new(
            &catalog::cyclic(m),
            &catalog::cyclic(p),
            (0..m).map(|x| x % p).collect(),
        )?;
        let k = kummer_trivialization(&f, None)?;
        let target = pullback(&f, &fixtures::carry_class(p as u32))?;
        println!("Z/{m} -> Z/{p}: lift {:?}", k.lift.map());
        println!("  b = {:?}", k.b.values());
        println!(
            "  dt = f^*(alpha ∪ δalpha): {}",
            differential(&k.t)? == target
        );
    }
    let id = GroupHom::identity(&catalog::cyclic(2));
    println!(
        "identity on Z/2: {}",
        kummer_trivialization(&id, None)
            .err()
            .map_or("lifted".into(), |e| e.to_string())
    );
    Ok(())
}
