//! Shuffle paths and the homotopy `h_{a,f}` with
//! `h_{a,df} + d h_{a,f} = f^a - f`.

use arith_cs::algebra::ZnModule;
use arith_cs::cochains::{differential, Cochain};
use arith_cs::groups::{catalog, GModule};
use arith_cs::ops::{conjugate, homotopy, ShufflePath};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = ShufflePath::parse("HHVHVHHVV").ok_or("bad path word")?;
    println!(
        "{path}: {} squares above, sign {}",
        path.squares_above(),
        path.sign()
    );
    for p in ShufflePath::all(2, 2) {
        println!("  {p} sign {:+}", p.sign());
    }

    let q8 = catalog::quaternion();
    let m = GModule::trivial(&q8, ZnModule::cyclic(4)?);
    let f = Cochain::random(&m, 2, &mut ChaCha8Rng::seed_from_u64(1));
    for a in q8.elements() {
        let lhs = homotopy(&[a], &differential(&f)?)?.add(&differential(&homotopy(&[a], &f)?)?)?;
        let rhs = conjugate(&f, a)?.sub(&f)?;
        println!("a = {a}: identity holds: {}", lhs == rhs);
    }
    Ok(())
}
