//! Conjugation action `f^a(g) = a^{-1} f(a g a^{-1})` on cochains of `S3`
//! with sign-twisted coefficients, and its compatibility with `d`.

use arith_cs::cochains::{differential, Cochain};
use arith_cs::cs::fixtures;
use arith_cs::groups::GModule;
use arith_cs::ops::conjugate;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = GModule::sign(&fixtures::s3_sign(), 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = Cochain::random(&m, 1, &mut rng);
    println!("f       = {:?}", f.values());
    for a in m.group().elements() {
        let fa = conjugate(&f, a)?;
        let commutes = differential(&fa)? == conjugate(&differential(&f)?, a)?;
        println!("f^{a}     = {:?}  d commutes: {commutes}", fa.values());
    }
    Ok(())
}
