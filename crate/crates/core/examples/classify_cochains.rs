//! Classify a few degree-2 cochains on `Z/4` with `Z/2` coefficients:
//! a non-cocycle, a coboundary, and the carry cocycle.

use arith_cs::algebra::ZnModule;
use arith_cs::cochains::{classify, differential, Classification, Cochain};
use arith_cs::cs::fixtures;
use arith_cs::groups::{catalog, GModule};

fn describe(name: &str, f: &Cochain) -> Result<(), Box<dyn std::error::Error>> {
    match classify(f)? {
        Classification::NonCocycle { witness } => {
            println!("{name}: not a cocycle, df{witness:?} != 0")
        }
        Classification::Coboundary(beta) => println!("{name}: coboundary of {:?}", beta.values()),
        Classification::NontrivialClass(coords) => {
            println!("{name}: nontrivial class, coordinates {coords:?}")
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z4 = catalog::cyclic(4);
    let m = GModule::trivial(&z4, ZnModule::cyclic(2)?);
    let delta = Cochain::from_fn(&m, 2, |t| vec![i64::from(t == [1, 1])])?;
    describe("delta_(1,1)", &delta)?;
    let beta = Cochain::from_fn(&m, 1, |t| vec![i64::from(t[0] == 1)])?;
    describe("d(indicator of 1)", &differential(&beta)?)?;
    describe("carry", &fixtures::carry_cocycle(4, 2))?;
    Ok(())
}
