//! Gluing invariant on the shipped toy datum, for one homomorphism
//! `Q8 -> S3` per conjugation orbit.

use std::collections::BTreeSet;

use arith_cs::cs::{cs_invariant, fixtures, SolveOrder, ValidatedDatum};
use arith_cs::groups::{all_homs, conjugate_hom};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let datum = ValidatedDatum::new(fixtures::toy_datum())?;
    let mut seen = BTreeSet::new();
    for rho in all_homs(&datum.global_group, &datum.gauge_group) {
        if seen.contains(rho.map()) {
            continue;
        }
        let orbit: BTreeSet<Vec<usize>> = datum
            .gauge_group
            .elements()
            .map(|a| conjugate_hom(&rho, a).map(|r| r.map().to_vec()))
            .collect::<Result<_, _>>()?;
        let value = match cs_invariant(&datum, &rho, SolveOrder::Canonical) {
            Ok(v) => v.to_string(),
            Err(e) => format!("undefined: {e}"),
        };
        println!(
            "rho = {:?}  orbit size {}  CS = {value}",
            rho.map(),
            orbit.len()
        );
        seen.extend(orbit);
    }
    Ok(())
}
