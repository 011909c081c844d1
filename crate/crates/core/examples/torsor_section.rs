//! The torsor of local trivializations for the toy datum: the section
//! `CS_c(rho)`, its class against the unramified basepoint, and the action
//! of the gauge group.

use arith_cs::cs::{
    automorphism_shift, cs_section, fixtures, l_class, torsor_build, torsor_difference, torsor_map,
    unramified_basepoint, SolveOrder, ValidatedDatum,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let datum = ValidatedDatum::new(fixtures::toy_datum())?;
    let rho = fixtures::toy_rho();
    let locals = arith_cs::cs::local_homs(&datum, &rho)?;

    let torsor = torsor_build(&datum, &locals, SolveOrder::Canonical)?;
    let section = cs_section(&datum, &rho, SolveOrder::Canonical)?;
    let base = unramified_basepoint(&datum, &rho)?;
    println!("section in torsor: {}", torsor.contains(&datum, &section)?);
    println!(
        "L-class of section: {}",
        l_class(&datum, &torsor_difference(&datum, &base, &section)?)?
    );

    for a in datum.gauge_group.elements() {
        let (moved, target) = torsor_map(&datum, &[a], &locals, &section)?;
        let moved_base = unramified_basepoint(&datum, &arith_cs::groups::conjugate_hom(&rho, a)?)?;
        let class = l_class(&datum, &torsor_difference(&datum, &moved_base, &moved)?)?;
        println!(
            "a = {a}: image lies over {:?}, class {class}",
            target[0].map()
        );
    }
    for a in datum.gauge_group.elements() {
        if let Ok(shift) = automorphism_shift(&datum, &rho, a) {
            println!("automorphism {a} shifts the class by {shift}");
        }
    }
    Ok(())
}
