//! Write the shipped data documents into a directory (default `fixtures/`).
//!
//! ```text
//! cargo run --example build_fixtures -- crates/core/fixtures
//! ```

use std::path::PathBuf;

use arith_cs::cs::fixtures;
use arith_cs::format::Document;
use arith_cs::groups::{catalog, GroupHom};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir)?;
    for (name, doc) in documents()? {
        std::fs::write(dir.join(name), doc.to_canonical_string())?;
        println!("wrote {}", dir.join(name).display());
    }
    Ok(())
}

fn documents() -> Result<Vec<(&'static str, Document)>, Box<dyn std::error::Error>> {
    let mut z2 = Document::new();
    z2.intern_group("Z2", &catalog::cyclic(2));

    let mut rho = Document::new();
    rho.intern_group("Q8", &catalog::quaternion());
    rho.intern_group("S3", &catalog::symmetric3());
    rho.insert_hom("rho", &fixtures::toy_rho());

    let mut kummer = Document::new();
    kummer.intern_group("Z4", &catalog::cyclic(4));
    kummer.intern_group("Z2", &catalog::cyclic(2));
    kummer.insert_hom(
        "character",
        &GroupHom::new(&catalog::cyclic(4), &catalog::cyclic(2), vec![0, 1, 0, 1])?,
    );
    kummer.insert_hom("lift", &GroupHom::identity(&catalog::cyclic(4)));

    let mut alpha = Document::new();
    alpha.intern_group("Z3", &catalog::cyclic(3));
    alpha.insert_cochain("alpha", &fixtures::alpha(3), true);

    let named = |group: &str, d: &arith_cs::cs::GlobalDatum| {
        let mut doc = Document::new();
        doc.intern_group(group, &d.global_group);
        doc.insert_datum(d);
        doc
    };
    Ok(vec![
        ("z2.grp", z2),
        ("toy.dat", named("Q8", &fixtures::toy_datum())),
        ("rho.hom", rho),
        ("balanced.dat", named("Z3", &fixtures::balanced_datum())),
        ("broken.dat", named("Z3", &fixtures::broken_datum())),
        ("kummer.hom", kummer),
        ("alpha3.coc", alpha),
    ])
}
