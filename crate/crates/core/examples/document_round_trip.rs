//! Load a document, resolve it into typed objects, and write it back in
//! canonical form.
//!
//! ```text
//! cargo run --example document_round_trip -- crates/core/fixtures/toy.dat
//! ```

use arith_cs::format::Document;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "fixtures/toy.dat".into());
    let doc = Document::load(path.as_ref())?;
    let resolved = doc.resolve()?;
    println!(
        "{} groups, {} homs, {} modules, {} cochains, datum: {}",
        resolved.groups.len(),
        resolved.homs.len(),
        resolved.modules.len(),
        resolved.cochains.len(),
        resolved.datum.is_some()
    );
    if let Some(d) = &resolved.datum {
        println!("datum validates: {}", d.validate().passed());
    }
    let text = doc.to_canonical_string();
    println!(
        "canonical form is a fixed point: {}",
        Document::parse(&text)?.to_canonical_string() == text
    );
    print!("{}", doc.to_canonical_string());
    Ok(())
}
