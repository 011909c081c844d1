//! Command-line front end. Every subcommand prints canonical JSON on success
//! and a one-line JSON error on failure.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation failure, 3 computation
//! error, 4 parse or I/O error.
//!
//! Object references have the form `path` or `path#name`; a bare path selects
//! the only object of the requested kind in that document. Groups may also be
//! given by catalog name (`Z2`, `Z3`, `Z4`, `Z2xZ2`, `Z6`, `S3`, `D4`, `Q8`).

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::ZnModule;
use crate::cochains::{classify, cohomology, Classification, Cochain};
use crate::cs::{
    cs_invariant, cs_section, kummer_trivialization, l_class, torsor_difference,
    unramified_basepoint, CsError, GlobalDatum, SolveOrder, ValidatedDatum,
};
use crate::format::{canonical_json, Document, FormatError, Resolved};
use crate::groups::{catalog, FiniteGroup, GModule, GroupHom};
use crate::ops::{bockstein, conjugate, cup, homotopy};
use crate::verify;

#[derive(Debug, Parser)]
#[command(
    name = "arith-cs",
    version,
    about = "Finite group cohomology and arithmetic Chern-Simons invariants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariant factors and generator cocycles of H^i(G, M).
    Cohomology {
        /// Group reference or catalog name; coefficients are trivial Z/modulus.
        #[arg(long, conflicts_with = "module", required_unless_present = "module")]
        group: Option<String>,
        #[arg(long, requires = "group")]
        modulus: Option<u32>,
        /// Module reference, instead of --group/--modulus.
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        degree: usize,
    },
    /// Cocycle test, coboundary preimage, or class coordinates.
    Classify {
        #[arg(long)]
        cochain: String,
    },
    /// Cup product with ring multiplication on Z/n.
    Cup {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Bockstein of Z/n -> Z/n^2 -> Z/n.
    Bockstein {
        #[arg(long)]
        cochain: String,
    },
    /// f^a = a^{-1} f(a - a^{-1}).
    Conjugate {
        #[arg(long)]
        cochain: String,
        #[arg(long)]
        element: usize,
    },
    /// Shuffle-path homotopy h_{a_1..a_k, f}.
    Homotopy {
        #[arg(long)]
        cochain: String,
        /// Comma-separated group elements a_1,..,a_k.
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<usize>,
    },
    /// Gluing invariant of rho on a global datum.
    Invariant {
        #[arg(long)]
        datum: String,
        #[arg(long)]
        rho: String,
        /// Shuffle the global solver with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Section CS_c(rho) and its L-class relative to the unramified basepoint.
    Section {
        #[arg(long)]
        datum: String,
        #[arg(long)]
        rho: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Kummer trivialization of f^*(alpha ∪ δalpha) for f: G -> Z/p.
    Kummer {
        #[arg(long)]
        character: String,
        /// Lift G -> Z/p^2; searched for when absent.
        #[arg(long)]
        lift: Option<String>,
    },
    /// Validation report for a global datum.
    Validate {
        #[arg(long)]
        datum: String,
    },
    /// Randomized property suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub category: &'static str,
    pub message: String,
}

impl CliError {
    fn validation(message: impl ToString) -> Self {
        Self {
            code: 2,
            category: "validation",
            message: message.to_string(),
        }
    }

    fn computation(message: impl ToString) -> Self {
        Self {
            code: 3,
            category: "computation",
            message: message.to_string(),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Validation { .. } => Self::validation(e),
            FormatError::Parse { .. } | FormatError::Io { .. } => Self {
                code: 4,
                category: "parse",
                message: e.to_string(),
            },
        }
    }
}

impl From<CsError> for CliError {
    fn from(e: CsError) -> Self {
        match e {
            CsError::Validation(_) | CsError::InvalidDatum(_) | CsError::InvalidLift { .. } => {
                Self::validation(e)
            }
            _ => Self::computation(e),
        }
    }
}

macro_rules! computation_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                Self::computation(e)
            }
        }
    )*};
}
computation_errors!(
    crate::ops::OpsError,
    crate::cochains::CochainError,
    crate::groups::GroupError
);

fn split_ref(reference: &str) -> (&str, Option<&str>) {
    match reference.rsplit_once('#') {
        Some((path, name)) if !name.is_empty() => (path, Some(name)),
        _ => (reference, None),
    }
}

fn load(path: &str) -> Result<Resolved, CliError> {
    Ok(Document::load(Path::new(path))?.resolve()?)
}

fn load_group(reference: &str) -> Result<FiniteGroup, CliError> {
    let (path, name) = split_ref(reference);
    if !Path::new(path).exists() {
        if let Some(g) = catalog::by_name(reference) {
            return Ok(g);
        }
    }
    let r = load(path)?;
    Ok(Resolved::pick(&r.groups, "group", name)?.clone())
}

fn load_cochain(reference: &str) -> Result<Cochain, CliError> {
    let (path, name) = split_ref(reference);
    let r = load(path)?;
    Ok(Resolved::pick(&r.cochains, "cochain", name)?.clone())
}

fn load_hom(reference: &str) -> Result<GroupHom, CliError> {
    let (path, name) = split_ref(reference);
    let r = load(path)?;
    Ok(Resolved::pick(&r.homs, "hom", name)?.clone())
}

fn load_module(reference: &str) -> Result<GModule, CliError> {
    let (path, name) = split_ref(reference);
    let r = load(path)?;
    Ok(Resolved::pick(&r.modules, "module", name)?.clone())
}

fn load_datum(reference: &str) -> Result<GlobalDatum, CliError> {
    let r = load(split_ref(reference).0)?;
    r.datum
        .ok_or_else(|| CliError::validation(format!("{reference} holds no datum")))
}

fn order_from(seed: Option<u64>) -> SolveOrder {
    seed.map_or(SolveOrder::Canonical, SolveOrder::Seeded)
}

fn cochain_output(name: &str, f: &Cochain) -> String {
    Document::from_cochain(name, f).to_canonical_string()
}

/// Run one parsed command, returning the text for stdout.
pub fn run_command(command: &Command) -> Result<(String, i32), CliError> {
    let text = match command {
        Command::Cohomology {
            group,
            modulus,
            module,
            degree,
        } => {
            let coeffs = match (group, module) {
                (Some(g), _) => {
                    let g = load_group(g)?;
                    let n = modulus.ok_or_else(|| {
                        CliError::validation("--modulus is required with --group")
                    })?;
                    GModule::trivial(&g, ZnModule::cyclic(n).map_err(CliError::validation)?)
                }
                (None, Some(m)) => load_module(m)?,
                (None, None) => {
                    return Err(CliError::validation("--group or --module is required"))
                }
            };
            let h = cohomology(&coeffs, *degree)?;
            let generators: Vec<&[u32]> = h.generators().iter().map(|g| g.values()).collect();
            canonical_json(&json!({
                "degree": degree,
                "invariant_factors": h.invariant_factors(),
                "order": h.order(),
                "generators": generators,
            }))
        }
        Command::Classify { cochain } => {
            let f = load_cochain(cochain)?;
            let v = match classify(&f)? {
                Classification::NonCocycle { witness } => {
                    json!({"classification": "non_cocycle", "witness": witness})
                }
                Classification::Coboundary(beta) => {
                    json!({"classification": "coboundary", "preimage": beta.values()})
                }
                Classification::NontrivialClass(coords) => {
                    let h = cohomology(f.coeffs(), f.degree())?;
                    json!({
                        "classification": "nontrivial",
                        "coordinates": coords,
                        "invariant_factors": h.invariant_factors(),
                    })
                }
            };
            canonical_json(&v)
        }
        Command::Cup { left, right } => {
            cochain_output("cup", &cup(&load_cochain(left)?, &load_cochain(right)?)?)
        }
        Command::Bockstein { cochain } => {
            cochain_output("bockstein", &bockstein(&load_cochain(cochain)?)?)
        }
        Command::Conjugate { cochain, element } => {
            cochain_output("conjugate", &conjugate(&load_cochain(cochain)?, *element)?)
        }
        Command::Homotopy { cochain, elements } => {
            cochain_output("homotopy", &homotopy(elements, &load_cochain(cochain)?)?)
        }
        Command::Invariant { datum, rho, seed } => {
            let d = ValidatedDatum::new(load_datum(datum)?)?;
            let v = cs_invariant(&d, &load_hom(rho)?, order_from(*seed))?;
            canonical_json(
                &json!({"invariant": v.to_string(), "numerator": v.numerator, "modulus": v.modulus}),
            )
        }
        Command::Section { datum, rho, seed } => {
            let d = ValidatedDatum::new(load_datum(datum)?)?;
            let rho = load_hom(rho)?;
            let s = cs_section(&d, &rho, order_from(*seed))?;
            let base = unramified_basepoint(&d, &rho)?;
            let l = l_class(&d, &torsor_difference(&d, &base, &s)?)?;
            let components: Vec<&[u32]> = s.components.iter().map(|c| c.values()).collect();
            canonical_json(&json!({"components": components, "l_class": l.to_string()}))
        }
        Command::Kummer { character, lift } => {
            let f = load_hom(character)?;
            let lift = lift.as_deref().map(load_hom).transpose()?;
            let k = kummer_trivialization(&f, lift.as_ref())?;
            let mut doc = Document::new();
            doc.insert_hom("lift", &k.lift);
            doc.insert_cochain("b", &k.b, false);
            doc.insert_cochain("t", &k.t, false);
            doc.to_canonical_string()
        }
        Command::Validate { datum } => {
            let report = load_datum(datum)?.validate();
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    let mut v = json!({"name": c.name, "passed": c.passed, "detail": c.detail});
                    if let Some(w) = &c.witness {
                        v["witness"] = json!(w.values());
                    }
                    v
                })
                .collect();
            let text = canonical_json(&json!({"passed": report.passed(), "checks": checks}));
            return Ok((text, if report.passed() { 0 } else { 2 }));
        }
        Command::Verify { seed } => {
            let outcomes = verify::run_suite(*seed);
            let ok = outcomes.iter().all(|o| o.passed());
            let mut text = String::new();
            for o in &outcomes {
                text.push_str(&o.to_string());
                text.push('\n');
            }
            return Ok((text, if ok { 0 } else { 2 }));
        }
    };
    Ok((text, 0))
}

/// Parse `args` (including the program name) and run, writing to the given
/// streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run_command(&cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let line = json!({"error": {"category": e.category, "message": e.message}});
            let _ = writeln!(err, "{line}");
            e.code
        }
    }
}
