//! Randomized property suite over the group corpus, shared by the `verify`
//! subcommand and the acceptance harness.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::ZnModule;
use crate::cochains::{
    classify, cohomology, differential, differential_with, Classification, Cochain, Limits,
};
use crate::cs::{
    cs_invariant, cs_section, fixtures, kummer_trivialization, l_class, torsor_difference,
    unramified_basepoint, SolveOrder, ValidatedDatum,
};
use crate::groups::{all_homs, catalog, conjugate_hom, FiniteGroup, GModule, GroupHom};
use crate::ops::{bockstein, conjugate, cup, homotopy};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl PropertyOutcome {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(context());
            }
        }
    }

    fn error(&mut self, e: impl fmt::Display) {
        self.record(false, || e.to_string());
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.name, self.cases)?;
        if let Some(w) = &self.first_failure {
            write!(f, ", {} failed; first: {w}", self.failures)?;
        }
        write!(f, ")")
    }
}

/// Coefficient modules used for a group: trivial `Z/n`, plus one twisted
/// module (a sign twist when `G` has a character of order 2, otherwise
/// `Z/7` with a character of order 3 acting through `2`).
pub fn test_modules(g: &FiniteGroup, n: u32) -> Vec<GModule> {
    let mut out = vec![GModule::trivial(
        g,
        ZnModule::cyclic(n).expect("small modulus"),
    )];
    if let Some(chi) = all_homs(g, &catalog::cyclic(2))
        .into_iter()
        .find(|h| !h.is_trivial())
    {
        out.push(GModule::sign(&chi, 3).expect("sign twist"));
    } else if let Some(chi) = all_homs(g, &catalog::cyclic(3))
        .into_iter()
        .find(|h| !h.is_trivial())
    {
        let scalars: Vec<u32> = chi.map().iter().map(|&x| [1, 2, 4][x]).collect();
        out.push(GModule::scalar(g, 7, &scalars).expect("order-3 twist"));
    }
    out
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// `d∘d = 0` on `samples` random cochains per group, module, and degree.
pub fn d_squared(
    groups: &[(&str, FiniteGroup)],
    degrees: std::ops::RangeInclusive<usize>,
    samples: usize,
    seed: u64,
) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("d o d = 0");
    let limits = Limits::with_max_degree(*degrees.end() + 2);
    let mut rng = rng_for(seed, 1);
    for (name, g) in groups {
        for m in test_modules(g, 4) {
            for deg in degrees.clone() {
                for _ in 0..samples {
                    let f = Cochain::random(&m, deg, &mut rng);
                    match differential_with(&f, &limits)
                        .and_then(|df| differential_with(&df, &limits))
                    {
                        Ok(ddf) => out.record(ddf.is_zero(), || format!("{name}, degree {deg}")),
                        Err(e) => out.error(e),
                    }
                }
            }
        }
    }
    out
}

/// `d(x ∪ y) = dx ∪ y + (-1)^p x ∪ dy`.
pub fn leibniz(groups: &[(&str, FiniteGroup)], samples: usize, seed: u64) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("Leibniz rule");
    let mut rng = rng_for(seed, 2);
    for (name, g) in groups {
        for m in test_modules(g, 4) {
            for _ in 0..samples {
                let p = rng.random_range(0..=2usize);
                let q = rng.random_range(0..=(2 - p.min(2)));
                let x = Cochain::random(&m, p, &mut rng);
                let y = Cochain::random(&m, q, &mut rng);
                let check = || -> Result<bool, Box<dyn std::error::Error>> {
                    let lhs = differential(&cup(&x, &y)?)?;
                    let a = cup(&differential(&x)?, &y)?;
                    let b = cup(&x, &differential(&y)?)?;
                    Ok(lhs == a.combine(if p % 2 == 0 { 1 } else { -1 }, &b)?)
                };
                match check() {
                    Ok(ok) => out.record(ok, || format!("{name}, degrees ({p}, {q})")),
                    Err(e) => out.error(e),
                }
            }
        }
    }
    out
}

/// `(df)^a = d(f^a)`.
pub fn conjugation_commutes(
    groups: &[(&str, FiniteGroup)],
    samples: usize,
    seed: u64,
) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("(df)^a = d(f^a)");
    let mut rng = rng_for(seed, 3);
    for (name, g) in groups {
        for m in test_modules(g, 4) {
            for _ in 0..samples {
                let deg = rng.random_range(0..=3usize);
                let a = rng.random_range(0..g.order());
                let f = Cochain::random(&m, deg, &mut rng);
                let check = || -> Result<bool, Box<dyn std::error::Error>> {
                    Ok(conjugate(&differential(&f)?, a)? == differential(&conjugate(&f, a)?)?)
                };
                match check() {
                    Ok(ok) => out.record(ok, || format!("{name}, degree {deg}, a = {a}")),
                    Err(e) => out.error(e),
                }
            }
        }
    }
    out
}

/// `h_{a,df} + d h_{a,f} = f^a - f`, `samples` pairs per group and degree 1..=3.
pub fn homotopy_identity(
    groups: &[(&str, FiniteGroup)],
    samples: usize,
    seed: u64,
) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("h_{a,df} + d h_{a,f} = f^a - f");
    let mut rng = rng_for(seed, 4);
    for (name, g) in groups {
        let modules = test_modules(g, 4);
        for deg in 1..=3 {
            for s in 0..samples {
                let m = &modules[s % modules.len()];
                let a = rng.random_range(0..g.order());
                let f = Cochain::random(m, deg, &mut rng);
                let check = || -> Result<bool, Box<dyn std::error::Error>> {
                    let lhs = homotopy(&[a], &differential(&f)?)?
                        .add(&differential(&homotopy(&[a], &f)?)?)?;
                    Ok(lhs == conjugate(&f, a)?.sub(&f)?)
                };
                match check() {
                    Ok(ok) => out.record(ok, || format!("{name}, degree {deg}, a = {a}")),
                    Err(e) => out.error(e),
                }
            }
        }
    }
    out
}

/// Random cocycle of degree `i`: a coboundary plus a random class.
pub fn random_cocycle<R: Rng + ?Sized>(
    m: &GModule,
    i: usize,
    rng: &mut R,
) -> Result<Cochain, Box<dyn std::error::Error>> {
    let beta = Cochain::random(m, i - 1, rng);
    let mut f = differential(&beta)?;
    let h = cohomology(m, i)?;
    for g in h.generators() {
        f = f.combine(rng.random_range(0..m.modulus() as i64), g)?;
    }
    Ok(f)
}

/// For 3-cocycles `f` and all pairs `(a, b)`:
/// `h_{b,f} - h_{ab,f} + (h_{a,f})^b + d h_{a,b,f} = 0`, and
/// `h_{ab,f} - (h_{a,f})^b - h_{b,f}` classifies as a coboundary.
pub fn two_element_relations(
    groups: &[(&str, FiniteGroup)],
    cocycles: usize,
    seed: u64,
) -> (PropertyOutcome, PropertyOutcome) {
    let mut exact = PropertyOutcome::new("h_{b,f} - h_{ab,f} + h_{a,f}^b = d(-h_{a,b,f})");
    let mut classes = PropertyOutcome::new("h_{ab,f} - h_{a,f}^b - h_{b,f} is a coboundary");
    let mut rng = rng_for(seed, 5);
    for (name, g) in groups {
        let modules = test_modules(g, 4);
        for s in 0..cocycles {
            let m = &modules[s % modules.len()];
            let f = match random_cocycle(m, 3, &mut rng) {
                Ok(f) => f,
                Err(e) => {
                    exact.error(e);
                    continue;
                }
            };
            for a in g.elements() {
                for b in g.elements() {
                    let check = || -> Result<(bool, bool), Box<dyn std::error::Error>> {
                        let ha = homotopy(&[a], &f)?;
                        let hb = homotopy(&[b], &f)?;
                        let hab = homotopy(&[g.mul(a, b)], &f)?;
                        let hab2 = homotopy(&[a, b], &f)?;
                        let ha_b = conjugate(&ha, b)?;
                        let lhs = hb.sub(&hab)?.add(&ha_b)?.add(&differential(&hab2)?)?;
                        let rel = hab.sub(&ha_b)?.sub(&hb)?;
                        Ok((
                            lhs.is_zero(),
                            matches!(classify(&rel)?, Classification::Coboundary(_)),
                        ))
                    };
                    match check() {
                        Ok((e, c)) => {
                            exact.record(e, || format!("{name}, (a, b) = ({a}, {b})"));
                            classes.record(c, || format!("{name}, (a, b) = ({a}, {b})"));
                        }
                        Err(e) => exact.error(e),
                    }
                }
            }
        }
    }
    (exact, classes)
}

/// `H^3(Z/n, Z/n) = Z/n`, generated by `alpha ∪ δalpha`.
pub fn carry_class_generates(moduli: &[u32]) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("H^3(Z/n, Z/n) = Z/n generated by alpha ∪ δalpha");
    for &n in moduli {
        let c = fixtures::carry_class(n);
        let check = || -> Result<bool, Box<dyn std::error::Error>> {
            let h3 = cohomology(c.coeffs(), 3)?;
            if h3.invariant_factors() != [n] {
                return Ok(false);
            }
            let y = h3.coordinates(&c)?;
            Ok(crate::algebra::gcd(y[0] as u64, n as u64) == 1)
        };
        match check() {
            Ok(ok) => out.record(ok, || format!("n = {n}")),
            Err(e) => out.error(e),
        }
    }
    out
}

/// `d(-alpha ∪ b) = f^*(alpha ∪ δalpha)` for the reduction `Z/4 -> Z/2`.
pub fn kummer_sign_coherence() -> PropertyOutcome {
    let mut out = PropertyOutcome::new("d(-alpha ∪ b) = f^*(alpha ∪ δalpha)");
    let check = || -> Result<bool, Box<dyn std::error::Error>> {
        let f = GroupHom::new(&catalog::cyclic(4), &catalog::cyclic(2), vec![0, 1, 0, 1])?;
        let k = kummer_trivialization(&f, Some(&GroupHom::identity(&catalog::cyclic(4))))?;
        let target = crate::cochains::pullback(&f, &fixtures::carry_class(2))?;
        let alpha = crate::cochains::pullback(&f, &fixtures::alpha(2))?;
        let db_ok =
            differential(&k.b)? == crate::cochains::pullback(&f, &bockstein(&fixtures::alpha(2))?)?;
        Ok(db_ok
            && differential(&cup(&alpha, &k.b)?.neg())? == target
            && differential(&k.t)? == target)
    };
    match check() {
        Ok(ok) => out.record(ok, || "Z/4 -> Z/2".into()),
        Err(e) => out.error(e),
    }
    out
}

/// On the toy datum: invariance under conjugation and re-solving, and
/// agreement of the gluing value with the section's L-class.
pub fn cs_well_defined(resolves: usize, seed: u64) -> PropertyOutcome {
    let mut out = PropertyOutcome::new("CS invariant well defined on the toy datum");
    let run = |out: &mut PropertyOutcome| -> Result<(), Box<dyn std::error::Error>> {
        let d = ValidatedDatum::new(fixtures::toy_datum())?;
        let rho = fixtures::toy_rho();
        let base = cs_invariant(&d, &rho, SolveOrder::Canonical)?;
        for a in d.gauge_group.elements() {
            let v = cs_invariant(&d, &conjugate_hom(&rho, a)?, SolveOrder::Canonical)?;
            out.record(v == base, || format!("conjugation by {a}: {v} != {base}"));
        }
        let basepoint = unramified_basepoint(&d, &rho)?;
        for i in 0..resolves as u64 {
            let s = seed.wrapping_add(i);
            let v = cs_invariant(&d, &rho, SolveOrder::Seeded(s))?;
            out.record(v == base, || format!("re-solve seed {s}: {v} != {base}"));
            let section = cs_section(&d, &rho, SolveOrder::Seeded(s))?;
            let l = l_class(&d, &torsor_difference(&d, &basepoint, &section)?)?;
            out.record(l == base, || {
                format!("section seed {s}: L-class {l} != {base}")
            });
        }
        Ok(())
    };
    if let Err(e) = run(&mut out) {
        out.error(e);
    }
    out
}

/// The broken fixture fails reciprocity with a witness; the balanced one passes.
pub fn reciprocity_gate() -> PropertyOutcome {
    let mut out = PropertyOutcome::new("reciprocity gate");
    let balanced = fixtures::balanced_datum().validate();
    out.record(balanced.passed(), || format!("balanced: {balanced}"));
    let broken = fixtures::broken_datum().validate();
    let witnessed = broken
        .failures()
        .any(|c| c.name == "reciprocity" && c.witness.is_some());
    out.record(!broken.passed() && witnessed, || {
        format!("broken: {broken}")
    });
    out
}

/// Full suite at CLI scale.
pub fn run_suite(seed: u64) -> Vec<PropertyOutcome> {
    let corpus = catalog::corpus();
    let small: Vec<_> = corpus
        .iter()
        .filter(|(_, g)| g.order() <= 6)
        .cloned()
        .collect();
    let (exact, classes) = two_element_relations(&small, 2, seed);
    vec![
        d_squared(&corpus, 0..=2, 5, seed),
        leibniz(&corpus, 5, seed),
        conjugation_commutes(&corpus, 5, seed),
        homotopy_identity(&corpus, 5, seed),
        exact,
        classes,
        carry_class_generates(&[2, 3, 4]),
        kummer_sign_coherence(),
        cs_well_defined(3, seed),
        reciprocity_gate(),
    ]
}
