use std::fmt;
use std::ops::Deref;

use super::{local_invariant, CsError, InvariantValue};
use crate::algebra::{gcd, lcm, ZnModule};
use crate::cochains::{cohomology, complex_for, pullback_into, Cochain};
use crate::groups::{FiniteGroup, GModule, GroupHom};

/// A simulated place: a finite model `G_v` of the local Galois group, its
/// embedding into the global group, an inertia subgroup, and a declared
/// invariant normalization `inv(h2_generator) = inv_normalization / n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceDatum {
    pub local_group: FiniteGroup,
    pub embedding: GroupHom,
    pub inertia: Vec<usize>,
    pub h2_generator: Cochain,
    pub inv_normalization: u32,
}

impl PlaceDatum {
    pub fn new(
        embedding: GroupHom,
        inertia: Vec<usize>,
        h2_generator: Cochain,
        inv_normalization: u32,
    ) -> Result<Self, CsError> {
        let local_group = embedding.dom().clone();
        if h2_generator.group() != &local_group || h2_generator.degree() != 2 {
            return Err(CsError::InvalidDatum(
                "generator must be a 2-cochain on the local group".into(),
            ));
        }
        if !h2_generator.coeffs().is_trivial() || !h2_generator.coeffs().module().is_ring_itself() {
            return Err(CsError::InvalidDatum(
                "generator must take values in Z/n with trivial action".into(),
            ));
        }
        if let Some(&x) = inertia.iter().find(|&&x| x >= local_group.order()) {
            return Err(CsError::InvalidDatum(format!(
                "inertia element {x} is out of range"
            )));
        }
        let mut inertia = inertia;
        inertia.sort_unstable();
        inertia.dedup();
        Ok(Self {
            local_group,
            embedding,
            inertia,
            h2_generator,
            inv_normalization,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.h2_generator.coeffs().modulus()
    }

    pub fn coeffs(&self) -> &GModule {
        self.h2_generator.coeffs()
    }

    fn checks(&self, index: usize, n: u32) -> Vec<Check> {
        let name = |s: &str| format!("place {index}: {s}");
        let mut out = Vec::new();
        out.push(Check::new(
            name("embedding"),
            self.embedding.is_injective(),
            "embedding into the global group is injective",
        ));
        let sub = self.local_group.is_subgroup(&self.inertia);
        let normal = sub && self.local_group.is_normal(&self.inertia);
        out.push(Check::new(
            name("inertia"),
            normal,
            if !sub {
                "inertia is not a subgroup"
            } else if !normal {
                "inertia is not normal"
            } else {
                "inertia is a normal subgroup"
            },
        ));
        out.push(self.generator_check(&name("generator"), n));
        let unit = self.inv_normalization < n && gcd(self.inv_normalization as u64, n as u64) == 1;
        out.push(Check::new(
            name("normalization"),
            unit,
            format!(
                "normalization {} is {}a unit mod {n}",
                self.inv_normalization,
                if unit { "" } else { "not " }
            ),
        ));
        out
    }

    fn generator_check(&self, name: &str, n: u32) -> Check {
        if self.modulus() != n {
            return Check::new(
                name,
                false,
                format!("generator has modulus {}, datum has {n}", self.modulus()),
            );
        }
        let cx = complex_for(self.coeffs());
        match cx.cocycle_witness(&self.h2_generator) {
            Ok(None) => {}
            Ok(Some(w)) => {
                return Check::new(
                    name,
                    false,
                    format!("generator is not a cocycle; df nonzero at {w:?}"),
                );
            }
            Err(e) => return Check::new(name, false, e.to_string()),
        }
        let h2 = match cx.cohomology(2) {
            Ok(h) => h,
            Err(e) => return Check::new(name, false, e.to_string()),
        };
        let coords = match h2.coordinates(&self.h2_generator) {
            Ok(c) => c,
            Err(e) => return Check::new(name, false, e.to_string()),
        };
        let order = coords
            .iter()
            .zip(h2.invariant_factors())
            .fold(1u64, |acc, (&w, &d)| {
                lcm(acc, d as u64 / gcd(w as u64, d as u64))
            });
        Check::new(
            name,
            order == n as u64,
            format!(
                "generator class has order {order} in H^2 = {:?}",
                h2.invariant_factors()
            ),
        )
    }
}

/// Global data: the group `pi_S`, the places, the gauge group `A`, and a
/// 3-cocycle `c` on `A` with `Z/n` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalDatum {
    pub modulus: u32,
    pub global_group: FiniteGroup,
    pub places: Vec<PlaceDatum>,
    pub gauge_group: FiniteGroup,
    pub three_cocycle: Cochain,
}

impl GlobalDatum {
    pub fn new(
        modulus: u32,
        global_group: FiniteGroup,
        places: Vec<PlaceDatum>,
        three_cocycle: Cochain,
    ) -> Result<Self, CsError> {
        let gauge_group = three_cocycle.group().clone();
        let c = three_cocycle.coeffs();
        if three_cocycle.degree() != 3
            || !c.is_trivial()
            || !c.module().is_ring_itself()
            || c.modulus() != modulus
        {
            return Err(CsError::InvalidDatum(format!(
                "c must be a 3-cochain with trivial Z/{modulus} coefficients"
            )));
        }
        for (i, p) in places.iter().enumerate() {
            if p.embedding.cod() != &global_group {
                return Err(CsError::InvalidDatum(format!(
                    "place {i} does not embed into the global group"
                )));
            }
        }
        Ok(Self {
            modulus,
            global_group,
            places,
            gauge_group,
            three_cocycle,
        })
    }

    /// Trivial `Z/n` over the global group.
    pub fn global_coeffs(&self) -> GModule {
        GModule::trivial(
            &self.global_group,
            ZnModule::cyclic(self.modulus).expect("validated modulus"),
        )
    }

    /// Restriction `r_v` of a global cochain to place `v`.
    pub fn restrict(&self, v: usize, f: &Cochain) -> Result<Cochain, CsError> {
        let p = &self.places[v];
        Ok(pullback_into(&p.embedding, f, p.coeffs())?)
    }

    /// Every check, pass or fail. Never errors.
    pub fn validate(&self) -> ValidationReport {
        let n = self.modulus;
        let mut checks = Vec::new();
        let witness = complex_for(self.three_cocycle.coeffs()).cocycle_witness(&self.three_cocycle);
        checks.push(match witness {
            Ok(None) => Check::new("three-cocycle", true, "c is a cocycle"),
            Ok(Some(w)) => Check::new("three-cocycle", false, format!("dc nonzero at {w:?}")),
            Err(e) => Check::new("three-cocycle", false, e.to_string()),
        });
        for (i, p) in self.places.iter().enumerate() {
            checks.extend(p.checks(i, n));
        }
        if checks.iter().all(|c| c.passed) {
            checks.push(self.reciprocity_check());
        }
        ValidationReport { checks }
    }

    fn reciprocity_check(&self) -> Check {
        const NAME: &str = "reciprocity";
        let h2 = match cohomology(&self.global_coeffs(), 2) {
            Ok(h) => h,
            Err(e) => return Check::new(NAME, false, e.to_string()),
        };
        for (j, z) in h2.generators().iter().enumerate() {
            let mut total = InvariantValue::zero(self.modulus);
            for v in 0..self.places.len() {
                let local = self
                    .restrict(v, z)
                    .and_then(|x| local_invariant(&x, &self.places[v]));
                match local {
                    Ok(val) => total = total + (val),
                    Err(e) => {
                        return Check::new(NAME, false, format!("generator {j} at place {v}: {e}"))
                            .with_witness(z.clone());
                    }
                }
            }
            if !total.is_zero() {
                return Check::new(
                    NAME,
                    false,
                    format!("local invariants of generator {j} sum to {total}"),
                )
                .with_witness(z.clone());
            }
        }
        Check::new(
            NAME,
            true,
            format!(
                "{} generator(s) of H^2 = {:?} have invariant sum 0",
                h2.generators().len(),
                h2.invariant_factors()
            ),
        )
    }
}

/// One validation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<Cochain>,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
            witness: None,
        }
    }

    fn with_witness(mut self, w: Cochain) -> Self {
        self.witness = Some(w);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<&str> = self.failures().map(|c| c.name.as_str()).collect();
        if failed.is_empty() {
            write!(f, "all {} checks passed", self.checks.len())
        } else {
            write!(f, "failed checks: {}", failed.join(", "))
        }
    }
}

/// A datum whose validation report passed.
#[derive(Clone, Debug)]
pub struct ValidatedDatum(GlobalDatum);

impl ValidatedDatum {
    pub fn new(datum: GlobalDatum) -> Result<Self, CsError> {
        let report = datum.validate();
        if report.passed() {
            Ok(Self(datum))
        } else {
            Err(CsError::Validation(Box::new(report)))
        }
    }

    pub fn into_inner(self) -> GlobalDatum {
        self.0
    }
}

impl Deref for ValidatedDatum {
    type Target = GlobalDatum;

    fn deref(&self) -> &GlobalDatum {
        &self.0
    }
}
