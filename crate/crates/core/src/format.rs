//! On-disk JSON documents holding named groups, homomorphisms, modules,
//! cochains and at most one global datum.
//!
//! Serialization is canonical: keys are sorted, lists keep their order, and
//! the text ends with a newline, so `parse` followed by `to_canonical_string`
//! reproduces any canonical document byte for byte. Cochain values are listed
//! in lexicographic order of argument tuples, first argument most
//! significant, using the element order of the group's table; for modules of
//! rank `r` each tuple contributes `r` consecutive entries.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::ZnModule;
use crate::cochains::{complex_for, Cochain};
use crate::cs::{GlobalDatum, PlaceDatum};
use crate::groups::{catalog, FiniteGroup, GModule, GroupHom};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{object}: {message}")]
    Validation { object: String, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl FormatError {
    fn invalid(object: impl Into<String>, message: impl ToString) -> Self {
        Self::Validation {
            object: object.into(),
            message: message.to_string(),
        }
    }
}

/// A group by full multiplication table, or by catalog name (`Z4`, `S3`, `Q8`, ...).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomEntry {
    pub dom: String,
    pub cod: String,
    pub map: Vec<usize>,
}

/// `(Z/n)`-module `sum_k Z/orders[k]`; `action[g][k][i]` is the coefficient of
/// component `i` in component `k` of `g.x`. A missing action means trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleEntry {
    pub group: String,
    pub modulus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<u32>>>>,
}

/// A cochain with coefficients in a named module, or in trivial `Z/modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u32>,
    pub degree: usize,
    pub values: Vec<u32>,
    /// When true, the cocycle condition is checked at load time.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub cocycle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceEntry {
    pub embedding: String,
    pub inertia: Vec<usize>,
    pub generator: String,
    pub normalization: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumEntry {
    pub modulus: u32,
    pub global_group: String,
    pub gauge_group: String,
    pub three_cocycle: String,
    pub places: Vec<PlaceEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub groups: BTreeMap<String, GroupEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub homs: BTreeMap<String, HomEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cochains: BTreeMap<String, CochainEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub datum: Option<DatumEntry>,
}

impl Default for Document {
    fn default() -> Self {
        Self {
            format_version: FORMAT_VERSION,
            groups: BTreeMap::new(),
            homs: BTreeMap::new(),
            modules: BTreeMap::new(),
            cochains: BTreeMap::new(),
            datum: None,
        }
    }
}

/// Canonical JSON text for any serializable value: sorted keys, two-space
/// indentation, arrays of scalars on one line, trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut s = String::new();
    write_value(&v, 0, &mut s);
    s.push('\n');
    s
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize, out: &mut String| out.extend(std::iter::repeat_n(' ', n));
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(indent + 2, out);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(indent, out);
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_scalar) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(indent + 2, out);
                write_value(x, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(indent, out);
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn table_spec(g: &FiniteGroup) -> GroupEntry {
    GroupEntry {
        catalog: None,
        order: Some(g.order()),
        table: Some(g.table()),
    }
}

fn merge_map<T: PartialEq>(
    kind: &str,
    into: &mut BTreeMap<String, T>,
    from: BTreeMap<String, T>,
) -> Result<(), FormatError> {
    for (k, v) in from {
        match into.get(&k) {
            Some(existing) if *existing != v => {
                return Err(FormatError::invalid(
                    format!("{kind} {k}"),
                    "conflicting definitions while merging",
                ));
            }
            Some(_) => {}
            None => {
                into.insert(k, v);
            }
        }
    }
    Ok(())
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| FormatError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if doc.format_version != FORMAT_VERSION {
            return Err(FormatError::Parse {
                line: 1,
                column: 1,
                message: format!("unsupported format_version {}", doc.format_version),
            });
        }
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self, FormatError> {
        let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn to_canonical_string(&self) -> String {
        canonical_json(self)
    }

    /// Union of two documents; equal definitions under the same name are
    /// allowed, differing ones are an error.
    pub fn merge(&mut self, other: Document) -> Result<(), FormatError> {
        merge_map("group", &mut self.groups, other.groups)?;
        merge_map("hom", &mut self.homs, other.homs)?;
        merge_map("module", &mut self.modules, other.modules)?;
        merge_map("cochain", &mut self.cochains, other.cochains)?;
        match (&self.datum, other.datum) {
            (Some(a), Some(b)) if *a != b => {
                return Err(FormatError::invalid("datum", "two different data"))
            }
            (None, Some(b)) => self.datum = Some(b),
            _ => {}
        }
        Ok(())
    }

    /// Name of a group with this table, inserting it under `preferred` (or a
    /// fresh variant of it) when absent.
    pub fn intern_group(&mut self, preferred: &str, g: &FiniteGroup) -> String {
        let entry = table_spec(g);
        if let Some((name, _)) = self.groups.iter().find(|(_, s)| **s == entry) {
            return name.clone();
        }
        let name = fresh(&self.groups, preferred);
        self.groups.insert(name.clone(), entry);
        name
    }

    pub fn insert_hom(&mut self, name: &str, hom: &GroupHom) -> String {
        let dom = self.intern_group("dom", hom.dom());
        let cod = self.intern_group("cod", hom.cod());
        let name = fresh(&self.homs, name);
        self.homs.insert(
            name.clone(),
            HomEntry {
                dom,
                cod,
                map: hom.map().to_vec(),
            },
        );
        name
    }

    fn intern_module(&mut self, preferred: &str, group: &str, m: &GModule) -> Option<String> {
        if m.is_trivial() && m.module().is_ring_itself() {
            return None;
        }
        let r = m.rank();
        let action = (!m.is_trivial()).then(|| {
            m.group()
                .elements()
                .map(|g| m.matrix(g).chunks(r).map(|row| row.to_vec()).collect())
                .collect()
        });
        let entry = ModuleEntry {
            group: group.to_string(),
            modulus: m.modulus(),
            orders: (!m.module().is_ring_itself()).then(|| m.orders().to_vec()),
            action,
        };
        if let Some((name, _)) = self.modules.iter().find(|(_, s)| **s == entry) {
            return Some(name.clone());
        }
        let name = fresh(&self.modules, preferred);
        self.modules.insert(name.clone(), entry);
        Some(name)
    }

    pub fn insert_cochain(&mut self, name: &str, f: &Cochain, cocycle: bool) -> String {
        let group = self.intern_group("G", f.group());
        let module = self.intern_module(&format!("{name}.module"), &group, f.coeffs());
        let name = fresh(&self.cochains, name);
        self.cochains.insert(
            name.clone(),
            CochainEntry {
                modulus: module.is_none().then(|| f.coeffs().modulus()),
                group,
                module,
                degree: f.degree(),
                values: f.values().to_vec(),
                cocycle,
            },
        );
        name
    }

    pub fn insert_datum(&mut self, d: &GlobalDatum) {
        let global_group = self.intern_group("global", &d.global_group);
        let gauge_group = self.intern_group("gauge", &d.gauge_group);
        let three_cocycle = self.insert_cochain("c", &d.three_cocycle, true);
        let places = d
            .places
            .iter()
            .enumerate()
            .map(|(v, p)| {
                self.intern_group(&format!("place{v}"), &p.local_group);
                PlaceEntry {
                    embedding: self.insert_hom(&format!("place{v}.embedding"), &p.embedding),
                    inertia: p.inertia.clone(),
                    generator: self.insert_cochain(
                        &format!("place{v}.generator"),
                        &p.h2_generator,
                        true,
                    ),
                    normalization: p.inv_normalization,
                }
            })
            .collect();
        self.datum = Some(DatumEntry {
            modulus: d.modulus,
            global_group,
            gauge_group,
            three_cocycle,
            places,
        });
    }

    pub fn from_cochain(name: &str, f: &Cochain) -> Self {
        let mut doc = Self::new();
        doc.insert_cochain(name, f, false);
        doc
    }

    pub fn from_datum(d: &GlobalDatum) -> Self {
        let mut doc = Self::new();
        doc.insert_datum(d);
        doc
    }

    /// Build and validate every object.
    pub fn resolve(&self) -> Result<Resolved, FormatError> {
        let mut out = Resolved::default();
        for (name, entry) in &self.groups {
            out.groups.insert(name.clone(), resolve_group(name, entry)?);
        }
        let group = |out: &Resolved, owner: &str, name: &str| {
            out.groups
                .get(name)
                .cloned()
                .ok_or_else(|| FormatError::invalid(owner, format!("unknown group {name}")))
        };
        for (name, entry) in &self.homs {
            let owner = format!("hom {name}");
            let dom = group(&out, &owner, &entry.dom)?;
            let cod = group(&out, &owner, &entry.cod)?;
            let hom = GroupHom::new(&dom, &cod, entry.map.clone())
                .map_err(|e| FormatError::invalid(&owner, e))?;
            out.homs.insert(name.clone(), hom);
        }
        for (name, entry) in &self.modules {
            let owner = format!("module {name}");
            let g = group(&out, &owner, &entry.group)?;
            let orders = entry.orders.clone().unwrap_or_else(|| vec![entry.modulus]);
            let zn = ZnModule::new(entry.modulus, orders)
                .map_err(|e| FormatError::invalid(&owner, e))?;
            let m = match &entry.action {
                None => GModule::trivial(&g, zn),
                Some(a) => GModule::new(&g, zn, a).map_err(|e| FormatError::invalid(&owner, e))?,
            };
            out.modules.insert(name.clone(), m);
        }
        for (name, entry) in &self.cochains {
            let owner = format!("cochain {name}");
            let g = group(&out, &owner, &entry.group)?;
            let coeffs = match (&entry.module, entry.modulus) {
                (Some(m), None) => {
                    let m = out.modules.get(m).cloned().ok_or_else(|| {
                        FormatError::invalid(&owner, format!("unknown module {m}"))
                    })?;
                    if m.group() != &g {
                        return Err(FormatError::invalid(
                            &owner,
                            "module lives over a different group",
                        ));
                    }
                    m
                }
                (None, Some(n)) => GModule::trivial(
                    &g,
                    ZnModule::cyclic(n).map_err(|e| FormatError::invalid(&owner, e))?,
                ),
                _ => {
                    return Err(FormatError::invalid(
                        &owner,
                        "exactly one of module and modulus is required",
                    ))
                }
            };
            let f = Cochain::new(&coeffs, entry.degree, entry.values.clone())
                .map_err(|e| FormatError::invalid(&owner, e))?;
            if entry.cocycle {
                let w = complex_for(&coeffs)
                    .cocycle_witness(&f)
                    .map_err(|e| FormatError::invalid(&owner, e))?;
                if let Some(w) = w {
                    return Err(FormatError::invalid(
                        &owner,
                        format!("declared cocycle has df nonzero at {w:?}"),
                    ));
                }
            }
            out.cochains.insert(name.clone(), f);
        }
        if let Some(entry) = &self.datum {
            out.datum = Some(resolve_datum(&out, entry)?);
        }
        Ok(out)
    }
}

fn fresh<T>(map: &BTreeMap<String, T>, preferred: &str) -> String {
    if !map.contains_key(preferred) {
        return preferred.to_string();
    }
    (2..)
        .map(|i| format!("{preferred}{i}"))
        .find(|n| !map.contains_key(n))
        .expect("unbounded")
}

fn resolve_group(name: &str, entry: &GroupEntry) -> Result<FiniteGroup, FormatError> {
    let owner = format!("group {name}");
    match (&entry.catalog, &entry.table) {
        (Some(c), None) => {
            let g = catalog::by_name(c).ok_or_else(|| {
                FormatError::invalid(&owner, format!("unknown catalog group {c}"))
            })?;
            if entry.order.is_some_and(|o| o != g.order()) {
                return Err(FormatError::invalid(
                    &owner,
                    "order disagrees with the catalog group",
                ));
            }
            Ok(g)
        }
        (None, Some(t)) => {
            if entry.order.is_some_and(|o| o != t.len()) {
                return Err(FormatError::invalid(
                    &owner,
                    format!(
                        "order field {:?} but table has {} rows",
                        entry.order,
                        t.len()
                    ),
                ));
            }
            FiniteGroup::from_table(t).map_err(|e| FormatError::invalid(&owner, e))
        }
        _ => Err(FormatError::invalid(
            &owner,
            "exactly one of catalog and table is required",
        )),
    }
}

fn resolve_datum(out: &Resolved, entry: &DatumEntry) -> Result<GlobalDatum, FormatError> {
    let get = |kind: &str, name: &str, found: bool| {
        if found {
            Ok(())
        } else {
            Err(FormatError::invalid(
                "datum",
                format!("unknown {kind} {name}"),
            ))
        }
    };
    get(
        "group",
        &entry.global_group,
        out.groups.contains_key(&entry.global_group),
    )?;
    get(
        "cochain",
        &entry.three_cocycle,
        out.cochains.contains_key(&entry.three_cocycle),
    )?;
    let c = out.cochains[&entry.three_cocycle].clone();
    let gauge = out.groups.get(&entry.gauge_group).ok_or_else(|| {
        FormatError::invalid("datum", format!("unknown group {}", entry.gauge_group))
    })?;
    if c.group() != gauge {
        return Err(FormatError::invalid(
            "datum",
            "three_cocycle does not live on the gauge group",
        ));
    }
    let mut places = Vec::with_capacity(entry.places.len());
    for (v, p) in entry.places.iter().enumerate() {
        let owner = format!("datum place {v}");
        get("hom", &p.embedding, out.homs.contains_key(&p.embedding))?;
        get(
            "cochain",
            &p.generator,
            out.cochains.contains_key(&p.generator),
        )?;
        let place = PlaceDatum::new(
            out.homs[&p.embedding].clone(),
            p.inertia.clone(),
            out.cochains[&p.generator].clone(),
            p.normalization,
        )
        .map_err(|e| FormatError::invalid(&owner, e))?;
        places.push(place);
    }
    GlobalDatum::new(
        entry.modulus,
        out.groups[&entry.global_group].clone(),
        places,
        c,
    )
    .map_err(|e| FormatError::invalid("datum", e))
}

/// Validated objects from a [`Document`].
#[derive(Clone, Debug, Default)]
pub struct Resolved {
    pub groups: BTreeMap<String, FiniteGroup>,
    pub homs: BTreeMap<String, GroupHom>,
    pub modules: BTreeMap<String, GModule>,
    pub cochains: BTreeMap<String, Cochain>,
    pub datum: Option<GlobalDatum>,
}

impl Resolved {
    /// The named object, or the only one of its kind when `name` is `None`.
    pub fn pick<'a, T>(
        map: &'a BTreeMap<String, T>,
        kind: &str,
        name: Option<&str>,
    ) -> Result<&'a T, FormatError> {
        match name {
            Some(n) => map
                .get(n)
                .ok_or_else(|| FormatError::invalid(kind, format!("no {kind} named {n}"))),
            None if map.len() == 1 => Ok(map.values().next().expect("one entry")),
            None => Err(FormatError::invalid(
                kind,
                format!(
                    "document holds {} of these; select one with #name",
                    map.len()
                ),
            )),
        }
    }
}
