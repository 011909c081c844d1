use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cochain::{Cochain, TupleIndex};
use super::differential::{differential_rows, differential_with, relation_rows};
use super::{CochainError, Limits};
use crate::algebra::{diagonalize_mod, ModRing, RowReducer};
use crate::groups::GModule;

/// Outcome of [`CochainComplex::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `df != 0`; `witness` is the first tuple where `df` is nonzero.
    NonCocycle { witness: Vec<usize> },
    /// `f = d(preimage)`.
    Coboundary(Cochain),
    /// Coordinates in the invariant-factor decomposition of the cohomology group.
    NontrivialClass(Vec<u32>),
}

impl Classification {
    pub fn is_coboundary(&self) -> bool {
        matches!(self, Self::Coboundary(_))
    }
}

/// `H^i(G, M)` with generator cocycles and a coordinate map onto
/// `Z/d_1 + ... + Z/d_k`, `d_1 | d_2 | ...`.
#[derive(Debug)]
pub struct CohomologyGroup {
    coeffs: GModule,
    degree: usize,
    invariant_factors: Vec<u32>,
    generators: Vec<Cochain>,
    /// Solver over `[cocycle basis; coboundaries + relations]`.
    class_reducer: RowReducer,
    cocycle_count: usize,
    /// For each kept summand, the matching column of the diagonalizing transform.
    q_columns: Vec<Vec<u32>>,
}

impl CohomologyGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &GModule {
        &self.coeffs
    }

    pub fn invariant_factors(&self) -> &[u32] {
        &self.invariant_factors
    }

    pub fn generators(&self) -> &[Cochain] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().map(|&d| d as u64).product()
    }

    pub fn is_zero(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Coordinates of the class of a cocycle; zero exactly on coboundaries.
    pub fn coordinates(&self, f: &Cochain) -> Result<Vec<u32>, CochainError> {
        if f.coeffs() != &self.coeffs || f.degree() != self.degree {
            return Err(CochainError::CoefficientMismatch);
        }
        let w = self
            .class_reducer
            .solve(f.values())
            .ok_or(CochainError::NotACocycle { witness: None })?;
        let w = &w[..self.cocycle_count];
        Ok(self
            .q_columns
            .iter()
            .zip(&self.invariant_factors)
            .map(|(col, &d)| {
                let y: u64 = w.iter().zip(col).map(|(&a, &b)| a as u64 * b as u64).sum();
                (y % d as u64) as u32
            })
            .collect())
    }

    /// `sum_j coords[j] * generator_j`.
    pub fn cocycle_from_coordinates(&self, coords: &[u32]) -> Result<Cochain, CochainError> {
        if coords.len() != self.generators.len() {
            return Err(CochainError::DegreeMismatch {
                left: coords.len(),
                right: self.generators.len(),
            });
        }
        let mut acc = Cochain::zero(&self.coeffs, self.degree);
        for (g, &c) in self.generators.iter().zip(coords) {
            acc = acc.combine(c as i64, g)?;
        }
        Ok(acc)
    }
}

/// The cochain complex `C^*(G, M)` with cached linear-algebra data per degree.
#[derive(Debug)]
pub struct CochainComplex {
    coeffs: GModule,
    limits: Limits,
    cocycles: Mutex<HashMap<usize, Arc<Vec<Vec<u32>>>>>,
    coboundaries: Mutex<HashMap<usize, Arc<RowReducer>>>,
    cohomology: Mutex<HashMap<usize, Arc<CohomologyGroup>>>,
}

impl CochainComplex {
    pub fn new(coeffs: &GModule) -> Self {
        Self::with_limits(coeffs, Limits::default())
    }

    pub fn with_limits(coeffs: &GModule, limits: Limits) -> Self {
        Self {
            coeffs: coeffs.clone(),
            limits,
            cocycles: Mutex::default(),
            coboundaries: Mutex::default(),
            cohomology: Mutex::default(),
        }
    }

    pub fn coeffs(&self) -> &GModule {
        &self.coeffs
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    fn ring(&self) -> ModRing {
        self.coeffs.module().ring()
    }

    fn width(&self, i: usize) -> usize {
        TupleIndex::new(self.coeffs.group().order(), i).count() * self.coeffs.rank()
    }

    pub fn differential(&self, f: &Cochain) -> Result<Cochain, CochainError> {
        self.check(f)?;
        differential_with(f, &self.limits)
    }

    fn check(&self, f: &Cochain) -> Result<(), CochainError> {
        if f.coeffs() != &self.coeffs {
            return Err(CochainError::CoefficientMismatch);
        }
        Ok(())
    }

    /// Lifted generators of the cocycles `Z^i` (mod relations).
    fn cocycle_basis(&self, i: usize) -> Result<Arc<Vec<Vec<u32>>>, CochainError> {
        self.limits.check(i + 1)?;
        if let Some(z) = self.cocycles.lock().expect("cache lock").get(&i) {
            return Ok(z.clone());
        }
        let reducer = RowReducer::with_relations(
            self.ring(),
            self.width(i + 1),
            differential_rows(&self.coeffs, i),
            relation_rows(&self.coeffs, i + 1),
        );
        let z: Vec<Vec<u32>> = reducer
            .kernel()
            .iter()
            .filter(|v| v.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        let z = Arc::new(z);
        self.cocycles
            .lock()
            .expect("cache lock")
            .insert(i, z.clone());
        Ok(z)
    }

    fn coboundary_generators(&self, i: usize) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
        let gens = if i == 0 {
            Vec::new()
        } else {
            differential_rows(&self.coeffs, i - 1)
        };
        (gens, relation_rows(&self.coeffs, i))
    }

    fn coboundary_reducer(&self, i: usize) -> Result<Arc<RowReducer>, CochainError> {
        self.limits.check(i)?;
        if let Some(r) = self.coboundaries.lock().expect("cache lock").get(&i) {
            return Ok(r.clone());
        }
        let (gens, rels) = self.coboundary_generators(i);
        let r = Arc::new(RowReducer::with_relations(
            self.ring(),
            self.width(i),
            gens,
            rels,
        ));
        self.coboundaries
            .lock()
            .expect("cache lock")
            .insert(i, r.clone());
        Ok(r)
    }

    /// `H^i(G, M)`.
    pub fn cohomology(&self, i: usize) -> Result<Arc<CohomologyGroup>, CochainError> {
        if let Some(h) = self.cohomology.lock().expect("cache lock").get(&i) {
            return Ok(h.clone());
        }
        let z = self.cocycle_basis(i)?;
        let s = z.len();
        let (bgens, rels) = self.coboundary_generators(i);
        let ring = self.ring();
        let mut all: Vec<Vec<u32>> = z.as_ref().clone();
        all.extend(bgens);
        let class_reducer = RowReducer::with_relations(ring, self.width(i), all, rels);
        let relations: Vec<Vec<u32>> = class_reducer
            .kernel()
            .iter()
            .map(|v| v[..s].to_vec())
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        let diag = diagonalize_mod(ring, relations, s);
        let mut invariant_factors = Vec::new();
        let mut generators = Vec::new();
        let mut q_columns = Vec::new();
        for j in 0..s {
            let d = diag.summand_order(ring, j);
            if d == 1 {
                continue;
            }
            invariant_factors.push(d);
            q_columns.push(diag.q.iter().map(|row| row[j]).collect());
            let lifted =
                crate::algebra::combine_rows(ring, self.width(i), &diag.q_inv[j], |l| &z[l]);
            generators.push(Cochain::from_lifted(&self.coeffs, i, lifted)?);
        }
        log::debug!(
            "H^{i} over a group of order {}: {s} cocycle basis vectors, invariant factors {invariant_factors:?}",
            self.coeffs.group().order()
        );
        let h = Arc::new(CohomologyGroup {
            coeffs: self.coeffs.clone(),
            degree: i,
            invariant_factors,
            generators,
            class_reducer,
            cocycle_count: s,
            q_columns,
        });
        self.cohomology
            .lock()
            .expect("cache lock")
            .insert(i, h.clone());
        Ok(h)
    }

    /// First tuple where `df` is nonzero, if any.
    pub fn cocycle_witness(&self, f: &Cochain) -> Result<Option<Vec<usize>>, CochainError> {
        let df = self.differential(f)?;
        let r = df.rank();
        Ok(df
            .values()
            .chunks(r.max(1))
            .position(|v| v.iter().any(|&x| x != 0))
            .map(|t| df.indexer().decode(t)))
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool, CochainError> {
        Ok(self.cocycle_witness(f)?.is_none())
    }

    /// Canonical `beta` with `d beta = f`, if one exists.
    pub fn preimage(&self, f: &Cochain) -> Result<Option<Cochain>, CochainError> {
        self.check(f)?;
        let reducer = self.coboundary_reducer(f.degree())?;
        self.preimage_with(f, &reducer)
    }

    /// Like [`CochainComplex::preimage`], but eliminating the unknowns in an
    /// order shuffled by `seed`; the result may differ by a cocycle.
    pub fn preimage_seeded(&self, f: &Cochain, seed: u64) -> Result<Option<Cochain>, CochainError> {
        self.check(f)?;
        let i = f.degree();
        self.limits.check(i)?;
        let (gens, rels) = self.coboundary_generators(i);
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let reducer = RowReducer::build(self.ring(), self.width(i), gens, &order, rels);
        self.preimage_with(f, &reducer)
    }

    fn preimage_with(
        &self,
        f: &Cochain,
        reducer: &RowReducer,
    ) -> Result<Option<Cochain>, CochainError> {
        let i = f.degree();
        if i == 0 {
            return Ok(None);
        }
        match reducer.solve(f.values()) {
            Some(beta) => Ok(Some(Cochain::from_lifted(&self.coeffs, i - 1, beta)?)),
            None => Ok(None),
        }
    }

    pub fn is_coboundary(&self, f: &Cochain) -> Result<bool, CochainError> {
        self.check(f)?;
        if f.degree() == 0 {
            return Ok(f.is_zero());
        }
        Ok(self.coboundary_reducer(f.degree())?.contains(f.values()))
    }

    /// Total classification of a cochain.
    pub fn classify(&self, f: &Cochain) -> Result<Classification, CochainError> {
        if let Some(witness) = self.cocycle_witness(f)? {
            return Ok(Classification::NonCocycle { witness });
        }
        if f.degree() == 0 && f.is_zero() {
            // B^0 = 0; the zero 0-cochain stands in for the empty preimage
            return Ok(Classification::Coboundary(Cochain::zero(&self.coeffs, 0)));
        }
        if let Some(beta) = self.preimage(f)? {
            return Ok(Classification::Coboundary(beta));
        }
        let coords = self.cohomology(f.degree())?.coordinates(f)?;
        Ok(Classification::NontrivialClass(coords))
    }

    /// For a cocycle `f`, some `beta` with `f - d beta` normalized (vanishing on
    /// tuples that contain the identity). Returns `(f - d beta, beta)`.
    pub fn normalize(&self, f: &Cochain) -> Result<Option<(Cochain, Cochain)>, CochainError> {
        self.check(f)?;
        let i = f.degree();
        if i == 0 {
            return Ok(Some((f.clone(), Cochain::zero(&self.coeffs, 0))));
        }
        self.limits.check(i)?;
        let r = self.coeffs.rank();
        let idx = TupleIndex::new(self.coeffs.group().order(), i);
        let degenerate: Vec<usize> = (0..idx.count())
            .filter(|&t| idx.decode(t).contains(&0))
            .collect();
        let cols: Vec<usize> = degenerate
            .iter()
            .flat_map(|&t| (0..r).map(move |c| t * r + c))
            .collect();
        let restrict = |row: &Vec<u32>| cols.iter().map(|&c| row[c]).collect::<Vec<u32>>();
        let (gens, rels) = self.coboundary_generators(i);
        let reducer = RowReducer::with_relations(
            self.ring(),
            cols.len(),
            gens.iter().map(restrict).collect(),
            rels.iter().map(restrict).collect(),
        );
        let target: Vec<u32> = cols.iter().map(|&c| f.values()[c]).collect();
        let Some(beta) = reducer.solve(&target) else {
            return Ok(None);
        };
        let beta = Cochain::from_lifted(&self.coeffs, i - 1, beta)?;
        let fixed = f.sub(&self.differential(&beta)?)?;
        Ok(Some((fixed, beta)))
    }
}

/// Shared complexes for the free functions, keyed by coefficient module.
fn shared(coeffs: &GModule) -> Arc<CochainComplex> {
    static CACHE: OnceLock<Mutex<Vec<Arc<CochainComplex>>>> = OnceLock::new();
    const CAPACITY: usize = 48;
    let cache = CACHE.get_or_init(Mutex::default);
    let mut guard = cache.lock().expect("cache lock");
    if let Some(c) = guard.iter().find(|c| c.coeffs() == coeffs) {
        return c.clone();
    }
    if guard.len() >= CAPACITY {
        guard.remove(0);
    }
    let c = Arc::new(CochainComplex::new(coeffs));
    guard.push(c.clone());
    c
}

/// `H^i(G, M)` with default limits.
pub fn cohomology(coeffs: &GModule, i: usize) -> Result<Arc<CohomologyGroup>, CochainError> {
    shared(coeffs).cohomology(i)
}

pub fn classify(f: &Cochain) -> Result<Classification, CochainError> {
    shared(f.coeffs()).classify(f)
}

pub fn preimage(f: &Cochain) -> Result<Option<Cochain>, CochainError> {
    shared(f.coeffs()).preimage(f)
}

pub fn is_coboundary(f: &Cochain) -> Result<bool, CochainError> {
    shared(f.coeffs()).is_coboundary(f)
}

/// The complex shared by the free functions for this module.
pub fn complex_for(coeffs: &GModule) -> Arc<CochainComplex> {
    shared(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ZnModule;
    use crate::cochains::differential;
    use crate::groups::{catalog, FiniteGroup, GroupHom};

    fn trivial(g: &FiniteGroup, n: u32) -> GModule {
        GModule::trivial(g, ZnModule::cyclic(n).unwrap())
    }

    #[test]
    fn cyclic_cohomology() {
        for n in [2u32, 3, 4, 6] {
            let m = trivial(&catalog::cyclic(n as usize), n);
            for i in 0..=3 {
                assert_eq!(
                    cohomology(&m, i).unwrap().invariant_factors(),
                    &[n],
                    "n={n} i={i}"
                );
            }
        }
    }

    #[test]
    fn trivial_group_is_acyclic() {
        let m = trivial(&FiniteGroup::trivial(), 5);
        assert_eq!(cohomology(&m, 0).unwrap().invariant_factors(), &[5]);
        for i in 1..=3 {
            assert!(cohomology(&m, i).unwrap().is_zero());
        }
    }

    #[test]
    fn klein_four_mod_two() {
        // dimensions 1, 2, 3, 4
        let m = trivial(&catalog::klein4(), 2);
        for i in 0..=3 {
            assert_eq!(cohomology(&m, i).unwrap().invariant_factors().len(), i + 1);
        }
    }

    #[test]
    fn sign_twisted_coefficients() {
        // Z/2 acting on Z/3 by -1: all cohomology vanishes (orders coprime)
        let z2 = catalog::cyclic(2);
        let m = GModule::sign(&GroupHom::identity(&z2), 3).unwrap();
        for i in 0..=3 {
            assert!(cohomology(&m, i).unwrap().is_zero(), "degree {i}");
        }
        // Z/2 acting on Z/4 by -1: H^0 = Z/2, H^1 = Z/4^-/(2) ... = Z/2
        let m = GModule::sign(&GroupHom::identity(&z2), 4).unwrap();
        assert_eq!(cohomology(&m, 0).unwrap().invariant_factors(), &[2]);
        assert_eq!(cohomology(&m, 1).unwrap().invariant_factors(), &[2]);
    }

    #[test]
    fn mixed_orders() {
        let z2 = catalog::cyclic(2);
        let m = GModule::trivial(&z2, ZnModule::new(4, vec![2, 4]).unwrap());
        assert_eq!(cohomology(&m, 0).unwrap().invariant_factors(), &[2, 4]);
        assert_eq!(cohomology(&m, 1).unwrap().invariant_factors(), &[2, 2]);
        assert_eq!(cohomology(&m, 2).unwrap().invariant_factors(), &[2, 2]);
    }

    #[test]
    fn generators_have_standard_coordinates() {
        let m = trivial(&catalog::klein4(), 4);
        let h = cohomology(&m, 2).unwrap();
        for (j, g) in h.generators().iter().enumerate() {
            assert!(differential(g).unwrap().is_zero());
            let coords = h.coordinates(g).unwrap();
            let expected: Vec<u32> = (0..coords.len()).map(|k| u32::from(k == j)).collect();
            assert_eq!(coords, expected);
        }
    }

    #[test]
    fn carry_cocycle_on_z3_is_nontrivial() {
        let m = trivial(&catalog::cyclic(3), 3);
        let carry = Cochain::from_fn(&m, 2, |t| vec![i64::from(t[0] + t[1] >= 3)]).unwrap();
        match classify(&carry).unwrap() {
            Classification::NontrivialClass(c) => assert_ne!(c, vec![0]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn classify_all_three_ways() {
        let g = catalog::symmetric3();
        let m = trivial(&g, 2);
        let beta = Cochain::from_fn(&m, 1, |t| vec![(t[0] * 7 % 5) as i64]).unwrap();
        let f = differential(&beta).unwrap();
        match classify(&f).unwrap() {
            Classification::Coboundary(p) => assert_eq!(differential(&p).unwrap(), f),
            other => panic!("unexpected {other:?}"),
        }
        let mut v = vec![0u32; 36];
        v[7] = 1;
        let bad = Cochain::new(&m, 2, v).unwrap();
        assert!(matches!(
            classify(&bad).unwrap(),
            Classification::NonCocycle { .. }
        ));
    }

    #[test]
    fn normalize_cocycles() {
        let m = trivial(&catalog::cyclic(4), 4);
        let c = Cochain::from_fn(&m, 2, |t| vec![(t[0] * t[1] + 1) as i64]).unwrap();
        let cx = complex_for(&m);
        let (fixed, beta) = cx.normalize(&c).unwrap().unwrap();
        assert!(fixed.is_normalized());
        assert_eq!(fixed, c.sub(&differential(&beta).unwrap()).unwrap());
    }

    #[test]
    fn seeded_preimages_differ_by_cocycles() {
        let m = trivial(&catalog::symmetric3(), 3);
        let beta = Cochain::from_fn(&m, 2, |t| vec![(t[0] + 2 * t[1]) as i64]).unwrap();
        let f = differential(&beta).unwrap();
        let cx = complex_for(&m);
        let a = cx.preimage(&f).unwrap().unwrap();
        for seed in 0..5 {
            let b = cx.preimage_seeded(&f, seed).unwrap().unwrap();
            assert_eq!(differential(&b).unwrap(), f);
            assert!(differential(&a.sub(&b).unwrap()).unwrap().is_zero());
        }
    }
}
