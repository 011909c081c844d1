use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use arith_cs::algebra::{howell_form, in_row_space, solve_linear, MatrixZn, ModRing};
use arith_cs::cochains::{classify, differential, Classification, Cochain};
use arith_cs::cs::{
    cs_section, fixtures, l_class, torsor_build, torsor_difference, unramified_basepoint,
    InvariantValue, SolveOrder, TorsorElement, ValidatedDatum,
};
use arith_cs::format::Document;
use arith_cs::groups::{catalog, GModule};
use arith_cs::ops::{conjugate, cup, homotopy};
use arith_cs::verify::{random_cocycle, test_modules};

/// A corpus group, one of its test modules, and a seeded RNG.
fn setup(group: usize, module: usize, seed: u64) -> (GModule, ChaCha8Rng) {
    let corpus = catalog::corpus();
    let (_, g) = &corpus[group % corpus.len()];
    let modules = test_modules(g, 4);
    (
        modules[module % modules.len()].clone(),
        ChaCha8Rng::seed_from_u64(seed),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_vanishes(group in 0usize..8, module in 0usize..2, degree in 0usize..=3, seed: u64) {
        let (m, mut rng) = setup(group, module, seed);
        let f = Cochain::random(&m, degree, &mut rng);
        let limits = arith_cs::cochains::Limits::with_max_degree(5);
        let df = arith_cs::cochains::differential_with(&f, &limits).unwrap();
        prop_assert!(arith_cs::cochains::differential_with(&df, &limits).unwrap().is_zero());
    }

    #[test]
    fn leibniz_rule(group in 0usize..8, module in 0usize..2, p in 0usize..=2, q in 0usize..=1, seed: u64) {
        let (m, mut rng) = setup(group, module, seed);
        let x = Cochain::random(&m, p, &mut rng);
        let y = Cochain::random(&m, q, &mut rng);
        let lhs = differential(&cup(&x, &y).unwrap()).unwrap();
        let rhs = cup(&differential(&x).unwrap(), &y)
            .unwrap()
            .combine(if p % 2 == 0 { 1 } else { -1 }, &cup(&x, &differential(&y).unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cup_is_associative(group in 0usize..8, module in 0usize..2, seed: u64) {
        let (m, mut rng) = setup(group, module, seed);
        let x = Cochain::random(&m, 1, &mut rng);
        let y = Cochain::random(&m, 1, &mut rng);
        let z = Cochain::random(&m, 1, &mut rng);
        let left = cup(&cup(&x, &y).unwrap(), &z).unwrap();
        let right = cup(&x, &cup(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cup_is_graded_commutative_on_classes(group in 0usize..8, seed: u64) {
        let (m, mut rng) = setup(group, 0, seed);
        let x = random_cocycle(&m, 1, &mut rng).unwrap();
        let y = random_cocycle(&m, 2, &mut rng).unwrap();
        let diff = cup(&x, &y).unwrap().sub(&cup(&y, &x).unwrap()).unwrap();
        prop_assert!(matches!(classify(&diff).unwrap(), Classification::Coboundary(_)));
    }

    #[test]
    fn conjugation_is_a_chain_map_and_an_action(group in 0usize..8, module in 0usize..2, degree in 0usize..=2, seed: u64) {
        let (m, mut rng) = setup(group, module, seed);
        let g = m.group().clone();
        let f = Cochain::random(&m, degree, &mut rng);
        let a = (seed % g.order() as u64) as usize;
        let b = ((seed >> 8) % g.order() as u64) as usize;
        prop_assert_eq!(
            conjugate(&differential(&f).unwrap(), a).unwrap(),
            differential(&conjugate(&f, a).unwrap()).unwrap()
        );
        prop_assert_eq!(
            conjugate(&conjugate(&f, a).unwrap(), b).unwrap(),
            conjugate(&f, g.mul(a, b)).unwrap()
        );
    }

    #[test]
    fn homotopy_identity(group in 0usize..8, module in 0usize..2, degree in 1usize..=3, seed: u64) {
        let (m, mut rng) = setup(group, module, seed);
        let a = (seed % m.group().order() as u64) as usize;
        let f = Cochain::random(&m, degree, &mut rng);
        let lhs = homotopy(&[a], &differential(&f).unwrap())
            .unwrap()
            .add(&differential(&homotopy(&[a], &f).unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, conjugate(&f, a).unwrap().sub(&f).unwrap());
    }

    #[test]
    fn cochain_documents_round_trip(group in 0usize..8, module in 0usize..2, degree in 0usize..=2, seed: u64) {
        let (m, mut rng) = setup(group, module, seed);
        let f = Cochain::random(&m, degree, &mut rng);
        let text = Document::from_cochain("f", &f).to_canonical_string();
        let doc = Document::parse(&text).unwrap();
        prop_assert_eq!(doc.to_canonical_string(), text);
        prop_assert_eq!(&doc.resolve().unwrap().cochains["f"], &f);
    }

    #[test]
    fn invariant_values_form_a_group(a in -50i64..50, b in -50i64..50, n in 2u32..20) {
        let x = InvariantValue::new(a, n);
        let y = InvariantValue::new(b, n);
        prop_assert_eq!(x + y, y + x);
        prop_assert!((x + -x).is_zero());
        prop_assert_eq!(x + y, InvariantValue::new(a + b, n));
    }

    #[test]
    fn howell_form_is_canonical(
        n in 2u32..40,
        rows in proptest::collection::vec(proptest::collection::vec(0u32..1000, 3), 1..5),
        shift in 0usize..4,
    ) {
        let ring = ModRing::new(n).unwrap();
        let rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.into_iter().map(|x| x % n).collect()).collect();
        let a = MatrixZn::from_rows(ring, 3, &rows).unwrap();
        let h = howell_form(&a);
        for r in &rows {
            prop_assert!(in_row_space(&h.canonical, r));
        }
        let mut permuted = rows.clone();
        permuted.rotate_left(shift % rows.len());
        let mut doubled = permuted.clone();
        doubled.push(permuted[0].iter().map(|&x| (2 * x) % n).collect());
        let h2 = howell_form(&MatrixZn::from_rows(ring, 3, &doubled).unwrap());
        prop_assert_eq!(h.rank, h2.rank);
        prop_assert_eq!(&h.canonical.row_vecs()[..h.rank], &h2.canonical.row_vecs()[..h2.rank]);
    }

    #[test]
    fn solutions_satisfy_the_system(
        n in 2u32..40,
        entries in proptest::collection::vec(0u32..1000, 12),
        x in proptest::collection::vec(0u32..1000, 4),
    ) {
        let ring = ModRing::new(n).unwrap();
        let a = MatrixZn::from_data(ring, 3, 4, entries.iter().map(|v| v % n).collect()).unwrap();
        let x: Vec<u32> = x.iter().map(|v| v % n).collect();
        let b = a.mul_vec(&x).unwrap();
        let sol = solve_linear(&a, &b).unwrap();
        prop_assert_eq!(a.mul_vec(&sol.particular).unwrap(), b);
        for k in &sol.kernel_basis {
            prop_assert!(a.mul_vec(k).unwrap().iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn section_class_is_independent_of_the_solver(seed: u64) {
        let d = ValidatedDatum::new(fixtures::toy_datum()).unwrap();
        let rho = fixtures::toy_rho();
        let base = unramified_basepoint(&d, &rho).unwrap();
        let s = cs_section(&d, &rho, SolveOrder::Seeded(seed)).unwrap();
        prop_assert_eq!(l_class(&d, &torsor_difference(&d, &base, &s).unwrap()).unwrap().to_string(), "1/2");
    }

    #[test]
    fn torsor_action_is_free_and_transitive(seed: u64, coords in proptest::collection::vec(0u32..2, 1..3)) {
        let d = ValidatedDatum::new(fixtures::toy_datum()).unwrap();
        let locals = arith_cs::cs::local_homs(&d, &fixtures::toy_rho()).unwrap();
        let t = torsor_build(&d, &locals, SolveOrder::Seeded(seed)).unwrap();
        let x = cs_section(&d, &fixtures::toy_rho(), SolveOrder::Seeded(seed)).unwrap();
        let h = &t.acting[0];
        let coords: Vec<u32> = coords.iter().cycle().take(h.invariant_factors().len()).copied().collect();
        let shift = h.cocycle_from_coordinates(&coords).unwrap();
        let y = TorsorElement { components: vec![x.components[0].add(&shift).unwrap()] };
        prop_assert!(t.contains(&d, &y).unwrap());
        let diff = torsor_difference(&d, &x, &y).unwrap();
        prop_assert_eq!(&diff[0], &coords);
    }
}
