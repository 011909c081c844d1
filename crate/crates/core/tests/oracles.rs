//! Values checked against brute-force computations written independently of
//! the library's linear algebra.

use arith_cs::algebra::ZnModule;
use arith_cs::cochains::{cohomology, Cochain};
use arith_cs::cs::{cs_invariant, fixtures, kummer_trivialization, SolveOrder, ValidatedDatum};
use arith_cs::groups::{all_homs, catalog, FiniteGroup, GModule, GroupHom};
use arith_cs::ops::{bockstein, homotopy, ShufflePath, Step};

fn tuple_at(index: usize, order: usize, degree: usize) -> Vec<usize> {
    let mut t = vec![0; degree];
    let mut r = index;
    for slot in t.iter_mut().rev() {
        *slot = r % order;
        r /= order;
    }
    t
}

fn index_of(t: &[usize], order: usize) -> usize {
    t.iter().fold(0, |acc, &g| acc * order + g)
}

/// Inhomogeneous differential with trivial `Z/n` coefficients, straight from
/// the alternating-sum formula.
fn naive_d(table: &[Vec<usize>], n: u32, degree: usize, f: &[u32]) -> Vec<u32> {
    let order = table.len();
    let count = order.pow(degree as u32 + 1);
    (0..count)
        .map(|idx| {
            let t = tuple_at(idx, order, degree + 1);
            let mut acc = f[index_of(&t[1..], order)] as i64;
            for i in 0..degree {
                let mut face = t[..i].to_vec();
                face.push(table[t[i]][t[i + 1]]);
                face.extend_from_slice(&t[i + 2..]);
                let s = if i % 2 == 0 { -1 } else { 1 };
                acc += s * f[index_of(&face, order)] as i64;
            }
            let s = if degree.is_multiple_of(2) { -1 } else { 1 };
            acc += s * f[index_of(&t[..degree], order)] as i64;
            acc.rem_euclid(n as i64) as u32
        })
        .collect()
}

/// `|Z^k| / |B^k|` by enumerating every degree-`k` and degree-`k-1` table.
fn brute_h_order(table: &[Vec<usize>], n: u32, k: usize) -> u64 {
    let order = table.len();
    let tables = |deg: usize| {
        let len = order.pow(deg as u32);
        (0..(n as u64).pow(len as u32)).map(move |code| {
            let mut c = code;
            (0..len)
                .map(|_| {
                    let v = (c % n as u64) as u32;
                    c /= n as u64;
                    v
                })
                .collect::<Vec<u32>>()
        })
    };
    let cocycles = tables(k)
        .filter(|f| naive_d(table, n, k, f).iter().all(|&x| x == 0))
        .count() as u64;
    let mut boundaries: Vec<Vec<u32>> = tables(k - 1)
        .map(|b| naive_d(table, n, k - 1, &b))
        .collect();
    boundaries.sort();
    boundaries.dedup();
    cocycles / boundaries.len() as u64
}

#[test]
fn exhaustive_z2_degree_three() {
    let table = catalog::cyclic(2).table();
    let m = GModule::trivial(&catalog::cyclic(2), ZnModule::cyclic(2).unwrap());
    let mut boundaries: Vec<Vec<u32>> = (0..16u32)
        .map(|code| {
            naive_d(
                &table,
                2,
                2,
                &(0..4).map(|i| (code >> i) & 1).collect::<Vec<_>>(),
            )
        })
        .collect();
    boundaries.sort();
    boundaries.dedup();
    let cocycles: Vec<Vec<u32>> = (0..256u32)
        .map(|code| (0..8).map(|i| (code >> i) & 1).collect::<Vec<_>>())
        .filter(|f| naive_d(&table, 2, 3, f).iter().all(|&x| x == 0))
        .collect();
    assert_eq!(cocycles.len() / boundaries.len(), 2);
    let c = fixtures::carry_class(2);
    assert!(cocycles.iter().any(|f| f == c.values()));
    assert!(!boundaries.iter().any(|b| b == c.values()));
    assert_eq!(cohomology(&m, 3).unwrap().order(), 2);
}

#[test]
fn low_degree_orders_match_enumeration() {
    let cases: [(&str, u32, usize); 9] = [
        ("Z2", 2, 1),
        ("Z2", 2, 2),
        ("Z3", 3, 2),
        ("Z4", 2, 2),
        ("Z2xZ2", 2, 1),
        ("Z2xZ2", 2, 2),
        ("Z2", 2, 3),
        ("Z3", 3, 1),
        ("S3", 2, 1),
    ];
    for (name, n, k) in cases {
        let g = catalog::by_name(name).unwrap();
        let m = GModule::trivial(&g, ZnModule::cyclic(n).unwrap());
        let expected = brute_h_order(&g.table(), n, k);
        assert_eq!(
            cohomology(&m, k).unwrap().order(),
            expected,
            "H^{k}({name}, Z/{n})"
        );
    }
}

#[test]
fn first_cohomology_counts_characters() {
    for (name, g) in catalog::corpus() {
        for n in [2u32, 3] {
            let table = g.table();
            let order = g.order();
            let homs = (0..(n as u64).pow(order as u32))
                .filter(|&code| {
                    let v = |x: usize| (code / (n as u64).pow(x as u32)) % n as u64;
                    (0..order)
                        .all(|a| (0..order).all(|b| (v(a) + v(b)) % n as u64 == v(table[a][b])))
                })
                .count() as u64;
            let m = GModule::trivial(&g, ZnModule::cyclic(n).unwrap());
            assert_eq!(cohomology(&m, 1).unwrap().order(), homs, "{name}, Z/{n}");
        }
    }
}

#[test]
fn bockstein_of_identity_is_carry() {
    for n in 2..=7u32 {
        let b = bockstein(&fixtures::alpha(n)).unwrap();
        for x in 0..n as usize {
            for y in 0..n as usize {
                assert_eq!(
                    b.scalar_at(&[x, y]),
                    u32::from(x + y >= n as usize),
                    "n = {n}, ({x}, {y})"
                );
            }
        }
        let c = fixtures::carry_class(n);
        for x in 0..n as usize {
            for y in 0..n as usize {
                for z in 0..n as usize {
                    let expected = (x as u32 * u32::from(y + z >= n as usize)) % n;
                    assert_eq!(c.scalar_at(&[x, y, z]), expected);
                }
            }
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Gaussian binomial `[n+k choose k]_q` at `q = -1`.
fn gaussian_at_minus_one(n: usize, k: usize) -> i64 {
    if n == 0 || k == 0 {
        return 1;
    }
    let s = if k.is_multiple_of(2) { 1 } else { -1 };
    gaussian_at_minus_one(n, k - 1) + s * gaussian_at_minus_one(n - 1, k)
}

#[test]
fn shuffle_paths_count_and_signs() {
    for n in 0..=5 {
        for k in 0..=4 {
            let paths = ShufflePath::all(n, k);
            assert_eq!(paths.len() as u64, binomial((n + k) as u64, k as u64));
            for p in &paths {
                let mut verticals_after = 0usize;
                let mut inversions = 0usize;
                for s in p.steps().iter().rev() {
                    match s {
                        Step::Vertical => verticals_after += 1,
                        Step::Horizontal => inversions += verticals_after,
                    }
                }
                let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(p.sign(), sign, "{p}");
            }
            let total: i64 = paths.iter().map(|p| p.sign()).sum();
            assert_eq!(total, gaussian_at_minus_one(n, k), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn worked_path_on_the_five_by_four_grid() {
    let p = ShufflePath::parse("HHVHVHHVV").unwrap();
    assert_eq!(p.dims(), (5, 4));
    assert_eq!(p.squares_above(), 15);
    assert_eq!(p.sign(), -1);
}

#[test]
fn degree_one_homotopy_is_value_at_inverse() {
    let s3 = catalog::symmetric3();
    let m = GModule::sign(&fixtures::s3_sign(), 5).unwrap();
    let sgn = fixtures::s3_sign();
    // crossed hom g -> g·1 - 1
    let c = Cochain::from_fn(&m, 1, |t| vec![if sgn.apply(t[0]) == 1 { -2 } else { 0 }]).unwrap();
    for a in s3.elements() {
        let h = homotopy(&[a], &c).unwrap();
        assert_eq!(h.values(), c.at(&[s3.inv(a)]));
    }
}

#[test]
fn kummer_cochain_on_z9() {
    let f = GroupHom::new(
        &catalog::cyclic(9),
        &catalog::cyclic(3),
        (0..9).map(|x| x % 3).collect(),
    )
    .unwrap();
    let k = kummer_trivialization(&f, Some(&GroupHom::identity(&catalog::cyclic(9)))).unwrap();
    let expected: Vec<u32> = (0..9u32).map(|x| (3 - (x / 3) % 3) % 3).collect();
    assert_eq!(k.b.values(), expected.as_slice());
}

/// Quaternion units as `(sign, axis)` with axis 0 = 1, 1 = i, 2 = j, 3 = k,
/// listed as 1, -1, i, -i, j, -j, k, -k.
fn q8_table() -> Vec<Vec<usize>> {
    let units: Vec<(i8, usize)> = (0..8)
        .map(|e| (if e % 2 == 0 { 1 } else { -1 }, e / 2))
        .collect();
    let mul_axes = |a: usize, b: usize| -> (i8, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (1, x),
            (x, y) if x == y => (-1, 0),
            (1, 2) => (1, 3),
            (2, 3) => (1, 1),
            (3, 1) => (1, 2),
            (2, 1) => (-1, 3),
            (3, 2) => (-1, 1),
            (1, 3) => (-1, 2),
            _ => unreachable!(),
        }
    };
    units
        .iter()
        .map(|&(sa, a)| {
            units
                .iter()
                .map(|&(sb, b)| {
                    let (s, c) = mul_axes(a, b);
                    let sign = sa * sb * s;
                    units.iter().position(|&u| u == (sign, c)).unwrap()
                })
                .collect()
        })
        .collect()
}

/// Solve `da = z` for a 2-cochain on a group with `Z/2` coefficients by
/// Gaussian elimination over GF(2). Returns a particular solution and a
/// kernel basis.
fn solve_gf2(table: &[Vec<usize>], z: &[u32]) -> Option<(Vec<u32>, Vec<Vec<u32>>)> {
    let order = table.len();
    let unknowns = order * order;
    let mut rows: Vec<(Vec<bool>, bool)> = (0..order.pow(3))
        .map(|idx| {
            let t = tuple_at(idx, order, 3);
            let mut row = vec![false; unknowns];
            for cell in [
                [t[1], t[2]],
                [table[t[0]][t[1]], t[2]],
                [t[0], table[t[1]][t[2]]],
                [t[0], t[1]],
            ] {
                row[cell[0] * order + cell[1]] ^= true;
            }
            (row, z[idx] == 1)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0[col]) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0[col] {
                for (x, y) in row.0.iter_mut().zip(&pivot.0) {
                    *x ^= *y;
                }
                row.1 ^= pivot.1;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| row.1) {
        return None;
    }
    let mut particular = vec![0; unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        particular[col] = u32::from(rows[i].1);
    }
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0; unknowns];
            v[fc] = 1;
            for (i, &col) in pivots.iter().enumerate() {
                v[col] = u32::from(rows[i].0[fc]);
            }
            v
        })
        .collect();
    Some((particular, kernel))
}

/// Class of a 2-cocycle on a cyclic group of order 4 generated by `gen`:
/// `sum_k a(gen^k, gen)` mod 2.
fn cyclic_class(table: &[Vec<usize>], a: &[u32], gen: usize) -> u32 {
    let order = table.len();
    let mut power = 0;
    let mut sum = 0;
    for _ in 0..4 {
        sum += a[power * order + gen];
        power = table[power][gen];
    }
    sum % 2
}

#[test]
fn toy_invariant_matches_direct_elimination() {
    let table = q8_table();
    let q8 = FiniteGroup::from_table(&table).unwrap();
    assert_eq!(q8, catalog::quaternion());
    let i = 2;
    let datum = ValidatedDatum::new(fixtures::toy_datum()).unwrap();
    for rho in all_homs(&q8, &catalog::symmetric3()) {
        let sgn = fixtures::s3_sign();
        let chi: Vec<u32> = (0..8).map(|g| sgn.apply(rho.apply(g)) as u32).collect();
        if chi[i] != 0 {
            // sign character nonzero on <i>: outside the unramified regime of the place
            continue;
        }
        let z: Vec<u32> = (0..512)
            .map(|idx| {
                let t = tuple_at(idx, 8, 3);
                chi[t[0]] * chi[t[1]] * chi[t[2]]
            })
            .collect();
        let Some((a, kernel)) = solve_gf2(&table, &z) else {
            assert!(cs_invariant(&datum, &rho, SolveOrder::Canonical).is_err());
            continue;
        };
        for k in &kernel {
            assert_eq!(
                cyclic_class(&table, k, i),
                0,
                "global 2-cocycle with nonzero class at the place"
            );
        }
        let expected = cyclic_class(&table, &a, i);
        let v = cs_invariant(&datum, &rho, SolveOrder::Canonical).unwrap();
        assert_eq!(v.numerator, expected, "rho = {:?}", rho.map());
    }
    let toy = cs_invariant(&datum, &fixtures::toy_rho(), SolveOrder::Canonical).unwrap();
    assert_eq!(toy.to_string(), "1/2");
}

#[test]
fn carry_class_orders_agree_in_cohomology() {
    for n in 2..=5u32 {
        let a = fixtures::alpha(n);
        let b = bockstein(&a).unwrap();
        let diff = arith_cs::ops::cup(&a, &b)
            .unwrap()
            .sub(&arith_cs::ops::cup(&b, &a).unwrap())
            .unwrap();
        assert!(arith_cs::cochains::is_coboundary(&diff).unwrap(), "n = {n}");
        assert!(!diff.is_zero() || n == 2);
    }
}
