//! Small shipped data.
//!
//! * [`toy_datum`]: global group `Q8`, gauge group `S3`, `n = 2`,
//!   `c = sgn^*(alpha ∪ δalpha)`, one place `Z/4 ≅ <i>` with inertia `{±1}`.
//!   Every class of `H^2(Q8, Z/2)` dies on `<i>`, so reciprocity holds.
//! * [`balanced_datum`] / [`broken_datum`]: global `Z/3` embedded diagonally
//!   in two places `Z/3`, normalizations `(1, 2)` and `(1, 1)`.

use super::{GlobalDatum, PlaceDatum};
use crate::algebra::ZnModule;
use crate::cochains::Cochain;
use crate::groups::{catalog, FiniteGroup, GModule, GroupHom};
use crate::ops::{bockstein, cup};

/// Identity character `alpha` of `Z/n` with `Z/n` coefficients.
pub fn alpha(n: u32) -> Cochain {
    let g = catalog::cyclic(n as usize);
    let m = GModule::trivial(&g, ZnModule::cyclic(n).expect("small modulus"));
    Cochain::from_fn(&m, 1, |t| vec![t[0] as i64]).expect("valid table")
}

/// `alpha ∪ δalpha` on `Z/n`.
pub fn carry_class(n: u32) -> Cochain {
    let a = alpha(n);
    cup(&a, &bockstein(&a).expect("alpha is a cocycle")).expect("ring pairing")
}

/// Carry cocycle `(i, j) -> [i + j >= m]` on `Z/m` with `Z/n` coefficients.
pub fn carry_cocycle(m: usize, n: u32) -> Cochain {
    let g = catalog::cyclic(m);
    let coeffs = GModule::trivial(&g, ZnModule::cyclic(n).expect("small modulus"));
    Cochain::from_fn(&coeffs, 2, |t| vec![i64::from(t[0] + t[1] >= m)]).expect("valid table")
}

/// Sign character of `S3` as a hom onto `Z/2`.
pub fn s3_sign() -> GroupHom {
    GroupHom::new(
        &catalog::symmetric3(),
        &catalog::cyclic(2),
        vec![0, 1, 1, 0, 0, 1],
    )
    .expect("sign is a hom")
}

/// Inclusion `Z/4 -> Q8`, `1 -> i`.
pub fn q8_i_embedding() -> GroupHom {
    GroupHom::new(
        &catalog::cyclic(4),
        &catalog::quaternion(),
        vec![0, 2, 1, 3],
    )
    .expect("<i> is cyclic of order 4")
}

pub fn toy_datum() -> GlobalDatum {
    let q8 = catalog::quaternion();
    let place = PlaceDatum::new(q8_i_embedding(), vec![0, 2], carry_cocycle(4, 2), 1)
        .expect("well-formed place");
    let c = crate::cochains::pullback(&s3_sign(), &carry_class(2)).expect("sign pullback");
    GlobalDatum::new(2, q8, vec![place], c).expect("well-formed datum")
}

/// `Q8 -> S3` with `i -> 1`, `j -> (0 1)` (element 2 of `S3`).
pub fn toy_rho() -> GroupHom {
    let q8 = catalog::quaternion();
    let s3 = catalog::symmetric3();
    // 1, -1, i, -i map to 1; j, -j, k, -k map to the transposition
    GroupHom::new(&q8, &s3, vec![0, 0, 0, 0, 2, 2, 2, 2]).expect("factors through Q8 -> Z/2")
}

pub fn reciprocity_datum(normalizations: [u32; 2]) -> GlobalDatum {
    let z3: FiniteGroup = catalog::cyclic(3);
    let places = normalizations
        .iter()
        .map(|&k| {
            PlaceDatum::new(
                GroupHom::identity(&z3),
                vec![0, 1, 2],
                carry_cocycle(3, 3),
                k,
            )
            .expect("well-formed place")
        })
        .collect();
    GlobalDatum::new(3, z3, places, carry_class(3)).expect("well-formed datum")
}

pub fn balanced_datum() -> GlobalDatum {
    reciprocity_datum([1, 2])
}

pub fn broken_datum() -> GlobalDatum {
    reciprocity_datum([1, 1])
}
