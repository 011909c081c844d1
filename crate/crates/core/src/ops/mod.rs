//! Structured operations on cochains: cup products, the Bockstein map,
//! conjugation by group elements, and the shuffle-path homotopies
//! `h_{a_1..a_k, f}`.

mod bockstein;
mod conjugate;
mod cup;
mod homotopy;

pub use bockstein::bockstein;
pub use conjugate::conjugate;
pub use cup::{cup, cup_with, Pairing};
pub use homotopy::{homotopy, homotopy_with, ShufflePath, Step};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cochains::CochainError;
use crate::groups::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpsError {
    #[error("incompatible pairing: {0}")]
    IncompatiblePairing(String),
    #[error("incompatible action: {0}")]
    IncompatibleAction(String),
    #[error("lifted differential not divisible by n at {tuple:?}; input is not a cocycle")]
    NotDivisible { tuple: Vec<usize> },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("homotopy needs at least one group element")]
    EmptyElements,
    #[error("cochain of degree {degree} is too small for {needed} elements")]
    DegreeTooSmall { degree: usize, needed: usize },
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ZnModule;
    use crate::cochains::{classify, differential, Classification, Cochain};
    use crate::groups::{catalog, GModule, GroupHom};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sign_module() -> GModule {
        let s3 = catalog::symmetric3();
        let sgn = GroupHom::new(&s3, &catalog::cyclic(2), vec![0, 1, 1, 0, 0, 1]).unwrap();
        GModule::sign(&sgn, 3).unwrap()
    }

    #[test]
    fn leibniz_twisted() {
        let m = sign_module();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (p, q) in [(0, 1), (1, 1), (1, 2), (2, 1)] {
            let x = Cochain::random(&m, p, &mut rng);
            let y = Cochain::random(&m, q, &mut rng);
            let lhs = differential(&cup(&x, &y).unwrap()).unwrap();
            let a = cup(&differential(&x).unwrap(), &y).unwrap();
            let b = cup(&x, &differential(&y).unwrap()).unwrap();
            let sign = if p % 2 == 0 { 1 } else { -1 };
            assert_eq!(lhs, a.combine(sign, &b).unwrap());
        }
    }

    #[test]
    fn conjugation_commutes_with_d_and_composes() {
        let m = sign_module();
        let g = m.group().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = Cochain::random(&m, 2, &mut rng);
        for a in g.elements() {
            assert_eq!(
                differential(&conjugate(&f, a).unwrap()).unwrap(),
                conjugate(&differential(&f).unwrap(), a).unwrap()
            );
            for b in g.elements() {
                let lhs = conjugate(&conjugate(&f, a).unwrap(), b).unwrap();
                assert_eq!(lhs, conjugate(&f, g.mul(a, b)).unwrap());
            }
        }
    }

    #[test]
    fn homotopy_identity_single() {
        let m = sign_module();
        let g = m.group().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for deg in 1..=3 {
            let f = Cochain::random(&m, deg, &mut rng);
            let df = differential(&f).unwrap();
            for a in g.elements() {
                let lhs = homotopy(&[a], &df)
                    .unwrap()
                    .add(&differential(&homotopy(&[a], &f).unwrap()).unwrap())
                    .unwrap();
                assert_eq!(
                    lhs,
                    conjugate(&f, a).unwrap().sub(&f).unwrap(),
                    "deg {deg}, a {a}"
                );
            }
        }
    }

    /// `(-1)^{k+1} h_{a,df} - d h_{a,f} = h_{a_2..} + sum_i (-1)^i h_{..a_i a_{i+1}..} + (-1)^{k+1} h_{a_1..a_k}^{a_{k+1}}`
    fn relation_residual(avec: &[usize], f: &Cochain) -> Cochain {
        let g = f.group();
        let k = avec.len() - 1;
        let df = differential(f).unwrap();
        let sgn = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
        let lhs = homotopy(avec, &df)
            .unwrap()
            .scale(sgn(k + 1))
            .sub(&differential(&homotopy(avec, f).unwrap()).unwrap())
            .unwrap();
        let mut rhs = homotopy(&avec[1..], f).unwrap();
        for i in 1..=k {
            let mut merged = avec.to_vec();
            merged[i - 1] = g.mul(avec[i - 1], avec[i]);
            merged.remove(i);
            rhs = rhs.combine(sgn(i), &homotopy(&merged, f).unwrap()).unwrap();
        }
        let last = conjugate(&homotopy(&avec[..k], f).unwrap(), avec[k]).unwrap();
        rhs = rhs.combine(sgn(k + 1), &last).unwrap();
        lhs.sub(&rhs).unwrap()
    }

    #[test]
    fn higher_relations_on_arbitrary_cochains() {
        let m = sign_module();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = m.group().clone();
        for deg in 2..=3 {
            let f = Cochain::random(&m, deg, &mut rng);
            for a in g.elements() {
                for b in g.elements() {
                    assert!(
                        relation_residual(&[a, b], &f).is_zero(),
                        "deg {deg} ({a},{b})"
                    );
                }
            }
        }
        let f = Cochain::random(&m, 3, &mut rng);
        for avec in [[1, 3, 5], [2, 4, 1], [3, 3, 0]] {
            assert!(relation_residual(&avec, &f).is_zero());
        }
    }

    #[test]
    fn two_element_relations_for_cocycles() {
        let g = catalog::symmetric3();
        let m = GModule::trivial(&g, ZnModule::cyclic(2).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let beta = Cochain::random(&m, 2, &mut rng);
        let h3 = crate::cochains::cohomology(&m, 3).unwrap();
        let f = differential(&beta)
            .unwrap()
            .add(&h3.generators()[0])
            .unwrap();
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                let c = homotopy(&[b], &f)
                    .unwrap()
                    .sub(&homotopy(&[ab], &f).unwrap())
                    .unwrap()
                    .add(&conjugate(&homotopy(&[a], &f).unwrap(), b).unwrap())
                    .unwrap();
                let dh = differential(&homotopy(&[a, b], &f).unwrap()).unwrap();
                assert!(c.add(&dh).unwrap().is_zero());
                let relation = homotopy(&[ab], &f)
                    .unwrap()
                    .sub(&conjugate(&homotopy(&[a], &f).unwrap(), b).unwrap())
                    .unwrap()
                    .sub(&homotopy(&[b], &f).unwrap())
                    .unwrap();
                assert!(matches!(
                    classify(&relation).unwrap(),
                    Classification::Coboundary(_)
                ));
            }
        }
    }

    #[test]
    fn carry_class_example() {
        let g = catalog::cyclic(3);
        let m = GModule::trivial(&g, ZnModule::cyclic(3).unwrap());
        let alpha = Cochain::from_fn(&m, 1, |t| vec![t[0] as i64]).unwrap();
        let c = cup(&alpha, &bockstein(&alpha).unwrap()).unwrap();
        assert_eq!(c.scalar_at(&[1, 1, 2]), 1);
        for t in 0..27 {
            let (x, y, z) = (t / 9, t / 3 % 3, t % 3);
            assert_eq!(
                c.scalar_at(&[x, y, z]),
                (x * usize::from(y + z >= 3)) as u32 % 3
            );
        }
    }
}
