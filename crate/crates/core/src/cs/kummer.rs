use super::CsError;
use crate::algebra::ZnModule;
use crate::cochains::Cochain;
use crate::groups::{all_homs, catalog, GModule, GroupHom};
use crate::ops::cup;

/// `b = (s∘f - f̃) / p` and `t = -f^*(alpha) ∪ b`, so that
/// `db = f^*(δalpha)` and `dt = f^*(alpha ∪ δalpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerTrivialization {
    pub lift: GroupHom,
    pub b: Cochain,
    pub t: Cochain,
}

/// `f: G -> Z/p`; `lift: G -> Z/p^2` reducing to `f`, or `None` to search
/// all homomorphisms.
pub fn kummer_trivialization(
    f: &GroupHom,
    lift: Option<&GroupHom>,
) -> Result<KummerTrivialization, CsError> {
    let p = f.cod().order();
    if f.cod() != &catalog::cyclic(p) || p < 2 {
        return Err(CsError::InvalidDatum(
            "character must land in the standard cyclic group Z/p".into(),
        ));
    }
    let big = catalog::cyclic(p * p);
    let reduces = |l: &GroupHom| f.dom().elements().find(|&g| l.apply(g) % p != f.apply(g));
    let lift = match lift {
        Some(l) => {
            if l.dom() != f.dom() || l.cod() != &big {
                return Err(CsError::InvalidDatum(
                    "lift must map the same group to Z/p^2".into(),
                ));
            }
            if let Some(element) = reduces(l) {
                return Err(CsError::InvalidLift { element });
            }
            l.clone()
        }
        None => all_homs(f.dom(), &big)
            .into_iter()
            .find(|l| reduces(l).is_none())
            .ok_or(CsError::NoLift)?,
    };
    let coeffs = GModule::trivial(f.dom(), ZnModule::cyclic(p as u32)?);
    let pp = (p * p) as i64;
    let b = Cochain::from_fn(&coeffs, 1, |t| {
        let diff = (f.apply(t[0]) as i64 - lift.apply(t[0]) as i64).rem_euclid(pp);
        vec![diff / p as i64]
    })?;
    let alpha = Cochain::from_fn(&coeffs, 1, |t| vec![f.apply(t[0]) as i64])?;
    let t = cup(&alpha, &b)?.neg();
    Ok(KummerTrivialization { lift, b, t })
}
