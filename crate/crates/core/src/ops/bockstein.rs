use super::OpsError;
use crate::algebra::ZnModule;
use crate::cochains::{differential, Cochain};
use crate::groups::GModule;

/// Lift a scalar action on `Z/n` to `Z/n^2`, sending `-1` to `-1` and any
/// other unit to its representative in `[0, n)`.
fn lifted_coeffs(coeffs: &GModule) -> Result<GModule, OpsError> {
    let n = coeffs.modulus();
    let big = n
        .checked_mul(n)
        .filter(|&b| b <= crate::algebra::MAX_MODULUS)
        .ok_or_else(|| {
            OpsError::IncompatibleAction(format!(
                "n^2 = {} exceeds the supported modulus",
                n as u64 * n as u64
            ))
        })?;
    if coeffs.is_trivial() {
        return Ok(GModule::trivial(coeffs.group(), ZnModule::cyclic(big)?));
    }
    let scalars: Vec<u32> = coeffs
        .group()
        .elements()
        .map(|g| {
            let s = coeffs.scalar_of(g).expect("rank one");
            if s == n - 1 {
                big - 1
            } else {
                s
            }
        })
        .collect();
    GModule::scalar(coeffs.group(), big, &scalars)
        .map_err(|e| OpsError::IncompatibleAction(format!("action does not lift to Z/n^2: {e}")))
}

/// Bockstein of `0 -> Z/n -> Z/n^2 -> Z/n -> 0`: `δf = d(s∘f) / n`, where `s`
/// sends `i mod n` to `i mod n^2`.
pub fn bockstein(f: &Cochain) -> Result<Cochain, OpsError> {
    let coeffs = f.coeffs();
    if !coeffs.module().is_ring_itself() {
        return Err(OpsError::IncompatibleAction(
            "Bockstein needs Z/n coefficients".into(),
        ));
    }
    let n = coeffs.modulus();
    let big = lifted_coeffs(coeffs)?;
    let lifted = Cochain::new(&big, f.degree(), f.values().to_vec())?;
    let d = differential(&lifted)?;
    let mut values = Vec::with_capacity(d.values().len());
    for (t, &v) in d.values().iter().enumerate() {
        if v % n != 0 {
            return Err(OpsError::NotDivisible {
                tuple: d.indexer().decode(t),
            });
        }
        values.push(v / n);
    }
    Ok(Cochain::new(coeffs, f.degree() + 1, values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn carry_table() {
        for n in 2..=5u32 {
            let g = catalog::cyclic(n as usize);
            let m = GModule::trivial(&g, ZnModule::cyclic(n).unwrap());
            let alpha = Cochain::from_fn(&m, 1, |t| vec![t[0] as i64]).unwrap();
            let b = bockstein(&alpha).unwrap();
            for i in 0..n as usize {
                for j in 0..n as usize {
                    assert_eq!(b.scalar_at(&[i, j]), u32::from(i + j >= n as usize));
                }
            }
            assert!(differential(&b).unwrap().is_zero());
        }
    }

    #[test]
    fn zero_maps_to_zero() {
        let g = catalog::cyclic(3);
        let m = GModule::trivial(&g, ZnModule::cyclic(3).unwrap());
        assert!(bockstein(&Cochain::zero(&m, 2)).unwrap().is_zero());
    }

    #[test]
    fn non_cocycles_are_not_divisible() {
        let g = catalog::cyclic(2);
        let m = GModule::trivial(&g, ZnModule::cyclic(2).unwrap());
        let f = Cochain::new(&m, 1, vec![1, 0]).unwrap();
        assert!(matches!(bockstein(&f), Err(OpsError::NotDivisible { .. })));
    }
}
