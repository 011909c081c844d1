use std::sync::Arc;

use super::invariant::{check_rho, solve};
use super::{
    local_invariant, unramified_trivialization, CsError, GlobalDatum, InvariantValue, SolveOrder,
    ValidatedDatum,
};
use crate::cochains::{
    complex_for, differential, pullback, pullback_into, Cochain, CohomologyGroup,
};
use crate::groups::{conjugate_hom, GroupHom};
use crate::ops::homotopy;

/// One degree-2 cochain per place, read modulo local coboundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsorElement {
    pub components: Vec<Cochain>,
}

/// The fibre `d^{-1}(c ∘ rho_S) / B^2_S` under the action of
/// `H^2_S = prod_v H^2(G_v, Z/n)`.
#[derive(Clone, Debug)]
pub struct Torsor {
    pub rho_s: Vec<GroupHom>,
    pub member: TorsorElement,
    pub acting: Vec<Arc<CohomologyGroup>>,
}

impl Torsor {
    pub fn contains(&self, datum: &GlobalDatum, x: &TorsorElement) -> Result<bool, CsError> {
        is_member(datum, &self.rho_s, x)
    }
}

fn is_member(datum: &GlobalDatum, rho_s: &[GroupHom], x: &TorsorElement) -> Result<bool, CsError> {
    if x.components.len() != datum.places.len() || rho_s.len() != datum.places.len() {
        return Ok(false);
    }
    for ((rho_v, x_v), p) in rho_s.iter().zip(&x.components).zip(&datum.places) {
        let target = pullback_into(rho_v, &datum.three_cocycle, p.coeffs())?;
        if x_v.coeffs() != p.coeffs() || x_v.degree() != 2 || differential(x_v)? != target {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_local_homs(datum: &GlobalDatum, rho_s: &[GroupHom]) -> Result<(), CsError> {
    if rho_s.len() != datum.places.len() {
        return Err(CsError::InvalidDatum(format!(
            "expected {} local homs, got {}",
            datum.places.len(),
            rho_s.len()
        )));
    }
    for (v, (r, p)) in rho_s.iter().zip(&datum.places).enumerate() {
        if r.dom() != &p.local_group || r.cod() != &datum.gauge_group {
            return Err(CsError::InvalidDatum(format!(
                "local hom {v} has the wrong domain or codomain"
            )));
        }
    }
    Ok(())
}

/// Build `H(rho_S)` with a member chosen by the local solver.
pub fn torsor_build(
    datum: &GlobalDatum,
    rho_s: &[GroupHom],
    order: SolveOrder,
) -> Result<Torsor, CsError> {
    check_local_homs(datum, rho_s)?;
    let mut components = Vec::with_capacity(rho_s.len());
    let mut acting = Vec::with_capacity(rho_s.len());
    for (v, (rho_v, p)) in rho_s.iter().zip(&datum.places).enumerate() {
        let target = pullback_into(rho_v, &datum.three_cocycle, p.coeffs())?;
        components.push(solve(&target, order)?.ok_or(CsError::LocallyNontrivial { place: v })?);
        acting.push(complex_for(p.coeffs()).cohomology(2)?);
    }
    Ok(Torsor {
        rho_s: rho_s.to_vec(),
        member: TorsorElement { components },
        acting,
    })
}

/// The element of `H^2_S` carrying `y` to `x`: per place, coordinates of `[x_v - y_v]`.
pub fn torsor_difference(
    datum: &GlobalDatum,
    x: &TorsorElement,
    y: &TorsorElement,
) -> Result<Vec<Vec<u32>>, CsError> {
    if x.components.len() != datum.places.len() || y.components.len() != datum.places.len() {
        return Err(CsError::InvalidDatum(
            "torsor element has the wrong number of places".into(),
        ));
    }
    let mut out = Vec::with_capacity(datum.places.len());
    for (v, ((xv, yv), p)) in x
        .components
        .iter()
        .zip(&y.components)
        .zip(&datum.places)
        .enumerate()
    {
        let diff = xv.sub(yv)?;
        let cx = complex_for(p.coeffs());
        if !cx.is_cocycle(&diff)? {
            return Err(CsError::TorsorMismatch { place: v });
        }
        out.push(cx.cohomology(2)?.coordinates(&diff)?);
    }
    Ok(out)
}

/// Push a difference in `H^2_S` out to `(1/n)Z/Z` along `sum_v inv_v`,
/// evaluating each local invariant on the cohomology generators.
pub fn l_class(datum: &GlobalDatum, difference: &[Vec<u32>]) -> Result<InvariantValue, CsError> {
    let mut total = InvariantValue::zero(datum.modulus);
    for (v, (coords, p)) in difference.iter().zip(&datum.places).enumerate() {
        let h2 = complex_for(p.coeffs()).cohomology(2)?;
        for (&k, g) in coords.iter().zip(h2.generators()) {
            let inv =
                local_invariant(g, p).map_err(|_| CsError::NotInGeneratedSummand { place: v })?;
            total = total + (InvariantValue::new(k as i64 * inv.numerator as i64, datum.modulus));
        }
    }
    Ok(total)
}

/// `x ↦ x + (h_{a_v, c} ∘ rho_v)_v`, landing in `H(Ad_a ∘ rho_S)`. Returns
/// the new element and the conjugated local homs.
pub fn torsor_map(
    datum: &GlobalDatum,
    a_s: &[usize],
    rho_s: &[GroupHom],
    x: &TorsorElement,
) -> Result<(TorsorElement, Vec<GroupHom>), CsError> {
    check_local_homs(datum, rho_s)?;
    if a_s.len() != rho_s.len() || x.components.len() != rho_s.len() {
        return Err(CsError::InvalidDatum(
            "one gauge element per place is required".into(),
        ));
    }
    let mut components = Vec::with_capacity(rho_s.len());
    let mut conjugated = Vec::with_capacity(rho_s.len());
    for (((&a, rho_v), x_v), p) in a_s.iter().zip(rho_s).zip(&x.components).zip(&datum.places) {
        let h = homotopy(&[a], &datum.three_cocycle)?;
        components.push(x_v.add(&pullback_into(rho_v, &h, p.coeffs())?)?);
        conjugated.push(conjugate_hom(rho_v, a)?);
    }
    Ok((TorsorElement { components }, conjugated))
}

/// Local homs `rho ∘ i_v`.
pub fn local_homs(datum: &GlobalDatum, rho: &GroupHom) -> Result<Vec<GroupHom>, CsError> {
    datum
        .places
        .iter()
        .map(|p| Ok(rho.compose(&p.embedding)?))
        .collect()
}

/// `CS_c([rho])`: restrictions of a global `beta` with `d beta = rho^* c`.
pub fn cs_section(
    datum: &ValidatedDatum,
    rho: &GroupHom,
    order: SolveOrder,
) -> Result<TorsorElement, CsError> {
    check_rho(datum, rho)?;
    let z = pullback(rho, &datum.three_cocycle)?;
    let beta = solve(&z, order)?.ok_or(CsError::NoGlobalTrivialization)?;
    let components = (0..datum.places.len())
        .map(|v| datum.restrict(v, &beta))
        .collect::<Result<_, _>>()?;
    Ok(TorsorElement { components })
}

/// The tuple of unramified trivializations, a member of `H(rho_S)`.
pub fn unramified_basepoint(datum: &GlobalDatum, rho: &GroupHom) -> Result<TorsorElement, CsError> {
    let components = (0..datum.places.len())
        .map(|v| unramified_trivialization(datum, v, rho))
        .collect::<Result<_, _>>()?;
    Ok(TorsorElement { components })
}

/// For `a` centralizing the image of `rho`, the shift `sum_v inv(r_v(h_{a,c} ∘ rho))`
/// by which the torsor map moves every L-class. Reciprocity forces zero.
pub fn automorphism_shift(
    datum: &ValidatedDatum,
    rho: &GroupHom,
    a: usize,
) -> Result<InvariantValue, CsError> {
    check_rho(datum, rho)?;
    if &conjugate_hom(rho, a)? != rho {
        return Err(CsError::NotAutomorphism { a });
    }
    let h = homotopy(&[a], &datum.three_cocycle)?;
    let global = pullback_into(rho, &h, &datum.global_coeffs())?;
    let mut total = InvariantValue::zero(datum.modulus);
    for v in 0..datum.places.len() {
        total = total + (local_invariant(&datum.restrict(v, &global)?, &datum.places[v])?);
    }
    Ok(total)
}
