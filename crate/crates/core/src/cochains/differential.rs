use super::cochain::{Cochain, TupleIndex};
use super::{CochainError, Limits};
use crate::groups::{GModule, GroupHom};

/// Signed inhomogeneous differential
/// `df(g_1..g_{i+1}) = g_1 f(g_2..) + sum_k (-1)^k f(..g_k g_{k+1}..) + (-1)^{i+1} f(g_1..g_i)`.
pub fn differential(f: &Cochain) -> Result<Cochain, CochainError> {
    differential_with(f, &Limits::default())
}

pub fn differential_with(f: &Cochain, limits: &Limits) -> Result<Cochain, CochainError> {
    let i = f.degree();
    limits.check(i + 1)?;
    let coeffs = f.coeffs();
    let g = coeffs.group();
    let m = g.order();
    let r = coeffs.rank();
    let n = coeffs.modulus() as u64;
    let orders = coeffs.orders();
    let out = TupleIndex::new(m, i + 1);
    let pow: Vec<usize> = (0..=i + 1).map(|e| m.pow(e as u32)).collect();
    let mut values = vec![0u32; out.count() * r];
    let mut tuple = vec![0usize; i + 1];
    let mut acc = vec![0u64; r];
    let mut tmp = vec![0u32; r];
    for s in 0..out.count() {
        out.decode_into(s, &mut tuple);
        coeffs.act_into(tuple[0], f.at_index(s % pow[i]), &mut tmp);
        for (a, &t) in acc.iter_mut().zip(&tmp) {
            *a = t as u64;
        }
        for k in 1..=i {
            let merged = g.mul(tuple[k - 1], tuple[k]);
            let idx = (s / pow[i + 2 - k] * m + merged) * pow[i - k] + s % pow[i - k];
            add_signed(&mut acc, f.at_index(idx), k % 2 == 1, n);
        }
        add_signed(&mut acc, f.at_index(s / m), (i + 1) % 2 == 1, n);
        for (c, (&a, &o)) in acc.iter().zip(orders).enumerate() {
            values[s * r + c] = (a % o as u64) as u32;
        }
    }
    Cochain::new(coeffs, i + 1, values)
}

#[inline]
fn add_signed(acc: &mut [u64], v: &[u32], negative: bool, n: u64) {
    for (a, &x) in acc.iter_mut().zip(v) {
        *a += if negative { n - x as u64 } else { x as u64 };
    }
}

/// `(rho^* f)(g_1..g_i) = f(rho g_1, .., rho g_i)`, with the action pulled back along `rho`.
pub fn pullback(rho: &GroupHom, f: &Cochain) -> Result<Cochain, CochainError> {
    if rho.cod() != f.group() {
        return Err(CochainError::GroupMismatch);
    }
    let coeffs = f.coeffs().pullback(rho)?;
    Ok(pullback_values(rho, f, &coeffs))
}

/// Pullback landing in a caller-supplied module, which must be the pullback
/// of `f`'s module along `rho`.
pub fn pullback_into(
    rho: &GroupHom,
    f: &Cochain,
    coeffs: &GModule,
) -> Result<Cochain, CochainError> {
    if rho.cod() != f.group() || rho.dom() != coeffs.group() {
        return Err(CochainError::GroupMismatch);
    }
    if &f.coeffs().pullback(rho)? != coeffs {
        return Err(CochainError::CoefficientMismatch);
    }
    Ok(pullback_values(rho, f, coeffs))
}

fn pullback_values(rho: &GroupHom, f: &Cochain, coeffs: &GModule) -> Cochain {
    let i = f.degree();
    let r = coeffs.rank();
    let dom = TupleIndex::new(rho.dom().order(), i);
    let cod = f.indexer();
    let mut tuple = vec![0usize; i];
    let mut values = Vec::with_capacity(dom.count() * r);
    for t in 0..dom.count() {
        dom.decode_into(t, &mut tuple);
        for x in tuple.iter_mut() {
            *x = rho.apply(*x);
        }
        values.extend_from_slice(f.at_index(cod.encode(&tuple)));
    }
    Cochain::new(coeffs, i, values).expect("pullback preserves shape")
}

/// Rows of the lifted differential `C^i -> C^{i+1}` over `(Z/n)^r`: row
/// `t*r + c` is a lift of `d` applied to the basis cochain with value `e_c`
/// at tuple `t`. Entries are integers mod `n`.
pub(crate) fn differential_rows(coeffs: &GModule, i: usize) -> Vec<Vec<u32>> {
    let g = coeffs.group();
    let m = g.order();
    let r = coeffs.rank();
    let n = coeffs.modulus();
    let out = TupleIndex::new(m, i + 1);
    let pow: Vec<usize> = (0..=i + 1).map(|e| m.pow(e as u32)).collect();
    let width = out.count() * r;
    let mut rows = vec![vec![0u32; width]; pow[i] * r];
    let bump = |row: &mut Vec<u32>, col: usize, v: u32| {
        row[col] = ((row[col] as u64 + v as u64) % n as u64) as u32;
    };
    let mut tuple = vec![0usize; i + 1];
    for s in 0..out.count() {
        out.decode_into(s, &mut tuple);
        let mat = coeffs.matrix(tuple[0]);
        let tail = s % pow[i];
        for c in 0..r {
            for k in 0..r {
                let t = mat[k * r + c];
                if t != 0 {
                    bump(&mut rows[tail * r + c], s * r + k, t);
                }
            }
        }
        for k in 1..=i {
            let merged = g.mul(tuple[k - 1], tuple[k]);
            let idx = (s / pow[i + 2 - k] * m + merged) * pow[i - k] + s % pow[i - k];
            let v = if k % 2 == 1 { n - 1 } else { 1 };
            for c in 0..r {
                bump(&mut rows[idx * r + c], s * r + c, v);
            }
        }
        let v = if (i + 1) % 2 == 1 { n - 1 } else { 1 };
        for c in 0..r {
            bump(&mut rows[(s / m) * r + c], s * r + c, v);
        }
    }
    rows
}

/// Relations `n_k e_{t,k}` presenting `C^i(G, M)` as a quotient of `C^i(G, (Z/n)^r)`.
pub(crate) fn relation_rows(coeffs: &GModule, i: usize) -> Vec<Vec<u32>> {
    let r = coeffs.rank();
    let n = coeffs.modulus();
    let count = coeffs.group().order().pow(i as u32);
    let mut rows = Vec::new();
    for t in 0..count {
        for (k, &o) in coeffs.orders().iter().enumerate() {
            if o != n {
                let mut row = vec![0u32; count * r];
                row[t * r + k] = o % n;
                rows.push(row);
            }
        }
    }
    rows
}
