use super::OpsError;
use crate::cochains::Cochain;

/// `f^a(g_1..g_i) = a^{-1} . f(a g_1 a^{-1}, .., a g_i a^{-1})`.
pub fn conjugate(f: &Cochain, a: usize) -> Result<Cochain, OpsError> {
    let g = f.group();
    if a >= g.order() {
        return Err(OpsError::ElementOutOfRange(a));
    }
    let coeffs = f.coeffs();
    let idx = f.indexer();
    let a_inv = g.inv(a);
    let mut tuple = vec![0usize; f.degree()];
    let mut values = Vec::with_capacity(f.values().len());
    let mut out = vec![0u32; f.rank()];
    for t in 0..idx.count() {
        idx.decode_into(t, &mut tuple);
        for x in tuple.iter_mut() {
            *x = g.conj(a, *x);
        }
        coeffs.act_into(a_inv, f.at_index(idx.encode(&tuple)), &mut out);
        values.extend_from_slice(&out);
    }
    Ok(Cochain::new(coeffs, f.degree(), values)?)
}
