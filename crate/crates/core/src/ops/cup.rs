use super::OpsError;
use crate::cochains::{Cochain, TupleIndex};
use crate::groups::GModule;

/// A bilinear, equivariant pairing `L x R -> T` given on basis vectors:
/// `tensor[k][a][b]` is the `k`-th component of `pair(e_a, e_b)`.
#[derive(Clone, Debug)]
pub struct Pairing {
    left: GModule,
    right: GModule,
    target: GModule,
    tensor: Vec<Vec<Vec<u32>>>,
}

impl Pairing {
    pub fn new(
        left: &GModule,
        right: &GModule,
        target: &GModule,
        tensor: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self, OpsError> {
        let g = left.group();
        if right.group() != g || target.group() != g {
            return Err(OpsError::IncompatiblePairing(
                "modules live over different groups".into(),
            ));
        }
        let (rl, rr, rt) = (left.rank(), right.rank(), target.rank());
        if tensor.len() != rt
            || tensor
                .iter()
                .any(|m| m.len() != rl || m.iter().any(|row| row.len() != rr))
        {
            return Err(OpsError::IncompatiblePairing(
                "tensor shape does not match the ranks".into(),
            ));
        }
        let (ol, or, ot) = (left.orders(), right.orders(), target.orders());
        let mut tensor = tensor;
        for (k, m) in tensor.iter_mut().enumerate() {
            for (a, row) in m.iter_mut().enumerate() {
                for (b, t) in row.iter_mut().enumerate() {
                    *t %= ot[k];
                    let t64 = *t as u64;
                    if !(t64 * ol[a] as u64).is_multiple_of(ot[k] as u64)
                        || !(t64 * or[b] as u64).is_multiple_of(ot[k] as u64)
                    {
                        return Err(OpsError::IncompatiblePairing(format!(
                            "entry ({k}, {a}, {b}) is not well defined on the cyclic orders"
                        )));
                    }
                }
            }
        }
        let p = Self {
            left: left.clone(),
            right: right.clone(),
            target: target.clone(),
            tensor,
        };
        for h in g.elements() {
            for a in 0..rl {
                let mut ea = vec![0u32; rl];
                ea[a] = 1 % ol[a];
                for b in 0..rr {
                    let mut eb = vec![0u32; rr];
                    eb[b] = 1 % or[b];
                    let lhs = target.act(h, &p.apply(&ea, &eb));
                    let rhs = p.apply(&left.act(h, &ea), &right.act(h, &eb));
                    if lhs != rhs {
                        return Err(OpsError::IncompatiblePairing(format!(
                            "pairing is not equivariant at element {h}, basis pair ({a}, {b})"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Multiplication `Z/n x Z/n -> Z/n` for rank-one modules whose actions
    /// are by scalars; the target carries the product action.
    pub fn ring_multiplication(left: &GModule, right: &GModule) -> Result<Self, OpsError> {
        if !left.module().is_ring_itself()
            || left.module() != right.module()
            || left.group() != right.group()
        {
            return Err(OpsError::IncompatiblePairing(
                "ring multiplication needs both coefficients to be Z/n itself".into(),
            ));
        }
        let n = left.modulus();
        let target = if left.is_trivial() {
            right.clone()
        } else if right.is_trivial() {
            left.clone()
        } else {
            let scalars: Vec<u32> = left
                .group()
                .elements()
                .map(|g| {
                    (left.scalar_of(g).unwrap_or(1) as u64 * right.scalar_of(g).unwrap_or(1) as u64
                        % n as u64) as u32
                })
                .collect();
            GModule::scalar(left.group(), n, &scalars)?
        };
        Self::new(left, right, &target, vec![vec![vec![1]]])
    }

    pub fn target(&self) -> &GModule {
        &self.target
    }

    pub fn apply(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let ot = self.target.orders();
        self.tensor
            .iter()
            .zip(ot)
            .map(|(m, &o)| {
                let o = o as u64;
                let mut s = 0u64;
                for (row, &ua) in m.iter().zip(u) {
                    if ua == 0 {
                        continue;
                    }
                    for (&t, &vb) in row.iter().zip(v) {
                        s = (s + t as u64 * ua as u64 % o * vb as u64) % o;
                    }
                }
                s as u32
            })
            .collect()
    }
}

/// Cup product with ring multiplication on `Z/n` coefficients.
pub fn cup(x: &Cochain, y: &Cochain) -> Result<Cochain, OpsError> {
    let pairing = Pairing::ring_multiplication(x.coeffs(), y.coeffs())?;
    cup_with(x, y, &pairing)
}

/// `(x ∪ y)(g_1..g_{p+q}) = x(g_1..g_p) · ((g_1 ⋯ g_p) . y(g_{p+1}..g_{p+q}))`.
pub fn cup_with(x: &Cochain, y: &Cochain, pairing: &Pairing) -> Result<Cochain, OpsError> {
    if x.coeffs() != &pairing.left || y.coeffs() != &pairing.right {
        return Err(OpsError::IncompatiblePairing(
            "cochain coefficients differ from the pairing".into(),
        ));
    }
    let g = x.group();
    let (p, q) = (x.degree(), y.degree());
    let out = TupleIndex::new(g.order(), p + q);
    let qpow = g.order().pow(q as u32);
    let mut values = Vec::with_capacity(out.count() * pairing.target.rank());
    let mut tuple = vec![0usize; p + q];
    let mut moved = vec![0u32; y.rank()];
    for s in 0..out.count() {
        out.decode_into(s, &mut tuple);
        let front = g.product(&tuple[..p]);
        y.coeffs().act_into(front, y.at_index(s % qpow), &mut moved);
        values.extend(pairing.apply(x.at_index(s / qpow), &moved));
    }
    Ok(Cochain::new(&pairing.target, p + q, values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ZnModule;
    use crate::groups::{catalog, GroupHom};

    #[test]
    fn unit_is_neutral() {
        let g = catalog::symmetric3();
        let m = GModule::trivial(&g, ZnModule::cyclic(3).unwrap());
        let one = Cochain::new(&m, 0, vec![1]).unwrap();
        let x = Cochain::from_fn(&m, 2, |t| vec![(t[0] * 2 + t[1]) as i64]).unwrap();
        assert_eq!(cup(&x, &one).unwrap(), x);
        assert_eq!(cup(&one, &x).unwrap(), x);
    }

    #[test]
    fn sign_twists_multiply() {
        let s3 = catalog::symmetric3();
        let sgn = GroupHom::new(&s3, &catalog::cyclic(2), vec![0, 1, 1, 0, 0, 1]).unwrap();
        let twisted = GModule::sign(&sgn, 3).unwrap();
        let p = Pairing::ring_multiplication(&twisted, &twisted).unwrap();
        assert!(p.target().is_trivial());
    }

    #[test]
    fn non_equivariant_pairing_is_rejected() {
        let z2 = catalog::cyclic(2);
        let triv = GModule::trivial(&z2, ZnModule::cyclic(3).unwrap());
        let twisted = GModule::sign(&GroupHom::identity(&z2), 3).unwrap();
        assert!(Pairing::new(&twisted, &triv, &triv, vec![vec![vec![1]]]).is_err());
        assert!(Pairing::new(&twisted, &triv, &twisted, vec![vec![vec![1]]]).is_ok());
    }
}
