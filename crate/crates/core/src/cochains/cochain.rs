use rand::Rng;

use super::CochainError;
use crate::groups::{FiniteGroup, GModule};

/// Mixed-radix encoding of tuples in `G^i`, first coordinate most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleIndex {
    pub order: usize,
    pub degree: usize,
}

impl TupleIndex {
    pub fn new(order: usize, degree: usize) -> Self {
        Self { order, degree }
    }

    pub fn count(&self) -> usize {
        self.order.pow(self.degree as u32)
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &g| acc * self.order + g)
    }

    pub fn decode_into(&self, mut index: usize, out: &mut [usize]) {
        for slot in out.iter_mut().rev() {
            *slot = index % self.order;
            index /= self.order;
        }
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        let mut out = vec![0; self.degree];
        self.decode_into(index, &mut out);
        out
    }
}

/// An inhomogeneous cochain `G^i -> M`, stored densely: tuples in
/// lexicographic order, each holding the `r` components of its value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    coeffs: GModule,
    degree: usize,
    values: Vec<u32>,
}

impl Cochain {
    pub fn new(coeffs: &GModule, degree: usize, values: Vec<u32>) -> Result<Self, CochainError> {
        let r = coeffs.rank();
        let expected = coeffs.group().order().pow(degree as u32) * r;
        if values.len() != expected {
            return Err(CochainError::TableLength {
                expected,
                found: values.len(),
            });
        }
        let orders = coeffs.orders();
        if let Some(pos) = values
            .iter()
            .enumerate()
            .position(|(i, &v)| v >= orders[i % r])
        {
            return Err(CochainError::ValueOutOfRange {
                index: pos / r,
                component: pos % r,
                value: values[pos],
            });
        }
        Ok(Self {
            coeffs: coeffs.clone(),
            degree,
            values,
        })
    }

    /// Build from reduced-or-not integers; each component is reduced mod its order.
    pub fn from_lifted(
        coeffs: &GModule,
        degree: usize,
        mut values: Vec<u32>,
    ) -> Result<Self, CochainError> {
        let r = coeffs.rank();
        let orders = coeffs.orders();
        for (i, v) in values.iter_mut().enumerate() {
            *v %= orders[i % r];
        }
        Self::new(coeffs, degree, values)
    }

    pub fn zero(coeffs: &GModule, degree: usize) -> Self {
        let len = coeffs.group().order().pow(degree as u32) * coeffs.rank();
        Self {
            coeffs: coeffs.clone(),
            degree,
            values: vec![0; len],
        }
    }

    /// Evaluate `f` on every tuple; values are reduced componentwise.
    pub fn from_fn<F: FnMut(&[usize]) -> Vec<i64>>(
        coeffs: &GModule,
        degree: usize,
        mut f: F,
    ) -> Result<Self, CochainError> {
        let idx = TupleIndex::new(coeffs.group().order(), degree);
        let r = coeffs.rank();
        let orders = coeffs.orders();
        let mut values = Vec::with_capacity(idx.count() * r);
        let mut tuple = vec![0; degree];
        for t in 0..idx.count() {
            idx.decode_into(t, &mut tuple);
            let v = f(&tuple);
            if v.len() != r {
                return Err(CochainError::TableLength {
                    expected: r,
                    found: v.len(),
                });
            }
            values.extend(
                v.iter()
                    .zip(orders)
                    .map(|(&x, &o)| x.rem_euclid(o as i64) as u32),
            );
        }
        Ok(Self {
            coeffs: coeffs.clone(),
            degree,
            values,
        })
    }

    pub fn random<R: Rng + ?Sized>(coeffs: &GModule, degree: usize, rng: &mut R) -> Self {
        let count = coeffs.group().order().pow(degree as u32);
        let orders = coeffs.orders();
        let values = (0..count)
            .flat_map(|_| {
                orders
                    .iter()
                    .map(|&o| rng.random_range(0..o))
                    .collect::<Vec<_>>()
            })
            .collect();
        Self {
            coeffs: coeffs.clone(),
            degree,
            values,
        }
    }

    pub fn coeffs(&self) -> &GModule {
        &self.coeffs
    }

    pub fn group(&self) -> &FiniteGroup {
        self.coeffs.group()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    pub fn rank(&self) -> usize {
        self.coeffs.rank()
    }

    pub fn indexer(&self) -> TupleIndex {
        TupleIndex::new(self.group().order(), self.degree)
    }

    pub fn tuple_count(&self) -> usize {
        self.indexer().count()
    }

    /// Value at the tuple with lexicographic index `t`.
    #[inline]
    pub fn at_index(&self, t: usize) -> &[u32] {
        let r = self.rank();
        &self.values[t * r..(t + 1) * r]
    }

    pub fn at(&self, tuple: &[usize]) -> &[u32] {
        assert_eq!(
            tuple.len(),
            self.degree,
            "tuple length must equal the degree"
        );
        self.at_index(self.indexer().encode(tuple))
    }

    /// Single-component value, for rank-one coefficients.
    pub fn scalar_at(&self, tuple: &[usize]) -> u32 {
        self.at(tuple)[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), CochainError> {
        if self.coeffs != other.coeffs {
            return Err(CochainError::CoefficientMismatch);
        }
        if self.degree != other.degree {
            return Err(CochainError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CochainError> {
        self.combine(1, other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CochainError> {
        self.combine(-1, other)
    }

    /// `self + k * other`.
    pub fn combine(&self, k: i64, other: &Self) -> Result<Self, CochainError> {
        self.check_compatible(other)?;
        let r = self.rank();
        let orders = self.coeffs.orders();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(i, (&a, &b))| {
                let o = orders[i % r] as i64;
                (a as i64 + k.rem_euclid(o) * b as i64).rem_euclid(o) as u32
            })
            .collect();
        Ok(Self {
            coeffs: self.coeffs.clone(),
            degree: self.degree,
            values,
        })
    }

    pub fn scale(&self, k: i64) -> Self {
        let r = self.rank();
        let orders = self.coeffs.orders();
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let o = orders[i % r] as i64;
                (a as i64 * k.rem_euclid(o)).rem_euclid(o) as u32
            })
            .collect();
        Self {
            coeffs: self.coeffs.clone(),
            degree: self.degree,
            values,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Same values over another coefficient module of identical shape
    /// (used after pulling back along a homomorphism).
    pub fn with_coeffs(&self, coeffs: &GModule) -> Result<Self, CochainError> {
        if coeffs.group().order() != self.group().order() || coeffs.module() != self.coeffs.module()
        {
            return Err(CochainError::CoefficientMismatch);
        }
        Ok(Self {
            coeffs: coeffs.clone(),
            degree: self.degree,
            values: self.values.clone(),
        })
    }

    /// True when the cochain vanishes on every tuple containing the identity.
    pub fn is_normalized(&self) -> bool {
        let idx = self.indexer();
        let mut tuple = vec![0; self.degree];
        (0..idx.count()).all(|t| {
            idx.decode_into(t, &mut tuple);
            !tuple.contains(&0) || self.at_index(t).iter().all(|&v| v == 0)
        })
    }
}

impl std::fmt::Debug for Cochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Cochain(degree {}, |G|={}, n={}, values={:?})",
            self.degree,
            self.group().order(),
            self.coeffs.modulus(),
            self.values
        )
    }
}
