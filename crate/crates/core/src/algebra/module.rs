use super::{AlgebraError, ModRing};

/// A finitely generated `Z/n`-module presented as `Z/n_1 + ... + Z/n_r`, each
/// `n_i` dividing `n`. Elements are `r`-tuples with `i`-th entry in `[0, n_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZnModule {
    ring: ModRing,
    orders: Vec<u32>,
}

impl ZnModule {
    pub fn new(modulus: u32, orders: Vec<u32>) -> Result<Self, AlgebraError> {
        let ring = ModRing::new(modulus)?;
        for &o in &orders {
            if o == 0 || !modulus.is_multiple_of(o) {
                return Err(AlgebraError::InvalidCyclicOrder { order: o, modulus });
            }
        }
        Ok(Self { ring, orders })
    }

    /// `Z/n` as a module over itself.
    pub fn cyclic(modulus: u32) -> Result<Self, AlgebraError> {
        Self::new(modulus, vec![modulus])
    }

    pub fn ring(&self) -> ModRing {
        self.ring
    }

    pub fn modulus(&self) -> u32 {
        self.ring.modulus()
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// True for `Z/n` itself (a single summand of full order).
    pub fn is_ring_itself(&self) -> bool {
        self.orders.len() == 1 && self.orders[0] == self.ring.modulus()
    }

    pub fn cardinality(&self) -> u64 {
        self.orders.iter().map(|&o| o as u64).product()
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        x.len() == self.rank() && x.iter().zip(&self.orders).all(|(v, o)| v < o)
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.rank()]
    }

    pub fn add_into(&self, acc: &mut [u32], x: &[u32]) {
        for ((a, &b), &o) in acc.iter_mut().zip(x).zip(&self.orders) {
            *a = ((*a as u64 + b as u64) % o as u64) as u32;
        }
    }

    pub fn sub_into(&self, acc: &mut [u32], x: &[u32]) {
        for ((a, &b), &o) in acc.iter_mut().zip(x).zip(&self.orders) {
            *a = ((*a as u64 + o as u64 - b as u64) % o as u64) as u32;
        }
    }

    /// Scale by the integer `k` (may be negative).
    pub fn scale_into(&self, acc: &mut [u32], k: i64) {
        for (a, &o) in acc.iter_mut().zip(&self.orders) {
            *a = ((*a as i64 * k.rem_euclid(o as i64)) % o as i64) as u32;
        }
    }

    /// Multiplier embedding the `i`-th summand into `Z/n` (`n / n_i`).
    pub fn embedding_scale(&self, i: usize) -> u32 {
        self.modulus() / self.orders[i]
    }

    /// Enumerate every element (only sensible for tiny modules).
    pub fn elements(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let total = self.cardinality();
        (0..total).map(move |mut code| {
            let mut v = vec![0u32; self.rank()];
            for i in (0..self.rank()).rev() {
                let o = self.orders[i] as u64;
                v[i] = (code % o) as u32;
                code /= o;
            }
            v
        })
    }
}
