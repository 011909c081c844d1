use super::AlgebraError;

/// Largest modulus accepted by [`ModRing`]. Keeps every product of two
/// representatives inside a `u64` with room to spare, and `n^2` inside `u64`
/// for Bockstein lifts.
pub const MAX_MODULUS: u32 = 1 << 16;

/// The ring `Z/n` with `2 <= n <= 2^16`. Elements are `u32` representatives in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModRing {
    n: u32,
}

impl ModRing {
    pub fn new(modulus: u32) -> Result<Self, AlgebraError> {
        if !(2..=MAX_MODULUS).contains(&modulus) {
            return Err(AlgebraError::InvalidModulus(modulus));
        }
        Ok(Self { n: modulus })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.n as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.n as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.n as u64 - b as u64) % self.n as u64) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.n - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.n as u64) as u32
    }

    /// `a + k*b`, the row-operation primitive.
    #[inline]
    pub fn mul_add(&self, a: u32, k: u32, b: u32) -> u32 {
        ((a as u64 + k as u64 * b as u64) % self.n as u64) as u32
    }

    pub fn is_unit(&self, a: u32) -> bool {
        gcd(a as u64, self.n as u64) == 1
    }

    pub fn inverse(&self, a: u32) -> Option<u32> {
        let (g, s, _) = xgcd(a as i64, self.n as i64);
        (g == 1).then(|| self.reduce(s))
    }

    /// The canonical associate of `a`: the divisor `gcd(a, n)` of `n`
    /// (with `0` for the zero element).
    pub fn associate(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            gcd(a as u64, self.n as u64) as u32
        }
    }

    /// A unit `u` with `u * a == gcd(a, n) (mod n)`.
    pub fn normalizing_unit(&self, a: u32) -> u32 {
        if a == 0 {
            return 1;
        }
        let n = self.n as u64;
        let g = gcd(a as u64, n);
        let m = n / g;
        if m == 1 {
            return 1;
        }
        let a_red = (a as u64 / g) % m;
        let (_, s, _) = xgcd(a_red as i64, m as i64);
        let base = s.rem_euclid(m as i64) as u64;
        // lift the inverse mod n/g to a unit mod n
        let mut u = base;
        while gcd(u, n) != 1 {
            u += m;
        }
        (u % n) as u32
    }

    /// Additive order of `a` in `Z/n`.
    pub fn additive_order(&self, a: u32) -> u32 {
        self.n / gcd(a as u64, self.n as u64) as u32
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Extended gcd over the integers: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_moduli() {
        assert!(ModRing::new(0).is_err());
        assert!(ModRing::new(1).is_err());
        assert!(ModRing::new(MAX_MODULUS + 1).is_err());
        assert!(ModRing::new(MAX_MODULUS).is_ok());
    }

    #[test]
    fn normalizing_unit_hits_the_gcd() {
        for n in 2..=60u32 {
            let r = ModRing::new(n).unwrap();
            for a in 1..n {
                let u = r.normalizing_unit(a);
                assert!(r.is_unit(u), "n={n} a={a} u={u}");
                assert_eq!(r.mul(u, a), r.associate(a), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn xgcd_bezout() {
        for a in -20i64..20 {
            for b in -20i64..20 {
                let (g, s, t) = xgcd(a, b);
                assert_eq!(s * a + t * b, g);
                assert_eq!(g as u64, gcd(a.unsigned_abs(), b.unsigned_abs()));
            }
        }
    }

    #[test]
    fn inverse_only_for_units() {
        let r = ModRing::new(12).unwrap();
        assert_eq!(r.inverse(5), Some(5));
        assert_eq!(r.inverse(4), None);
        assert_eq!(r.additive_order(4), 3);
    }
}
