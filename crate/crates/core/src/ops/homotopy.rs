use std::fmt;

use super::OpsError;
use crate::cochains::{Cochain, Limits, TupleIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Horizontal,
    Vertical,
}

/// Monotone lattice path from `(0, 0)` to `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShufflePath {
    n: usize,
    k: usize,
    steps: Vec<Step>,
}

impl ShufflePath {
    pub fn new(steps: Vec<Step>) -> Self {
        let k = steps.iter().filter(|s| **s == Step::Vertical).count();
        Self {
            n: steps.len() - k,
            k,
            steps,
        }
    }

    /// Parse a word over `H`/`V`.
    pub fn parse(word: &str) -> Option<Self> {
        word.chars()
            .map(|c| match c {
                'H' | 'h' => Some(Step::Horizontal),
                'V' | 'v' => Some(Step::Vertical),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// All `binomial(n + k, k)` paths, in lexicographic order with `H < V`.
    pub fn all(n: usize, k: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut steps = Vec::with_capacity(n + k);
        fn rec(
            h: usize,
            v: usize,
            steps: &mut Vec<Step>,
            out: &mut Vec<ShufflePath>,
            n: usize,
            k: usize,
        ) {
            if h == 0 && v == 0 {
                out.push(ShufflePath {
                    n,
                    k,
                    steps: steps.clone(),
                });
                return;
            }
            if h > 0 {
                steps.push(Step::Horizontal);
                rec(h - 1, v, steps, out, n, k);
                steps.pop();
            }
            if v > 0 {
                steps.push(Step::Vertical);
                rec(h, v - 1, steps, out, n, k);
                steps.pop();
            }
        }
        rec(n, k, &mut steps, &mut out, n, k);
        out
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n, self.k)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Grid squares lying above the path: a horizontal step at height `t`
    /// has `k - t` squares over it.
    pub fn squares_above(&self) -> usize {
        let mut t = 0;
        let mut count = 0;
        for s in &self.steps {
            match s {
                Step::Vertical => t += 1,
                Step::Horizontal => count += self.k - t,
            }
        }
        count
    }

    /// Shuffle inversions: pairs (horizontal, later vertical).
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for (i, s) in self.steps.iter().enumerate() {
            if *s == Step::Horizontal {
                count += self.steps[i + 1..]
                    .iter()
                    .filter(|x| **x == Step::Vertical)
                    .count();
            }
        }
        count
    }

    /// `(-1)^{squares above}`.
    pub fn sign(&self) -> i64 {
        let sq = self.squares_above();
        debug_assert_eq!(sq % 2, self.inversions() % 2);
        if sq.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The argument tuple `x^P` fed to `f`, for group elements given by index.
    pub fn arguments(
        &self,
        group: &crate::groups::FiniteGroup,
        avec: &[usize],
        x: &[usize],
    ) -> Vec<usize> {
        let k = avec.len();
        let mut out = Vec::with_capacity(self.steps.len());
        let (mut t, mut s) = (0usize, 0usize);
        let mut conj = 0usize;
        for step in &self.steps {
            match step {
                Step::Vertical => {
                    let a = avec[k - t - 1];
                    out.push(group.inv(a));
                    conj = group.mul(a, conj);
                    t += 1;
                }
                Step::Horizontal => {
                    out.push(group.conj(conj, x[s]));
                    s += 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for ShufflePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Horizontal => "H",
                Step::Vertical => "V",
            })?;
        }
        Ok(())
    }
}

/// `h_{a_1..a_k, f}(x_0..x_{n-1}) = sum_P (-1)^{|P|} f(x^P)` for `f` of degree `n + k`.
pub fn homotopy(avec: &[usize], f: &Cochain) -> Result<Cochain, OpsError> {
    homotopy_with(avec, f, &Limits::default())
}

pub fn homotopy_with(avec: &[usize], f: &Cochain, limits: &Limits) -> Result<Cochain, OpsError> {
    let g = f.group();
    if avec.is_empty() {
        return Err(OpsError::EmptyElements);
    }
    if let Some(&bad) = avec.iter().find(|&&a| a >= g.order()) {
        return Err(OpsError::ElementOutOfRange(bad));
    }
    limits.check(f.degree())?;
    let k = avec.len();
    let n = f.degree().checked_sub(k).ok_or(OpsError::DegreeTooSmall {
        degree: f.degree(),
        needed: k,
    })?;
    let coeffs = f.coeffs();
    let nmod = coeffs.modulus() as u64;
    let orders = coeffs.orders();
    let r = coeffs.rank();
    let paths: Vec<(ShufflePath, bool)> = ShufflePath::all(n, k)
        .into_iter()
        .map(|p| {
            let neg = p.sign() < 0;
            (p, neg)
        })
        .collect();
    let out = TupleIndex::new(g.order(), n);
    let src = f.indexer();
    let mut x = vec![0usize; n];
    let mut acc = vec![0u64; r];
    let mut values = Vec::with_capacity(out.count() * r);
    for s in 0..out.count() {
        out.decode_into(s, &mut x);
        acc.iter_mut().for_each(|a| *a = 0);
        for (p, neg) in &paths {
            let v = f.at_index(src.encode(&p.arguments(g, avec, &x)));
            for (a, &y) in acc.iter_mut().zip(v) {
                *a = (*a + if *neg { nmod - y as u64 } else { y as u64 }) % nmod;
            }
        }
        values.extend(acc.iter().zip(orders).map(|(&a, &o)| (a % o as u64) as u32));
    }
    Ok(Cochain::new(coeffs, n, values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ZnModule;
    use crate::groups::{catalog, GModule};

    #[test]
    fn worked_path() {
        let p = ShufflePath::parse("HHVHVHHVV").unwrap();
        assert_eq!(p.dims(), (5, 4));
        assert_eq!(p.squares_above(), 15);
        assert_eq!(p.sign(), -1);
        // Q8 so that conjugation is visible; x_s and a_i chosen arbitrarily
        let g = catalog::quaternion();
        let (a1, a2, a3, a4) = (2, 4, 6, 3);
        let x = [2, 4, 5, 6, 7];
        let c = |e: usize, y: usize| g.conj(e, y);
        let a34 = g.mul(a3, a4);
        let expected = vec![
            x[0],
            x[1],
            g.inv(a4),
            c(a4, x[2]),
            g.inv(a3),
            c(a34, x[3]),
            c(a34, x[4]),
            g.inv(a2),
            g.inv(a1),
        ];
        assert_eq!(p.arguments(&g, &[a1, a2, a3, a4], &x), expected);
    }

    #[test]
    fn path_counts() {
        assert_eq!(ShufflePath::all(5, 4).len(), 126);
        assert_eq!(ShufflePath::all(0, 3).len(), 1);
        for p in ShufflePath::all(3, 2) {
            assert_eq!(p.squares_above(), p.inversions());
        }
    }

    #[test]
    fn single_element_degree_one() {
        // n = 0: h_{a,c} = c(a^{-1})
        let g = catalog::cyclic(5);
        let m = GModule::trivial(&g, ZnModule::cyclic(5).unwrap());
        let c = Cochain::from_fn(&m, 1, |t| vec![3 * t[0] as i64]).unwrap();
        for a in g.elements() {
            let h = homotopy(&[a], &c).unwrap();
            assert_eq!(h.scalar_at(&[]), c.scalar_at(&[g.inv(a)]));
        }
    }

    #[test]
    fn too_small_degree() {
        let g = catalog::cyclic(2);
        let m = GModule::trivial(&g, ZnModule::cyclic(2).unwrap());
        let f = Cochain::zero(&m, 1);
        assert!(matches!(
            homotopy(&[1, 1], &f),
            Err(OpsError::DegreeTooSmall { .. })
        ));
        assert!(matches!(homotopy(&[], &f), Err(OpsError::EmptyElements)));
    }
}
