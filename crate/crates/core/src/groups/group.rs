use std::fmt;
use std::sync::Arc;

use super::GroupError;

/// Witness for a failed group axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    /// `(a*b)*c != a*(b*c)`.
    Associativity { a: usize, b: usize, c: usize },
    /// Element 0 fails to act as identity on `x`.
    Identity { x: usize },
    /// No `y` with `x*y = y*x = 0`.
    NoInverse { x: usize },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Associativity { a, b, c } => write!(f, "associativity fails at ({a}, {b}, {c})"),
            Self::Identity { x } => write!(f, "element 0 is not an identity for {x}"),
            Self::NoInverse { x } => write!(f, "element {x} has no inverse"),
        }
    }
}

#[derive(PartialEq, Eq, Hash)]
struct GroupData {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// A finite group given by its full multiplication table. Element `0` is the
/// identity. Cloning is cheap (shared table).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup(Arc<GroupData>);

impl FiniteGroup {
    /// Validate a multiplication table (`table[a][b] = a*b`).
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let m = table.len();
        if m == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let mut mul = Vec::with_capacity(m * m);
        for (r, row) in table.iter().enumerate() {
            if row.len() != m {
                return Err(GroupError::NotSquare {
                    row: r,
                    len: row.len(),
                    order: m,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= m {
                    return Err(GroupError::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                    });
                }
                mul.push(v as u32);
            }
        }
        let at = |a: usize, b: usize| mul[a * m + b] as usize;
        let mut inv = vec![0u32; m];
        for (x, slot) in inv.iter_mut().enumerate() {
            let y = (0..m).find(|&y| at(x, y) == 0 && at(y, x) == 0);
            match y {
                Some(y) => *slot = y as u32,
                None => return Err(GroupError::NotAGroup(AxiomFailure::NoInverse { x })),
            }
        }
        if let Some(x) = (0..m).find(|&x| at(0, x) != x || at(x, 0) != x) {
            return Err(GroupError::NotAGroup(AxiomFailure::Identity { x }));
        }
        for a in 0..m {
            for b in 0..m {
                let ab = at(a, b);
                for c in 0..m {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAGroup(AxiomFailure::Associativity {
                            a,
                            b,
                            c,
                        }));
                    }
                }
            }
        }
        Ok(Self(Arc::new(GroupData { order: m, mul, inv })))
    }

    /// Build from a closed set of labels under an associative operation, with
    /// `elements[0]` the identity.
    pub fn from_elements<T: PartialEq, F: Fn(&T, &T) -> T>(
        elements: &[T],
        op: F,
    ) -> Result<Self, GroupError> {
        let index = |x: &T| elements.iter().position(|e| e == x);
        let mut table = Vec::with_capacity(elements.len());
        for (r, a) in elements.iter().enumerate() {
            let mut row = Vec::with_capacity(elements.len());
            for (c, b) in elements.iter().enumerate() {
                let v = index(&op(a, b)).ok_or(GroupError::NotClosed { row: r, col: c })?;
                row.push(v);
            }
            table.push(row);
        }
        Self::from_table(&table)
    }

    pub fn trivial() -> Self {
        Self::from_table(&[vec![0]]).expect("trivial group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    /// `a x a^{-1}`.
    #[inline]
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(a, x), self.inv(a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Product `g_1 g_2 ... g_k` (identity for the empty list).
    pub fn product(&self, gs: &[usize]) -> usize {
        gs.iter().fold(0, |acc, &g| self.mul(acc, g))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Direct product; `(i, j)` gets index `i * |other| + j`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let (m, k) = (self.order(), other.order());
        let table: Vec<Vec<usize>> = (0..m * k)
            .map(|x| {
                (0..m * k)
                    .map(|y| self.mul(x / k, y / k) * k + other.mul(x % k, y % k))
                    .collect()
            })
            .collect();
        Self::from_table(&table).expect("direct product of groups")
    }

    /// Smallest subgroup containing `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// A small generating set, chosen greedily by element index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for x in self.elements() {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.generated(&gens);
            }
        }
        gens
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        elems.contains(&0)
            && elems.iter().all(|&x| x < self.order())
            && elems.iter().all(|&a| {
                elems
                    .iter()
                    .all(|&b| elems.contains(&self.mul(a, self.inv(b))))
            })
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        self.is_subgroup(elems)
            && self
                .elements()
                .all(|g| elems.iter().all(|&x| elems.contains(&self.conj(g, x))))
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_table() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn missing_inverse_is_reported() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NotAGroup(AxiomFailure::NoInverse { x: 1 }));
    }

    #[test]
    fn non_associative_latin_square() {
        // a loop of order 5 that is not a group
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(&t),
            Err(GroupError::NotAGroup(AxiomFailure::Associativity { .. }))
        ));
    }

    #[test]
    fn generated_and_normal() {
        let z6 =
            FiniteGroup::from_elements(&(0..6).collect::<Vec<u32>>(), |a, b| (a + b) % 6).unwrap();
        assert_eq!(z6.generated(&[2]), vec![0, 2, 4]);
        assert!(z6.is_normal(&[0, 3]));
        assert!(!z6.is_subgroup(&[0, 1]));
        assert_eq!(z6.generators(), vec![1]);
    }
}
