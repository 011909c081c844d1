//! Howell normal form over `Z/n` and a row-space solver built on it.
//!
//! `Z/n` is not a field, so ordinary echelon forms do not decide membership in
//! a row space. The Howell form adds, for every pivot `p`, the row `(n/p) * row`
//! back into the elimination; the resulting basis has the property that any
//! span element whose first `j` entries vanish is a combination of the basis
//! rows whose pivot lies at or beyond `j`. Greedy reduction against the basis is
//! then an exact membership test, and the form is unique for a given row space.

use super::matrix::combine_rows;
use super::ring::xgcd;
use super::{MatrixZn, ModRing};

/// Howell form of a matrix together with the transform producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HowellForm {
    /// Canonical rows (nonzero rows first, then zero rows padding up to the
    /// input's row count).
    pub canonical: MatrixZn,
    /// `transform * input == canonical`.
    pub transform: MatrixZn,
    /// Number of nonzero canonical rows.
    pub rank: usize,
}

/// Compute the Howell form of `m`'s row space.
pub fn howell_form(m: &MatrixZn) -> HowellForm {
    let ring = m.ring();
    let reducer = RowReducer::new(ring, m.cols(), m.row_vecs());
    let rank = reducer.basis_len();
    let out_rows = rank.max(m.rows());
    let mut canonical = MatrixZn::zeros(ring, out_rows, m.cols());
    let mut transform = MatrixZn::zeros(ring, out_rows, m.rows());
    for (i, (head, tail)) in reducer.basis_rows().enumerate() {
        for (c, &v) in head.iter().enumerate() {
            canonical.set(i, c, v);
        }
        for (c, &v) in tail.iter().enumerate() {
            transform.set(i, c, v);
        }
    }
    HowellForm {
        canonical,
        transform,
        rank,
    }
}

/// Bring `rows` (each of length `ncols`) to Howell form in place, eliminating
/// over all columns. Returns the pivot column of each surviving row; zero rows
/// are dropped.
pub(crate) fn howell_in_place(ring: ModRing, rows: &mut Vec<Vec<u32>>, ncols: usize) -> Vec<usize> {
    let n = ring.modulus() as u64;
    let mut r = 0usize;
    let mut pivots = Vec::new();
    for j in 0..ncols {
        let Some(first) = (r..rows.len()).find(|&i| rows[i][j] != 0) else {
            continue;
        };
        rows.swap(r, first);
        for i in r + 1..rows.len() {
            if rows[i][j] == 0 {
                continue;
            }
            let (top, bottom) = rows.split_at_mut(i);
            eliminate_pair(n, &mut top[r], &mut bottom[0], j);
        }
        let unit = ring.normalizing_unit(rows[r][j]);
        if unit != 1 {
            scale_row(n, &mut rows[r], unit, j);
        }
        let p = rows[r][j];
        debug_assert!(p != 0 && n.is_multiple_of(p as u64));
        {
            let (above, rest) = rows.split_at_mut(r);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                let q = row[j] / p;
                if q != 0 {
                    axpy(n, row, (n - q as u64) as u32, pivot_row, j);
                }
            }
        }
        if p != 1 {
            let k = (n / p as u64) as u32;
            let extra: Vec<u32> = rows[r]
                .iter()
                .map(|&v| (v as u64 * k as u64 % n) as u32)
                .collect();
            if extra.iter().any(|&v| v != 0) {
                rows.push(extra);
            }
        }
        pivots.push(j);
        r += 1;
    }
    debug_assert!(rows[r..].iter().all(|row| row.iter().all(|&v| v == 0)));
    rows.truncate(r);
    pivots
}

/// Replace `(x, y)` by a unimodular combination so that `y[j] == 0`.
fn eliminate_pair(n: u64, x: &mut [u32], y: &mut [u32], j: usize) {
    let a = x[j] as i64;
    let b = y[j] as i64;
    if b % a == 0 {
        let q = (b / a) as u64 % n;
        axpy(n, y, ((n - q) % n) as u32, x, j);
        debug_assert_eq!(y[j], 0);
        return;
    }
    let (g, s, t) = xgcd(a, b);
    let s = s.rem_euclid(n as i64) as u64;
    let t = t.rem_euclid(n as i64) as u64;
    let u = ((b / g) as u64) % n;
    let v = ((a / g) as u64) % n;
    for c in j..x.len() {
        let xv = x[c] as u64;
        let yv = y[c] as u64;
        x[c] = ((s * xv + t * yv) % n) as u32;
        y[c] = (((n - u) * xv + v * yv) % n) as u32;
    }
    debug_assert_eq!(y[j], 0);
}

/// `y += k * x` on columns `from..`.
#[inline]
fn axpy(n: u64, y: &mut [u32], k: u32, x: &[u32], from: usize) {
    let k = k as u64;
    for (yv, &xv) in y[from..].iter_mut().zip(&x[from..]) {
        if xv != 0 {
            *yv = ((*yv as u64 + k * xv as u64) % n) as u32;
        }
    }
}

fn scale_row(n: u64, x: &mut [u32], k: u32, from: usize) {
    for v in &mut x[from..] {
        *v = (*v as u64 * k as u64 % n) as u32;
    }
}

/// Howell basis of the span of a list of generators, tracking how each basis
/// row is written in terms of the generators. Supports exact membership,
/// solving `x * G = target`, and the kernel `{x : x * G = 0}`.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ring: ModRing,
    width: usize,
    generators: usize,
    /// Augmented rows `[head | tail]` with pivot inside the head.
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    /// Tails of augmented rows whose head vanished.
    kernel: Vec<Vec<u32>>,
}

impl RowReducer {
    pub fn new(ring: ModRing, width: usize, generators: Vec<Vec<u32>>) -> Self {
        let order: Vec<usize> = (0..generators.len()).collect();
        Self::with_order(ring, width, generators, &order)
    }

    /// Like [`RowReducer::new`] but eliminates the generators in the given
    /// order. Particular solutions depend on the order; spans and kernels do not.
    pub fn with_order(
        ring: ModRing,
        width: usize,
        generators: Vec<Vec<u32>>,
        order: &[usize],
    ) -> Self {
        Self::build(ring, width, generators, order, Vec::new())
    }

    /// Reducer for the span of `generators` plus `relations`, where only the
    /// generators are tracked: solutions and kernel vectors are coefficient
    /// vectors over the generators, valid modulo the span of the relations.
    pub fn with_relations(
        ring: ModRing,
        width: usize,
        generators: Vec<Vec<u32>>,
        relations: Vec<Vec<u32>>,
    ) -> Self {
        let order: Vec<usize> = (0..generators.len()).collect();
        Self::build(ring, width, generators, &order, relations)
    }

    pub fn build(
        ring: ModRing,
        width: usize,
        generators: Vec<Vec<u32>>,
        order: &[usize],
        relations: Vec<Vec<u32>>,
    ) -> Self {
        let m = generators.len();
        assert_eq!(order.len(), m, "order must permute the generators");
        let total = width + m;
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(m + relations.len() + 8);
        let mut generators: Vec<Option<Vec<u32>>> = generators.into_iter().map(Some).collect();
        // the tail columns follow the elimination order, so canonical
        // reduction of particular solutions depends on it
        for (k, &g) in order.iter().enumerate() {
            let mut row = generators[g]
                .take()
                .expect("order must permute the generators");
            assert_eq!(row.len(), width, "generator width mismatch");
            row.resize(total, 0);
            row[width + k] = 1;
            rows.push(row);
        }
        for mut row in relations {
            assert_eq!(row.len(), width, "relation width mismatch");
            row.resize(total, 0);
            rows.push(row);
        }
        let mut pivots = howell_in_place(ring, &mut rows, total);
        for row in rows.iter_mut() {
            let tail = row[width..].to_vec();
            for (k, &g) in order.iter().enumerate() {
                row[width + g] = tail[k];
            }
        }
        let split = pivots
            .iter()
            .position(|&p| p >= width)
            .unwrap_or(pivots.len());
        let kernel = rows[split..].iter().map(|r| r[width..].to_vec()).collect();
        rows.truncate(split);
        pivots.truncate(split);
        Self {
            ring,
            width,
            generators: m,
            basis: rows,
            pivots,
            kernel,
        }
    }

    pub fn ring(&self) -> ModRing {
        self.ring
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    /// `(head, tail)` pairs: the Howell basis rows and their generator combinations.
    pub fn basis_rows(&self) -> impl Iterator<Item = (&[u32], &[u32])> {
        self.basis
            .iter()
            .map(|r| (&r[..self.width], &r[self.width..]))
    }

    pub fn basis_heads(&self) -> Vec<Vec<u32>> {
        self.basis
            .iter()
            .map(|r| r[..self.width].to_vec())
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Howell-form generators of `{x : x * G = 0}`.
    pub fn kernel(&self) -> &[Vec<u32>] {
        &self.kernel
    }

    /// Number of elements in the span (product of pivot orders).
    pub fn span_size(&self) -> u128 {
        let n = self.ring.modulus() as u128;
        self.basis
            .iter()
            .zip(&self.pivots)
            .map(|(r, &p)| n / r[p] as u128)
            .product()
    }

    /// Reduce `target` against the basis. Returns the coefficient vector over
    /// the basis rows and the remainder.
    fn reduce_basis(&self, target: &[u32]) -> (Vec<u32>, Vec<u32>) {
        assert_eq!(target.len(), self.width, "target width mismatch");
        let n = self.ring.modulus() as u64;
        let mut rem = target.to_vec();
        let mut coeffs = vec![0u32; self.basis.len()];
        for (i, (row, &j)) in self.basis.iter().zip(&self.pivots).enumerate() {
            let p = row[j];
            if !rem[j].is_multiple_of(p) {
                continue;
            }
            let q = rem[j] / p;
            if q != 0 {
                coeffs[i] = q;
                axpy(
                    n,
                    &mut rem,
                    ((n - q as u64) % n) as u32,
                    &row[..self.width],
                    j,
                );
            }
        }
        (coeffs, rem)
    }

    pub fn contains(&self, target: &[u32]) -> bool {
        self.reduce_basis(target).1.iter().all(|&v| v == 0)
    }

    /// Coefficients over the basis rows, if `target` lies in the span.
    pub fn basis_coordinates(&self, target: &[u32]) -> Option<Vec<u32>> {
        let (coeffs, rem) = self.reduce_basis(target);
        rem.iter().all(|&v| v == 0).then_some(coeffs)
    }

    /// Some `x` with `x * G == target`, if one exists.
    pub fn solve(&self, target: &[u32]) -> Option<Vec<u32>> {
        let coeffs = self.basis_coordinates(target)?;
        Some(combine_rows(self.ring, self.generators, &coeffs, |i| {
            &self.basis[i][self.width..]
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: u32) -> ModRing {
        ModRing::new(n).unwrap()
    }

    #[test]
    fn zero_matrix_stays_zero() {
        let m = MatrixZn::zeros(ring(6), 1, 1);
        let h = howell_form(&m);
        assert_eq!(h.canonical, m);
        assert_eq!(h.rank, 0);
    }

    #[test]
    fn identity_is_canonical() {
        let m = MatrixZn::identity(ring(4), 2);
        let h = howell_form(&m);
        assert_eq!(h.canonical, m);
        assert_eq!(h.transform, m);
    }

    #[test]
    fn two_over_four() {
        let m = MatrixZn::from_i64_rows(ring(4), &[vec![2]]).unwrap();
        let h = howell_form(&m);
        assert_eq!(h.canonical.row_vecs(), vec![vec![2]]);
    }

    #[test]
    fn howell_adds_annihilator_rows() {
        // row space of (2, 1) over Z/4 contains (0, 2); the Howell form must show it
        let m = MatrixZn::from_i64_rows(ring(4), &[vec![2, 1]]).unwrap();
        let h = howell_form(&m);
        assert_eq!(h.canonical.row_vecs(), vec![vec![2, 1], vec![0, 2]]);
        assert_eq!(h.transform.mul(&m).unwrap(), h.canonical);
    }

    #[test]
    fn solve_and_kernel() {
        // x * [[2]] = [2] over Z/4
        let r = RowReducer::new(ring(4), 1, vec![vec![2]]);
        assert_eq!(r.solve(&[2]), Some(vec![1]));
        assert_eq!(r.solve(&[1]), None);
        assert_eq!(r.kernel(), &[vec![2]]);
        assert_eq!(r.span_size(), 2);
    }

    #[test]
    fn permuted_order_changes_particular_solution_only() {
        let gens = vec![vec![1, 0], vec![1, 0], vec![0, 1]];
        let a = RowReducer::new(ring(5), 2, gens.clone());
        let b = RowReducer::with_order(ring(5), 2, gens, &[2, 1, 0]);
        let t = [3, 4];
        let xa = a.solve(&t).unwrap();
        let xb = b.solve(&t).unwrap();
        assert_ne!(xa, xb);
        assert_eq!(a.basis_heads(), b.basis_heads());
    }
}
