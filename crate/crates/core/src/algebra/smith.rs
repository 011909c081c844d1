use super::ring::xgcd;
use super::{AlgebraError, ModRing};

/// Integer Smith normal form: `u * m * v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

impl SmithForm {
    /// Diagonal entries `d_1 | d_2 | ...` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<i64> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i]).collect()
    }
}

fn identity(k: usize) -> Vec<Vec<i64>> {
    (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn checked_axpy(dst: &mut [i64], k: i64, src: &[i64]) -> Result<(), AlgebraError> {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = k
            .checked_mul(s)
            .and_then(|p| d.checked_add(p))
            .ok_or(AlgebraError::Overflow)?;
    }
    Ok(())
}

fn col_axpy(m: &mut [Vec<i64>], dst: usize, k: i64, src: usize) -> Result<(), AlgebraError> {
    for row in m.iter_mut() {
        row[dst] = k
            .checked_mul(row[src])
            .and_then(|p| row[dst].checked_add(p))
            .ok_or(AlgebraError::Overflow)?;
    }
    Ok(())
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Smith normal form of an integer matrix. Fails only on `i64` overflow of
/// intermediate entries.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Result<SmithForm, AlgebraError> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if let Some(bad) = m.iter().find(|r| r.len() != cols) {
        return Err(AlgebraError::DimensionMismatch {
            expected: cols,
            found: bad.len(),
        });
    }
    let mut a = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);
    'outer: for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);

            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    let (top, rest) = a.split_at_mut(i);
                    checked_axpy(&mut rest[0], -q, &top[t])?;
                    let (top, rest) = u.split_at_mut(i);
                    checked_axpy(&mut rest[0], -q, &top[t])?;
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    col_axpy(&mut a, j, -q, t)?;
                    col_axpy(&mut v, j, -q, t)?;
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match offender {
                Some(i) => {
                    let (top, rest) = a.split_at_mut(i);
                    checked_axpy(&mut top[t], 1, &rest[0])?;
                    let (top, rest) = u.split_at_mut(i);
                    checked_axpy(&mut top[t], 1, &rest[0])?;
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -*x;
            }
        }
    }
    Ok(SmithForm { u, d: a, v })
}

/// Diagonalization of a matrix over `Z/n` by row and column operations,
/// keeping the column transform `q` (and its inverse) so that the quotient
/// `(Z/n)^cols / rowspace` reads off as `sum_j Z/gcd(d_j, n)` in coordinates
/// `x * q`.
#[derive(Clone, Debug)]
pub struct ModDiagonal {
    /// Diagonal entries, each a divisor of `n` or `0`, of length `cols`
    /// (positions past the rank are `0`), with `d_j | d_{j+1}` among the nonzero ones.
    pub diagonal: Vec<u32>,
    pub q: Vec<Vec<u32>>,
    pub q_inv: Vec<Vec<u32>>,
}

impl ModDiagonal {
    /// Order of the `j`-th quotient summand.
    pub fn summand_order(&self, ring: ModRing, j: usize) -> u32 {
        match self.diagonal[j] {
            0 => ring.modulus(),
            d => d,
        }
    }
}

/// Bezout coefficients, preferring the plain subtraction when `x | b` so that
/// alternating row and column passes cannot cycle.
fn bezout(x: i64, b: i64) -> (i64, i64, i64) {
    if b % x == 0 {
        (x, 1, 0)
    } else {
        xgcd(x, b)
    }
}

pub fn diagonalize_mod(ring: ModRing, mut a: Vec<Vec<u32>>, cols: usize) -> ModDiagonal {
    let n = ring.modulus() as u64;
    let rows = a.len();
    let mut q: Vec<Vec<u32>> = (0..cols)
        .map(|i| (0..cols).map(|j| u32::from(i == j)).collect())
        .collect();
    let mut q_inv = q.clone();
    let modn = |x: i64| x.rem_euclid(n as i64) as u64;

    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize, u32)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                let g = ring.associate(x);
                if g != 0 && best.is_none_or(|b| g < b.2) {
                    best = Some((i, j, g));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in q.iter_mut() {
            row.swap(t, pj);
        }
        q_inv.swap(t, pj);

        loop {
            // clear column t below the pivot
            for i in t + 1..rows {
                let b = a[i][t] as i64;
                if b == 0 {
                    continue;
                }
                let x = a[t][t] as i64;
                let (g, s, tt) = bezout(x, b);
                let (s, tt, u, w) = (modn(s), modn(tt), modn(b / g), modn(x / g));
                let (top, rest) = a.split_at_mut(i);
                for (xv, yv) in top[t].iter_mut().zip(rest[0].iter_mut()) {
                    let (x0, y0) = (*xv as u64, *yv as u64);
                    *xv = ((s * x0 + tt * y0) % n) as u32;
                    *yv = (((n - u) % n * x0 + w * y0) % n) as u32;
                }
            }
            // clear row t right of the pivot, tracking q and q_inv
            for j in t + 1..cols {
                let b = a[t][j] as i64;
                if b == 0 {
                    continue;
                }
                let x = a[t][t] as i64;
                let (g, s, tt) = bezout(x, b);
                let (s, tt, u, w) = (modn(s), modn(tt), modn(b / g), modn(x / g));
                let neg_u = (n - u) % n;
                for row in a.iter_mut().chain(q.iter_mut()) {
                    let (c0, c1) = (row[t] as u64, row[j] as u64);
                    row[t] = ((s * c0 + tt * c1) % n) as u32;
                    row[j] = ((neg_u * c0 + w * c1) % n) as u32;
                }
                let neg_tt = (n - tt) % n;
                let (top, rest) = q_inv.split_at_mut(j);
                for (r0, r1) in top[t].iter_mut().zip(rest[0].iter_mut()) {
                    let (x0, x1) = (*r0 as u64, *r1 as u64);
                    *r0 = ((w * x0 + u * x1) % n) as u32;
                    *r1 = ((neg_tt * x0 + s * x1) % n) as u32;
                }
            }
            if (t + 1..rows).all(|i| a[i][t] == 0) {
                break;
            }
        }
        let unit = ring.normalizing_unit(a[t][t]);
        for x in a[t].iter_mut() {
            *x = ring.mul(*x, unit);
        }
        let p = a[t][t];
        let offender = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|&x| x % p != 0));
        if let Some(i) = offender {
            let (top, rest) = a.split_at_mut(i);
            for (x, &y) in top[t].iter_mut().zip(rest[0].iter()) {
                *x = ring.add(*x, y);
            }
            continue;
        }
        t += 1;
    }
    let diagonal = (0..cols)
        .map(|j| if j < rows { a[j][j] } else { 0 })
        .collect();
    ModDiagonal { diagonal, q, q_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let inner = b.len();
        let cols = b.first().map_or(0, |r| r.len());
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn two_three_becomes_one_six() {
        let m = vec![vec![2, 0], vec![0, 3]];
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.diagonal(), vec![1, 6]);
        assert_eq!(mat_mul(&mat_mul(&s.u, &m), &s.v), s.d);
    }

    #[test]
    fn zero_and_identity() {
        let z = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(smith_normal_form(&z).unwrap().d, z);
        let i = identity(3);
        assert_eq!(smith_normal_form(&i).unwrap().d, i);
    }

    #[test]
    fn mod_diagonal_reads_quotient() {
        // rowspace of (2, 0), (0, 3) in (Z/6)^2: quotient Z/2 + Z/3 = Z/6
        let r = ModRing::new(6).unwrap();
        let d = diagonalize_mod(r, vec![vec![2, 0], vec![0, 3]], 2);
        let orders: Vec<u32> = (0..2).map(|j| d.summand_order(r, j)).collect();
        assert_eq!(orders.iter().product::<u32>(), 6);
        assert!(orders.contains(&1));
        for (i, row) in d.q.iter().enumerate() {
            for j in 0..2 {
                let e: u64 = (0..2)
                    .map(|k| row[k] as u64 * d.q_inv[k][j] as u64)
                    .sum::<u64>()
                    % 6;
                assert_eq!(e, u64::from(i == j));
            }
        }
    }
}
