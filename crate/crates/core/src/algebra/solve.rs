use super::howell::RowReducer;
use super::{AlgebraError, MatrixZn};

/// Solution set of `a * x = b`: `particular + span(kernel_basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<u32>,
    pub kernel_basis: Vec<Vec<u32>>,
}

/// Solve `a * x = b` over `Z/n` for a column vector `x`.
pub fn solve_linear(a: &MatrixZn, b: &[u32]) -> Result<LinearSolution, AlgebraError> {
    let order: Vec<usize> = (0..a.cols()).collect();
    solve_linear_ordered(a, b, &order)
}

/// Same as [`solve_linear`], eliminating unknowns in the given order.
pub fn solve_linear_ordered(
    a: &MatrixZn,
    b: &[u32],
    order: &[usize],
) -> Result<LinearSolution, AlgebraError> {
    if b.len() != a.rows() {
        return Err(AlgebraError::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let ring = a.ring();
    let b: Vec<u32> = b.iter().map(|&v| v % ring.modulus()).collect();
    // columns of `a` become generators of the row-convention solver
    let reducer = RowReducer::with_order(ring, a.rows(), a.transpose().row_vecs(), order);
    let particular = reducer.solve(&b).ok_or(AlgebraError::NoSolution)?;
    Ok(LinearSolution {
        particular,
        kernel_basis: reducer.kernel().to_vec(),
    })
}

/// True when `v` lies in the row space of `m`.
pub fn in_row_space(m: &MatrixZn, v: &[u32]) -> bool {
    RowReducer::new(m.ring(), m.cols(), m.row_vecs()).contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ModRing;

    #[test]
    fn identity_system() {
        let r = ModRing::new(7).unwrap();
        let a = MatrixZn::identity(r, 3);
        let s = solve_linear(&a, &[3, 0, 6]).unwrap();
        assert_eq!(s.particular, vec![3, 0, 6]);
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn two_over_four() {
        let r = ModRing::new(4).unwrap();
        let a = MatrixZn::from_i64_rows(r, &[vec![2]]).unwrap();
        assert_eq!(solve_linear(&a, &[1]), Err(AlgebraError::NoSolution));
        let s = solve_linear(&a, &[2]).unwrap();
        assert_eq!(s.particular, vec![1]);
        assert_eq!(s.kernel_basis, vec![vec![2]]);
    }

    #[test]
    fn shape_is_checked() {
        let r = ModRing::new(4).unwrap();
        let a = MatrixZn::zeros(r, 2, 2);
        assert!(matches!(
            solve_linear(&a, &[0]),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }
}
