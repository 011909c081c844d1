//! Linear algebra over `Z/n`: Howell form, solving, and Smith-type
//! diagonalization of a relation matrix.

use arith_cs::algebra::{
    diagonalize_mod, howell_form, smith_normal_form, solve_linear, MatrixZn, ModRing,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = ModRing::new(12)?;
    let a = MatrixZn::from_rows(ring, 3, &[vec![4, 6, 2], vec![8, 0, 10], vec![3, 3, 3]])?;
    let h = howell_form(&a);
    println!(
        "Howell form over Z/12: {:?}",
        &h.canonical.row_vecs()[..h.rank]
    );

    let b = a.vec_mul(&[1, 2, 5])?;
    let sol = solve_linear(&a.transpose(), &b)?;
    println!("x A = {b:?} solved by {:?}", sol.particular);

    let snf = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    println!("Smith diagonal over Z: {:?}", snf.diagonal());
    let d = diagonalize_mod(ring, a.row_vecs(), 3);
    println!(
        "summand orders of Z/12^3 / rowspace: {:?}",
        (0..3).map(|j| d.summand_order(ring, j)).collect::<Vec<_>>()
    );
    Ok(())
}
