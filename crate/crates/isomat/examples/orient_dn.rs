//! Orienting a represented Lagrangian orthogonal matroid: Pfaffian signs of
//! principal minors of the reduced skew block, independent of the basis
//! used for the reduction.
//!
//! ```sh
//! cargo run --example orient_dn
//! ```

use isomat::axioms::check_oriented_even_delta;
use isomat::linalg::Matrix;
use isomat::orient::{
    check_twisted_pfaffian, orient_delta_from_skew, orient_dn, orient_dn_canonical,
    to_oriented_orthogonal, wenzel_identity_residual, TwistedPfaffianMap,
};
use isomat::repr::{generate_random_isotropic, Kind, Representation};

fn main() {
    let rep = Representation::from_blocks(
        Kind::Orthogonal,
        &Matrix::from_int_rows(&[vec![0, 2], vec![-2, 0]]),
        &Matrix::identity(2),
        None,
    )
    .unwrap();
    println!("(S | I) with S = [[0,2],[-2,0]]:");
    let signs = orient_dn_canonical(&rep).unwrap();
    print!("{signs}");

    // The same map from every basis.
    for basis in rep.extract_bases().unwrap().iter() {
        assert_eq!(orient_dn(&rep, basis).unwrap(), signs);
    }
    println!("independent of the reduction basis: true");

    let (delta_view, valid) = to_oriented_orthogonal(&signs);
    println!("is an oriented orthogonal matroid: {valid}");
    println!(
        "Δ-form passes the sign-pattern axiom: {}",
        check_oriented_even_delta(&delta_view).unwrap().holds()
    );

    // Sign maps straight from a skew matrix and a twist set.
    let skew = Matrix::from_int_rows(&[
        vec![0, 1, -2, 0],
        vec![-1, 0, 3, 1],
        vec![2, -3, 0, -1],
        vec![0, -1, 1, 0],
    ]);
    let p = orient_delta_from_skew(&skew, 0b0011).unwrap();
    println!("\nsigns of Pf(A[B Δ T]) for T = {{1 2}}:");
    print!("{p}");

    // The rational-valued map of principal-minor Pfaffians satisfies the
    // quadratic exchange identity, and its residuals vanish exactly.
    let map = TwistedPfaffianMap::from_skew(&skew, 0).unwrap();
    println!(
        "twisted Pfaffian conditions hold: {}",
        check_twisted_pfaffian(&map).holds()
    );
    println!(
        "exchange residual at ({{1}}, {{2 3 4}}): {}",
        wenzel_identity_residual(&skew, 0b0001, 0b1110).unwrap()
    );

    // A larger random instance.
    let rep = generate_random_isotropic(4, 0, Kind::Orthogonal, 9);
    let signs = orient_dn_canonical(&rep).unwrap();
    println!("\nrandom n = 4 orthogonal representation, canonical signs:");
    print!("{signs}");
}
