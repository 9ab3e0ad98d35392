//! Gluing a Lagrangian pair of subspaces into one representation with an
//! extra isotropic coordinate, and decomposing such a representation back
//! into its pair.
//!
//! ```sh
//! cargo run --example glue_decompose
//! ```

use isomat::linalg::{rat, Matrix};
use isomat::pairs::{
    decompose_bn_representation, glue_pair_representations, glue_represented_pair,
    lagrangian_extensions, BnDecomposition,
};
use isomat::repr::{Kind, Representation};

fn main() {
    // n = 1: the two Lagrangian lines are spanned by e_1 and e_1*.
    let shared = Matrix::zeros(0, 2);
    let x = vec![rat(1), rat(0)];
    let y = vec![rat(0), rat(1)];
    let glued = glue_pair_representations(&shared, &x, &y).unwrap();
    println!("glued n=1 representation:");
    print!("{}", glued.matrix());
    println!("bases:\n{}", glued.extract_bases().unwrap());

    // Decompose a representation whose extra column is nonzero.
    let b1 = Representation::from_blocks(
        Kind::General,
        &Matrix::from_int_rows(&[vec![-2]]),
        &Matrix::from_int_rows(&[vec![1]]),
        Some(&Matrix::from_int_rows(&[vec![2]])),
    )
    .unwrap();
    match decompose_bn_representation(&b1).unwrap() {
        BnDecomposition::Pair { even, odd } => {
            println!("(-2 | 1 | 2) splits into the pair:");
            println!("even side bases:\n{}", even.extract_bases().unwrap());
            println!("odd side bases:\n{}", odd.extract_bases().unwrap());
            let reglued = glue_represented_pair(&even, &odd).unwrap();
            println!(
                "regluing preserves the bases: {}",
                reglued.extract_bases().unwrap() == b1.extract_bases().unwrap()
            );
        }
        BnDecomposition::SingleOrthogonal(_) => println!("unexpected single"),
    }

    // A zero extra column means the representation is already orthogonal.
    let plain = Representation::from_blocks(
        Kind::General,
        &Matrix::from_int_rows(&[vec![0, 2], vec![-2, 0]]),
        &Matrix::identity(2),
        Some(&Matrix::zeros(2, 1)),
    )
    .unwrap();
    match decompose_bn_representation(&plain).unwrap() {
        BnDecomposition::SingleOrthogonal(single) => {
            println!("\nzero extra column: single orthogonal representation");
            println!("bases:\n{}", single.extract_bases().unwrap());
        }
        BnDecomposition::Pair { .. } => println!("unexpected pair"),
    }

    // An isotropic plane in orthogonal 6-space has exactly two Lagrangian
    // superspaces; the solver finds both completion rows exactly.
    let plane = Matrix::from_int_rows(&[vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0]]);
    let (u, v) = lagrangian_extensions(&plane).unwrap();
    println!("\nLagrangian completions of span(e1, e2) in 6-space:");
    println!(
        "  x = {:?}",
        u.iter().map(|r| r.to_string()).collect::<Vec<_>>()
    );
    println!(
        "  y = {:?}",
        v.iter().map(|r| r.to_string()).collect::<Vec<_>>()
    );
}
