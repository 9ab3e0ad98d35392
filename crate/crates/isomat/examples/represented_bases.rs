//! Representations of isotropic subspaces and the matroids they define:
//! isotropy checks, basis extraction, the classical embedding, and column
//! relabeling.
//!
//! ```sh
//! cargo run --example represented_bases
//! ```

use isomat::linalg::Matrix;
use isomat::repr::{embed_classical, generate_random_isotropic, Kind, Representation};

fn main() {
    // (S | I_2) with S skew is an orthogonal representation; its bases are
    // the admissible 2-sets with a nonzero maximal minor.
    let rep = Representation::from_blocks(
        Kind::Orthogonal,
        &Matrix::from_int_rows(&[vec![0, 2], vec![-2, 0]]),
        &Matrix::identity(2),
        None,
    )
    .unwrap();
    println!("isotropic: {:?}", rep.check_isotropy());
    println!("bases of (S | I):\n{}", rep.extract_bases().unwrap());

    // One extra coordinate: (A | B | C) with ABt + BAt + CCt = 0.
    let b1 = Representation::from_blocks(
        Kind::General,
        &Matrix::from_int_rows(&[vec![-2]]),
        &Matrix::from_int_rows(&[vec![1]]),
        Some(&Matrix::from_int_rows(&[vec![2]])),
    )
    .unwrap();
    println!("bases of (-2 | 1 | 2):\n{}", b1.extract_bases().unwrap());

    // A classical rank-1 matroid on two elements embeds as a Lagrangian
    // orthogonal matroid whose unstarred parts are the classical bases.
    let classical = Matrix::from_int_rows(&[vec![1, 1]]);
    let embedded = embed_classical(&classical).unwrap();
    println!(
        "embedded classical [1 1]:\n{}",
        embedded.extract_bases().unwrap()
    );

    // Swapping the labels of a column pair relabels the matroid.
    let swapped = rep.swap_columns_unsigned(1);
    println!(
        "after relabeling 1 <-> 1*:\n{}",
        swapped.extract_bases().unwrap()
    );

    // Seeded random isotropic representations are exactly reproducible.
    let random = generate_random_isotropic(3, 1, Kind::General, 42);
    println!(
        "random isotropic (n=3, m=1, seed 42), k = {}:",
        random.rank()
    );
    print!("{}", random.matrix());
    println!("bases:\n{}", random.extract_bases().unwrap());
}
