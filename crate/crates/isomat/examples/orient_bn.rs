//! Orienting a rank-n representation with one extra isotropic coordinate:
//! the bordered skew matrix of its explosion signs each basis through its
//! parity completion, and the signs restrict to the constituents of the
//! underlying Lagrangian pair up to one flip per side.
//!
//! ```sh
//! cargo run --example orient_bn
//! ```

use isomat::linalg::{rat, Matrix, Rat};
use isomat::orient::{
    bn_canonical_form, check_det_identity, explode_oriented, orient_bn, orient_dn_canonical,
    pair_sign_consistency,
};
use isomat::repr::{generate_random_isotropic, Kind, Representation};

fn main() {
    let rep = Representation::from_blocks(
        Kind::General,
        &Matrix::from_int_rows(&[vec![-2]]),
        &Matrix::from_int_rows(&[vec![1]]),
        Some(&Matrix::from_int_rows(&[vec![2]])),
    )
    .unwrap();
    println!("(-2 | 1 | 2), signs of the bases:");
    print!("{}", orient_bn(&rep).unwrap());

    // The explosion is an orthogonal representation one index larger whose
    // matroid is the parity-completed explosion of the input's.
    let exploded = explode_oriented(&rep).unwrap();
    println!("\nexploded representation:");
    print!("{}", exploded.matrix());
    println!("exploded bases:\n{}", exploded.extract_bases().unwrap());
    println!("exploded signs:");
    print!("{}", orient_dn_canonical(&exploded).unwrap());

    // det(S - ccᵀ/2)|_I = det of the bordered skew minor (even |I| verbatim,
    // odd |I| with a factor -1/2).
    let s = Matrix::from_int_rows(&[vec![0, 3], vec![-3, 0]]);
    let c: Vec<Rat> = vec![rat(1), rat(2)];
    for mask in 0u64..4 {
        println!(
            "determinant identity at I = {mask:02b}: {}",
            check_det_identity(&s, &c, mask).unwrap()
        );
    }

    // The canonical form (S, a, b, x) rebuilds the reduced representation.
    for seed in 0..50u64 {
        let candidate = generate_random_isotropic(3, 1, Kind::General, seed);
        if let Ok(form) = bn_canonical_form(&candidate) {
            println!("\ncanonical form found at seed {seed}: x = {}", form.x);
            println!("skew block:");
            print!("{}", form.skew);
            break;
        }
    }

    // Signs restrict to the glued pair's constituents.
    let shared = Matrix::zeros(0, 2);
    let x = vec![rat(1), rat(0)];
    let y = vec![rat(0), rat(1)];
    println!(
        "\npair sign consistency (n=1 pair): {}",
        pair_sign_consistency(&shared, &x, &y).unwrap()
    );
}
