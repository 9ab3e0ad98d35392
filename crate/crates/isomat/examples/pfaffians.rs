//! Exact Pfaffians: the production expansion, the definitional sum kept as
//! an oracle, the determinant relation, and principal-minor tables.
//!
//! ```sh
//! cargo run --example pfaffians
//! ```

use isomat::linalg::{rat, Matrix};

fn main() {
    // Pf of the empty matrix is 1; odd sizes vanish.
    println!("Pf(empty) = {}", Matrix::zeros(0, 0).pfaffian().unwrap());
    println!(
        "Pf(3x3 skew) = {}",
        Matrix::from_int_rows(&[vec![0, 1, 2], vec![-1, 0, 3], vec![-2, -3, 0],])
            .pfaffian()
            .unwrap()
    );

    // The classic 4x4: Pf = a12 a34 - a13 a24 + a14 a23.
    let m = Matrix::from_int_rows(&[
        vec![0, 1, 2, 3],
        vec![-1, 0, 4, 5],
        vec![-2, -4, 0, 6],
        vec![-3, -5, -6, 0],
    ]);
    let pf = m.pfaffian().unwrap();
    println!("Pf(4x4) = {pf} (1*6 - 2*5 + 3*4 = 8)");
    println!(
        "definitional sum agrees: {}",
        m.pfaffian_oracle().unwrap() == pf
    );
    println!("Pf^2 = det: {} = {}", &pf * &pf, m.det().unwrap());

    // All principal-minor Pfaffians at once, indexed by subset bitmask.
    let table = m.principal_minor_pfaffians().unwrap();
    for (mask, value) in table.iter().enumerate() {
        if *value != rat(0) {
            let members: Vec<String> = (0..4)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| (i + 1).to_string())
                .collect();
            println!("Pf[{{{}}}] = {value}", members.join(" "));
        }
    }

    // Non-skew input is rejected.
    println!(
        "Pf(identity) -> {:?}",
        Matrix::identity(2).pfaffian().unwrap_err()
    );
}
