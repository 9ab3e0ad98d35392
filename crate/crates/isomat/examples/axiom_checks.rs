//! Brute-force axiom verification with witnesses: the Maximality Property
//! over C- and D-admissible orderings, strong exchange, and Bouchet's
//! symmetric exchange on the Δ-matroid side.
//!
//! ```sh
//! cargo run --example axiom_checks
//! ```

use isomat::axioms::{
    check_strong_exchange, check_symmetric_exchange, from_delta, is_even, is_orthogonal_matroid,
    is_symplectic_matroid, to_delta, Verdict,
};
use isomat::ground::{AdmissibleSet, Element};
use isomat::repr::BasisCollection;

fn collection(n: u32, k: usize, sets: &[&str]) -> BasisCollection {
    let sets = sets
        .iter()
        .map(|text| {
            let elements: Vec<Element> = text
                .split_whitespace()
                .map(|t| t.parse().unwrap())
                .collect();
            AdmissibleSet::from_elements(n, elements).unwrap()
        })
        .collect();
    BasisCollection::new(n, k, sets).unwrap()
}

fn main() {
    let good = collection(2, 2, &["1 2", "1* 2*"]);
    println!("{{1 2, 1* 2*}}:");
    println!("  symplectic: {}", is_symplectic_matroid(&good).holds());
    println!("  orthogonal: {}", is_orthogonal_matroid(&good).holds());
    println!("  even:       {}", is_even(&good));
    println!(
        "  strong exchange: {}",
        check_strong_exchange(&good).unwrap().holds()
    );

    // A failing collection, with the witness ordering.
    let bad = collection(3, 2, &["1 2", "3 1*"]);
    match is_symplectic_matroid(&bad) {
        Verdict::Holds => println!("{{1 2, 3 1*}} is symplectic"),
        Verdict::Fails(w) => println!("{{1 2, 3 1*}} fails maximality: {w}"),
    }

    // Strong exchange needs a partner other than the star of the pivot.
    let no_partner = collection(2, 2, &["1 2", "1* 2"]);
    if let Verdict::Fails(w) = check_strong_exchange(&no_partner).unwrap() {
        println!("{{1 2, 1* 2}} fails strong exchange: {w}");
    }

    // Mixed parity always fails under D-orderings, even when every total
    // ordering has a unique maximum.
    let mixed = collection(2, 2, &["1 2", "1* 2*", "1 2*", "1* 2"]);
    println!(
        "all of J_2: symplectic {}, orthogonal {}",
        is_symplectic_matroid(&mixed).holds(),
        is_orthogonal_matroid(&mixed).holds()
    );

    // Round trip through the Δ-matroid encoding.
    let delta = to_delta(&good).unwrap();
    println!(
        "Δ-matroid of {{1 2, 1* 2*}}: masks {:?}, symmetric exchange: {}",
        delta.sets(),
        check_symmetric_exchange(&delta).holds()
    );
    assert_eq!(from_delta(&delta), good);
}
