//! Lagrangian pairs of Lagrangian orthogonal matroids: detection, the
//! rank-(n-1) intersection matroid, parity completion, union, and the
//! exploded union one ground element larger.
//!
//! ```sh
//! cargo run --example lagrangian_pairs
//! ```

use isomat::axioms::{is_orthogonal_matroid, is_symplectic_matroid};
use isomat::ground::{AdmissibleSet, Element};
use isomat::pairs::{
    complete_to_pair, exploded_union, is_lagrangian_pair, is_pair_via_explosion,
    pair_intersection_matroid, pair_union, LagrangianPair,
};
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
    let even = collection(2, 2, &["1 2", "1* 2*"]);
    let odd = collection(2, 2, &["1 2*", "1* 2"]);
    println!(
        "({{1 2, 1* 2*}}, {{1 2*, 1* 2}}) is a Lagrangian pair: {}",
        is_lagrangian_pair(&even, &odd).unwrap()
    );
    let pair = LagrangianPair::new(&even, &odd).unwrap();

    let intersection = pair_intersection_matroid(&pair);
    println!("intersection matroid (rank n-1):\n{intersection}");
    println!(
        "intersection is orthogonal: {}",
        is_orthogonal_matroid(&intersection).holds()
    );

    let completed = complete_to_pair(&intersection).unwrap();
    println!("parity completion recovers the pair: {}", completed == pair);

    let union = pair_union(&pair);
    println!("union:\n{union}");
    println!(
        "union is symplectic: {}",
        is_symplectic_matroid(&union).holds()
    );

    let exploded = exploded_union(&even, &odd);
    println!("exploded union on ground 3:\n{exploded}");
    println!(
        "exploded union is orthogonal of rank 3: {}",
        is_orthogonal_matroid(&exploded).holds()
    );
    println!(
        "explosion detects pairs: {}",
        is_pair_via_explosion(&even, &odd).unwrap()
    );

    // The union theorem has no converse: this symplectic Lagrangian matroid
    // has bases of both parities, yet its parity split is not a pair.
    let witness = collection(3, 3, &["1 2 3", "1 2* 3*", "2 3 1*", "2 1* 3*", "3 1* 2*"]);
    println!(
        "\nwitness is symplectic: {}",
        is_symplectic_matroid(&witness).holds()
    );
    let evens: Vec<AdmissibleSet> = witness
        .iter()
        .filter(|s| s.unstarred_count() % 2 == 0)
        .copied()
        .collect();
    let odds: Vec<AdmissibleSet> = witness
        .iter()
        .filter(|s| s.unstarred_count() % 2 == 1)
        .copied()
        .collect();
    let evens = BasisCollection::new(3, 3, evens).unwrap();
    let odds = BasisCollection::new(3, 3, odds).unwrap();
    println!(
        "its parity split is a pair: {}",
        matches!(is_lagrangian_pair(&evens, &odds), Ok(true))
    );
}
