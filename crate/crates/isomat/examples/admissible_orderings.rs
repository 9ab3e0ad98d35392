//! Ground-set combinatorics: admissible orderings of types C and D, the
//! Gale order they induce, and Gale maxima.
//!
//! ```sh
//! cargo run --example admissible_orderings
//! ```

use isomat::ground::{
    enumerate_admissible_orderings, max_basis, AdmissibleOrdering, AdmissibleSet, Element,
    OrderVariant,
};

fn set(n: u32, text: &str) -> AdmissibleSet {
    let elements: Vec<Element> = text
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    AdmissibleSet::from_elements(n, elements).unwrap()
}

fn main() {
    let n = 2;
    println!("C-admissible orderings of J for n = {n}:");
    for ordering in enumerate_admissible_orderings(n, OrderVariant::C) {
        println!("  {ordering}");
    }
    println!("D-admissible orderings (middle pair incomparable):");
    for ordering in enumerate_admissible_orderings(n, OrderVariant::D) {
        println!("  {ordering}");
    }
    for n in 1..=5u32 {
        let c = enumerate_admissible_orderings(n, OrderVariant::C).count();
        let d = enumerate_admissible_orderings(n, OrderVariant::D).count();
        println!("n = {n}: {c} C-orderings (2^n n!), {d} D-orderings (2^(n-1) n!)");
    }

    let ordering = AdmissibleOrdering::from_top(
        2,
        OrderVariant::C,
        &[Element::unstarred(1), Element::unstarred(2)],
    )
    .unwrap();
    let a = set(2, "1* 2");
    let b = set(2, "1 2*");
    println!("\nUnder {ordering}:");
    println!("  {a} <= {b}: {}", ordering.gale_leq(&a, &b));
    println!("  {b} <= {a}: {}", ordering.gale_leq(&b, &a));

    let bases = [set(2, "1 2"), set(2, "1* 2*")];
    println!(
        "  Gale maximum of {{1 2, 1* 2*}}: {}",
        max_basis(&bases, &ordering).unwrap()
    );

    // Two sets can be incomparable, in which case there is no unique
    // maximum and the failure comes with a witness pair.
    let ordering3 = AdmissibleOrdering::from_top(
        3,
        OrderVariant::C,
        &[
            Element::unstarred(3),
            Element::unstarred(2),
            Element::unstarred(1),
        ],
    )
    .unwrap();
    let bases3 = [set(3, "1 2"), set(3, "3 1*")];
    match max_basis(&bases3, &ordering3) {
        Ok(max) => println!("unexpected maximum {max}"),
        Err((x, y)) => println!("\nUnder {ordering3}: {x} and {y} are incomparable maxima"),
    }
}
