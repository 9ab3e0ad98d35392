//! Symplectic, orthogonal and Lagrangian matroids over the ground set
//! `J = [n] ∪ [n]*`, built from exact rational matrix representations of
//! totally isotropic subspaces.
//!
//! The crate provides:
//!
//! * [`ground`] — the star involution, admissible sets, admissible orderings
//!   of types C and D, and the Gale order they induce;
//! * [`linalg`] — dense matrices over arbitrary-precision rationals with
//!   reduced row echelon form, determinants, minors and Pfaffians;
//! * [`repr`] — representations of isotropic subspaces and extraction of the
//!   matroid they define;
//! * [`axioms`] — brute-force verifiers for the Maximality Property, the
//!   exchange axioms and the oriented even Δ-matroid axiom;
//! * [`pairs`] — Lagrangian pairs: detection, intersection, completion,
//!   union, exploded union, and gluing/decomposition of rank-n
//!   representations with one extra isotropic coordinate;
//! * [`orient`] — Pfaffian orientations for represented Lagrangian matroids
//!   of types D and B, twisted Pfaffian maps, and the related determinant
//!   and sign-consistency checks;
//! * [`mod@format`] — the text file formats for representations, basis
//!   collections and sign maps;
//! * [`cli`] — the `isomat` command-line front end.
//!
//! All arithmetic is exact; nothing in the crate touches floating point.

pub mod axioms;
pub mod cli;
pub mod format;
pub mod ground;
pub mod linalg;
pub mod orient;
pub mod pairs;
pub mod repr;
