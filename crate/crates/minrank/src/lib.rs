//! Exact combinatorics of symmetric spaces of minimal rank.
//!
//! Everything is computed in exact integer (or rational) arithmetic over the
//! root lattice in the adjoint convention: the weight lattice of a root datum
//! is the root lattice itself, with the simple roots as standard basis, and
//! all weight coordinates below are coordinates in that basis.
//!
//! The crate is organised around a handful of small modules:
//!
//! - [`rootdata`]: finite-type root data (Cartan matrices, positive roots,
//!   dominance, the Weyl dimension formula);
//! - [`weyl`]: Weyl groups as lattice automorphisms — enumeration, lengths,
//!   reduced words, Bruhat order, reflection and fixed subgroups;
//! - [`characters`]: the group ring Z\[Λ\] with Demazure operators, Weyl
//!   characters and Demazure (dual Joseph) characters;
//! - [`folding`]: diagram involutions, the restricted lattice, the folded
//!   root datum of the fixed subgroup, and structural checks;
//! - [`orbits`]: B-orbits of the symmetric space as cosets of the fixed
//!   subgroup, twisted involutions, peeling, and the closure order;
//! - [`branching`]: restriction of characters, extension of dominant
//!   weights, and good-filtration branching multiplicities;
//! - [`ktheory`]: the index bookkeeping for the rational Grothendieck group
//!   of the wonderful compactification.

pub mod branching;
pub mod characters;
pub mod error;
pub mod folding;
pub mod ktheory;
mod matrix;
pub mod orbits;
pub mod report;
pub mod rootdata;
pub mod verify;
pub mod weyl;

pub use branching::{branch, bundle_rank, extend_weight, restrict_character, BranchingResult};
pub use characters::{
    demazure_simple, demazure_word, joseph_character, weyl_character, WeightPolynomial,
};
pub use error::Error;
pub use folding::{
    build_space, fold, rank_bookkeeping, verify_structure, FoldedDatum, InvolutionDatum, RankPair,
    Space,
};
pub use ktheory::{indices, indices_with, IndexReport};
pub use orbits::{
    closure_leq, enumerate_orbits, generic_position_schubert, no_real_roots_check, peel,
    twisted_involution, GenericPosition, OrbitRecord,
};
pub use report::{Claim, Report};
pub use rootdata::{build_datum, weyl_dim, RootDatum, Weight};
pub use verify::space_report;
pub use weyl::{WeylElement, WeylGroup, DEFAULT_MAX_GROUP};

/// Names of the symmetric spaces exercised by the test suite and listed by
/// the CLI `catalog` subcommand: the group cases `K x K / diag(K)` for the
/// simple types of small Weyl order, and the diagram folds.  Arbitrary
/// `*`-products of these are accepted by [`build_space`] as well.
pub fn catalog() -> Vec<&'static str> {
    vec![
        "group:A1", "group:A2", "group:A3", "group:B2", "group:B3", "group:C3", "group:D4",
        "group:G2", "fold:A3", "fold:A5", "fold:D4", "fold:D5", "fold:D6", "fold:E6",
    ]
}
