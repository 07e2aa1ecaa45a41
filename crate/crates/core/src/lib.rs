//! Heterotopy algebras of surface diagrams in three dimensions.
//!
//! Boundary configurations are systems of nested circles, written as balanced
//! parenthesis strings. A minimal diagram between two configurations is
//! determined, up to strong heterotopy, by its connectivity: the partition of
//! boundary circles by the surface component they bound. Those partitions are
//! exactly the admissible colourings of the joined region tree (see
//! [`colouring`]), and heterotopy classes are their orbits under the boundary
//! symmetry groups (see [`symmetry`]).
//!
//! Composition of classes ([`algebra::compose_h`]) averages over the symmetry
//! group of the middle configuration and records handles and bubbles as
//! powers of `p` and `q` with exact rational coefficients.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line front end live in the `hdtl` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod boundary;
pub mod coefficient;
pub mod colouring;
mod dsu;
mod error;
pub mod partition;
pub mod symmetry;
pub mod tables;

pub use algebra::{
    compose, compose_h, compose_single, partition_compose_oracle, AlgebraElement, Composer, CompositionOutcome,
};
pub use boundary::{join, parse_boundary, region_tree, BoundaryConfig, EdgeLabel, JoinedTree, RegionTree};
pub use coefficient::{Coefficient, Rational};
pub use colouring::{
    chain, enumerate_h_classes, enumerate_sh_classes, h_orbit, identity_class, is_admissible, parse_partition, HClass,
    HomSpace, ShClass,
};
pub use error::{Error, Result};
pub use partition::Partition;
pub use symmetry::{automorphism_group, EdgePermutation, SymmetryGroup};
pub use tables::{
    check_laws, dimensions, multiplication_table, multiplication_table_with_limit, Counterexample, Dimensions,
    LawCheck, LawMode, LawReport, MultiplicationTable,
};
