//! Absolute orders on transitive actions of finite Coxeter groups.
//!
//! The crate builds the absolute order `Abs(X)` for a transitive action of a
//! finite reflection group on a set `X`, decides modularity and
//! quasi-modularity of subgroups, and checks the accompanying enumerative
//! identities by exhaustive computation.

pub mod alternating;
pub mod cosets;
pub mod error;
pub mod groups;
pub mod lattice;
pub mod matchings;
pub mod poly;
pub mod posets;
pub mod rootspace;
pub mod search;
pub mod tuples;
pub mod verify;

pub use error::{Error, Result};
pub use groups::{CoxeterDescriptor, Family, GroupElement, ReflectionGroup, ReflectionSet};
pub use poly::IntPolynomial;
pub use posets::RankedPoset;
