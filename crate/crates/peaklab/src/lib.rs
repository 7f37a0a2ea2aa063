//! Exact computations around peak idempotents, Varchenko-Gelfand rings of
//! the type A and B braid arrangements, and higher Lie characters.

pub mod combinatorics;
pub mod group_algebra;
pub mod idempotents;
pub mod rational;
pub mod vg;
pub mod symfunc;
pub mod checks;
