//! Exact solvers for the weighted maximum independent set problem on
//! tournaments (equivalently, minimum feedback vertex set): a vertex set is
//! independent when it induces a transitive subtournament.
//!
//! The crate provides the tournament model, a catalog of named tournaments
//! with recognizers, forbidden-pattern detection, homogeneous-set
//! decomposition, polynomial solvers for the tractable forbidden-pattern
//! classes, hardness-instance constructions from vertex cover, and a
//! plain-text CLI over all of it. Everything is exact: weights are
//! arbitrary-precision rationals and every solver's output is re-certified
//! transitive before it is returned.

pub mod bitset;
pub mod catalog;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod format;
pub mod pattern;
pub mod reductions;
pub mod solution;
pub mod solvers;
pub mod tournament;
pub mod weights;

pub use catalog::{is_isomorphic_small, make, recognize_tn, recognize_un, PatternKind, UnLabeling};
pub use decompose::{
    decompose_and_solve, is_homogeneous, minimal_homogeneous_set, quotient, reduce_to_prime,
    PrimeReduction, QuotientRecord,
};
pub use error::{Error, Result};
pub use pattern::{find_induced, is_1_in_degenerate, is_1_out_degenerate, Degeneracy, PatternHit};
pub use solution::Solution;
pub use solvers::{
    find_xyz_partition, oracle_wmisp, oracle_wmisp_enumerate, solve, solve_b4free, solve_c4free,
    solve_d4free, solve_tn, solve_u5free_prime, solve_un, solve_w5free_prime, solve_xyz_dp,
    Method, SolveOutcome, XYZPartition,
};
pub use tournament::{from_backedges, BackedgeGraph, Tournament, VertexOrder};
pub use weights::{format_weight, parse_weight, Weight, WeightMap};
