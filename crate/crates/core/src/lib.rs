//! Exact arithmetic for generalized splines on edge-labeled graphs.
//!
//! A spline on a graph whose edges carry ideals of a base ring is a vertex
//! labeling in which the labels of adjacent vertices differ by an element of
//! the connecting edge's ideal. This crate computes, over `Z/mZ` and `Z`:
//!
//! - zero-connected components and label reductions ([`graph`]),
//! - flow-up minimum generating sets modulo primes, prime powers, and
//!   arbitrary moduli, plus flow-up bases over the integers ([`generators`]),
//! - ranks and forced-equality classes of vertices ([`generators`]),
//! - pointwise products and structure-constant tables ([`ring`]),
//! - a deliberately naive brute-force oracle that certifies the above on
//!   desk-scale instances ([`oracle`]).
//!
//! Every computation is exact: residues are canonical minimal nonnegative
//! coset representatives, and intermediate products go through 128-bit
//! integers so that `m * m` never overflows.

pub mod corpus;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod residue;
pub mod ring;
pub mod spline;

pub use generators::{
    forced_equal_classes, gens_mod_m, gens_mod_p, gens_mod_prime_power, integer_basis,
    lift_spline, minimize_leading, rank, reduce_integer_basis, GeneratingSet, Generator,
};
pub use graph::{
    parse_graph, validate_graph, zero_components, EdgeLabeledGraph, ModulusContext,
    ZeroComponentPartition,
};
pub use oracle::{
    check_flow_up_criteria, enumerate_splines, min_leading_oracle, span_mod_m, verify_generating,
    SplineSet, DEFAULT_BUDGET,
};
pub use residue::{crt_combine, factorize, min_coset_rep, solve_linear_congruence, Residue};
pub use ring::{
    multable_distinct_primes, multable_general, multable_prime_power, multiply, support,
    MultiplicationTable, TableEntry,
};
pub use spline::{is_spline, Spline};

/// Unified error type covering every module of the crate.
///
/// The CLI relies on [`Error::code`] for stable machine-readable error codes,
/// so variants map one-to-one onto the underlying module errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Residue(#[from] residue::ResidueError),
    #[error(transparent)]
    Spline(#[from] spline::SplineError),
    #[error(transparent)]
    Ring(#[from] ring::RingError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
}

impl Error {
    /// Stable machine-readable code for JSON error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Graph(e) => e.code(),
            Error::Residue(e) => e.code(),
            Error::Spline(e) => e.code(),
            Error::Ring(e) => e.code(),
            Error::Oracle(e) => e.code(),
        }
    }
}
