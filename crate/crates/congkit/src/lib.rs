//! Congruence lattices of finite semigroups and ideal lattices of their
//! semigroup algebras over prime fields.
//!
//! The library is organized around a small pipeline:
//!
//! * [`semigroup`] — finite semigroups as Cayley tables, built-in families,
//!   quotients, and a plain-text table format;
//! * [`relations`] — binary relations and congruences on a finite carrier:
//!   composition, lattice operations, exhaustive congruence enumeration, and
//!   permutability checking;
//! * [`gf`] — exact linear algebra over GF(p): RREF-canonical subspaces,
//!   sums, intersections, and exhaustive subspace enumeration;
//! * [`algebra`] — the semigroup algebra F_p[S]: element arithmetic, ideal
//!   closure, and exhaustive two-sided ideal enumeration with its lattice;
//! * [`correspondence`] — the map `phi: J -> rho_J` from algebra ideals to
//!   semigroup congruences, its kernel classes, and the executable checks
//!   (meet-homomorphism, join-compatibility of the kernel, and the
//!   composition-homomorphism property);
//! * [`report`] — JSON-serializable verdicts with full witness data.
//!
//! Everything is exact and exhaustive; guard limits ([`Guards`]) keep the
//! enumerations at desk scale.

pub mod algebra;
pub mod correspondence;
pub mod gf;
pub mod relations;
pub mod report;
pub mod semigroup;

use thiserror::Error;

/// Multiplication side for compatibility witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Limits for the exhaustive enumeration cores.
///
/// Defaults keep every operation comfortably under a few seconds; callers
/// may raise them explicitly (the CLI exposes flags and the
/// `CONGKIT_GUARD_SUBSPACES` environment variable).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Maximum carrier size for set-partition enumeration (Bell numbers).
    pub max_partition_carrier: usize,
    /// Maximum number of subspaces enumerated per ambient space.
    pub max_subspace_count: u128,
    /// Maximum p^n for the ambient space of a subspace enumeration.
    pub max_subspace_points: u128,
    /// Maximum p^dim carrier size for algebra-congruence materialization.
    pub max_algebra_carrier: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_partition_carrier: 10,
            max_subspace_count: 100_000,
            max_subspace_points: 1_000_000,
            max_algebra_carrier: 10_000,
        }
    }
}

/// Errors shared by all modules.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid size {n}: must be between 1 and {bound}")]
    InvalidSize { n: usize, bound: usize },

    #[error("table entry [{row}][{col}] = {value} out of range for n = {n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("duplicate element name `{0}`")]
    DuplicateName(String),

    #[error("not associative: (s{i}·s{j})·s{k} != s{i}·(s{j}·s{k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("partition is not a congruence of the semigroup")]
    NotACongruence,

    #[error("carrier size mismatch: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("relation is not an equivalence: {axiom} fails at ({x},{y})")]
    NotAnEquivalence {
        axiom: &'static str,
        x: usize,
        y: usize,
    },

    #[error("{0} is not a prime in [2, 97]")]
    NotPrime(u64),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u64, right: u64 },

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,

    #[error("guard exceeded: {what} = {value} > {bound}")]
    GuardExceeded {
        what: &'static str,
        value: u128,
        bound: u128,
    },

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
