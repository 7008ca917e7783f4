//! Exact arithmetic for polysymmetric functions indexed by stack partitions.
//!
//! The crate is layered bottom-up:
//!
//! * [`partition`] and [`stack`]: ordinary and stack partitions, their canonical
//!   order, statistics and scalings.
//! * [`coeff`]: the matrix-counting coefficients behind every M-expansion,
//!   with [`oracle`] as an exhaustive cross-check.
//! * [`algebra`]: elements in the six bases, products, transition matrices,
//!   the involution Ω and a registry of basis identities.
//! * [`series`]: truncated power series in the underlying variables, used to
//!   realize elements as polynomials and to test generating functions.
//! * [`sequences`]: integer sequences derived from stack partitions.

pub mod algebra;
pub mod arith;
pub mod coeff;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod sequences;
pub mod series;
pub mod stack;

pub use algebra::{
    convert, evaluate_identity, expand_generator, expand_type, m_product, multiply, omega,
    omega_via, to_m, toeplitz_determinant, transition_matrix, BasisTag, IdentityCheck, IdentityId,
    OmegaRoute, PolyElement, TransitionMatrix,
};
pub use coeff::{
    divisor_coeff, eh_coeff, s_coeff, signed_coeff, structure_coeff, CoefficientQuery, EhKind,
    PartitionSequence, SignedKind,
};
pub use error::{Error, Result};
pub use partition::{enumerate_partitions, Partition};
pub use stack::{
    enumerate_stack_partitions, multiplicity_pattern, MultiplicityPattern, Stack, StackDivisor,
    StackPartition, Stats,
};

/// Rational numbers with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;
