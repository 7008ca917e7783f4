//! Elements of the algebra and the maps between its bases.

mod basis;
mod element;
mod expand;
mod identities;
mod omega;
mod toeplitz;
mod transition;

pub use basis::BasisTag;
pub use element::{format_rational, parse_rational, PolyElement};
pub use expand::{expand_generator, expand_type, expansion_sources, m_product, multiply, to_m};
pub use identities::{evaluate_identity, IdentityCheck, IdentityId};
pub use omega::{omega, omega_via, OmegaRoute};
pub use toeplitz::toeplitz_determinant;
pub use transition::{convert, seed_transition_matrix, transition_matrix, TransitionMatrix};
