//! Multimode Gaussian entanglement and continuous-variable telecloning.
//!
//! The crate builds the (m+1)-mode entangled states produced by SU(m,1)
//! parametric interactions, follows their covariance matrices through
//! thermal and lossy Gaussian channels, decides separability with the
//! partial-transpose criterion, runs the 1→m telecloning protocol in
//! phase space, and optimizes the protocol's free parameters (support
//! photon numbers and source location) against noise.
//!
//! # Conventions
//!
//! A single convention is used everywhere:
//!
//! - quadratures are ordered mode by mode, `(q0, p0, q1, p1, ...)`;
//! - `q = (a + a†)/√2`, `p = (a − a†)/(i√2)`, so the vacuum covariance
//!   matrix is `1/2` times the identity;
//! - the mean vector of a coherent state `|α⟩` is `√2 (Re α, Im α)`.
//!
//! With this choice a covariance matrix `σ` is physical iff
//! `σ + (i/2) J ⪰ 0`, with `J` the block-diagonal symplectic form of
//! [`gaussian::symplectic_form`].

pub mod error;
pub mod gaussian;
pub mod noise;
pub mod optimizer;
pub mod separability;
pub mod states;
pub mod telecloning;

pub use error::{Error, Result};
pub use gaussian::{Bipartition, CovarianceMatrix, GaussianState};
pub use noise::NoiseParams;
pub use states::SupportSpec;
