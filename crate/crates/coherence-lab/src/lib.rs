//! Quantum-coherence measures and the structure theory of maximally
//! coherent states, built on a self-contained dense complex linear algebra
//! kernel.
//!
//! What the crate covers:
//!
//! - **Measures** ([`coherence`]): the relative-entropy measure
//!   C_RE(ρ) = S(ρ_diag) − S(ρ) in closed form and as a numerical minimum
//!   over incoherent states, the l₁ measure, and the piecewise example
//!   measure C_f on d = 4.
//! - **Maximally coherent states** ([`coherence`]): detection with witness
//!   phases, and construction as the diagonal-unitary orbit of the uniform
//!   superposition. Mixed states never reach the log₂ d ceiling.
//! - **Bipartite systems** ([`bipartite`]): the super-additivity gap
//!   C_RE(ρ_AB) − C_RE(ρ_A) − C_RE(ρ_B), the equality ⇔ product ⇔
//!   separable-phases equivalence for square MCSs, the 2×3 linear-phase
//!   construction, and the DFT-phase state that is simultaneously maximally
//!   coherent and maximally entangled.
//! - **Channels** ([`channels`]): Kraus channels with completeness
//!   certificates, structural incoherence and unitality tests, the identity
//!   written as a sum of d maximally coherent projectors, and a classifier
//!   for MCS-preserving incoherent operations (exactly the permuted
//!   diagonal-unitary conjugations), cross-validated by Monte-Carlo probes.
//!
//! Entropies are in bits throughout. Runnable walkthroughs live under
//! `examples/`; the `coherence-lab` binary wraps the same operations behind
//! file-based commands that emit reproducible JSON certificates.

pub mod bipartite;
pub mod cert;
pub mod channels;
pub mod coherence;
pub mod commands;
pub mod io;
pub mod linalg;
pub mod sampling;
pub mod states;

pub use bipartite::{PhaseMatrix, SuperAdditivityReport};
pub use channels::{ChannelClassification, KrausChannel, PermScaledFactor};
pub use coherence::{CfInput, CoherenceReport};
pub use linalg::{Complex, ComplexMatrix, Spectrum};
pub use states::{DensityMatrix, Ensemble, IncoherentState, PureState};
