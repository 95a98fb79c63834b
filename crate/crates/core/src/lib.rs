//! Construction of quasi-periodic solutions of the nonlinear periodic
//! polyharmonic equation
//!
//! ```text
//! (−Δ)ˡ u + V u + σ|u|² u = λ u,     2l > n ≥ 2,
//! ```
//!
//! by a potential fixed-point iteration on top of a resolvent perturbation
//! series for the linear Bloch problem. The crate exposes:
//!
//! - [`field`] — sparse Fourier fields on the dual lattice and the star norm;
//! - [`bloch`] — the truncated Bloch operator, contour-quadrature eigenvalue
//!   and projection series, and a dense eigensolver oracle;
//! - [`nonres`] — non-resonant set membership, direction decomposition and
//!   Monte Carlo measure estimates;
//! - [`fixpoint`] — the nonlinear map, the W-sequence iteration, solution
//!   assembly and the Fourier-space residual;
//! - [`isosurf`] — isoenergetic surface radii κ(λ,A,ν), deviation h and
//!   surface measure estimates;
//! - [`cli`] — configuration, orchestration and serialization for the
//!   `polyharm` binary.

pub mod bloch;
pub mod cli;
pub mod error;
pub mod field;
pub mod fixpoint;
pub mod isosurf;
pub mod nonres;

pub use error::{BoundCheck, Error, Result};
pub use field::{BoundMode, FourierField, LatticeIndex, LinearSolver, ProblemParams};
