//! Parametric graph Laplacians for graph signal processing.
//!
//! The central object is the deformed Laplacian
//! `L_DF(r) = (D - I) r^2 - A r + I`, a quadratic matrix polynomial in a real
//! parameter `r` that interpolates between the combinatorial (`r = 1`),
//! signless (`r = -1`) and signed (`r = 1`, signed weights) Laplacians.
//!
//! Modules:
//! - [`graph`]: graph representation, predicates and synthetic generators
//! - [`laplacian`]: the deformed Laplacian, classical forms, quadratic forms
//! - [`spectral`]: deterministic eigendecomposition, DGFT, top-K projection
//! - [`pep`]: quadratic polynomial eigenvalue problem via companion
//!   linearization, structural spectrum reports
//! - [`learner`]: joint line-search learning of the Laplacian form and
//!   K-sparse signal representations
//! - [`dynamics`]: reaction-diffusion simulation driven by `-L_DF(r)`
//! - [`io`]: CSV parsers and writers for signals, prices and trajectories

pub mod dynamics;
pub mod error;
pub mod graph;
pub mod io;
pub mod laplacian;
pub mod learner;
pub mod pep;
pub mod spectral;

pub use error::{Error, Result};
