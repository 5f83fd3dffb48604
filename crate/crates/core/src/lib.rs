//! Exact computer algebra for 2-step nilpotent Lie algebras carrying
//! ad-invariant metrics.
//!
//! Everything is computed over the rationals: structure constants, Gram
//! matrices, connection coefficients and certificates are exact, so every
//! identity checked here is checked with equality, never a tolerance.
//!
//! Module map:
//!
//! - [`exactla`]: rationals, dense matrices, linear solving, indefinite
//!   bilinear spaces, and the invertibility decision for linear matrix families.
//! - [`liealg`]: structure-constant Lie algebras, central series, Killing
//!   form, invariant forms, derivations, isomorphism checks.
//! - [`rhoform`]: maps `ρ: V → so(V)` with `ρ(v)v = 0`, their alternating
//!   trilinear forms, generators and nonexistence certificates.
//! - [`construct`]: modified cotangent, cotangent, central factors, double
//!   extension and the normal form.
//! - [`jmaps`]: the `J_z` toolkit and the decision procedure for admitting an
//!   ad-invariant metric.
//! - [`geomiso`]: Levi-Civita connection, curvature, Ricci, holonomy and
//!   isometry criteria.
//! - [`rmatrix`]: classical r-matrices, lifts, cobrackets, complex structures.

pub mod catalog;
pub mod construct;
pub mod error;
pub mod exactla;
pub mod geomiso;
pub mod jmaps;
pub mod liealg;
pub mod rhoform;
pub mod rmatrix;
pub mod sample;

pub use error::{Error, Result};
pub use exactla::{BilinearSpace, Mat, ParamMatrixFamily, Scalar, SubspaceBasis};
pub use liealg::{LieAlgebra, MetricLieAlgebra};
pub use rhoform::{AltTrilinearForm, RhoMap};
