//! Exact linear algebra over the rationals.

pub mod bilinear;
pub mod family;
pub mod mat;
pub mod scalar;
pub mod solve;
pub mod subspace;
pub mod vector;

pub use bilinear::{hyperbolic_space, BilinearSpace, ComplementFlavor, HyperbolicPairing, Signature, SubspaceKind};
pub use family::{
    family_contains_invertible, family_contains_invertible_with, Invertibility, InvertibilityOptions,
    ParamMatrixFamily, ZeroMethod,
};
pub use mat::Mat;
pub use scalar::{format_scalar, frac, int, parse_scalar, Scalar};
pub use solve::{solve_linear, AffineSolution};
pub use subspace::SubspaceBasis;
