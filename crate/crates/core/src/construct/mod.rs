//! Metric Lie algebras built from other data: (modified) cotangent
//! algebras, central factors, double extensions and the normal form of a
//! 2-step nilpotent metric Lie algebra.

mod cotangent;
mod double;
mod normal;

pub use cotangent::{add_central_factor, cotangent, modified_cotangent};
pub use double::{block_derivation, derivation_blocks, double_extension, satisfies_derivation_relation};
pub use normal::{normal_form, split_center, CenterSplit, NormalFormResult};
