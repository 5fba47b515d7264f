pub mod battery;
pub mod degrees;
pub mod error;
pub mod fflv;
pub mod ideals;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod poly;
pub mod representations;
pub mod tableaux;
pub mod triangle;
pub mod tropical;
pub mod weights;

pub use degrees::{degree_s, fundamental_pattern, GradingVector, PlueckerIndex};
pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use fflv::{DominantWeight, DyckPath, TrianglePattern};
pub use poly::{Monomial, Polynomial, Rational};
pub use tableaux::PBWTableau;
pub use weights::{canonical_weight_systems, FaceSignature, WeightSystem};
