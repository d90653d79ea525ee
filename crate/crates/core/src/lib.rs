//! Exact symbolic computation with Hopf algebras, braided groups and their constructions.

pub mod braided;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod freealg;
pub mod hopf;
pub mod linalg;
pub mod model;
pub mod scalar;
pub mod tensor;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use freealg::{Gen, NCPoly, Presentation, Word};
pub use scalar::{FieldContext, Poly, Scalar, ScalarError};
pub use tensor::TensorElem;
