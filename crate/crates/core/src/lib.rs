pub mod algebra;
pub mod curvature;
pub mod error;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod projspace;
pub mod reduction;
pub mod sampling;
pub mod scalar;

pub use error::{PqError, Result};
pub use matrix::Matrix;
pub use scalar::{Mode, Rational, Scalar, ScalarField, SmallRational};
pub use algebra::{FlowAxis, SplitQuaternion, EPSILON};
pub use linalg::{HermitianStructure, PQMatrix, PQVector};
