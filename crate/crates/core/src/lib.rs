//! Exact symbolic computation in the quantum super group `A(sigma)`.

pub mod cache;
pub mod dual;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod qfun;
pub mod repn;
pub mod report;
pub mod scalars;
pub mod spheres;
pub mod superalg;

pub use error::{Error, Result};
pub use hopf::TensorElement;
pub use report::{Report, Route};
pub use scalars::Scalar;
pub use superalg::{Element, Gen, Monomial, Ring};
