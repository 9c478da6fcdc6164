//! Exact arithmetic for Fibonacci and Lucas polynomial connection matrices,
//! generalized Stirling triangles, and the Bernoulli, Genocchi and tangent
//! number identities they produce.

pub mod akiyama;
pub mod catalog;
pub mod connect;
pub mod error;
pub mod families;
pub mod format;
pub mod numbers;
pub mod polyalg;
pub mod rational;
pub mod report;
pub mod seidel;
pub mod stirling;
pub mod trimat;

pub use error::{Error, MatrixError, Result};
pub use polyalg::Poly;
pub use rational::Rational;
pub use report::{Counterexample, IdentityReport, Value};
pub use stirling::WeightSpec;
pub use trimat::TriMatrix;
