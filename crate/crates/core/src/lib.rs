//! Exact symmetric functions, truncated power series, a Heisenberg Fock
//! model, Grassmannian Schubert calculus and the dimension bookkeeping that
//! ties them together.

pub mod error;
pub mod fock;
pub mod numerology;
pub mod partition;
pub mod rational;
pub mod report;
pub mod schubert;
pub mod series;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use rational::Rational;
