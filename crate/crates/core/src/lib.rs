//! Exact symbolic engine for covariant symmetrization of special tensor
//! monomials and the linear-in-second-argument Taylor operators of the
//! double exponential map, written as noncommutative rational polynomials
//! in formal curvature operators. Includes the underlying tensor-bialgebra
//! machinery (coproduct, derivations, the K-operator) with a machine-checked
//! identity suite, and an independent constant-curvature numerical oracle.

pub mod constcurv;
pub mod error;
pub mod fixtures;
pub mod magma;
pub mod qword;
pub mod rational;
pub mod selfcheck;
pub mod symmetrizer;

pub use error::Error;
pub use qword::{word_count_of_degree, QPoly, QWord};
pub use rational::Rational;
pub use symmetrizer::{symmetrize_special, taylor_operator};
