//! Exact computation of the square of the first Dirac eigenvalue on compact
//! spin inner symmetric spaces `G/K`, from the root system of `G`.

#![allow(clippy::needless_range_loop)]

pub mod dirac;
pub mod error;
pub mod linalg;
pub mod par;
pub mod rational;
pub mod rootsys;
pub mod symspace;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Rational;
