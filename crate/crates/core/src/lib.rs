#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod chartable;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod group;
pub mod hopf;
pub mod irrep;
pub mod matrix;
pub mod rep;
pub mod rt;
pub mod scalar;
pub mod xmod;

pub use cyclotomic::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupAction, GroupHomomorphism, OrbitData, Subgroup};
pub use matrix::Matrix;
pub use scalar::Scalar;
