//! Exact character theory for cyclic, dihedral and dicyclic groups, with a
//! brute-force classifier for strong Gelfand subgroups.

pub mod character;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod gelfand;
pub mod group;

pub use cyclo::{Cyclotomic, Rational};
pub use error::{Error, Result};
