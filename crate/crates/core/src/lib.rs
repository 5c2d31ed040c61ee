//! Exact connection coefficients between Laguerre-Gaussian and
//! Hermite-Gaussian laser modes, the coherence and entropy measures they
//! induce, and a suite that checks the related summation identities in
//! exact arithmetic.

pub mod beamfield;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod hyper;
pub mod identities;
pub mod modecoeff;
pub mod orthopoly;
pub mod report;
pub mod statistics;

pub use error::{Error, Result};
