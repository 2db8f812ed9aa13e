//! Numerical toolkit for K-quasiconformal harmonic mappings of the unit disk.
//!
//! The crate is organized around a dense truncated power-series substrate
//! ([`series::TruncatedSeries`]), a harmonic-map data model `f = h + conj(g)`
//! ([`harmonic::HarmonicMap`]), the Clunie–Sheil-Small shearing constructor
//! ([`shear`]), closed-form catalogs of the extremal maps and their sharp
//! coefficient bounds ([`catalog`], [`bounds`]), slit-image geometry
//! ([`geometry`]), and a seeded randomized stress harness ([`harness`]).

pub mod bounds;
pub mod catalog;
pub mod geometry;
pub mod harmonic;
pub mod harness;
pub mod series;
pub mod shear;

pub use harmonic::{DilatationSpec, HarmonicMap};
pub use series::TruncatedSeries;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("series division requires |c_0| > 1e-14, got {0:.3e}")]
    ZeroConstantTerm(f64),
    #[error("series logarithm requires c_0 = 1, got |c_0 - 1| = {0:.3e}")]
    NonUnitConstantTerm(f64),
    #[error("degenerate analytic part: |h'(0)| = {0:.3e}")]
    DegenerateAnalyticPart(f64),
    #[error("affine factor must satisfy |b1| < 1, got |b1| = {0}")]
    AffineDegenerate(f64),
    #[error("shear denominator 1 {0} omega vanishes at the origin")]
    DegenerateDenominator(char),
    #[error("map does not have real coefficients: max |Im c| = {0:.3e}")]
    NonRealCoefficients(f64),
    #[error("closed-form evaluation requested outside the unit disk (|z| = {0})")]
    BranchAmbiguity(f64),
    #[error("trial generation failed: {0}")]
    GenerationFailure(String),
    #[error("unrecognized identifier: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
