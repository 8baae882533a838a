//! Momentum polytopes for the diagonal SU(3) action on weighted products of two or three
//! copies of CP^2, with a Monte Carlo oracle and eigenvalue bounds for sums of Hermitian
//! matrices with a double eigenvalue.
//!
//! Combinatorial routines are generic over [`Scalar`]: `f32`, `f64` or exact [`Rational`].

pub mod bounds;
pub mod classify;
pub mod cones;
pub mod error;
pub mod export;
pub mod moment;
pub mod oracle;
pub mod polytope;
pub mod scalar;
pub mod su3;

pub use classify::{canonicalize, classify_n2, classify_n3, N2Type, N3Type};
pub use error::{Error, Result};
pub use moment::{CPPoint, FixedPoint, Weights};
pub use polytope::{build_polytope, contains, ChamberPolytope, HalfPlane, Kind};
pub use scalar::Scalar;
pub use su3::{ChamberPoint, Hermitian3, Spectrum};

pub type Rational = num_rational::BigRational;

pub type Weights64 = Weights<f64>;
pub type WeightsExact = Weights<Rational>;
pub type Spectrum64 = Spectrum<f64>;
pub type SpectrumExact = Spectrum<Rational>;
pub type Polytope64 = ChamberPolytope<f64>;
pub type PolytopeExact = ChamberPolytope<Rational>;
