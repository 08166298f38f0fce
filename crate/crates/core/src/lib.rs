//! Exact-arithmetic lattice abelian gauge operators.
//!
//! The crate models dyadic cubical complexes on `R^d`, the polynomial
//! observable algebra in plaquette holonomies modulo the Bianchi ideal,
//! second-order differential operators acting on it, and the states
//! `mu_0 exp(lambda L)` built from them. Every check is performed over exact
//! rationals, so a residual either vanishes or it does not.
//!
//! Module map:
//! - [`lattice`]: cells, boundaries, subdivision and signed lattice symmetries.
//! - [`polyalg`]: sparse rational polynomials and linear ideal reduction.
//! - [`operators`]: coefficient families and operator application.
//! - [`verify`]: gauge, compatibility and well-definedness residuals.
//! - [`states`]: flat and exponential states, Gaussian moments on the sphere.

pub mod error;
pub mod lattice;
pub mod operators;
pub mod polyalg;
pub mod rational;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Cell, SignedChain, SignedSymmetry};
pub use operators::{BaseTable, CubicalFamily, DiffOperator, ExplicitOp, OperatorSpec, SphereOp};
pub use polyalg::{LinearIdeal, Monomial, Polynomial, Var};
pub use rational::Rational;
pub use states::{CovarianceMatrix, LambdaPoly};
pub use verify::{Condition, ResidualReport, Site};
