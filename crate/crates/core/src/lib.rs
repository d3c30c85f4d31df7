//! Exact divisor-class calculus and positivity certificates on the weighted
//! moduli spaces of pointed rational curves `M_{0,A}` with `n` points of
//! weight `1/k` and `m` points of weight 1.
//!
//! The crate is organized bottom-up:
//!
//! * [`classes`]: weight vectors, boundary keys, divisor classes and the
//!   `D_k(c)` ray.
//! * [`morphism`]: push-forward and pull-back along the reduction and
//!   replacement morphisms, with test-curve derivations of their constants.
//! * [`family`]: one-parameter families as blow-down sequences, their
//!   intersection numbers and the telescoping potential functions.
//! * [`positivity`]: per-step drops, lattice minimization and the threshold
//!   tables.
//! * [`certify`]: the stratum recursion that turns drops into certificates.
//! * [`fixtures`]: executable reproductions of the worked test curves.
//!
//! All arithmetic is exact; see [`rational`].

pub mod certify;
pub mod classes;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod morphism;
pub mod positivity;
pub mod rational;

pub use certify::{Certificate, Perturbation, Verdict};
pub use classes::{BoundaryKey, DivisorClass, WeightVector};
pub use error::{Error, Result};
pub use family::{BlowdownStep, FamilyModel, IntersectionReport};
pub use positivity::{CoefficientVector, DropEvaluation};
pub use rational::Rational;
