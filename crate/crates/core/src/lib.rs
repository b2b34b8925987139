//! Deciders for semiseparability, separability and natural fullness of
//! functors, with re-checkable witnesses.
//!
//! Two engines share one witness discipline:
//!
//! * **Engine A** ([`fincat`], [`coident`], [`adjunction`]): categories
//!   presented by finite composition tables. Every property is decided by
//!   exhaustive or constraint search, and every positive answer returns a
//!   hom-retraction family that re-validates independently.
//! * **Engine B** ([`algstruct`], [`sepcheck`], [`hopf`]): finite-dimensional
//!   algebras, coalgebras, corings and bimodules over Q or F_p given by
//!   structure constants. Criteria become exact affine-linear systems; verdicts
//!   carry either a witness or an infeasibility certificate.
//!
//! [`verify`] re-checks emitted witnesses by direct substitution through law
//! evaluators that share no code with the solvers.

pub mod adjunction;
pub mod algstruct;
pub mod coident;
pub mod error;
pub mod fincat;
pub mod hopf;
pub mod instances;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod sepcheck;
pub mod verify;

pub use error::{Error, Result, Violation};
pub use report::{Status, Verdict};
pub use scalar::{Field, Scalar};
