//! Carlson symmetric elliptic integrals for real and complex arguments.

pub mod agm;
pub mod classical;
pub mod complex;
pub mod error;
pub mod literal;
pub mod quartic;
pub mod symmetric;
pub mod tolerance;
pub mod verify;

pub use complex::{c64, in_cut_plane, phase, principal_sqrt, Complex};
pub use error::{Error, Result};
pub use symmetric::{duplication_step, rc, rd, rf, rg, rj, rj_unchecked, DuplicationState};
pub use tolerance::{EvalResult, Tolerance};
