//! Legendre, Bulirsch and inverse-function forms built on the symmetric
//! integrals.

mod bulirsch;
mod inverse;
mod legendre;

pub use bulirsch::{bulirsch, cel, el1, el2, el3, Bulirsch};
pub use inverse::{inverse_via_rc, InverseKind};
pub use legendre::{
    complete_k_e, heuman_lambda, jacobi_zeta, legendre_d, legendre_e, legendre_f, legendre_pi,
    CompleteKE,
};
