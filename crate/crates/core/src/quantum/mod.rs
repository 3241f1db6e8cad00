//! U_q(sl2) representations, coproducts, braided R-matrices and the
//! intermediate Casimirs of tensor products.

pub mod braid;
pub mod casimir;
pub mod expand;
pub mod fourpoint;
pub mod irrep;
pub mod multiplicity;
pub mod realize;
pub mod rmatrix;
pub mod uq;

pub use braid::{braid_act, BraidWord};
pub use casimir::{intermediate_casimir, Convention};
pub use irrep::{irrep, Irrep, LMatrix};
pub use rmatrix::braided_r;
pub use uq::{Letter, UqElement};
