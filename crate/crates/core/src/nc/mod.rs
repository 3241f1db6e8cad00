//! Non-commutative polynomials, string rewriting to normal form, and the
//! Askey-Wilson presentations built on top of them.

pub mod aw;
mod poly;
pub mod potential;
mod rewrite;

pub use poly::{Alphabet, NcMonomial, NcPoly};
pub use rewrite::{default_step_budget, RewriteSystem, Rule, Step, Strategy, DEFAULT_STEP_BUDGET};
