//! Coefficient rings: Laurent polynomials over Q in a fixed symbol set,
//! truncated epsilon-series at q = 1, and the field Q(q^(1/2)).

mod laurent;
mod ratfn;
mod series;

pub use laurent::{Exps, LaurentPoly, Substitution, Symbol, NSYM};
pub use ratfn::{RatFn, UPoly};
pub use series::{TruncatedSeries, EXACT};
