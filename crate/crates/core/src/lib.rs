pub mod coeff;
pub mod daha;
pub mod error;
pub mod label;
pub mod linalg;
pub mod matrix;
pub mod nc;
pub mod quantum;
pub mod racah;
pub mod reflection;
pub mod report;
pub mod ring;
pub mod skein;
pub mod suite;
pub mod weyl;

pub use error::{Error, Result};
