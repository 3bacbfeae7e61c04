//! The exact arithmetic tower: scalars, polynomials, R_m, truncated series
//! and quasipolynomials, plus the linear algebra built on them.

mod annihilator;
pub mod linalg;
mod poly;
mod quasipoly;
mod roots;
pub(crate) mod scalar;
mod series;
mod trunc;

pub use annihilator::{annihilator_search, is_annihilated, ParityFilter, DEFAULT_MARGIN};
pub use poly::{Parity, Polynomial};
pub use quasipoly::{apply_p_shift_quasi, Quasipolynomial};
pub use roots::{exact_roots, squarefree, RootReport};
pub use scalar::Scalar;
pub use series::{apply_p_shift_series, series_divide, Series};
pub use trunc::{rm_invert, TruncPoly};

/// Default truncation order for generating series.
pub const DEFAULT_ORDER: usize = 24;
