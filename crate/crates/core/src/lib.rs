//! Exact verification of type-B Hecke algebra, duplex Hecke algebra and
//! iquantum group actions on the enhanced tensor space `V̲^{⊗m}` over `Q(q)`.

pub mod commutant;
pub mod duplex;
pub mod error;
pub mod field;
pub mod heckeb;
pub mod iquantum;
pub mod linalg;
pub mod ratfunc;
pub mod report;
pub mod tensorspace;

pub use error::{Error, Result};
pub use ratfunc::{BigRat, LaurentPoly, RatFunc, RatFuncError};
