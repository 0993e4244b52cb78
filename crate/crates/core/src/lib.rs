//! Exact invariants of the Berge knots `b^+(m, n)` (type VII) and `b^-(m, n)`
//! (type VIII): Alexander polynomials, lens surgeries, Reidemeister torsion,
//! hyperbolicity certificates, and the number theory behind their surgery
//! coefficients.

pub mod arith;
pub mod dual;
pub mod error;
pub mod hyperbolic;
pub mod knot;
pub mod lens;
pub mod poly;
pub mod quad;
pub mod torsion;

pub use error::{Error, Result};
pub use knot::{Sign, StandardParam};
pub use lens::LensSpace;
pub use poly::{BivariatePoly, CyclotomicElement, LaurentPoly};
