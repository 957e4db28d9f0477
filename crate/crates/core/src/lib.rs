//! Stieltjes constants and the Laurent expansion of the Hurwitz zeta
//! function, computed to arbitrary precision through several independent
//! series representations that cross-check one another.
//!
//! The Euler-Maclaurin evaluation of zeta jets ([`hurwitz`]) is the single
//! reference everything else is validated against; the alternative routes
//! (Taylor shifts, cascaded zeta-value series, tail-zeta and asymptotic
//! expansions, an exponential-series acceleration, Ser/Knessl polynomial
//! forms, and Lerch/reflection identities) live in their own modules and
//! agree with it within tracked error bounds.

pub mod combinatorics;
pub mod error;
pub mod hurwitz;
pub mod lerch;
pub mod mp;
pub mod ser;
pub mod specfun;
pub mod stieltjes;
pub mod validate;

pub use error::{Error, Result};
pub use hurwitz::{LaurentExpansion, Zeta, ZetaJet};
pub use mp::jet::Jet;
pub use mp::real::{bits_for_digits, eps_for_digits, BigReal};
pub use stieltjes::{gamma_by_method, gamma_profile, methods_for, Method, StieltjesValue};
pub use validate::{run_suite, Check, Suite};
