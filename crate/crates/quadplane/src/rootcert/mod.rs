//! Closed-form real-root certificates for monic cubics and quartics.
//!
//! Everything here is a polynomial identity in the input coefficients,
//! evaluated exactly; no root is ever approximated to reach a verdict. The
//! Sturm oracle lives elsewhere and is used only to cross-validate these
//! certificates, never to compute them.

mod cubic;
mod quartic;

pub use cubic::{cubic_classify, cubic_disc_resolvent, cubic_discriminant, CubicCert, CubicVerdict};
pub use quartic::{
    elimination_ladder, quartic_aux, quartic_discriminant, quartic_exactly_one_real,
    resolvent_disc_definite, resolvent_disc_indefinite, QuadraticFactor, QuarticAux,
    QuarticBranch, QuarticCert, QuarticLadder,
};
