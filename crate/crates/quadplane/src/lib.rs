//! Exact analysis of quadratic transformations of the real plane.
//!
//! A quadratic transformation sends `(p, q)` to a pair of bivariate
//! polynomials of degree at most two. This crate decides — in exact
//! rational arithmetic — whether such a map is invertible, and produces
//! auditable artifacts either way:
//!
//! - a four-way classification of the associated binary quadratic form
//!   (zero / indefinite / semi-definite / definite), which is invariant
//!   under invertible linear changes of coordinates on both sides;
//! - for the zero class, a deterministic reduction to the canonical shear
//!   `p~ = p + q^2, q~ = q` with a replayable transcript and a closed-form
//!   inverse;
//! - for the other classes, a non-invertibility verdict with a concrete
//!   witness: a target hit twice (collision) or never (missing value),
//!   certified by resultant elimination and Sturm counts;
//! - closed-form real-root certificates for cubics and quartics (the
//!   discriminant ladder `D4, A0, A1, B2, D2`), cross-validated against an
//!   independent Sturm-sequence oracle;
//! - a desk-scale demo around the degree-10 cuboid characteristic
//!   polynomial and its involutive parameter transform.
//!
//! Certificates never contain floating point; binary64 enters only in
//! explicitly flagged numeric reduction steps and display approximations.
//!
//! # Quick start
//!
//! ```rust
//! use quadplane::{decide_invertibility, InvertStatus, QuadMap, Rat};
//!
//! // p~ = p + q^2, q~ = q is invertible; its inverse is p = p~ - q~^2.
//! let verdict = decide_invertibility(&QuadMap::shear(), 4);
//! assert_eq!(verdict.status, InvertStatus::InvertibleQuadratic);
//! let inv = verdict.inverse.as_ref().unwrap();
//! assert_eq!(inv.eval(&Rat::int(11), &Rat::int(3)), (Rat::int(2), Rat::int(3)));
//!
//! // p~ = p^2 + q, q~ = q^2 + p is not: its associated form is indefinite.
//! let verdict = decide_invertibility(&QuadMap::canonical_indefinite(), 4);
//! assert_eq!(verdict.status, InvertStatus::NotInvertible);
//! assert!(verdict.witness.is_some());
//! ```
//!
//! The `examples/` directory has one runnable program per capability;
//! the `quadplane` binary exposes the same surface as CLI subcommands
//! emitting JSON reports.

pub mod cli;
pub mod cuboid;
pub mod error;
pub mod fiber;
pub mod invert;
pub mod poly;
pub mod quadform;
pub mod quadmap;
pub mod rat;
pub mod reduce;
pub mod report;
pub mod rootcert;
pub mod sturm;

pub use error::Error;
pub use fiber::{falsify, preimage_count, FalsifyResult, Fiber, Witness, WitnessKind};
pub use invert::{check_equivalence, decide_invertibility, invert, lattice_check, InvertStatus,
    InvertibilityVerdict};
pub use poly::Poly1;
pub use quadform::{FormClass, FormClassTag, FormTriple, LightVectors};
pub use quadmap::{AffineMap2, QuadMap};
pub use rat::Rat;
pub use reduce::{precanonicalize, CanonicalForm, ReductionTranscript};
pub use rootcert::{
    cubic_classify, cubic_disc_resolvent, cubic_discriminant, elimination_ladder, quartic_aux,
    quartic_discriminant, quartic_exactly_one_real, resolvent_disc_definite,
    resolvent_disc_indefinite, CubicCert, CubicVerdict, QuarticBranch, QuarticCert,
};
pub use sturm::{sturm_count, IsolatedRoot, RootCount, RootLoc};
