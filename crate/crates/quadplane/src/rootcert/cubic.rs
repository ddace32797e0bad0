//! Cubic discriminant and the one-real-root / three-real-roots decision.

use crate::error::Error;
use crate::poly::Poly1;
use crate::rat::Rat;
use crate::sturm::{sturm_count, RootLoc};

/// Verdict for a monic cubic `q^3 + alpha1 q^2 + alpha2 q + alpha3`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubicVerdict {
    /// `D3 < 0`: exactly one simple real root.
    OneSimpleReal,
    /// `D3 > 0`: three distinct real roots.
    ThreeDistinctReal,
    /// `D3 = 0`: one triple real root, or one double and one simple.
    RepeatedRootCase,
}

/// Auditable classification record for a monic cubic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicCert {
    pub alpha1: Rat,
    pub alpha2: Rat,
    pub alpha3: Rat,
    pub d3: Rat,
    pub verdict: CubicVerdict,
    pub distinct_real_count: usize,
    /// Root locators with multiplicities, ascending. For `D3 = 0` every
    /// root is rational and located exactly via gcd with the derivative.
    pub multiplicities: Vec<(RootLoc, usize)>,
}

/// `D3 = -27 a3^2 + 18 a3 a1 a2 + a1^2 a2^2 - 4 a1^3 a3 - 4 a2^3`.
pub fn cubic_discriminant(alpha1: &Rat, alpha2: &Rat, alpha3: &Rat) -> Rat {
    let (a1, a2, a3) = (alpha1, alpha2, alpha3);
    Rat::int(-27) * a3 * a3
        + Rat::int(18) * a3 * a1 * a2
        + a1 * a1 * a2 * a2
        - Rat::int(4) * a1 * a1 * a1 * a3
        - Rat::int(4) * a2 * a2 * a2
}

/// Discriminant of the semi-definite resolvent cubic
/// `q^3 + 2 a10 q^2 - q~ q + (p~ - 2 a10 q~)` as the explicit polynomial
/// `4 q~^3 - 32 a10^2 q~^2 + 8 a10 (9 p~ + 8 a10^3) q~ - p~ (32 a10^3 + 27 p~)`.
pub fn cubic_disc_resolvent(a10: &Rat, p_t: &Rat, q_t: &Rat) -> Rat {
    Rat::int(4) * q_t * q_t * q_t
        - Rat::int(32) * a10 * a10 * q_t * q_t
        + Rat::int(8) * a10 * (Rat::int(9) * p_t + Rat::int(8) * a10 * a10 * a10) * q_t
        - p_t * (Rat::int(32) * a10 * a10 * a10 + Rat::int(27) * p_t)
}

/// Classify a monic cubic by the sign of its discriminant; in the boundary
/// case `D3 = 0` the multiplicity structure is resolved exactly through
/// gcd with the derivative (triple root iff the gcd has degree 2).
pub fn cubic_classify(alpha1: &Rat, alpha2: &Rat, alpha3: &Rat) -> CubicCert {
    let d3 = cubic_discriminant(alpha1, alpha2, alpha3);
    let p = Poly1::monic_cubic(alpha1, alpha2, alpha3);
    let (verdict, distinct_real_count, multiplicities) = match d3.signum() {
        -1 => {
            let locs = simple_locators(&p);
            debug_assert_eq!(locs.len(), 1);
            (CubicVerdict::OneSimpleReal, 1, locs)
        }
        1 => {
            let locs = simple_locators(&p);
            debug_assert_eq!(locs.len(), 3);
            (CubicVerdict::ThreeDistinctReal, 3, locs)
        }
        _ => {
            let (count, mults) = repeated_case(&p, alpha1)
                .expect("monic cubic with D3 = 0 has a rational multiple-root structure");
            (CubicVerdict::RepeatedRootCase, count, mults)
        }
    };
    CubicCert {
        alpha1: alpha1.clone(),
        alpha2: alpha2.clone(),
        alpha3: alpha3.clone(),
        d3,
        verdict,
        distinct_real_count,
        multiplicities,
    }
}

fn simple_locators(p: &Poly1) -> Vec<(RootLoc, usize)> {
    sturm_count(p, None, None)
        .expect("monic cubic is nonzero")
        .roots
        .into_iter()
        .map(|r| (r.loc, r.multiplicity))
        .collect()
}

/// `D3 = 0` structure: gcd(p, p') has degree 2 for a triple root (at
/// `-alpha1/3`) and degree 1 for a double root plus a simple root; all
/// roots are rational in either case.
fn repeated_case(p: &Poly1, alpha1: &Rat) -> Result<(usize, Vec<(RootLoc, usize)>), Error> {
    let g = p.gcd(&p.derivative())?;
    match g.degree() {
        Some(2) => {
            let r = -alpha1 * Rat::frac(1, 3);
            debug_assert!(p.eval(&r).is_zero());
            Ok((1, vec![(RootLoc::Exact(r), 3)]))
        }
        Some(1) => {
            // g = x - r monic: the double root
            let r = -g.coeff(0);
            let sq = &g * &g;
            let lin = p.exact_div(&sq)?; // monic linear: the simple root
            let s = -lin.coeff(0);
            debug_assert!(p.eval(&r).is_zero() && p.eval(&s).is_zero());
            let mut mults = vec![(RootLoc::Exact(r.clone()), 2), (RootLoc::Exact(s.clone()), 1)];
            if s < r {
                mults.swap(0, 1);
            }
            Ok((2, mults))
        }
        _ => Err(Error::Precondition(
            "D3 = 0 cubic must share a root with its derivative".into(),
        )),
    }
}
