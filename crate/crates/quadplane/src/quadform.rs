//! The associated binary quadratic form of a quadratic planar map, its
//! four-way definiteness classification, light vectors, and the auxiliary
//! four-variable forms used in the definite case.
//!
//! With the three 2x2 minors of the quadratic-part coefficient rows written
//! as `2*alpha`, `2*beta`, `2*gamma`, the form is
//! `omega1(c) = 2*alpha*c1^2 + 2*beta*c1*c2 + 2*gamma*c2^2`, whose matrix is
//! `[[2*alpha, beta], [beta, 2*gamma]]` with determinant `4*alpha*gamma - beta^2`.
//! The sign of that determinant (together with vanishing) drives the whole
//! case analysis: it is invariant up to positive squares under composition
//! with invertible linear maps on either side.

use std::fmt;

use crate::error::Error;
use crate::poly::Poly1;
use crate::rat::Rat;
use crate::sturm::{sturm_count, RootLoc};

/// The half-minor triple `(alpha, beta, gamma)` of a quadratic map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormTriple {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
}

/// Definiteness class of the associated form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormClassTag {
    Zero,
    Indefinite,
    SemiDefinite,
    Definite,
}

impl fmt::Display for FormClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormClassTag::Zero => "Zero",
            FormClassTag::Indefinite => "Indefinite",
            FormClassTag::SemiDefinite => "SemiDefinite",
            FormClassTag::Definite => "Definite",
        };
        write!(f, "{s}")
    }
}

/// Classification verdict with the discriminating determinant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormClass {
    pub tag: FormClassTag,
    /// `det Omega1 = 4*alpha*gamma - beta^2`.
    pub det_omega1: Rat,
}

/// Null directions of the form.
#[derive(Clone, PartialEq, Debug)]
pub enum LightVectors {
    /// The zero form annihilates every vector.
    AllVectors,
    /// Definite forms have no nonzero null vector.
    None,
    /// Semi-definite: a single direction up to scale.
    Single([Rat; 2]),
    /// Indefinite with rational null slopes: two independent directions.
    PairRational([Rat; 2], [Rat; 2]),
    /// Indefinite with conjugate surd slopes: directions `(t, 1)` for the
    /// two real roots `t` of the stated quadratic.
    PairSurd {
        /// `2*gamma + 2*beta t + 2*alpha t^2`, ascending coefficients.
        slope_poly: Poly1,
        /// Isolating locations for the two roots, ascending.
        roots: [RootLoc; 2],
    },
}

impl FormTriple {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat) -> Self {
        FormTriple { alpha, beta, gamma }
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    /// `omega1(c) = 2 alpha c1^2 + 2 beta c1 c2 + 2 gamma c2^2`.
    pub fn omega1(&self, c1: &Rat, c2: &Rat) -> Rat {
        let two = Rat::int(2);
        &two * &self.alpha * c1 * c1 + &two * &self.beta * c1 * c2 + &two * &self.gamma * c2 * c2
    }

    /// `det Omega1 = 4 alpha gamma - beta^2`.
    pub fn det_omega1(&self) -> Rat {
        Rat::int(4) * &self.alpha * &self.gamma - &self.beta * &self.beta
    }

    /// Four-way classification by the sign of `det Omega1`.
    pub fn classify(&self) -> FormClass {
        let det = self.det_omega1();
        let tag = if self.is_zero() {
            FormClassTag::Zero
        } else {
            match det.signum() {
                1 => FormClassTag::Definite,
                -1 => FormClassTag::Indefinite,
                _ => FormClassTag::SemiDefinite,
            }
        };
        FormClass {
            tag,
            det_omega1: det,
        }
    }

    /// Directions annihilated by the form. Rational directions are
    /// normalized to a leading 1 (or reported as `(0, 1)`); surd slopes are
    /// returned exactly as isolated roots of `2 alpha t^2 + 2 beta t + 2 gamma`.
    pub fn light_vectors(&self) -> LightVectors {
        match self.classify().tag {
            FormClassTag::Zero => LightVectors::AllVectors,
            FormClassTag::Definite => LightVectors::None,
            FormClassTag::SemiDefinite => {
                // beta^2 = 4 alpha gamma and the form is nonzero
                if self.alpha.is_zero() {
                    // then beta = 0 and gamma != 0: omega1 = 2 gamma c2^2
                    LightVectors::Single([Rat::one(), Rat::zero()])
                } else {
                    // omega1 = (2 alpha c1 + beta c2)^2 / (2 alpha)
                    let dir = normalize_dir(-&self.beta, Rat::int(2) * &self.alpha);
                    LightVectors::Single(dir)
                }
            }
            FormClassTag::Indefinite => {
                if self.alpha.is_zero() {
                    // omega1 = 2 c2 (beta c1 + gamma c2): directions (1, 0)
                    // and (-gamma, beta) with beta != 0
                    let second = normalize_dir(-&self.gamma, self.beta.clone());
                    LightVectors::PairRational([Rat::one(), Rat::zero()], second)
                } else {
                    // slopes t with alpha t^2 + beta t + gamma = 0
                    let disc = &self.beta * &self.beta - Rat::int(4) * &self.alpha * &self.gamma;
                    if let Some(s) = disc.sqrt_exact() {
                        let two_alpha = Rat::int(2) * &self.alpha;
                        let t1 = (-&self.beta + &s).checked_div(&two_alpha).unwrap();
                        let t2 = (-&self.beta - &s).checked_div(&two_alpha).unwrap();
                        let (hi, lo) = if t1 >= t2 { (t1, t2) } else { (t2, t1) };
                        LightVectors::PairRational(
                            normalize_dir(hi, Rat::one()),
                            normalize_dir(lo, Rat::one()),
                        )
                    } else {
                        let slope_poly = Poly1::new(vec![
                            Rat::int(2) * &self.gamma,
                            Rat::int(2) * &self.beta,
                            Rat::int(2) * &self.alpha,
                        ]);
                        let rc = sturm_count(&slope_poly, None, None)
                            .expect("slope polynomial is nonzero");
                        assert_eq!(rc.distinct_real, 2, "indefinite form has two null slopes");
                        LightVectors::PairSurd {
                            slope_poly,
                            roots: [rc.roots[0].loc.clone(), rc.roots[1].loc.clone()],
                        }
                    }
                }
            }
        }
    }

    /// `omega2(c) = alpha c1 c3 + beta c1 c4 + beta c2 c3 + gamma c2 c4`
    /// and `omega3(c) = 2 (c1 c4 - c2 c3)`.
    pub fn omega2_omega3(&self, c: &[Rat; 4]) -> (Rat, Rat) {
        let omega2 = &self.alpha * &c[0] * &c[2]
            + &self.beta * &c[0] * &c[3]
            + &self.beta * &c[1] * &c[2]
            + &self.gamma * &c[1] * &c[3];
        let omega3 = Rat::int(2) * (&c[0] * &c[3] - &c[1] * &c[2]);
        (omega2, omega3)
    }

    /// The definite-case vector `(gamma, -3 beta, -2 beta, (3 beta^2 - alpha gamma)/gamma)`:
    /// a null vector of `omega2` with `omega3 = -2(alpha gamma + 3 beta^2) < 0`.
    /// Requires a definite triple (which forces `gamma != 0`).
    pub fn definite_case_vector(&self) -> Result<[Rat; 4], Error> {
        if self.classify().tag != FormClassTag::Definite {
            return Err(Error::Precondition(
                "definite_case_vector needs a definite form".into(),
            ));
        }
        let three_b2 = Rat::int(3) * &self.beta * &self.beta;
        let c4 = (three_b2 - &self.alpha * &self.gamma).checked_div(&self.gamma)?;
        let c = [
            self.gamma.clone(),
            Rat::int(-3) * &self.beta,
            Rat::int(-2) * &self.beta,
            c4,
        ];
        let (w2, w3) = self.omega2_omega3(&c);
        debug_assert!(w2.is_zero());
        debug_assert!(w3.is_negative());
        // omega3 = -2(alpha gamma + 3 beta^2); strictly below -13/2 beta^2
        // whenever beta != 0 (the chained bound needs 4 alpha gamma > beta^2).
        debug_assert!(
            self.beta.is_zero() || w3 < Rat::frac(-13, 2) * &self.beta * &self.beta
        );
        Ok(c)
    }
}

fn normalize_dir(x: Rat, y: Rat) -> [Rat; 2] {
    if !x.is_zero() {
        let inv = x.recip().unwrap();
        [Rat::one(), y * inv]
    } else {
        [Rat::zero(), Rat::one()]
    }
}
