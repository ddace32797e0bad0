//! Quartic discriminant, the linear eliminant ladder, and the complete
//! "exactly one real root" decision for monic quartics
//! `x^4 + a1 x^3 + a2 x^2 + a3 x + a4`.
//!
//! The decision needs only exact sign tests on four derived quantities:
//! the discriminant `D4`, the leading/constant coefficients `A0`, `A1` of
//! the linear eliminant `P1`, the numerator `B2` of the double root's
//! quadratic cofactor discriminant, and the degenerate-case quantity
//! `D2 = 3/2 a1^2 - 4 a2`.

use crate::poly::Poly1;
use crate::rat::Rat;

/// Decision path taken by [`quartic_exactly_one_real`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuarticBranch {
    /// `D4 != 0`: no repeated root anywhere, so never exactly one real root.
    GenericSimpleRoots,
    /// `D4 = 0, A0 != 0`: a unique real double root `x0 = -A1/A0`; exactly
    /// one real root iff `B2 < 0`.
    DoubleRootBranch,
    /// `D4 = 0, A0 = 0, D2 = 0`: a quadruple real root at `-a1/4`.
    QuadrupleBranch,
    /// Repeated structure that is not a single real point. Covers the
    /// `A0 != 0, B2 = 0` boundary (two distinct real double roots; vacuous
    /// over exact rationals) and the `A0 = 0, D2 != 0` degenerate family
    /// (two real double roots, a repeated complex pair, or triple+simple).
    TwoDoubleRealBranch,
}

/// The quadratic cofactor `P2 = x^2 + b1 x + b2` of a double root, with its
/// discriminant `d2 = b1^2 - 4 b2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticFactor {
    pub b1: Rat,
    pub b2: Rat,
    pub d2: Rat,
}

impl QuadraticFactor {
    fn new(b1: Rat, b2: Rat) -> Self {
        let d2 = &b1 * &b1 - Rat::int(4) * &b2;
        QuadraticFactor { b1, b2, d2 }
    }
}

/// The four derived sign quantities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuarticAux {
    /// `A0`: leading coefficient of the linear eliminant `P1`.
    pub a0: Rat,
    /// `A1`: constant term of `P1`.
    pub a1: Rat,
    /// `B2`: numerator of `D2 = 4 B2 / A0^2` at the eliminated double root.
    pub b2: Rat,
    /// `D2` specialized to the quadruple-root candidate `x0 = -a1/4`.
    pub d2_special: Rat,
}

/// Auditable certificate for the one-real-root decision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuarticCert {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub d4: Rat,
    pub aux: QuarticAux,
    pub exactly_one_real: bool,
    pub branch: QuarticBranch,
    /// The repeated real root, when the branch pins one down.
    pub x0: Option<Rat>,
    /// Quadratic cofactor at the repeated root, when defined.
    pub factor: Option<QuadraticFactor>,
}

/// The 16-term monic quartic discriminant.
pub fn quartic_discriminant(a1: &Rat, a2: &Rat, a3: &Rat, a4: &Rat) -> Rat {
    let c = Rat::int;
    c(18) * a1 * a1 * a1 * a3 * a2 * a4
        + c(256) * a4 * a4 * a4
        - c(6) * a1 * a1 * a3 * a3 * a4
        - c(192) * a1 * a3 * a4 * a4
        + c(18) * a1 * a3 * a3 * a3 * a2
        + c(144) * a2 * a1 * a1 * a4 * a4
        + a2 * a2 * a1 * a1 * a3 * a3
        - c(4) * a2 * a2 * a2 * a1 * a1 * a4
        + c(144) * a4 * a3 * a3 * a2
        - c(4) * a1 * a1 * a1 * a3 * a3 * a3
        - c(27) * a3 * a3 * a3 * a3
        - c(128) * a2 * a2 * a4 * a4
        + c(16) * a2 * a2 * a2 * a2 * a4
        - c(4) * a2 * a2 * a2 * a3 * a3
        - c(27) * a1 * a1 * a1 * a1 * a4 * a4
        - c(80) * a1 * a3 * a2 * a2 * a4
}

/// `A0`, `A1`, `B2`, and the specialized `D2`, all exact.
pub fn quartic_aux(a1: &Rat, a2: &Rat, a3: &Rat, a4: &Rat) -> QuarticAux {
    let c = Rat::int;
    let a0_lead = c(8) * a2 * a2 * a2 + c(36) * a3 * a3 + c(6) * a1 * a1 * a1 * a3
        - c(32) * a2 * a4
        - c(2) * a1 * a1 * a2 * a2
        + c(12) * a1 * a1 * a4
        - c(28) * a1 * a2 * a3;
    let a1_const = c(-3) * a1 * a3 * a3
        + c(48) * a4 * a3
        + c(9) * a1 * a1 * a1 * a4
        + c(4) * a3 * a2 * a2
        - a3 * a2 * a1 * a1
        - c(32) * a1 * a4 * a2;
    let b2 = big_b2(a1, a2, a3, a4);
    let d2_special = Rat::frac(3, 2) * a1 * a1 - c(4) * a2;
    QuarticAux {
        a0: a0_lead,
        a1: a1_const,
        b2,
        d2_special,
    }
}

/// The 35-term numerator `B2`; validated in tests against the exact
/// identity `4 B2 = A0^2 (a1^2 - 4 a2 - 8 x0^2 - 4 x0 a1)` with `x0 = -A1/A0`.
fn big_b2(a1: &Rat, a2: &Rat, a3: &Rat, a4: &Rat) -> Rat {
    let c = Rat::int;
    // powers
    let a1_2 = a1 * a1;
    let a1_3 = &a1_2 * a1;
    let a1_4 = &a1_3 * a1;
    let a1_5 = &a1_4 * a1;
    let a1_6 = &a1_5 * a1;
    let a1_7 = &a1_6 * a1;
    let a1_8 = &a1_7 * a1;
    let a2_2 = a2 * a2;
    let a2_3 = &a2_2 * a2;
    let a2_4 = &a2_3 * a2;
    let a2_5 = &a2_4 * a2;
    let a2_6 = &a2_5 * a2;
    let a2_7 = &a2_6 * a2;
    let a3_2 = a3 * a3;
    let a3_3 = &a3_2 * a3;
    let a3_4 = &a3_3 * a3;
    let a4_2 = a4 * a4;

    c(552) * &a2_2 * &a1_4 * &a3_2
        - c(30) * &a1_6 * a4 * &a2_2
        - c(64) * &a2_7
        + c(2208) * a1 * &a3_3 * &a2_2
        - c(616) * &a2_3 * &a1_2 * &a3_2
        - c(704) * &a2_4 * &a1_2 * a4
        + c(264) * &a2_3 * &a1_4 * a4
        + c(1536) * a4 * &a3_2 * &a2_2
        - c(336) * &a1_3 * &a2_4 * a3
        + c(480) * a1 * &a2_5 * a3
        + c(78) * &a1_5 * &a2_3 * a3
        - c(900) * a2 * &a1_3 * &a3_3
        + c(144) * a2 * &a1_4 * &a4_2
        - c(126) * a2 * &a1_6 * &a3_2
        + c(900) * &a1_4 * a4 * &a3_2
        - c(1152) * &a1_3 * &a4_2 * a3
        + c(2304) * a1 * &a3_3 * a4
        - c(1296) * a2 * &a3_4
        - c(1024) * &a2_3 * &a4_2
        + c(512) * &a2_5 * a4
        - c(608) * &a2_4 * &a3_2
        - c(12) * &a1_4 * &a2_5
        + c(48) * &a1_2 * &a2_6
        - c(18) * &a1_6 * &a4_2
        + c(198) * &a1_2 * &a3_4
        - c(4608) * &a4_2 * &a3_2
        + c(90) * &a1_5 * &a3_3
        + &a1_6 * &a2_4
        + c(9) * &a1_8 * &a3_2
        + c(2112) * &a1_3 * a3 * &a2_2 * a4
        - c(1024) * a1 * a3 * &a2_3 * a4
        - c(4032) * a2 * &a1_2 * &a3_2 * a4
        - c(828) * a2 * &a1_5 * a4 * a3
        + c(4608) * &a4_2 * a3 * a1 * a2
        + c(90) * &a1_7 * a4 * a3
        - c(6) * &a1_7 * &a2_2 * a3
}

/// The elimination ladder: `Q3 = 4 P4 - x P3`, `Q2 = 4 Q3 - a1 P3`,
/// `R2 = (8 a2 - 3 a1^2) P3 - 4 x Q2`, and the linear
/// `P1 = ((8 a2 - 3 a1^2) R2 - (32 a1 a2 - 48 a3 - 9 a1^3) Q2) / 16 = A0 x + A1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuarticLadder {
    pub q3: Poly1,
    pub q2: Poly1,
    pub r2: Poly1,
    pub p1: Poly1,
}

pub fn elimination_ladder(a1: &Rat, a2: &Rat, a3: &Rat, a4: &Rat) -> QuarticLadder {
    let c = Rat::int;
    let q3 = Poly1::new(vec![
        c(4) * a4,
        c(3) * a3,
        c(2) * a2,
        a1.clone(),
    ]);
    let q2 = Poly1::new(vec![
        c(16) * a4 - a1 * a3,
        c(12) * a3 - c(2) * a1 * a2,
        c(8) * a2 - c(3) * a1 * a1,
    ]);
    let r2 = Poly1::new(vec![
        c(8) * a3 * a2 - c(3) * a1 * a1 * a3,
        c(4) * a1 * a3 - c(64) * a4 - c(6) * a2 * a1 * a1 + c(16) * a2 * a2,
        c(32) * a1 * a2 - c(48) * a3 - c(9) * a1 * a1 * a1,
    ]);
    let aux = quartic_aux(a1, a2, a3, a4);
    let p1 = Poly1::new(vec![aux.a1, aux.a0]);
    QuarticLadder { q3, q2, r2, p1 }
}

/// Decide whether the monic quartic has exactly one real root, returning
/// the full certificate. `exactly_one_real` is true precisely when
/// `D4 = 0` and either `A0 != 0 with B2 < 0` (double root) or
/// `A0 = 0 with D2 = 0` (quadruple root).
pub fn quartic_exactly_one_real(a1: &Rat, a2: &Rat, a3: &Rat, a4: &Rat) -> QuarticCert {
    let d4 = quartic_discriminant(a1, a2, a3, a4);
    let aux = quartic_aux(a1, a2, a3, a4);
    let (exactly_one_real, branch, x0, factor) = if !d4.is_zero() {
        (false, QuarticBranch::GenericSimpleRoots, None, None)
    } else if !aux.a0.is_zero() {
        let x0 = (-&aux.a1).checked_div(&aux.a0).expect("A0 != 0");
        // P2 coefficients through the repeated root: b1 = a1 + 2 x0,
        // b2 = a2 - x0^2 + 2 b1 x0
        let b1 = a1 + Rat::int(2) * &x0;
        let b2 = a2 - &x0 * &x0 + Rat::int(2) * &b1 * &x0;
        let factor = QuadraticFactor::new(b1, b2);
        match aux.b2.signum() {
            -1 => (true, QuarticBranch::DoubleRootBranch, Some(x0), Some(factor)),
            1 => (false, QuarticBranch::DoubleRootBranch, Some(x0), Some(factor)),
            _ => (false, QuarticBranch::TwoDoubleRealBranch, Some(x0), Some(factor)),
        }
    } else if aux.d2_special.is_zero() {
        let x0 = -a1 * Rat::frac(1, 4);
        let factor = QuadraticFactor::new(a1 * Rat::frac(1, 2), a2 * Rat::frac(1, 6));
        (true, QuarticBranch::QuadrupleBranch, Some(x0), Some(factor))
    } else {
        (false, QuarticBranch::TwoDoubleRealBranch, None, None)
    };
    if let (Some(x0), true) = (&x0, exactly_one_real) {
        debug_assert!(Poly1::monic_quartic(a1, a2, a3, a4).eval(x0).is_zero());
    }
    QuarticCert {
        a1: a1.clone(),
        a2: a2.clone(),
        a3: a3.clone(),
        a4: a4.clone(),
        d4,
        aux,
        exactly_one_real,
        branch,
        x0,
        factor,
    }
}

/// Discriminant of the indefinite-case resolvent
/// `q^4 - 2 q~ q^2 + q + (q~^2 - p~)`:
/// `-256 p~^3 + 256 q~^2 p~^2 + 288 q~ p~ - 256 q~^3 - 27`.
pub fn resolvent_disc_indefinite(p_t: &Rat, q_t: &Rat) -> Rat {
    let c = Rat::int;
    c(-256) * p_t * p_t * p_t + c(256) * q_t * q_t * p_t * p_t + c(288) * q_t * p_t
        - c(256) * q_t * q_t * q_t
        - c(27)
}

/// Discriminant of the definite-case resolvent
/// `q^4 + 2 a01 q^3 - p~ q^2 + 2 a10 q~ q + q~^2`, a degree-6 polynomial
/// in `q~` in which every term carries a factor `q~^2`.
pub fn resolvent_disc_definite(a10: &Rat, a01: &Rat, p_t: &Rat, q_t: &Rat) -> Rat {
    let c = Rat::int;
    let q2 = q_t * q_t;
    let q3 = &q2 * q_t;
    let q4 = &q3 * q_t;
    let q5 = &q4 * q_t;
    let q6 = &q5 * q_t;
    let p2 = p_t * p_t;
    let p3 = &p2 * p_t;
    let p4 = &p3 * p_t;
    let a01_2 = a01 * a01;
    let a01_3 = &a01_2 * a01;
    let a01_4 = &a01_3 * a01;
    let a10_2 = a10 * a10;
    let a10_3 = &a10_2 * a10;
    let a10_4 = &a10_3 * a10;

    c(256) * &q6 - c(768) * a01 * a10 * &q5
        - (c(576) * p_t * &a01_2
            + c(576) * &a10_2 * p_t
            + c(432) * &a01_4
            + c(96) * &a01_2 * &a10_2
            + c(128) * &p2
            + c(432) * &a10_4)
            * &q4
        - (c(288) * &a01_3 * a10 * p_t
            + c(320) * a01 * a10 * &p2
            + c(256) * &a01_3 * &a10_3
            + c(288) * a01 * &a10_3 * p_t)
            * &q3
        + (c(16) * &p4 + c(16) * &p3 * &a10_2 + c(16) * &p2 * &a01_2 * &a10_2 + c(16) * &p3 * &a01_2)
            * &q2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::discriminant_via_resultant;

    fn q(n: i64) -> Rat {
        Rat::int(n)
    }

    #[test]
    fn discriminant_examples() {
        // x^4: quadruple root
        assert_eq!(quartic_discriminant(&q(0), &q(0), &q(0), &q(0)), q(0));
        // indefinite resolvent at p~ = q~ = 0 is x^4 + x: D4 = -27
        assert_eq!(quartic_discriminant(&q(0), &q(0), &q(1), &q(0)), q(-27));
        // (x^2+1)^2: repeated complex pair
        assert_eq!(quartic_discriminant(&q(0), &q(2), &q(0), &q(1)), q(0));
        // x^4 - 1
        assert_eq!(quartic_discriminant(&q(0), &q(0), &q(0), &q(-1)), q(-256));
    }

    #[test]
    fn aux_examples() {
        // x^4
        let aux = quartic_aux(&q(0), &q(0), &q(0), &q(0));
        assert!(aux.a0.is_zero() && aux.a1.is_zero() && aux.d2_special.is_zero());
        // (x-1)^2 (x^2+1) = (a1..a4) = (-2, 2, -2, 1)
        let aux = quartic_aux(&q(-2), &q(2), &q(-2), &q(1));
        assert_eq!(aux.a0, q(32));
        assert_eq!(aux.a1, q(-32));
        assert_eq!(aux.b2, q(-1024));
        // (x^2+1)^2
        let aux = quartic_aux(&q(0), &q(2), &q(0), &q(1));
        assert!(aux.a0.is_zero());
        assert_eq!(aux.d2_special, q(-8));
    }

    #[test]
    fn aux_identity_4b2_eq_a0sq_d2() {
        // 4 B2 = A0^2 (a1^2 - 4 a2 - 8 x0^2 - 4 x0 a1), x0 = -A1/A0
        let samples = [
            (q(-2), q(2), q(-2), q(1)),
            (Rat::frac(1, 2), q(-3), Rat::frac(7, 5), q(2)),
            (q(1), q(1), q(1), q(1)),
            (Rat::frac(-5, 3), Rat::frac(2, 7), q(0), Rat::frac(9, 4)),
        ];
        for (a1, a2, a3, a4) in samples {
            let aux = quartic_aux(&a1, &a2, &a3, &a4);
            if aux.a0.is_zero() {
                continue;
            }
            let x0 = (-&aux.a1).checked_div(&aux.a0).unwrap();
            let d2 = &a1 * &a1 - q(4) * &a2 - q(8) * &x0 * &x0 - q(4) * &x0 * &a1;
            assert_eq!(q(4) * &aux.b2, &aux.a0 * &aux.a0 * d2);
        }
    }

    #[test]
    fn exactly_one_real_examples() {
        // x^4: true, quadruple at 0
        let cert = quartic_exactly_one_real(&q(0), &q(0), &q(0), &q(0));
        assert!(cert.exactly_one_real);
        assert_eq!(cert.branch, QuarticBranch::QuadrupleBranch);
        assert_eq!(cert.x0, Some(Rat::zero()));

        // (x-1)^2 (x^2+1): true, double root at 1
        let cert = quartic_exactly_one_real(&q(-2), &q(2), &q(-2), &q(1));
        assert!(cert.exactly_one_real);
        assert_eq!(cert.branch, QuarticBranch::DoubleRootBranch);
        assert_eq!(cert.x0, Some(Rat::one()));
        let f = cert.factor.unwrap();
        assert_eq!((f.b1, f.b2.clone(), f.d2), (Rat::zero(), Rat::one(), q(-4)));

        // (x^2+1)^2: false (D4 = 0, A0 = 0, D2 = -8)
        let cert = quartic_exactly_one_real(&q(0), &q(2), &q(0), &q(1));
        assert!(!cert.exactly_one_real);
        assert_eq!(cert.branch, QuarticBranch::TwoDoubleRealBranch);
        assert_eq!(cert.aux.d2_special, q(-8));

        // (x^2-1)^2: false (two real double roots; D2 = 8)
        let cert = quartic_exactly_one_real(&q(0), &q(-2), &q(0), &q(1));
        assert!(!cert.exactly_one_real);
        assert_eq!(cert.aux.d2_special, q(8));

        // x^4 - 1: false, D4 = -256 != 0
        let cert = quartic_exactly_one_real(&q(0), &q(0), &q(0), &q(-1));
        assert!(!cert.exactly_one_real);
        assert_eq!(cert.branch, QuarticBranch::GenericSimpleRoots);
        assert_eq!(cert.d4, q(-256));
    }

    #[test]
    fn ladder_identities() {
        let samples = [
            (q(-2), q(2), q(-2), q(1)),
            (Rat::frac(1, 3), q(5), Rat::frac(-7, 2), q(11)),
            (q(0), q(0), q(0), q(0)),
        ];
        for (a1, a2, a3, a4) in samples {
            let p4 = Poly1::monic_quartic(&a1, &a2, &a3, &a4);
            let p3 = p4.derivative();
            let l = elimination_ladder(&a1, &a2, &a3, &a4);
            // Q3 = 4 P4 - x P3
            let x = Poly1::monomial(Rat::one(), 1);
            assert_eq!(l.q3, &p4.scale(&q(4)) - &(&x * &p3));
            // Q2 = 4 Q3 - a1 P3
            assert_eq!(l.q2, &l.q3.scale(&q(4)) - &p3.scale(&a1));
            // R2 = (8 a2 - 3 a1^2) P3 - 4 x Q2
            let k = q(8) * &a2 - q(3) * &a1 * &a1;
            assert_eq!(l.r2, &p3.scale(&k) - &(&x * &l.q2).scale(&q(4)));
            // 16 P1 = (8 a2 - 3 a1^2) R2 - (32 a1 a2 - 48 a3 - 9 a1^3) Q2
            let m = q(32) * &a1 * &a2 - q(48) * &a3 - q(9) * &a1 * &a1 * &a1;
            assert_eq!(l.p1.scale(&q(16)), &l.r2.scale(&k) - &l.q2.scale(&m));
        }
    }

    #[test]
    fn ladder_examples() {
        // x^4: Q3 is the zero polynomial
        let l = elimination_ladder(&q(0), &q(0), &q(0), &q(0));
        assert!(l.q3.is_zero());
        // (x-1)^2 (x^2+1): P1 = 32 x - 32, root 1
        let l = elimination_ladder(&q(-2), &q(2), &q(-2), &q(1));
        assert_eq!(l.p1, Poly1::from_ints(&[-32, 32]));
        assert!(l.p1.eval(&Rat::one()).is_zero());
    }

    #[test]
    fn constructed_double_root_satisfies_p1() {
        // (x - x0)^2 (x^2 + b1 x + b2): P1(x0) = 0
        for (x0, b1, b2) in [
            (Rat::frac(3, 2), q(1), q(5)),
            (q(-2), Rat::frac(-1, 3), Rat::frac(2, 7)),
            (q(0), q(0), q(1)),
        ] {
            let dbl = Poly1::new(vec![&x0 * &x0, q(-2) * &x0, Rat::one()]);
            let cof = Poly1::new(vec![b2.clone(), b1.clone(), Rat::one()]);
            let p4 = &dbl * &cof;
            let (c3, c2, c1, c0) = (p4.coeff(3), p4.coeff(2), p4.coeff(1), p4.coeff(0));
            let l = elimination_ladder(&c3, &c2, &c1, &c0);
            assert!(l.p1.eval(&x0).is_zero());
        }
    }

    #[test]
    fn closed_form_discriminants_match_resultant_route() {
        let samples = [
            (q(-2), q(2), q(-2), q(1)),
            (Rat::frac(1, 2), Rat::frac(-3, 4), q(6), Rat::frac(-8, 5)),
            (q(3), q(-1), q(0), q(2)),
        ];
        for (a1, a2, a3, a4) in samples {
            let p4 = Poly1::monic_quartic(&a1, &a2, &a3, &a4);
            assert_eq!(
                quartic_discriminant(&a1, &a2, &a3, &a4),
                discriminant_via_resultant(&p4).unwrap()
            );
        }
    }

    #[test]
    fn resolvent_disc_indefinite_examples() {
        assert_eq!(resolvent_disc_indefinite(&q(0), &q(0)), q(-27));
        assert_eq!(resolvent_disc_indefinite(&q(2), &q(2)), q(1125));
        // identity with the quartic discriminant on (0, -2 q~, 1, q~^2 - p~)
        for (p_t, q_t) in [(Rat::frac(3, 7), q(-2)), (q(5), Rat::frac(-1, 3))] {
            let lhs = resolvent_disc_indefinite(&p_t, &q_t);
            let rhs = quartic_discriminant(
                &q(0),
                &(q(-2) * &q_t),
                &q(1),
                &(&q_t * &q_t - &p_t),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn resolvent_disc_definite_examples() {
        // q~ = 0 annihilates every term
        assert_eq!(
            resolvent_disc_definite(&q(3), &Rat::frac(-1, 2), &q(7), &q(0)),
            q(0)
        );
        // a10 = a01 = 0 specialization: 256 q~^6 - 128 p~^2 q~^4 + 16 p~^4 q~^2
        for (p_t, q_t) in [(q(2), q(3)), (Rat::frac(-1, 2), Rat::frac(5, 3))] {
            let lhs = resolvent_disc_definite(&q(0), &q(0), &p_t, &q_t);
            let q2 = &q_t * &q_t;
            let rhs = q(256) * &q2 * &q2 * &q2 - q(128) * &p_t * &p_t * &q2 * &q2
                + q(16) * &p_t * &p_t * &p_t * &p_t * &q2;
            assert_eq!(lhs, rhs);
        }
        // identity with the quartic discriminant on (2 a01, -p~, 2 a10 q~, q~^2)
        for (a10, a01, p_t, q_t) in [
            (q(1), q(2), q(3), q(4)),
            (Rat::frac(1, 2), Rat::frac(-2, 3), q(-1), Rat::frac(7, 5)),
        ] {
            let lhs = resolvent_disc_definite(&a10, &a01, &p_t, &q_t);
            let rhs = quartic_discriminant(
                &(q(2) * &a01),
                &(-&p_t),
                &(q(2) * &a10 * &q_t),
                &(&q_t * &q_t),
            );
            assert_eq!(lhs, rhs);
        }
    }
}
