//! Deterministic reduction of a quadratic map to its pre-canonical shape,
//! recorded as a replayable transcript of affine steps.
//!
//! The four target shapes, one per class of the associated form:
//!
//! ```text
//! zero:          p~ = p + q^2,                        q~ = q
//! indefinite:    p~ = p^2 + q,                        q~ = q^2 + p
//! semi-definite: p~ = p q + 2 a10 p,                  q~ = q^2 + p
//! definite:      p~ = p^2 - q^2 + 2 a10 p + 2 a01 q,  q~ = p q
//! ```
//!
//! Zero-class and semi-definite reductions are fully rational. Indefinite
//! and definite reductions may need cube-root or square-root scalings; when
//! those are irrational the step is computed in binary64, embedded exactly
//! as a dyadic rational, and flagged `numeric` (replay stays exact; the
//! final map then matches the shape to 1e-9 relative instead of exactly).
//! Verdicts never depend on these transcripts.

use std::fmt;

use crate::error::Error;
use crate::quadform::{FormClassTag, LightVectors};
use crate::quadmap::{AffineMap2, QuadMap};
use crate::rat::Rat;
use crate::sturm::refine_to_width;

/// Which side of the map a step composes with.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Source,
    Target,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Source => write!(f, "source"),
            Side::Target => write!(f, "target"),
        }
    }
}

/// One recorded reduction step.
#[derive(Clone, Debug)]
pub struct Step {
    pub side: Side,
    pub map: AffineMap2,
    /// What the step does, in the vocabulary of the reduction recipe.
    pub rule: String,
    /// True when the step's entries were chosen via floating point (or
    /// derive from earlier such steps). Replay is exact either way.
    pub numeric: bool,
}

/// Shape reached by a successful reduction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CanonicalForm {
    Shear,
    Indefinite,
    SemiDefinite { a10: Rat },
    Definite { a10: Rat, a01: Rat },
}

impl CanonicalForm {
    pub fn name(&self) -> &'static str {
        match self {
            CanonicalForm::Shear => "shear",
            CanonicalForm::Indefinite => "indefinite",
            CanonicalForm::SemiDefinite { .. } => "semi-definite",
            CanonicalForm::Definite { .. } => "definite",
        }
    }

    pub fn representative(&self) -> QuadMap {
        match self {
            CanonicalForm::Shear => QuadMap::shear(),
            CanonicalForm::Indefinite => QuadMap::canonical_indefinite(),
            CanonicalForm::SemiDefinite { a10 } => QuadMap::canonical_semidefinite(a10.clone()),
            CanonicalForm::Definite { a10, a01 } => {
                QuadMap::canonical_definite(a10.clone(), a01.clone())
            }
        }
    }
}

/// Terminal state of a reduction.
#[derive(Clone, Debug)]
pub enum ReductionOutcome {
    /// Final map equals the canonical representative exactly.
    Canonical(CanonicalForm),
    /// Final map matches the representative within `max_rel_err`
    /// (coefficient-wise relative, binary64); some steps were numeric.
    CanonicalNumeric {
        form: CanonicalForm,
        max_rel_err: f64,
    },
    /// The recipe cannot continue; the transcript is still valid and ends
    /// at the furthest shape reached.
    Obstructed { reason: String },
}

/// A replayable record of a reduction run.
#[derive(Clone, Debug)]
pub struct ReductionTranscript {
    pub initial: QuadMap,
    pub steps: Vec<Step>,
    pub final_map: QuadMap,
    pub outcome: ReductionOutcome,
}

impl ReductionTranscript {
    /// Re-apply every step to the initial map; must reproduce `final_map`
    /// coefficient for coefficient.
    pub fn replay(&self) -> QuadMap {
        let mut m = self.initial.clone();
        for step in &self.steps {
            m = match step.side {
                Side::Source => m.compose_source(&step.map),
                Side::Target => m.compose_target(&step.map),
            };
        }
        m
    }

    /// Map a point in final (reduced) source coordinates back to the
    /// initial map's source coordinates.
    pub fn pull_back_source_point(&self, p: &Rat, q: &Rat) -> (Rat, Rat) {
        let mut pt = (p.clone(), q.clone());
        for step in self.steps.iter().rev() {
            if step.side == Side::Source {
                pt = step.map.apply(&pt.0, &pt.1);
            }
        }
        pt
    }

    /// Composition of all source steps (outermost first): the map `S` with
    /// `final = T o initial o S`.
    pub fn source_composition(&self) -> AffineMap2 {
        let mut acc = AffineMap2::identity();
        for step in &self.steps {
            if step.side == Side::Source {
                acc = acc.compose(&step.map);
            }
        }
        acc
    }

    /// Composition of all target steps (latest outermost): the map `T`.
    pub fn target_composition(&self) -> AffineMap2 {
        let mut acc = AffineMap2::identity();
        for step in &self.steps {
            if step.side == Side::Target {
                acc = step.map.compose(&acc);
            }
        }
        acc
    }
}

struct Reducer {
    initial: QuadMap,
    current: QuadMap,
    steps: Vec<Step>,
    tainted: bool,
}

impl Reducer {
    fn new(map: &QuadMap) -> Self {
        Reducer {
            initial: map.clone(),
            current: map.clone(),
            steps: Vec::new(),
            tainted: false,
        }
    }

    fn source(&mut self, t: AffineMap2, rule: &str) {
        self.current = self.current.compose_source(&t);
        self.steps.push(Step {
            side: Side::Source,
            map: t,
            rule: rule.to_string(),
            numeric: self.tainted,
        });
    }

    fn target(&mut self, t: AffineMap2, rule: &str) {
        self.current = self.current.compose_target(&t);
        self.steps.push(Step {
            side: Side::Target,
            map: t,
            rule: rule.to_string(),
            numeric: self.tainted,
        });
    }

    fn mark_numeric(&mut self) {
        self.tainted = true;
    }

    fn finish(self, outcome: ReductionOutcome) -> ReductionTranscript {
        ReductionTranscript {
            initial: self.initial,
            steps: self.steps,
            final_map: self.current,
            outcome,
        }
    }
}

/// Recognize an exact canonical representative.
pub fn match_canonical(m: &QuadMap) -> Option<CanonicalForm> {
    if *m == QuadMap::shear() {
        return Some(CanonicalForm::Shear);
    }
    if *m == QuadMap::canonical_indefinite() {
        return Some(CanonicalForm::Indefinite);
    }
    let semi = QuadMap::canonical_semidefinite(m.a[3].clone());
    if *m == semi {
        return Some(CanonicalForm::SemiDefinite { a10: m.a[3].clone() });
    }
    let def = QuadMap::canonical_definite(m.a[3].clone(), m.a[4].clone());
    if *m == def {
        return Some(CanonicalForm::Definite {
            a10: m.a[3].clone(),
            a01: m.a[4].clone(),
        });
    }
    None
}

/// Max coefficient-wise relative error against a canonical representative.
pub fn shape_rel_err(m: &QuadMap, form: &CanonicalForm) -> f64 {
    let rep = form.representative();
    let mut worst = 0.0f64;
    for (x, y) in m.a.iter().zip(rep.a.iter()).chain(m.b.iter().zip(rep.b.iter())) {
        let t = y.to_f64();
        let err = (x.to_f64() - t).abs() / t.abs().max(1.0);
        worst = worst.max(err);
    }
    worst
}

/// Tolerance for numeric reductions (relative, per coefficient).
pub const NUMERIC_SHAPE_TOLERANCE: f64 = 1e-9;

/// Outcome of the exact zero-class pipeline.
pub(crate) enum ZeroReduction {
    /// Reached the shear; transcript is fully rational.
    Shear(ReductionTranscript),
    /// Hit one of the structural obstructions; `witness` is a verified
    /// collision of the *initial* map.
    Obstructed {
        transcript: ReductionTranscript,
        witness: ((Rat, Rat), (Rat, Rat)),
        reason: String,
    },
}

fn first_nonzero_index(row: &[Rat]) -> Option<usize> {
    row.iter().position(|c| !c.is_zero())
}

/// Deterministic zero-class reduction. Precondition: the quadratic part is
/// not identically zero and the associated form is zero (rows proportional).
pub(crate) fn reduce_zero_class(map: &QuadMap) -> ZeroReduction {
    let mut r = Reducer::new(map);

    // (i) annihilate the second row's quadratic part against the first's.
    let b_quad_nonzero = r.current.b[..3].iter().any(|c| !c.is_zero());
    if b_quad_nonzero {
        if r.current.a[..3].iter().all(Rat::is_zero) {
            r.target(AffineMap2::swap(), "exchange target components");
        }
        let k = first_nonzero_index(&r.current.a[..3]).expect("first row has a quadratic part");
        let lambda = r.current.b[k].checked_div(&r.current.a[k]).unwrap();
        r.target(
            AffineMap2::shear_second_by_first(lambda),
            "cancel proportional quadratic part of the second component",
        );
        assert!(
            r.current.b[..3].iter().all(Rat::is_zero),
            "zero class means proportional quadratic rows"
        );
    }

    // (ii) normalize the now-affine second row to exactly q.
    let (b10, b01) = (r.current.b[3].clone(), r.current.b[4].clone());
    if b10.is_zero() && b01.is_zero() {
        let reason = "second component is constant".to_string();
        let pts = constant_second_row_collision(&r.current);
        return obstructed_zero(r, pts, reason);
    }
    if r.current.b[4].is_zero() {
        r.source(AffineMap2::swap(), "exchange source variables");
    }
    {
        let b10 = r.current.b[3].clone();
        let b01 = r.current.b[4].clone();
        let b00 = r.current.b[5].clone();
        let two_b01 = Rat::int(2) * &b01;
        let t = AffineMap2::new(
            Rat::one(),
            Rat::zero(),
            (-&b10).checked_div(&b01).unwrap(),
            two_b01.recip().unwrap(),
            Rat::zero(),
            (-&b00).checked_div(&two_b01).unwrap(),
        )
        .unwrap();
        r.source(t, "solve the second component for the second variable");
        debug_assert_eq!(
            r.current.b,
            [
                Rat::zero(),
                Rat::zero(),
                Rat::zero(),
                Rat::zero(),
                Rat::frac(1, 2),
                Rat::zero()
            ]
        );
    }

    // (iii) the first row must not contain p^2 or pq.
    if !r.current.a[0].is_zero() {
        // horizontal parabola: two points on q = 0 symmetric about the vertex
        let v = (-&r.current.a[3]).checked_div(&r.current.a[0]).unwrap();
        let x1 = (&v - Rat::one(), Rat::zero());
        let x2 = (&v + Rat::one(), Rat::zero());
        let reason =
            "first component is quadratic in p on the fibers of the second (parabola argument)"
                .to_string();
        return obstructed_zero(r, (x1, x2), reason);
    }
    if !r.current.a[1].is_zero() {
        // constant fiber: on q = -a10/a11 the first component ignores p
        let qstar = (-&r.current.a[3]).checked_div(&r.current.a[1]).unwrap();
        let x1 = (Rat::zero(), qstar.clone());
        let x2 = (Rat::one(), qstar);
        let reason =
            "first component does not depend on p along one horizontal line (constant fiber)"
                .to_string();
        return obstructed_zero(r, (x1, x2), reason);
    }

    // (iv) now p~ = a02 q^2 + 2 a10 p + 2 a01 q + a00 with a02 != 0.
    assert!(!r.current.a[2].is_zero(), "zero class with nonzero quadratic part");
    if r.current.a[3].is_zero() {
        let x1 = (Rat::zero(), Rat::zero());
        let x2 = (Rat::one(), Rat::zero());
        let reason = "first component does not depend on p".to_string();
        return obstructed_zero(r, (x1, x2), reason);
    }
    {
        let two_a10 = Rat::int(2) * &r.current.a[3];
        r.target(
            AffineMap2::scale(two_a10.recip().unwrap(), Rat::one()).unwrap(),
            "normalize the coefficient of p to one",
        );
    }
    {
        let a01 = r.current.a[4].clone();
        let a00 = r.current.a[5].clone();
        let t = AffineMap2::new(
            Rat::one(),
            Rat::int(-2) * &a01,
            Rat::zero(),
            Rat::one(),
            -a00,
            Rat::zero(),
        )
        .unwrap();
        r.target(t, "annihilate the linear q term and the constant");
    }
    {
        let a02 = r.current.a[2].clone();
        if !a02.is_one() {
            r.source(
                AffineMap2::scale(a02.clone(), Rat::one()).unwrap(),
                "rescale p to absorb the q^2 coefficient",
            );
            r.target(
                AffineMap2::scale(a02.recip().unwrap(), Rat::one()).unwrap(),
                "rescale the first target coordinate",
            );
        }
    }
    assert_eq!(r.current, QuadMap::shear(), "zero-class reduction lands on the shear");
    ZeroReduction::Shear(r.finish(ReductionOutcome::Canonical(CanonicalForm::Shear)))
}

/// Collision for a map whose second row is constant and whose first row has
/// a genuine quadratic part (coordinates of the *current* reduced map).
fn constant_second_row_collision(m: &QuadMap) -> ((Rat, Rat), (Rat, Rat)) {
    if !m.a[0].is_zero() {
        let v = (-&m.a[3]).checked_div(&m.a[0]).unwrap();
        ((&v - Rat::one(), Rat::zero()), (&v + Rat::one(), Rat::zero()))
    } else if !m.a[1].is_zero() {
        let qstar = (-&m.a[3]).checked_div(&m.a[1]).unwrap();
        ((Rat::zero(), qstar.clone()), (Rat::one(), qstar))
    } else {
        // a02 != 0: vertical parabola at fixed p
        let w = (-&m.a[4]).checked_div(&m.a[2]).unwrap();
        ((Rat::zero(), &w - Rat::one()), (Rat::zero(), &w + Rat::one()))
    }
}

fn obstructed_zero(
    r: Reducer,
    pts: ((Rat, Rat), (Rat, Rat)),
    reason: String,
) -> ZeroReduction {
    let transcript = r.finish(ReductionOutcome::Obstructed {
        reason: reason.clone(),
    });
    let x1 = transcript.pull_back_source_point(&pts.0 .0, &pts.0 .1);
    let x2 = transcript.pull_back_source_point(&pts.1 .0, &pts.1 .1);
    debug_assert_eq!(
        transcript.initial.eval(&x1.0, &x1.1),
        transcript.initial.eval(&x2.0, &x2.1),
        "obstruction witness must collide on the initial map"
    );
    debug_assert_ne!(x1, x2);
    ZeroReduction::Obstructed {
        transcript,
        witness: (x1, x2),
        reason,
    }
}

/// Approximate an isolated real root as a dyadic rational via binary64.
fn approx_root(poly: &crate::poly::Poly1, loc: &crate::sturm::RootLoc) -> Rat {
    let tight = refine_to_width(poly, loc, &Rat::frac(1, 1i64 << 48));
    let mid = match &tight {
        crate::sturm::RootLoc::Exact(r) => r.to_f64(),
        crate::sturm::RootLoc::Interval(a, b) => (a.to_f64() + b.to_f64()) / 2.0,
    };
    Rat::from_f64_exact(mid).expect("finite approximation")
}

/// Reduce a map with nonzero quadratic part toward its class's
/// pre-canonical shape. `allow_numeric` gates the irrational scalings that
/// the indefinite and definite recipes may need; without it those
/// reductions stop with an `Obstructed` outcome naming the missing step.
pub fn precanonicalize(map: &QuadMap, allow_numeric: bool) -> Result<ReductionTranscript, Error> {
    if map.quadratic_part_is_zero() {
        return Err(Error::Precondition(
            "precanonicalize needs a nonzero quadratic part".into(),
        ));
    }
    if let Some(form) = match_canonical(map) {
        let r = Reducer::new(map);
        return Ok(r.finish(ReductionOutcome::Canonical(form)));
    }
    let class = map.associated_form().classify().tag;
    let transcript = match class {
        FormClassTag::Zero => match reduce_zero_class(map) {
            ZeroReduction::Shear(t) => t,
            ZeroReduction::Obstructed { transcript, .. } => transcript,
        },
        FormClassTag::Indefinite => reduce_indefinite(map, allow_numeric),
        FormClassTag::SemiDefinite => reduce_semidefinite(map),
        FormClassTag::Definite => reduce_definite(map, allow_numeric),
    };
    Ok(transcript)
}

fn finish_shape(r: Reducer, form: CanonicalForm) -> ReductionTranscript {
    if r.tainted {
        let err = shape_rel_err(&r.current, &form);
        if err <= NUMERIC_SHAPE_TOLERANCE {
            r.finish(ReductionOutcome::CanonicalNumeric {
                form,
                max_rel_err: err,
            })
        } else {
            r.finish(ReductionOutcome::Obstructed {
                reason: format!(
                    "numeric reduction exceeded tolerance: relative error {err:.3e}"
                ),
            })
        }
    } else {
        assert_eq!(
            r.current,
            form.representative(),
            "exact reduction must land on the canonical representative"
        );
        r.finish(ReductionOutcome::Canonical(form))
    }
}

fn reduce_indefinite(map: &QuadMap, allow_numeric: bool) -> ReductionTranscript {
    let mut r = Reducer::new(map);

    // light-vector source basis makes both cross terms vanish
    match r.current.associated_form().light_vectors() {
        LightVectors::PairRational(v, w) => {
            let c = AffineMap2::linear(v[0].clone(), w[0].clone(), v[1].clone(), w[1].clone())
                .expect("independent light directions");
            r.source(c, "light-vector basis (exact)");
            assert!(r.current.a[1].is_zero() && r.current.b[1].is_zero());
        }
        LightVectors::PairSurd { slope_poly, roots } => {
            if !allow_numeric {
                return r.finish(ReductionOutcome::Obstructed {
                    reason: "light directions are quadratic surds; rerun with --numeric".into(),
                });
            }
            let t1 = approx_root(&slope_poly, &roots[0]);
            let t2 = approx_root(&slope_poly, &roots[1]);
            r.mark_numeric();
            let c = AffineMap2::linear(t1, t2, Rat::one(), Rat::one())
                .expect("distinct slopes are independent");
            r.source(c, "light-vector basis (numeric slopes)");
        }
        _ => unreachable!("indefinite forms have two light directions"),
    }

    // diagonalize the quadratic rows to (1,0,0) / (0,0,1)
    {
        let k11 = r.current.a[0].clone();
        let k12 = r.current.a[2].clone();
        let k21 = r.current.b[0].clone();
        let k22 = r.current.b[2].clone();
        let det = &k11 * &k22 - &k12 * &k21;
        if det.is_zero() {
            return r.finish(ReductionOutcome::Obstructed {
                reason: "quadratic rows degenerate after the light-vector step".into(),
            });
        }
        let inv = det.recip().unwrap();
        let t = AffineMap2::new(
            &k22 * &inv,
            -&k12 * &inv,
            -&k21 * &inv,
            &k11 * &inv,
            Rat::zero(),
            Rat::zero(),
        )
        .unwrap();
        r.target(t, "normalize quadratic rows to p^2 and q^2");
    }

    // origin shifts: remove a10, b01, then both constants
    {
        let u = -&r.current.a[3];
        let v = -&r.current.b[4];
        if !u.is_zero() || !v.is_zero() {
            r.source(AffineMap2::shift(u, v), "complete squares in the source");
        }
        let ca = -&r.current.a[5];
        let cb = -&r.current.b[5];
        if !ca.is_zero() || !cb.is_zero() {
            r.target(AffineMap2::shift(ca, cb), "translate the target to the origin");
        }
    }

    // cross linear coefficients must survive for the shape to be reachable
    let a01 = r.current.a[4].clone();
    let b10 = r.current.b[3].clone();
    if a01.is_zero() || b10.is_zero() {
        return r.finish(ReductionOutcome::Obstructed {
            reason: "a cross linear term vanishes; the indefinite shape p^2+q / q^2+p is \
                     out of reach (the map is not surjective on one coordinate)"
                .into(),
        });
    }

    // scalings p = alpha p', q = beta q', targets divided by alpha^2, beta^2
    {
        let c_alpha = &a01 * &a01 * &b10;
        let c_beta = &a01 * &b10 * &b10;
        let (alpha, beta) = match (c_alpha.cbrt_exact(), c_beta.cbrt_exact()) {
            (Some(ca), Some(cb)) => (Rat::int(2) * ca, Rat::int(2) * cb),
            _ => {
                if !allow_numeric {
                    return r.finish(ReductionOutcome::Obstructed {
                        reason: "cube-root scalings are irrational; rerun with --numeric".into(),
                    });
                }
                r.mark_numeric();
                let a = 2.0 * c_alpha.to_f64().cbrt();
                let b = 2.0 * c_beta.to_f64().cbrt();
                (
                    Rat::from_f64_exact(a).expect("finite"),
                    Rat::from_f64_exact(b).expect("finite"),
                )
            }
        };
        r.source(
            AffineMap2::scale(alpha.clone(), beta.clone()).unwrap(),
            "cube-root source scaling",
        );
        let ia2 = (&alpha * &alpha).recip().unwrap();
        let ib2 = (&beta * &beta).recip().unwrap();
        r.target(
            AffineMap2::scale(ia2, ib2).unwrap(),
            "matching target scaling",
        );
    }

    finish_shape(r, CanonicalForm::Indefinite)
}

fn reduce_semidefinite(map: &QuadMap) -> ReductionTranscript {
    let mut r = Reducer::new(map);

    // single light direction becomes the first basis column
    match r.current.associated_form().light_vectors() {
        LightVectors::Single(v) => {
            let w = if !v[1].is_zero() {
                [Rat::one(), Rat::zero()]
            } else {
                [Rat::zero(), Rat::one()]
            };
            let c = AffineMap2::linear(v[0].clone(), w[0].clone(), v[1].clone(), w[1].clone())
                .expect("light direction independent of the complement");
            r.source(c, "light-vector first column");
        }
        _ => unreachable!("semi-definite forms have exactly one light direction"),
    }
    {
        let t = r.current.associated_form();
        assert!(t.alpha.is_zero(), "first minor vanishes after the light step");
        assert!(!t.gamma.is_zero(), "second minor survives");
    }

    // make the pq term live in the first row, then cancel it from the second
    if r.current.a[1].is_zero() {
        r.target(AffineMap2::swap(), "exchange target components");
    }
    {
        let ratio = r.current.b[1].checked_div(&r.current.a[1]).unwrap();
        if !ratio.is_zero() {
            r.target(
                AffineMap2::shear_second_by_first(ratio),
                "cancel the second row's pq term",
            );
        }
        assert!(r.current.b[1].is_zero());
        assert!(r.current.b[0].is_zero(), "vanishing first minor forces b20 = 0");
        assert!(!r.current.b[2].is_zero(), "b02 = 0 would collapse to the zero class");
    }

    // cancel the first row's q^2 term against the second row
    {
        let ratio = r.current.a[2].checked_div(&r.current.b[2]).unwrap();
        if !ratio.is_zero() {
            r.target(
                AffineMap2::shear_first_by_second(ratio),
                "cancel the first row's q^2 term",
            );
        }
        assert!(r.current.a[2].is_zero());
        assert!(
            r.current.a[0].is_zero(),
            "semi-definiteness forces a20 = 0 at this stage"
        );
    }

    // scale rows: pq coefficient to 1 (stored 1/2), q^2 coefficient to 1
    {
        let two_a11 = Rat::int(2) * &r.current.a[1];
        let b02 = r.current.b[2].clone();
        r.target(
            AffineMap2::scale(two_a11.recip().unwrap(), b02.recip().unwrap()).unwrap(),
            "normalize the leading coefficients",
        );
    }

    // kill the second row's linear q term by a source shift
    {
        let v = -&r.current.b[4];
        if !v.is_zero() {
            r.source(AffineMap2::shift(Rat::zero(), v), "center q");
        }
    }

    // the second row must genuinely involve p
    if r.current.b[3].is_zero() {
        return r.finish(ReductionOutcome::Obstructed {
            reason: "second component reduced to q^2 + const; the semi-definite shape \
                     p q + 2 a10 p / q^2 + p is out of reach"
                .into(),
        });
    }

    // scale p so the second row's p coefficient becomes 1 (stored 1/2)
    {
        let two_b10 = Rat::int(2) * &r.current.b[3];
        r.source(
            AffineMap2::scale(two_b10.recip().unwrap(), Rat::one()).unwrap(),
            "rescale p in the source",
        );
        r.target(
            AffineMap2::scale(two_b10, Rat::one()).unwrap(),
            "restore the first row's pq coefficient",
        );
    }

    // source shift in p annihilates the first row's q term; target shifts
    // absorb the constants
    {
        let w = Rat::int(-2) * &r.current.a[4];
        if !w.is_zero() {
            r.source(AffineMap2::shift(w, Rat::zero()), "center p");
        }
        let ca = -&r.current.a[5];
        let cb = -&r.current.b[5];
        if !ca.is_zero() || !cb.is_zero() {
            r.target(AffineMap2::shift(ca, cb), "translate the target to the origin");
        }
    }

    let a10 = r.current.a[3].clone();
    finish_shape(r, CanonicalForm::SemiDefinite { a10 })
}

fn reduce_definite(map: &QuadMap, allow_numeric: bool) -> ReductionTranscript {
    let mut r = Reducer::new(map);

    // source basis from the omega2 null vector: kills the middle minor
    {
        let t = r.current.associated_form();
        let c = t
            .definite_case_vector()
            .expect("definite class precondition");
        let m = AffineMap2::linear(c[0].clone(), c[2].clone(), c[1].clone(), c[3].clone())
            .expect("omega3 != 0 means the columns are independent");
        r.source(m, "omega2 null-vector basis");
        let t = r.current.associated_form();
        assert!(t.beta.is_zero(), "middle minor vanishes after the basis step");
    }

    // make p^2 live in the first row, then cancel it from the second
    if r.current.a[0].is_zero() {
        r.target(AffineMap2::swap(), "exchange target components");
    }
    {
        let ratio = r.current.b[0].checked_div(&r.current.a[0]).unwrap();
        if !ratio.is_zero() {
            r.target(
                AffineMap2::shear_second_by_first(ratio),
                "cancel the second row's p^2 term",
            );
        }
        assert!(r.current.b[0].is_zero());
        assert!(r.current.b[2].is_zero(), "vanishing middle minor forces b02 = 0");
        assert!(!r.current.b[1].is_zero(), "first minor keeps b11 nonzero");
    }

    // cancel the first row's pq term against the second row
    {
        let ratio = r.current.a[1].checked_div(&r.current.b[1]).unwrap();
        if !ratio.is_zero() {
            r.target(
                AffineMap2::shear_first_by_second(ratio),
                "cancel the first row's pq term",
            );
        }
        assert!(r.current.a[1].is_zero());
    }
    let a20 = r.current.a[0].clone();
    let a02 = r.current.a[2].clone();
    assert!(
        (&a20 * &a02).is_negative(),
        "definiteness forces opposite signs of the diagonal terms"
    );

    // source shifts center the second row's product structure
    {
        let b11 = r.current.b[1].clone();
        let u = (-&r.current.b[4]).checked_div(&b11).unwrap();
        let v = (-&r.current.b[3]).checked_div(&b11).unwrap();
        if !u.is_zero() || !v.is_zero() {
            r.source(AffineMap2::shift(u, v), "center the product term");
        }
        assert!(r.current.b[3].is_zero() && r.current.b[4].is_zero());
        let ca = -&r.current.a[5];
        let cb = -&r.current.b[5];
        if !ca.is_zero() || !cb.is_zero() {
            r.target(AffineMap2::shift(ca, cb), "translate the target to the origin");
        }
    }

    // scalings: q = mu q' with mu^2 = -a20/a02, then diagonal target scale
    {
        let ratio = (-&a20).checked_div(&a02).unwrap();
        let mu = match ratio.sqrt_exact() {
            Some(m) => m,
            None => {
                if !allow_numeric {
                    return r.finish(ReductionOutcome::Obstructed {
                        reason: "square-root scaling is irrational; rerun with --numeric".into(),
                    });
                }
                r.mark_numeric();
                Rat::from_f64_exact(ratio.to_f64().sqrt()).expect("finite")
            }
        };
        r.source(
            AffineMap2::scale(Rat::one(), mu.clone()).unwrap(),
            "square-root source scaling",
        );
        let rho = a20.recip().unwrap();
        let sigma = (Rat::int(2) * &r.current.b[1]).recip().unwrap();
        r.target(
            AffineMap2::scale(rho, sigma).unwrap(),
            "normalize the leading coefficients",
        );
    }

    let a10 = r.current.a[3].clone();
    let a01 = r.current.a[4].clone();
    finish_shape(r, CanonicalForm::Definite { a10, a01 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational_affine(seed: i64) -> AffineMap2 {
        // deterministic invertible rational affine maps
        let m11 = Rat::frac(seed % 5 + 2, 3);
        let m12 = Rat::frac(seed % 3 - 1, 2);
        let m21 = Rat::frac((seed * 7) % 4 - 2, 5);
        let m22 = Rat::frac(seed % 4 + 1, 1);
        let t = AffineMap2::new(
            m11,
            m12,
            m21,
            m22,
            Rat::frac(seed % 7 - 3, 2),
            Rat::int(seed % 5 - 2),
        );
        match t {
            Ok(t) => t,
            Err(_) => AffineMap2::shift(Rat::int(seed), Rat::int(-seed)),
        }
    }

    #[test]
    fn already_canonical_maps_get_empty_transcripts() {
        for m in [
            QuadMap::shear(),
            QuadMap::canonical_indefinite(),
            QuadMap::canonical_semidefinite(Rat::one()),
            QuadMap::canonical_definite(Rat::frac(1, 2), Rat::int(-3)),
        ] {
            let t = precanonicalize(&m, false).unwrap();
            assert!(t.steps.is_empty());
            assert!(matches!(t.outcome, ReductionOutcome::Canonical(_)));
            assert_eq!(t.final_map, m);
        }
    }

    #[test]
    fn zero_class_composed_shear_reduces_back() {
        for seed in 0..8 {
            let s = rational_affine(seed);
            let t = rational_affine(seed + 11);
            let m = QuadMap::shear().compose_source(&s).compose_target(&t);
            let tr = precanonicalize(&m, false).unwrap();
            match &tr.outcome {
                ReductionOutcome::Canonical(CanonicalForm::Shear) => {}
                other => panic!("expected shear, got {other:?} (seed {seed})"),
            }
            assert_eq!(tr.replay(), tr.final_map);
            assert_eq!(tr.final_map, QuadMap::shear());
            assert!(tr.steps.iter().all(|s| !s.numeric));
        }
    }

    #[test]
    fn zero_class_obstructions_produce_verified_collisions() {
        // p~ = p^2, q~ = q
        let mut a = [0i64; 6].map(Rat::int);
        a[0] = Rat::one();
        let mut b = [0i64; 6].map(Rat::int);
        b[4] = Rat::frac(1, 2);
        let m = QuadMap::new(a, b);
        match reduce_zero_class(&m) {
            ZeroReduction::Obstructed { witness, .. } => {
                let (x1, x2) = witness;
                assert_eq!(x1, (Rat::int(-1), Rat::zero()));
                assert_eq!(x2, (Rat::int(1), Rat::zero()));
                assert_eq!(m.eval(&x1.0, &x1.1), m.eval(&x2.0, &x2.1));
            }
            ZeroReduction::Shear(_) => panic!("p^2 is not injective"),
        }
        // p~ = p q + p, q~ = q (constant fiber at q = -1): a11 = 1/2, a10 = 1/2
        let mut a = [0i64; 6].map(Rat::int);
        a[1] = Rat::frac(1, 2);
        a[3] = Rat::frac(1, 2);
        let mut b = [0i64; 6].map(Rat::int);
        b[4] = Rat::frac(1, 2);
        let m = QuadMap::new(a, b);
        match reduce_zero_class(&m) {
            ZeroReduction::Obstructed { witness, .. } => {
                let (x1, x2) = witness;
                assert_ne!(x1, x2);
                assert_eq!(m.eval(&x1.0, &x1.1), m.eval(&x2.0, &x2.1));
            }
            ZeroReduction::Shear(_) => panic!("constant-fiber map is not injective"),
        }
    }

    #[test]
    fn semidefinite_reduction_is_exact() {
        for seed in 0..6 {
            let s = rational_affine(seed + 3);
            let t = rational_affine(seed + 17);
            let start = QuadMap::canonical_semidefinite(Rat::frac(seed, 2));
            let m = start.compose_source(&s).compose_target(&t);
            assert_eq!(
                m.associated_form().classify().tag,
                FormClassTag::SemiDefinite
            );
            let tr = precanonicalize(&m, false).unwrap();
            match &tr.outcome {
                ReductionOutcome::Canonical(CanonicalForm::SemiDefinite { .. }) => {}
                other => panic!("expected semi-definite shape, got {other:?} (seed {seed})"),
            }
            assert_eq!(tr.replay(), tr.final_map);
            assert!(tr.steps.iter().all(|s| !s.numeric));
        }
    }

    #[test]
    fn indefinite_reduction_of_scaled_map_is_numeric_within_tolerance() {
        // p~ = 4 p^2 + q, q~ = q^2 + p
        let mut a = [0i64; 6].map(Rat::int);
        a[0] = Rat::int(4);
        a[4] = Rat::frac(1, 2);
        let mut b = [0i64; 6].map(Rat::int);
        b[2] = Rat::one();
        b[3] = Rat::frac(1, 2);
        let m = QuadMap::new(a, b);
        assert_eq!(m.associated_form().classify().tag, FormClassTag::Indefinite);
        // without --numeric the cube roots stop the run
        let t = precanonicalize(&m, false).unwrap();
        assert!(matches!(t.outcome, ReductionOutcome::Obstructed { .. }));
        // with numeric steps the shape is reached to 1e-9
        let t = precanonicalize(&m, true).unwrap();
        match &t.outcome {
            ReductionOutcome::CanonicalNumeric { form, max_rel_err } => {
                assert_eq!(*form, CanonicalForm::Indefinite);
                assert!(*max_rel_err <= NUMERIC_SHAPE_TOLERANCE);
            }
            other => panic!("expected numeric canonical, got {other:?}"),
        }
        assert_eq!(t.replay(), t.final_map);
        assert!(t.steps.iter().any(|s| s.numeric));
    }

    #[test]
    fn indefinite_reduction_exact_when_cube_roots_are_rational() {
        // composing the canonical map with an exact-cube-friendly source
        // scale keeps everything rational: p = 2p', q = 4q' gives
        // a01^2 b10 and a01 b10^2 rational cubes
        let s = AffineMap2::scale(Rat::int(2), Rat::int(4)).unwrap();
        let m = QuadMap::canonical_indefinite().compose_source(&s);
        let t = precanonicalize(&m, false).unwrap();
        match &t.outcome {
            ReductionOutcome::Canonical(CanonicalForm::Indefinite) => {}
            other => panic!("expected exact indefinite, got {other:?}"),
        }
        assert_eq!(t.final_map, QuadMap::canonical_indefinite());
    }

    #[test]
    fn definite_reduction_reaches_shape() {
        // exact when -a20/a02 is a rational square
        let m = QuadMap::canonical_definite(Rat::one(), Rat::int(-2));
        let s = rational_affine(5);
        let t = rational_affine(23);
        let composed = m.compose_source(&s).compose_target(&t);
        assert_eq!(
            composed.associated_form().classify().tag,
            FormClassTag::Definite
        );
        let tr = precanonicalize(&composed, true).unwrap();
        match &tr.outcome {
            ReductionOutcome::Canonical(CanonicalForm::Definite { .. }) => {}
            ReductionOutcome::CanonicalNumeric { form, max_rel_err } => {
                assert!(matches!(form, CanonicalForm::Definite { .. }));
                assert!(*max_rel_err <= NUMERIC_SHAPE_TOLERANCE);
            }
            other => panic!("expected definite shape, got {other:?}"),
        }
        assert_eq!(tr.replay(), tr.final_map);
    }

    #[test]
    fn transcript_replay_is_exact_even_with_numeric_steps() {
        let mut a = [0i64; 6].map(Rat::int);
        a[0] = Rat::int(3); // p~ = 3p^2 + q
        a[4] = Rat::frac(1, 2);
        let mut b = [0i64; 6].map(Rat::int);
        b[2] = Rat::one();
        b[3] = Rat::frac(1, 2);
        let m = QuadMap::new(a, b);
        let t = precanonicalize(&m, true).unwrap();
        // replay is coefficient-for-coefficient identical regardless of
        // how the step entries were chosen
        assert_eq!(t.replay(), t.final_map);
    }
}
