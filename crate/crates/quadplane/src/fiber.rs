//! Exact fibers of a quadratic map: how many real points hit a given
//! target, with certified witnesses, and the deterministic falsifier scan
//! that turns non-invertibility theorems into concrete counterexamples.
//!
//! The fiber over a target is the real solution set of two conic
//! equations. We eliminate the first source variable by a Sylvester
//! resultant, count the resolvent's real roots with the Sturm oracle, and
//! lift every root back. All counts are exact; irrational coordinates come
//! back as isolating boxes, never as floats.

use crate::error::Error;
use crate::poly::{resultant_eliminating, BiPoly, Poly1};
use crate::quadmap::{QuadMap, Row};
use crate::rat::Rat;
use crate::sturm::{refine_to_width, sign_at_root, sturm_count, RootCount, RootLoc};

/// One coordinate of a preimage point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coord {
    Exact(Rat),
    /// Open interval `(lo, hi)` isolating the coordinate.
    Boxed(Rat, Rat),
}

impl Coord {
    pub fn approx(&self) -> f64 {
        match self {
            Coord::Exact(r) => r.to_f64(),
            Coord::Boxed(a, b) => (a.to_f64() + b.to_f64()) / 2.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Coord::Exact(_))
    }
}

/// A certified real solution of the fiber system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PreimagePoint {
    pub p: Coord,
    pub q: Coord,
}

/// The full fiber over one target.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub target: (Rat, Rat),
    /// The p-eliminating resolvent, univariate in q (nonzero).
    pub resolvent: Poly1,
    pub resolvent_roots: RootCount,
    /// Distinct real preimages, ascending by q then p.
    pub preimages: Vec<PreimagePoint>,
}

impl Fiber {
    pub fn count(&self) -> usize {
        self.preimages.len()
    }
}

/// Witness kind for a failed injectivity/surjectivity check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessKind {
    /// A target with at least two preimages.
    Collision,
    /// A target with no preimage.
    MissingValue,
}

/// A reproducible counterexample to invertibility.
#[derive(Clone, Debug)]
pub struct Witness {
    pub kind: WitnessKind,
    pub target: (Rat, Rat),
    pub preimages: Vec<PreimagePoint>,
    /// Human-readable account of what certifies the witness.
    pub certificate: String,
}

/// Outcome of the falsifier scan.
#[derive(Clone, Debug)]
pub enum FalsifyResult {
    Found(Box<Witness>),
    NotFound { targets_scanned: usize },
}

const BOX_WIDTH_SHIFT: i64 = 1i64 << 32;

fn box_limit() -> Rat {
    Rat::frac(1, BOX_WIDTH_SHIFT)
}

/// One fiber equation as a polynomial in p with Poly1-in-q coefficients:
/// `a20 p^2 + (2 a11 q + 2 a10) p + (a02 q^2 + 2 a01 q + a00 - target)`.
fn row_to_bipoly(r: &Row, target: &Rat) -> BiPoly {
    let two = Rat::int(2);
    let c0 = Poly1::new(vec![&r[5] - target, &two * &r[4], r[2].clone()]);
    let c1 = Poly1::new(vec![&two * &r[3], &two * &r[1]]);
    let c2 = Poly1::constant(r[0].clone());
    BiPoly::new(vec![c0, c1, c2])
}

/// Exact real roots of a univariate polynomial as [`Coord`]s (rational
/// roots exact, irrational isolated), ascending.
fn univariate_real_coords(g: &Poly1) -> Vec<Coord> {
    if g.is_constant() {
        return Vec::new();
    }
    sturm_count(g, None, None)
        .expect("nonzero polynomial")
        .roots
        .into_iter()
        .map(|r| match r.loc {
            RootLoc::Exact(v) => Coord::Exact(v),
            RootLoc::Interval(a, b) => Coord::Boxed(a, b),
        })
        .collect()
}

/// Solutions in p of the specialized system at a rational q0.
fn lift_rational(g1: &BiPoly, g2: &BiPoly, q0: &Rat) -> Result<Vec<Coord>, Error> {
    let u1 = g1.specialize(q0);
    let u2 = g2.specialize(q0);
    if u1.is_zero() && u2.is_zero() {
        return Err(Error::DegenerateFiber(format!(
            "the whole line q = {q0} lies in the fiber"
        )));
    }
    let g = if u1.is_zero() {
        u2.monic()
    } else if u2.is_zero() {
        u1.monic()
    } else {
        u1.gcd(&u2)?
    };
    // constant gcd: the specialized equations share only complex roots
    Ok(univariate_real_coords(&g))
}

// ---------------------------------------------------------------------------
// Interval arithmetic with exact rational endpoints (lift boxing only; all
// counting decisions are made by Sturm counts and exact sign tests).
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct Iv {
    lo: Rat,
    hi: Rat,
}

impl Iv {
    fn point(r: &Rat) -> Iv {
        Iv {
            lo: r.clone(),
            hi: r.clone(),
        }
    }

    fn add(&self, o: &Iv) -> Iv {
        Iv {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn neg(&self) -> Iv {
        Iv {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    fn mul(&self, o: &Iv) -> Iv {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Iv { lo, hi }
    }

    fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    fn div(&self, o: &Iv) -> Option<Iv> {
        if o.contains_zero() {
            return None;
        }
        let cands = [
            self.lo.checked_div(&o.lo).ok()?,
            self.lo.checked_div(&o.hi).ok()?,
            self.hi.checked_div(&o.lo).ok()?,
            self.hi.checked_div(&o.hi).ok()?,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Some(Iv { lo, hi })
    }

    fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    fn strictly_below(&self, o: &Iv) -> bool {
        self.hi < o.lo
    }

    fn to_coord(&self) -> Coord {
        if self.lo == self.hi {
            Coord::Exact(self.lo.clone())
        } else {
            Coord::Boxed(self.lo.clone(), self.hi.clone())
        }
    }
}

fn poly_iv(p: &Poly1, x: &Iv) -> Iv {
    let mut acc = Iv::point(&Rat::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Iv::point(c));
    }
    acc
}

/// Rational lower bound for sqrt(r), r >= 0.
fn rat_sqrt_floor(r: &Rat, bits: usize) -> Rat {
    use num_bigint::BigInt;
    let scale = BigInt::from(1) << bits;
    let scaled = r.numer() * r.denom() * (&scale * &scale);
    let root = scaled.sqrt();
    Rat::new(root, r.denom() * scale).expect("nonzero denominator")
}

/// Rational upper bound for sqrt(r), r >= 0.
fn rat_sqrt_ceil(r: &Rat, bits: usize) -> Rat {
    use num_bigint::BigInt;
    let scale = BigInt::from(1) << bits;
    let scaled = r.numer() * r.denom() * (&scale * &scale);
    let root = scaled.sqrt() + 1;
    Rat::new(root, r.denom() * scale).expect("nonzero denominator")
}

/// Enclosure of sqrt over an interval with non-negative lower bound.
fn sqrt_iv(x: &Iv, bits: usize) -> Iv {
    Iv {
        lo: rat_sqrt_floor(&x.lo, bits),
        hi: rat_sqrt_ceil(&x.hi, bits),
    }
}

/// Box the value `num(q0) / den(q0)` at an isolated irrational root `q0`
/// of `sf`, where `den(q0) != 0`.
fn box_ratio(num: &Poly1, den: &Poly1, sf: &Poly1, loc: &RootLoc) -> Coord {
    let limit = box_limit();
    let mut loc = loc.clone();
    let mut width = match &loc {
        RootLoc::Exact(r) => {
            let d = den.eval(r);
            return Coord::Exact(num.eval(r).checked_div(&d).expect("denominator nonzero"));
        }
        RootLoc::Interval(a, b) => b - a,
    };
    loop {
        if let RootLoc::Interval(a, b) = &loc {
            let iv = Iv {
                lo: a.clone(),
                hi: b.clone(),
            };
            let dv = poly_iv(den, &iv);
            if !dv.contains_zero() {
                if let Some(pv) = poly_iv(num, &iv).div(&dv) {
                    if pv.width() < limit {
                        return pv.to_coord();
                    }
                }
            }
        } else if let RootLoc::Exact(r) = &loc {
            let d = den.eval(r);
            return Coord::Exact(num.eval(r).checked_div(&d).expect("denominator nonzero"));
        }
        width = width * Rat::frac(1, 16);
        loc = refine_to_width(sf, &loc, &width);
    }
}

/// Box the two roots `(-A1(q0) +/- sqrt(delta(q0))) / (2 a2)` of the
/// master quadratic at an isolated irrational root `q0` of `sf`, where
/// `delta(q0) > 0`. Returns the two coordinates ascending in p.
fn box_quadratic_pair(
    a2: &Rat,
    a1p: &Poly1,
    delta: &Poly1,
    sf: &Poly1,
    loc: &RootLoc,
) -> [Coord; 2] {
    let limit = box_limit();
    let two_a2 = Iv::point(&(Rat::int(2) * a2));
    let mut loc = loc.clone();
    let mut width = match &loc {
        RootLoc::Exact(_) => unreachable!("rational roots take the rational lift"),
        RootLoc::Interval(a, b) => b - a,
    };
    let mut bits = 24usize;
    loop {
        if let RootLoc::Interval(a, b) = &loc {
            let iv = Iv {
                lo: a.clone(),
                hi: b.clone(),
            };
            let dv = poly_iv(delta, &iv);
            if dv.lo.is_positive() {
                let s = sqrt_iv(&dv, bits);
                let minus_a1 = poly_iv(a1p, &iv).neg();
                let plus = minus_a1.add(&s).div(&two_a2).expect("2 a2 != 0");
                let minus = minus_a1.add(&s.neg()).div(&two_a2).expect("2 a2 != 0");
                let (lo_box, hi_box) = if plus.strictly_below(&minus) {
                    (plus.clone(), minus.clone())
                } else if minus.strictly_below(&plus) {
                    (minus.clone(), plus.clone())
                } else {
                    // overlapping enclosures: refine further
                    width = width * Rat::frac(1, 16);
                    bits += 8;
                    loc = refine_to_width(sf, &loc, &width);
                    continue;
                };
                if lo_box.width() < limit && hi_box.width() < limit {
                    return [lo_box.to_coord(), hi_box.to_coord()];
                }
            }
        }
        width = width * Rat::frac(1, 16);
        bits += 8;
        loc = refine_to_width(sf, &loc, &width);
    }
}

/// Solutions in p over an isolated irrational root of the resolvent's
/// square-free part.
fn lift_irrational(
    g1: &BiPoly,
    g2: &BiPoly,
    sf: &Poly1,
    loc: &RootLoc,
) -> Result<Vec<Coord>, Error> {
    let d1 = g1.degree().unwrap_or(0);
    let d2 = g2.degree().unwrap_or(0);

    // Both at most linear in p: the one with positive degree determines p
    // uniquely (its leading coefficient is a rational linear polynomial,
    // nonzero at an irrational point).
    if d1 <= 1 && d2 <= 1 {
        let g = if d1 == 1 { g1 } else { g2 };
        let num = -&g.coeff(0);
        let den = g.coeff(1);
        return Ok(vec![box_ratio(&num, &den, sf, loc)]);
    }

    // A master equation of degree 2 and a linear-in-p companion (c1 p + c0).
    let (master, c1, c0) = if d1 == 2 && d2 == 2 {
        let b20 = g2.coeff(2).coeff(0);
        let a20 = g1.coeff(2).coeff(0);
        let c1 = &g1.coeff(1).scale(&b20) - &g2.coeff(1).scale(&a20);
        let c0 = &g1.coeff(0).scale(&b20) - &g2.coeff(0).scale(&a20);
        (g1, c1, c0)
    } else if d1 == 2 {
        (g1, g2.coeff(1), g2.coeff(0))
    } else {
        (g2, g1.coeff(1), g1.coeff(0))
    };

    if !c1.is_zero() {
        // c1(q0) != 0 since c1 has degree <= 1 with rational coefficients
        // and q0 is irrational: exactly one lift, p = -c0(q0)/c1(q0).
        return Ok(vec![box_ratio(&(-&c0), &c1, sf, loc)]);
    }

    // The companion collapsed to c0(q) alone; the resultant already forces
    // c0(q0) = 0, so the lift count is governed by the master's discriminant.
    debug_assert_eq!(sign_at_root(&c0, sf, loc)?, 0);
    let a2 = master.coeff(2).coeff(0); // nonzero constant
    let a1p = master.coeff(1);
    let a0p = master.coeff(0);
    let delta = &(&a1p * &a1p) - &a0p.scale(&(Rat::int(4) * &a2));
    match sign_at_root(&delta, sf, loc)? {
        -1 => Ok(Vec::new()),
        0 => Ok(vec![box_ratio(
            &(-&a1p),
            &Poly1::constant(Rat::int(2) * &a2),
            sf,
            loc,
        )]),
        _ => {
            let pair = box_quadratic_pair(&a2, &a1p, &delta, sf, loc);
            Ok(Vec::from(pair))
        }
    }
}

/// Compute the fiber of `map` over `(target_p, target_q)`: the
/// p-eliminating resolvent, its exact real-root count, and every real
/// preimage. A fiber containing a curve (shared component, vertical line,
/// or an identically-satisfied system) is reported as a degenerate-fiber
/// error rather than a count.
pub fn preimage_count(map: &QuadMap, target_p: &Rat, target_q: &Rat) -> Result<Fiber, Error> {
    let g1 = row_to_bipoly(&map.a, target_p);
    let g2 = row_to_bipoly(&map.b, target_q);

    match (g1.is_zero(), g2.is_zero()) {
        (true, true) => {
            return Err(Error::DegenerateFiber(
                "the map is constant and equal to the target".into(),
            ))
        }
        (true, false) | (false, true) => {
            return Err(Error::DegenerateFiber(
                "one fiber equation vanishes identically (resultant is zero)".into(),
            ))
        }
        _ => {}
    }

    let d1 = g1.degree().unwrap();
    let d2 = g2.degree().unwrap();

    // Neither equation mentions p: the system is univariate in q.
    if d1 == 0 && d2 == 0 {
        let u1 = g1.coeff(0);
        let u2 = g2.coeff(0);
        let h = u1.gcd(&u2)?;
        if h.degree().unwrap_or(0) >= 1 {
            let rc = sturm_count(&h, None, None)?;
            if rc.distinct_real > 0 {
                return Err(Error::DegenerateFiber(
                    "the fiber contains vertical lines (p is unconstrained on shared roots)"
                        .into(),
                ));
            }
        }
        let resolvent = if h.is_constant() { Poly1::one() } else { h };
        let resolvent_roots = sturm_count(&resolvent, None, None)?;
        return Ok(Fiber {
            target: (target_p.clone(), target_q.clone()),
            resolvent,
            resolvent_roots,
            preimages: Vec::new(),
        });
    }

    let resolvent = resultant_eliminating(&g1, &g2)?;
    if resolvent.is_zero() {
        return Err(Error::DegenerateFiber(
            "the two fiber equations share a component (resultant vanishes identically)".into(),
        ));
    }
    let resolvent_roots = sturm_count(&resolvent, None, None)?;
    let sf = resolvent.squarefree_part()?;

    let mut preimages = Vec::new();
    for root in &resolvent_roots.roots {
        let p_coords = match &root.loc {
            RootLoc::Exact(q0) => lift_rational(&g1, &g2, q0)?,
            loc => lift_irrational(&g1, &g2, &sf, loc)?,
        };
        let q_coord = match &root.loc {
            RootLoc::Exact(q0) => Coord::Exact(q0.clone()),
            RootLoc::Interval(a, b) => Coord::Boxed(a.clone(), b.clone()),
        };
        for pc in p_coords {
            preimages.push(PreimagePoint {
                p: pc,
                q: q_coord.clone(),
            });
        }
    }

    // Exact preimages must really map to the target.
    debug_assert!(preimages.iter().all(|pt| {
        match (&pt.p, &pt.q) {
            (Coord::Exact(p), Coord::Exact(q)) => {
                map.eval(p, q) == (target_p.clone(), target_q.clone())
            }
            _ => true,
        }
    }));

    Ok(Fiber {
        target: (target_p.clone(), target_q.clone()),
        resolvent,
        resolvent_roots,
        preimages,
    })
}

/// Deterministic falsifier: scan half-integer targets `(i/2, j/2)` in
/// rings of increasing `max(|i|, |j|)` (then lexicographically by `(i, j)`)
/// up to `|i|, |j| <= 2 * search_bound`, and return the first target whose
/// fiber does not have exactly one point. Degenerate fibers are skipped,
/// not treated as failures. The scan order is part of the contract: the
/// returned witness is reproducible.
pub fn falsify(map: &QuadMap, search_bound: u32) -> FalsifyResult {
    let n = 2 * i64::from(search_bound);
    let mut scanned = 0usize;
    for k in 0..=n {
        for i in -k..=k {
            for j in -k..=k {
                if i.abs().max(j.abs()) != k {
                    continue;
                }
                let tp = Rat::frac(i, 2);
                let tq = Rat::frac(j, 2);
                scanned += 1;
                let fiber = match preimage_count(map, &tp, &tq) {
                    Ok(f) => f,
                    Err(Error::DegenerateFiber(_)) => continue,
                    Err(_) => continue,
                };
                match fiber.count() {
                    1 => continue,
                    0 => {
                        return FalsifyResult::Found(Box::new(missing_value_witness(map, fiber)))
                    }
                    _ => return FalsifyResult::Found(Box::new(collision_witness(map, fiber))),
                }
            }
        }
    }
    FalsifyResult::NotFound {
        targets_scanned: scanned,
    }
}

fn collision_witness(map: &QuadMap, fiber: Fiber) -> Witness {
    // exact preimages re-verified by direct evaluation
    for pt in &fiber.preimages {
        if let (Coord::Exact(p), Coord::Exact(q)) = (&pt.p, &pt.q) {
            let (vp, vq) = map.eval(p, q);
            assert!(
                vp == fiber.target.0 && vq == fiber.target.1,
                "collision preimage failed exact verification"
            );
        }
    }
    let n = fiber.preimages.len();
    Witness {
        kind: WitnessKind::Collision,
        target: fiber.target,
        preimages: fiber.preimages,
        certificate: format!(
            "{n} distinct real preimages: resolvent roots isolated by Sturm counts; \
             exact preimages verified by direct evaluation"
        ),
    }
}

fn missing_value_witness(map: &QuadMap, fiber: Fiber) -> Witness {
    let certificate = if fiber.resolvent_roots.distinct_real == 0 {
        "eliminating p: the resolvent in q has no real roots (Sturm count 0)".to_string()
    } else {
        // try the other elimination direction
        let swapped = map.swap_source_vars();
        match preimage_count(&swapped, &fiber.target.0, &fiber.target.1) {
            Ok(f2) if f2.resolvent_roots.distinct_real == 0 => {
                "eliminating q: the resolvent in p has no real roots (Sturm count 0)".to_string()
            }
            _ => "no real root of either resolvent lifts to a real preimage \
                  (exact discriminant sign analysis at each isolated root)"
                .to_string(),
        }
    };
    Witness {
        kind: WitnessKind::MissingValue,
        target: fiber.target,
        preimages: Vec::new(),
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indefinite_collision_fiber_at_2_2() {
        // p~ = p^2 + q, q~ = q^2 + p over (2, 2): resolvent
        // q^4 - 4q^2 + q + 2 = (q-1)(q+2)(q^2-q-1): four real preimages,
        // two of them exact
        let m = QuadMap::canonical_indefinite();
        let f = preimage_count(&m, &Rat::int(2), &Rat::int(2)).unwrap();
        assert_eq!(f.resolvent, Poly1::from_ints(&[2, 1, -4, 0, 1]));
        assert_eq!(f.count(), 4);
        let exact: Vec<(Rat, Rat)> = f
            .preimages
            .iter()
            .filter_map(|pt| match (&pt.p, &pt.q) {
                (Coord::Exact(p), Coord::Exact(q)) => Some((p.clone(), q.clone())),
                _ => None,
            })
            .collect();
        assert!(exact.contains(&(Rat::int(-2), Rat::int(-2))));
        assert!(exact.contains(&(Rat::int(1), Rat::int(1))));
        for (p, q) in exact {
            assert_eq!(m.eval(&p, &q), (Rat::int(2), Rat::int(2)));
        }
    }

    #[test]
    fn indefinite_missing_value_at_0_m2() {
        let m = QuadMap::canonical_indefinite();
        let f = preimage_count(&m, &Rat::zero(), &Rat::int(-2)).unwrap();
        assert_eq!(f.resolvent, Poly1::from_ints(&[4, 1, 4, 0, 1]));
        assert_eq!(f.resolvent_roots.distinct_real, 0);
        assert_eq!(f.count(), 0);
    }

    #[test]
    fn shear_has_singleton_fibers() {
        let m = QuadMap::shear();
        for (tp, tq) in [(0, 0), (11, 3), (-5, 7), (2, -2)] {
            let f = preimage_count(&m, &Rat::int(tp), &Rat::int(tq)).unwrap();
            assert_eq!(f.count(), 1);
            let pt = &f.preimages[0];
            // p = p~ - q~^2, q = q~
            assert_eq!(pt.p, Coord::Exact(Rat::int(tp - tq * tq)));
            assert_eq!(pt.q, Coord::Exact(Rat::int(tq)));
        }
    }

    #[test]
    fn pure_square_fiber() {
        // p~ = p^2, q~ = q: two preimages over (1, 0), none over (-1, 0)
        let mut a = [0i64; 6].map(Rat::int);
        a[0] = Rat::one();
        let mut b = [0i64; 6].map(Rat::int);
        b[4] = Rat::frac(1, 2);
        let m = QuadMap::new(a, b);
        let f = preimage_count(&m, &Rat::one(), &Rat::zero()).unwrap();
        assert_eq!(f.count(), 2);
        let ps: Vec<_> = f.preimages.iter().map(|pt| pt.p.clone()).collect();
        assert_eq!(ps, vec![Coord::Exact(Rat::int(-1)), Coord::Exact(Rat::one())]);
        let f = preimage_count(&m, &Rat::int(-1), &Rat::zero()).unwrap();
        assert_eq!(f.count(), 0);
    }

    #[test]
    fn irrational_preimages_are_boxed_and_isolated() {
        // p~ = p^2 + q^2, q~ = q^2: over (1/2, 0): p^2 = 1/2, q = 0
        let mut a = [0i64; 6].map(Rat::int);
        a[0] = Rat::one();
        a[2] = Rat::one();
        let mut b = [0i64; 6].map(Rat::int);
        b[2] = Rat::one();
        let m = QuadMap::new(a, b);
        let f = preimage_count(&m, &Rat::frac(1, 2), &Rat::zero()).unwrap();
        assert_eq!(f.count(), 2);
        for pt in &f.preimages {
            assert_eq!(pt.q, Coord::Exact(Rat::zero()));
            match &pt.p {
                Coord::Boxed(a, b) => {
                    // contains +/- sqrt(1/2): check sign change of p^2 - 1/2
                    let g = Poly1::new(vec![Rat::frac(-1, 2), Rat::zero(), Rat::one()]);
                    assert!(g.eval(a).signum() * g.eval(b).signum() < 0);
                }
                Coord::Exact(_) => panic!("sqrt(1/2) is irrational"),
            }
        }
        // boxes are disjoint
        if let (Coord::Boxed(_, hi0), Coord::Boxed(lo1, _)) =
            (&f.preimages[0].p, &f.preimages[1].p)
        {
            assert!(hi0 < lo1);
        }
        // and over (-1/2, 0) there is nothing
        let f = preimage_count(&m, &Rat::frac(-1, 2), &Rat::zero()).unwrap();
        assert_eq!(f.count(), 0);
    }

    #[test]
    fn degenerate_fiber_detection() {
        // p~ = p^2, q~ = p^2: over (0, 0) the fiber is the line p = 0
        let mut a = [0i64; 6].map(Rat::int);
        a[0] = Rat::one();
        let m = QuadMap::new(a.clone(), a);
        assert!(matches!(
            preimage_count(&m, &Rat::zero(), &Rat::zero()),
            Err(Error::DegenerateFiber(_))
        ));
        // constant row equal to its target
        let m = QuadMap::from_ints([0; 6], [0, 0, 0, 0, 0, 7]);
        assert!(matches!(
            preimage_count(&m, &Rat::zero(), &Rat::int(7)),
            Err(Error::DegenerateFiber(_))
        ));
    }

    #[test]
    fn falsifier_on_indefinite_map_frozen_first_witness() {
        // Ring 0 already collides: (0, 0) has preimages (0, 0) and (-1, -1).
        let m = QuadMap::canonical_indefinite();
        match falsify(&m, 4) {
            FalsifyResult::Found(w) => {
                assert_eq!(w.kind, WitnessKind::Collision);
                assert_eq!(w.target, (Rat::zero(), Rat::zero()));
                assert_eq!(w.preimages.len(), 2);
                assert_eq!(
                    w.preimages[0],
                    PreimagePoint {
                        p: Coord::Exact(Rat::int(-1)),
                        q: Coord::Exact(Rat::int(-1))
                    }
                );
                assert_eq!(
                    w.preimages[1],
                    PreimagePoint {
                        p: Coord::Exact(Rat::zero()),
                        q: Coord::Exact(Rat::zero())
                    }
                );
            }
            FalsifyResult::NotFound { .. } => panic!("indefinite map must falsify"),
        }
    }

    #[test]
    fn falsifier_on_semidefinite_example() {
        // p~ = p q, q~ = q^2 + p: first witness at (0, 1/2) with 3 preimages
        let mut a = [0i64; 6].map(Rat::int);
        a[1] = Rat::frac(1, 2);
        let mut b = [0i64; 6].map(Rat::int);
        b[2] = Rat::one();
        b[3] = Rat::frac(1, 2);
        let m = QuadMap::new(a, b);
        match falsify(&m, 4) {
            FalsifyResult::Found(w) => {
                assert_eq!(w.kind, WitnessKind::Collision);
                assert_eq!(w.target, (Rat::zero(), Rat::frac(1, 2)));
                assert_eq!(w.preimages.len(), 3);
            }
            FalsifyResult::NotFound { .. } => panic!("semi-definite map must falsify"),
        }
    }

    #[test]
    fn falsifier_not_found_on_shear() {
        match falsify(&QuadMap::shear(), 3) {
            FalsifyResult::NotFound { targets_scanned } => {
                assert_eq!(targets_scanned, 13 * 13);
            }
            FalsifyResult::Found(w) => panic!("shear is invertible, got {w:?}"),
        }
    }
}
