//! Sturm-sequence real-root counting, isolation, and exact sign evaluation
//! at algebraic points.
//!
//! This module is the crate's ground-truth oracle: it never consults the
//! closed-form discriminants it is used to audit. Counting runs on the
//! square-free part; multiplicities come from a Yun decomposition;
//! intervals are refined by bisection until they are narrower than 2^-32
//! (display only — no count ever depends on interval width).

use crate::error::Error;
use crate::poly::Poly1;
use crate::rat::Rat;

/// Location of one distinct real root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RootLoc {
    /// The root is exactly this rational.
    Exact(Rat),
    /// Open interval `(lo, hi)` containing exactly one root of the
    /// square-free part, with a certified sign change at the endpoints.
    Interval(Rat, Rat),
}

impl RootLoc {
    /// Midpoint (the root itself when exact); for display.
    pub fn approx(&self) -> f64 {
        match self {
            RootLoc::Exact(r) => r.to_f64(),
            RootLoc::Interval(a, b) => (a.to_f64() + b.to_f64()) / 2.0,
        }
    }

    /// True if the rational `x` could be this root.
    pub fn contains(&self, x: &Rat) -> bool {
        match self {
            RootLoc::Exact(r) => r == x,
            RootLoc::Interval(a, b) => a < x && x < b,
        }
    }
}

/// One distinct real root with its multiplicity in the original polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsolatedRoot {
    pub loc: RootLoc,
    pub multiplicity: usize,
}

/// Result of exact real-root counting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootCount {
    /// Number of distinct real roots in the queried range.
    pub distinct_real: usize,
    /// Isolating locations, ascending, one per distinct root.
    pub roots: Vec<IsolatedRoot>,
}

/// Width below which isolating intervals stop being refined.
fn refine_limit() -> Rat {
    Rat::frac(1, 1i64 << 32)
}

/// Sturm chain of a square-free polynomial, with each remainder scaled by a
/// positive rational to tame coefficient growth (positive scaling preserves
/// the sign sequence).
pub(crate) struct SturmChain {
    chain: Vec<Poly1>,
}

impl SturmChain {
    /// `sf` must be square-free and nonzero.
    pub(crate) fn new(sf: &Poly1) -> Self {
        let mut chain = vec![sf.clone()];
        if sf.degree().unwrap_or(0) >= 1 {
            chain.push(sf.derivative());
            loop {
                let n = chain.len();
                let r = chain[n - 2]
                    .rem(&chain[n - 1])
                    .expect("nonzero divisor in Sturm chain");
                if r.is_zero() {
                    break;
                }
                let neg = -&r;
                let scale = neg.leading().abs().recip().expect("nonzero leading");
                chain.push(neg.scale(&scale));
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| p.eval(x).signum())
            .filter(|s| *s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct roots in the half-open interval `(a, b]`.
    pub(crate) fn count_half_open(&self, a: &Rat, b: &Rat) -> usize {
        debug_assert!(a < b);
        self.variations_at(a) - self.variations_at(b)
    }

    fn sf(&self) -> &Poly1 {
        &self.chain[0]
    }
}

/// Cauchy root bound: every real root of `p` lies strictly inside
/// `(-B, B)` with `B = 1 + max |a_i| / |lead|`.
pub fn cauchy_bound(p: &Poly1) -> Rat {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Rat::one(),
    };
    let lead = p.coeff(n).abs();
    let mut max = Rat::zero();
    for k in 0..n {
        let a = p.coeff(k).abs();
        if a > max {
            max = a;
        }
    }
    Rat::one() + max.checked_div(&lead).expect("nonzero leading")
}

/// Find `lo' in (lo, hi)` with no root of the chain's polynomial in
/// `(lo, lo']`, assuming `lo` itself may be a root.
fn nudge_right(chain: &SturmChain, lo: &Rat, hi: &Rat) -> Rat {
    let mut d = (hi - lo) * Rat::frac(1, 2);
    loop {
        let cand = lo + &d;
        if !chain.sf().eval(&cand).is_zero() && chain.count_half_open(lo, &cand) == 0 {
            return cand;
        }
        d = d * Rat::frac(1, 2);
    }
}

/// Find `hi' in (lo, hi)` with `hi` the only root of the chain's polynomial
/// in `(hi', hi]`, assuming `hi` is a root.
fn nudge_left(chain: &SturmChain, lo: &Rat, hi: &Rat) -> Rat {
    let mut d = (hi - lo) * Rat::frac(1, 2);
    loop {
        let cand = hi - &d;
        if !chain.sf().eval(&cand).is_zero() && chain.count_half_open(&cand, hi) == 1 {
            return cand;
        }
        d = d * Rat::frac(1, 2);
    }
}

/// Isolate all roots in the open interval `(a, b)`; endpoints must not be
/// roots of the chain's square-free polynomial.
fn isolate(chain: &SturmChain, a: &Rat, b: &Rat, out: &mut Vec<RootLoc>) {
    let n = chain.count_half_open(a, b);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(refine(chain, a.clone(), b.clone()));
        return;
    }
    let mid = (a + b) * Rat::frac(1, 2);
    if chain.sf().eval(&mid).is_zero() {
        let left_end = nudge_left(chain, a, &mid);
        let right_start = nudge_right(chain, &mid, b);
        isolate(chain, a, &left_end, out);
        out.push(RootLoc::Exact(mid));
        isolate(chain, &right_start, b, out);
    } else {
        isolate(chain, a, &mid, out);
        isolate(chain, &mid, b, out);
    }
}

/// Shrink an interval known to contain exactly one root (endpoints not
/// roots) until it is narrower than the refinement limit or the root is
/// hit exactly. As a last step, the simplest rational inside the refined
/// interval is tested: rational roots of moderate denominator therefore
/// come back as `Exact` rather than boxed.
fn refine(chain: &SturmChain, mut a: Rat, mut b: Rat) -> RootLoc {
    let limit = refine_limit();
    while &b - &a >= limit {
        let mid = (&a + &b) * Rat::frac(1, 2);
        if chain.sf().eval(&mid).is_zero() {
            return RootLoc::Exact(mid);
        }
        if chain.count_half_open(&a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    let candidate = crate::rat::simplest_in_open(&a, &b);
    if chain.sf().eval(&candidate).is_zero() {
        return RootLoc::Exact(candidate);
    }
    RootLoc::Interval(a, b)
}

/// Bisect an isolating location for a root of `m_sf` one step further.
/// Returns the refined location (which may collapse to an exact root).
fn bisect_once(chain: &SturmChain, loc: RootLoc) -> RootLoc {
    match loc {
        RootLoc::Exact(_) => loc,
        RootLoc::Interval(a, b) => {
            let mid = (&a + &b) * Rat::frac(1, 2);
            if chain.sf().eval(&mid).is_zero() {
                RootLoc::Exact(mid)
            } else if chain.count_half_open(&a, &mid) == 1 {
                RootLoc::Interval(a, mid)
            } else {
                RootLoc::Interval(mid, b)
            }
        }
    }
}

/// Count and isolate the distinct real roots of `p` in the closed interval
/// `[lo, hi]` (either bound may be omitted for -inf/+inf). Multiplicities
/// refer to `p` itself.
pub fn sturm_count(p: &Poly1, lo: Option<&Rat>, hi: Option<&Rat>) -> Result<RootCount, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return Err(Error::Precondition("sturm_count needs lo < hi".into()));
        }
    }
    let sf = p.squarefree_part()?;
    if sf.is_constant() {
        return Ok(RootCount {
            distinct_real: 0,
            roots: Vec::new(),
        });
    }
    let chain = SturmChain::new(&sf);
    let bound = cauchy_bound(&sf);

    // Effective open-interval endpoints that are provably not roots.
    let mut locs: Vec<RootLoc> = Vec::new();
    let mut lo_exact = None;
    let mut hi_exact = None;

    let lo_eff = match lo {
        None => {
            let mut b = -&bound;
            if let Some(h) = hi {
                if &b >= h {
                    b = h - Rat::one();
                }
            }
            b
        }
        Some(a) => {
            if sf.eval(a).is_zero() {
                lo_exact = Some(a.clone());
                let upper = match hi {
                    Some(h) => h.clone(),
                    None => {
                        let mut b = bound.clone();
                        if &b <= a {
                            b = a + Rat::one();
                        }
                        b
                    }
                };
                nudge_right(&chain, a, &upper)
            } else {
                a.clone()
            }
        }
    };
    let hi_eff = match hi {
        None => {
            let mut b = bound.clone();
            if b <= lo_eff {
                b = &lo_eff + Rat::one();
            }
            b
        }
        Some(b) => {
            if sf.eval(b).is_zero() {
                hi_exact = Some(b.clone());
                nudge_left(&chain, &lo_eff, b)
            } else {
                b.clone()
            }
        }
    };

    if let Some(r) = lo_exact {
        locs.push(RootLoc::Exact(r));
    }
    if lo_eff < hi_eff {
        isolate(&chain, &lo_eff, &hi_eff, &mut locs);
    }
    if let Some(r) = hi_exact {
        locs.push(RootLoc::Exact(r));
    }

    // Multiplicities via the unique square-free factor holding each root.
    let factors = p.squarefree_decomposition()?;
    let roots = locs
        .into_iter()
        .map(|loc| {
            let multiplicity = factors
                .iter()
                .find(|(f, _)| match &loc {
                    RootLoc::Exact(r) => f.eval(r).is_zero(),
                    RootLoc::Interval(a, b) => f.eval(a).signum() * f.eval(b).signum() < 0,
                })
                .map(|(_, m)| *m)
                .expect("every isolated root lies in one square-free factor");
            IsolatedRoot { loc, multiplicity }
        })
        .collect::<Vec<_>>();

    Ok(RootCount {
        distinct_real: roots.len(),
        roots,
    })
}

/// Exact sign of `s` at the algebraic number described by `(m_sf, loc)`,
/// where `m_sf` is square-free and `loc` isolates exactly one of its real
/// roots. Terminates for every input: either the root is shared with `s`
/// (detected through gcd) or refinement eventually separates it from all
/// roots of `s`.
pub fn sign_at_root(s: &Poly1, m_sf: &Poly1, loc: &RootLoc) -> Result<i8, Error> {
    if s.is_zero() {
        return Ok(0);
    }
    let (mut a, mut b) = match loc {
        RootLoc::Exact(r) => return Ok(s.eval(r).signum()),
        RootLoc::Interval(a, b) => (a.clone(), b.clone()),
    };
    let g = s.gcd(m_sf)?;
    if g.degree().unwrap_or(0) >= 1 && g.eval(&a).signum() * g.eval(&b).signum() < 0 {
        return Ok(0); // the algebraic point is a shared root
    }
    let s_sf = s.squarefree_part()?;
    let s_chain = SturmChain::new(&s_sf);
    let m_chain = SturmChain::new(m_sf);
    loop {
        if s_chain.count_half_open(&a, &b) == 0 {
            let mid = (&a + &b) * Rat::frac(1, 2);
            let sign = s.eval(&mid).signum();
            debug_assert!(sign != 0);
            return Ok(sign);
        }
        match bisect_once(&m_chain, RootLoc::Interval(a, b)) {
            RootLoc::Exact(r) => return Ok(s.eval(&r).signum()),
            RootLoc::Interval(na, nb) => {
                a = na;
                b = nb;
            }
        }
    }
}

/// Refine a root location of `m_sf` until it is narrower than `width`.
pub fn refine_to_width(m_sf: &Poly1, loc: &RootLoc, width: &Rat) -> RootLoc {
    let mut cur = loc.clone();
    let chain = SturmChain::new(m_sf);
    loop {
        match &cur {
            RootLoc::Exact(_) => return cur,
            RootLoc::Interval(a, b) => {
                if &(b - a) < width {
                    return cur;
                }
            }
        }
        cur = bisect_once(&chain, cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly1 {
        Poly1::from_ints(coeffs)
    }

    #[test]
    fn sqrt_two_has_two_roots() {
        let rc = sturm_count(&p(&[-2, 0, 1]), None, None).unwrap();
        assert_eq!(rc.distinct_real, 2);
        for r in &rc.roots {
            assert_eq!(r.multiplicity, 1);
            if let RootLoc::Interval(a, b) = &r.loc {
                assert!(&(b - a) < &Rat::frac(1, 1 << 32));
                // certified sign change
                let f = p(&[-2, 0, 1]);
                assert!(f.eval(a).signum() * f.eval(b).signum() < 0);
            } else {
                panic!("sqrt(2) is not rational");
            }
        }
    }

    #[test]
    fn double_root_multiplicity() {
        // (x-1)^2 (x^2+1): one distinct real root, multiplicity 2, near 1
        let q = p(&[1, -2, 2, -2, 1]);
        let rc = sturm_count(&q, None, None).unwrap();
        assert_eq!(rc.distinct_real, 1);
        assert_eq!(rc.roots[0].multiplicity, 2);
        assert!(rc.roots[0].loc.contains(&Rat::one()) || rc.roots[0].loc == RootLoc::Exact(Rat::one()));
    }

    #[test]
    fn resolvent_with_no_real_roots() {
        // q^4 + 4q^2 + q + 4: the indefinite resolvent at (0, -2)
        let rc = sturm_count(&p(&[4, 1, 4, 0, 1]), None, None).unwrap();
        assert_eq!(rc.distinct_real, 0);
    }

    #[test]
    fn closed_interval_semantics_with_root_endpoints() {
        // x(x-1)(x-2) on [0, 2]: all three roots counted, endpoints exact
        let f = &(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[-2, 1]);
        let rc = sturm_count(&f, Some(&Rat::zero()), Some(&Rat::int(2))).unwrap();
        assert_eq!(rc.distinct_real, 3);
        assert_eq!(rc.roots[0].loc, RootLoc::Exact(Rat::zero()));
        assert_eq!(rc.roots[2].loc, RootLoc::Exact(Rat::int(2)));
        // on [0, 3/2]: roots 0 and 1
        let rc = sturm_count(&f, Some(&Rat::zero()), Some(&Rat::frac(3, 2))).unwrap();
        assert_eq!(rc.distinct_real, 2);
        // on (strictly inside) [1/4, 3/4]: none
        let rc = sturm_count(&f, Some(&Rat::frac(1, 4)), Some(&Rat::frac(3, 4))).unwrap();
        assert_eq!(rc.distinct_real, 0);
    }

    #[test]
    fn brute_force_cross_check_products_of_linear_factors() {
        // Deterministic battery: roots drawn from a small set with varying
        // multiplicities; the oracle must recover counts and multiplicities.
        let root_sets: &[&[(i64, i64, usize)]] = &[
            &[(1, 2, 1), (-3, 1, 2)],
            &[(0, 1, 3)],
            &[(5, 2, 1), (-5, 2, 1), (1, 3, 2)],
            &[(2, 1, 1), (3, 1, 1), (4, 1, 1), (-7, 2, 1)],
        ];
        for set in root_sets {
            let mut f = Poly1::one();
            for &(n, d, m) in set.iter() {
                let lin = Poly1::new(vec![-Rat::frac(n, d), Rat::one()]);
                for _ in 0..m {
                    f = &f * &lin;
                }
            }
            let rc = sturm_count(&f, None, None).unwrap();
            assert_eq!(rc.distinct_real, set.len());
            let mut expected: Vec<(Rat, usize)> =
                set.iter().map(|&(n, d, m)| (Rat::frac(n, d), m)).collect();
            expected.sort_by(|x, y| x.0.cmp(&y.0));
            for (root, exp) in rc.roots.iter().zip(expected.iter()) {
                assert_eq!(root.multiplicity, exp.1);
                match &root.loc {
                    RootLoc::Exact(r) => assert_eq!(r, &exp.0),
                    RootLoc::Interval(a, b) => assert!(a < &exp.0 && &exp.0 < b),
                }
            }
        }
    }

    #[test]
    fn coprime_product_counts_add() {
        let f = p(&[-2, 0, 1]); // x^2 - 2: 2 roots
        let g = p(&[1, 0, 1]); // x^2 + 1: 0 roots
        let h = p(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3): 3 roots
        let fg = &f * &g;
        let fgh = &fg * &h;
        let c = |q: &Poly1| sturm_count(q, None, None).unwrap().distinct_real;
        assert_eq!(c(&fg), c(&f) + c(&g));
        assert_eq!(c(&fgh), c(&f) + c(&g) + c(&h));
    }

    #[test]
    fn rational_roots_come_back_exact() {
        // q^4 - 4q^2 + q + 2 = (q-1)(q+2)(q^2-q-1): rational roots exact,
        // golden-ratio conjugates boxed
        let f = p(&[2, 1, -4, 0, 1]);
        let rc = sturm_count(&f, None, None).unwrap();
        assert_eq!(rc.distinct_real, 4);
        let exacts: Vec<_> = rc
            .roots
            .iter()
            .filter_map(|r| match &r.loc {
                RootLoc::Exact(v) => Some(v.clone()),
                _ => None,
            })
            .collect();
        assert_eq!(exacts, vec![Rat::int(-2), Rat::int(1)]);
        // (3x - 1)(x^2 - 3): rational root 1/3 exact
        let f = &p(&[-1, 3]) * &p(&[-3, 0, 1]);
        let rc = sturm_count(&f, None, None).unwrap();
        assert!(rc
            .roots
            .iter()
            .any(|r| r.loc == RootLoc::Exact(Rat::frac(1, 3))));
    }

    #[test]
    fn sign_at_algebraic_points() {
        // q0 = sqrt(2), interval isolating the positive root
        let m = p(&[-2, 0, 1]);
        let rc = sturm_count(&m, Some(&Rat::zero()), Some(&Rat::int(2))).unwrap();
        let loc = &rc.roots[0].loc;
        // s = x - 1 is positive at sqrt(2)
        assert_eq!(sign_at_root(&p(&[-1, 1]), &m, loc).unwrap(), 1);
        // s = x - 2 is negative
        assert_eq!(sign_at_root(&p(&[-2, 1]), &m, loc).unwrap(), -1);
        // s = x^2 - 2 is zero (shared root)
        assert_eq!(sign_at_root(&m, &m, loc).unwrap(), 0);
        // s = (x^2 - 2)(x - 5) + 0 -> zero too; and a multiple-root s
        let s = &m * &m;
        assert_eq!(sign_at_root(&s, &m, loc).unwrap(), 0);
    }
}
