//! Dense univariate polynomials over [`Rat`], plus the resultant machinery
//! used by the elimination and oracle layers.
//!
//! Coefficients are stored ascending: index `k` holds the coefficient of
//! `x^k`. The zero polynomial is the empty vector; otherwise the leading
//! (last) coefficient is nonzero. Degrees in this crate stay tiny (≤ 10),
//! so everything is naive and exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::rat::Rat;

/// Dense univariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly1 {
    coeffs: Vec<Rat>,
}

impl Poly1 {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly1::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly1::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly1::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly1 { coeffs }
    }

    pub fn from_ints(ascending: &[i64]) -> Self {
        Poly1::new(ascending.iter().map(|&n| Rat::int(n)).collect())
    }

    /// Monic quartic `x^4 + a1 x^3 + a2 x^2 + a3 x + a4`.
    pub fn monic_quartic(a1: &Rat, a2: &Rat, a3: &Rat, a4: &Rat) -> Self {
        Poly1::new(vec![a4.clone(), a3.clone(), a2.clone(), a1.clone(), Rat::one()])
    }

    /// Monic cubic `x^3 + a1 x^2 + a2 x + a3`.
    pub fn monic_cubic(a1: &Rat, a2: &Rat, a3: &Rat) -> Self {
        Poly1::new(vec![a3.clone(), a2.clone(), a1.clone(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn leading(&self) -> &Rat {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly1 {
        if self.coeffs.len() <= 1 {
            return Poly1::zero();
        }
        Poly1::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Rat::int(k as i64) * c)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Poly1 {
        if c.is_zero() {
            return Poly1::zero();
        }
        Poly1 {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Poly1 {
        if self.is_zero() {
            return Poly1::zero();
        }
        let lead = self.leading().clone();
        self.scale(&lead.recip().expect("nonzero leading coefficient"))
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Poly1) -> Result<(Poly1, Poly1), Error> {
        let d_deg = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let d_lead = divisor.leading().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Poly1::zero(), self.clone()));
        }
        let q_len = rem.len() - d_deg;
        let mut quot = vec![Rat::zero(); q_len];
        for k in (0..q_len).rev() {
            let factor = rem[k + d_deg].checked_div(&d_lead)?;
            if !factor.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = dc * &factor;
                    rem[k + j] = rem[k + j].clone() - t;
                }
            }
            quot[k] = factor;
        }
        rem.truncate(d_deg);
        Ok((Poly1::new(quot), Poly1::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly1) -> Result<Poly1, Error> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; the divisor must divide `self` with zero remainder.
    pub fn exact_div(&self, divisor: &Poly1) -> Result<Poly1, Error> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Precondition(
                "exact_div with nonzero remainder".into(),
            ));
        }
        Ok(q)
    }

    /// Monic greatest common divisor. Errors only on gcd(0, 0).
    pub fn gcd(&self, other: &Poly1) -> Result<Poly1, Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeroPolynomials);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic product of the distinct irreducible factors: `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Result<Poly1, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Poly1::one());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    /// Yun squarefree decomposition: pairs `(f_i, i)` with `p = lc * prod f_i^i`,
    /// the `f_i` monic, squarefree, pairwise coprime, and only nontrivial
    /// factors reported.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly1, usize)>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp)?;
        let mut b = f.exact_div(&a0)?;
        let mut c = fp.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1usize;
        while b.degree().unwrap_or(0) > 0 {
            let ai = b.gcd(&d)?;
            if ai.degree().unwrap_or(0) > 0 {
                out.push((ai.clone(), i));
            }
            b = b.exact_div(&ai)?;
            c = d.exact_div(&ai)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Integer coefficient list after clearing denominators (ascending),
    /// together with the common denominator used.
    pub fn to_integer_coeffs(&self) -> (Vec<num_bigint::BigInt>, num_bigint::BigInt) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut common = BigInt::from(1);
        for c in &self.coeffs {
            common = common.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&common / c.denom()))
            .collect();
        (ints, common)
    }

    /// All rational roots, found by the rational-root test on the cleared
    /// integer form, each verified by exact evaluation.
    pub fn rational_roots(&self) -> Vec<Rat> {
        use num_bigint::BigInt;
        use num_traits::Zero as _;
        if self.is_zero() || self.is_constant() {
            return Vec::new();
        }
        let (ints, _) = self.to_integer_coeffs();
        // strip x^k factor: zero is a root when the constant term vanishes
        let mut roots = Vec::new();
        let mut lo = 0usize;
        while ints[lo].is_zero() {
            lo += 1;
        }
        if lo > 0 {
            roots.push(Rat::zero());
        }
        let tail = &ints[lo..];
        if tail.len() <= 1 {
            return roots;
        }
        let divisors = |n: &BigInt| -> Vec<BigInt> {
            let n = if n < &BigInt::zero() { -n } else { n.clone() };
            let mut out = Vec::new();
            let mut d = BigInt::from(1);
            while &d * &d <= n {
                if (&n % &d).is_zero() {
                    out.push(d.clone());
                    out.push(&n / &d);
                }
                d += 1;
            }
            out
        };
        let const_divs = divisors(&tail[0]);
        let lead_divs = divisors(tail.last().unwrap());
        for p in &const_divs {
            for q in &lead_divs {
                for sign in [1i64, -1] {
                    let cand = Rat::new(p * BigInt::from(sign), q.clone()).unwrap();
                    if self.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Poly1 {
    type Output = Poly1;
    fn add(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: &Poly1) -> Poly1 {
        if self.is_zero() || rhs.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly1::new(out)
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        Poly1 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Ring operations needed by fraction-free elimination. Implemented for
/// rational scalars and for polynomial entries; Bareiss guarantees every
/// `exact_div` it performs is exact in either ring.
trait RingElem: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn ring_mul(&self, o: &Self) -> Self;
    fn ring_sub(&self, o: &Self) -> Self;
    fn ring_exact_div(&self, o: &Self) -> Self;
    fn ring_neg(&self) -> Self;
}

impl RingElem for Rat {
    fn ring_zero() -> Self {
        Rat::zero()
    }
    fn ring_one() -> Self {
        Rat::one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_exact_div(&self, o: &Self) -> Self {
        self.checked_div(o).expect("Bareiss pivot is nonzero")
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

impl RingElem for Poly1 {
    fn ring_zero() -> Self {
        Poly1::zero()
    }
    fn ring_one() -> Self {
        Poly1::one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_exact_div(&self, o: &Self) -> Self {
        self.exact_div(o).expect("Bareiss division is exact")
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

/// Fraction-free (Bareiss) determinant over an integral domain.
fn bareiss_det<T: RingElem>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::ring_one();
    }
    let mut sign_flip = false;
    let mut prev = T::ring_one();
    for k in 0..n - 1 {
        if m[k][k].is_ring_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_ring_zero()) else {
                return T::ring_zero();
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j]
                    .ring_mul(&m[k][k])
                    .ring_sub(&m[i][k].ring_mul(&m[k][j]));
                m[i][j] = num.ring_exact_div(&prev);
            }
        }
        for row in m.iter_mut().skip(k + 1) {
            row[k] = T::ring_zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.ring_neg()
    } else {
        det
    }
}

/// Sylvester matrix of two coefficient lists given in ascending order,
/// with formal degrees equal to their actual degrees.
fn sylvester<T: RingElem>(f: &[T], g: &[T]) -> Vec<Vec<T>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![T::ring_zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    mat
}

/// Resultant of two univariate polynomials. Conventions: `res(f, g) = 0`
/// if either is the zero polynomial; `res` of two nonzero constants is 1.
pub fn resultant(f: &Poly1, g: &Poly1) -> Rat {
    if f.is_zero() || g.is_zero() {
        return Rat::zero();
    }
    if f.is_constant() && g.is_constant() {
        return Rat::one();
    }
    bareiss_det(sylvester(f.coeffs(), g.coeffs()))
}

/// Discriminant via the Sylvester resultant: `(-1)^(n(n-1)/2) res(p, p') / lead`.
/// This is the independent route used to audit the closed-form discriminants.
pub fn discriminant_via_resultant(p: &Poly1) -> Result<Rat, Error> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 1 {
        return Err(Error::Precondition("discriminant needs degree >= 1".into()));
    }
    let res = resultant(p, &p.derivative());
    let sign = if (n * (n - 1) / 2) % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    };
    (sign * res).checked_div(p.leading())
}

/// A bivariate polynomial, dense in the variable being eliminated, with
/// [`Poly1`] coefficients in the variable that remains.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly {
    coeffs: Vec<Poly1>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Poly1>) -> Self {
        while coeffs.last().is_some_and(Poly1::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the eliminated variable.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Poly1 {
        self.coeffs.get(k).cloned().unwrap_or_else(Poly1::zero)
    }

    /// Specialize the eliminated variable's coefficients at `x`, producing
    /// the univariate polynomial in the eliminated variable.
    pub fn specialize(&self, x: &Rat) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|c| c.eval(x)).collect())
    }
}

/// Resultant of two bivariate polynomials with respect to the eliminated
/// variable, returning a univariate polynomial in the kept variable.
/// Errors if either input is identically zero or both are constant in the
/// eliminated variable.
pub fn resultant_eliminating(f: &BiPoly, g: &BiPoly) -> Result<Poly1, Error> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
    if df == 0 && dg == 0 {
        return Err(Error::Precondition(
            "resultant_eliminating needs positive degree in the eliminated variable".into(),
        ));
    }
    Ok(bareiss_det(sylvester(&f.coeffs, &g.coeffs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly1 {
        Poly1::from_ints(coeffs)
    }

    #[test]
    fn eval_examples() {
        // x^4 at 3 -> 81
        assert_eq!(p(&[0, 0, 0, 0, 1]).eval(&Rat::int(3)), Rat::int(81));
        // (x-1)^2 (x^2+1) = x^4 - 2x^3 + 2x^2 - 2x + 1 vanishes at 1
        let q = p(&[1, -2, 2, -2, 1]);
        assert_eq!(q.eval(&Rat::one()), Rat::zero());
        // zero polynomial evaluates to 0 anywhere
        assert_eq!(Poly1::zero().eval(&Rat::frac(7, 3)), Rat::zero());
    }

    #[test]
    fn double_root_expansion_matches_product() {
        // (x-1)^2 (x^2+1) expanded independently
        let lhs = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 0, 1]);
        assert_eq!(lhs, p(&[1, -2, 2, -2, 1]));
    }

    #[test]
    fn derivative_of_general_quartic() {
        // d/dx (x^4 + a1 x^3 + a2 x^2 + a3 x + a4) = 4x^3 + 3a1 x^2 + 2a2 x + a3
        let (a1, a2, a3, a4) = (Rat::int(5), Rat::frac(1, 2), Rat::int(-3), Rat::int(7));
        let p4 = Poly1::monic_quartic(&a1, &a2, &a3, &a4);
        let d = p4.derivative();
        assert_eq!(
            d,
            Poly1::new(vec![
                a3,
                Rat::int(2) * a2,
                Rat::int(3) * a1,
                Rat::int(4)
            ])
        );
    }

    #[test]
    fn gcd_and_squarefree() {
        // gcd(x^2-1, x-1) = x-1
        let g = p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        // squarefree part of (x-1)^2(x^2+1) is (x-1)(x^2+1), monic
        let sf = p(&[1, -2, 2, -2, 1]).squarefree_part().unwrap();
        assert_eq!(sf, &p(&[-1, 1]) * &p(&[1, 0, 1]));
        // gcd(sf, sf') = 1
        assert_eq!(sf.gcd(&sf.derivative()).unwrap(), Poly1::one());
        assert_eq!(
            Poly1::zero().gcd(&Poly1::zero()),
            Err(Error::GcdOfZeroPolynomials)
        );
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^2 (x^2+1): factors [(x^2+1, 1), (x-1, 2)]
        let d = p(&[1, -2, 2, -2, 1]).squarefree_decomposition().unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], (p(&[1, 0, 1]), 1));
        assert_eq!(d[1], (p(&[-1, 1]), 2));
        // (x-2)^3
        let c = &(&p(&[-2, 1]) * &p(&[-2, 1])) * &p(&[-2, 1]);
        let d = c.squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(p(&[-2, 1]), 3)]);
    }

    #[test]
    fn resultant_known_values() {
        // res(x - a, x - b) = g(a) = a - b; here a = 3, b = 5
        let f = Poly1::new(vec![Rat::int(-3), Rat::one()]);
        let g = Poly1::new(vec![Rat::int(-5), Rat::one()]);
        assert_eq!(resultant(&f, &g), Rat::int(-2));
        // res(f, c) = c^deg(f) for constant c
        let c = Poly1::constant(Rat::int(3));
        let f = p(&[1, 0, 1]);
        assert_eq!(resultant(&f, &c), Rat::int(9));
        assert_eq!(resultant(&c, &f), Rat::int(9));
    }

    #[test]
    fn discriminants_via_resultant() {
        // disc(x^4 - 1) = -256
        assert_eq!(
            discriminant_via_resultant(&p(&[-1, 0, 0, 0, 1])).unwrap(),
            Rat::int(-256)
        );
        // disc(x^3 - x) = 4
        assert_eq!(
            discriminant_via_resultant(&p(&[0, -1, 0, 1])).unwrap(),
            Rat::int(4)
        );
        // disc(x^3 + x) = -4
        assert_eq!(
            discriminant_via_resultant(&p(&[0, 1, 0, 1])).unwrap(),
            Rat::int(-4)
        );
        // disc((x^2+1)^2) = 0
        assert_eq!(
            discriminant_via_resultant(&p(&[1, 0, 2, 0, 1])).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn rational_roots_found_and_verified() {
        // q^4 - 4q^2 + q + 2 = (q-1)(q+2)(q^2-q-1)
        let roots = p(&[2, 1, -4, 0, 1]).rational_roots();
        assert_eq!(roots, vec![Rat::int(-2), Rat::int(1)]);
        // x^2 with root 0
        assert_eq!(p(&[0, 0, 1]).rational_roots(), vec![Rat::zero()]);
        // 2x - 3 with root 3/2
        assert_eq!(p(&[-3, 2]).rational_roots(), vec![Rat::frac(3, 2)]);
    }

    #[test]
    fn eliminating_resultant_matches_hand_computation() {
        // f = p^2 + (q - P), g = p + (q^2 - Q) as polynomials in p:
        // res_p = (q^2-Q)^2 + q - P
        let big_p = Rat::int(2);
        let big_q = Rat::int(2);
        let f = BiPoly::new(vec![
            Poly1::new(vec![-big_p.clone(), Rat::one()]),
            Poly1::zero(),
            Poly1::one(),
        ]);
        let g = BiPoly::new(vec![
            Poly1::new(vec![-big_q.clone(), Rat::zero(), Rat::one()]),
            Poly1::one(),
        ]);
        let r = resultant_eliminating(&f, &g).unwrap();
        // q^4 - 4 q^2 + q + 2
        assert_eq!(r, p(&[2, 1, -4, 0, 1]));
    }

    #[test]
    fn multiplicative_eval_property_spot() {
        let a = p(&[1, 2, 0, -1]);
        let b = p(&[-4, 0, 3]);
        let x = Rat::frac(5, 7);
        assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }
}
