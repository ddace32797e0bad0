//! Desk-scale demo around the degree-10 characteristic polynomial from the
//! cuboid application and the involutive cubic parameter transform that
//! motivates the search for richer invertible maps of the parameter plane.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of evaluating the characteristic polynomial, with any parameter
/// warnings (evaluation itself is always permitted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuboidEval {
    pub value: BigInt,
    pub warnings: Vec<String>,
}

/// Exact value at `(t, p, q)` of
///
/// ```text
/// t^10 + (2q^2 + p^2)(3q^2 - 2p^2) t^8
///      + (q^8 + 10 p^2 q^6 + 4 p^4 q^4 - 14 p^6 q^2 + p^8) t^6
///      - p^2 q^2 (q^8 - 14 p^2 q^6 + 4 p^4 q^4 + 10 p^6 q^2 + p^8) t^4
///      - p^6 q^6 (q^2 + 2p^2)(3p^2 - 2q^2) t^2
///      - q^10 p^10
/// ```
///
/// The polynomial is evaluated, never solved. It is weighted-homogeneous
/// with `t` of weight 2: substituting `(k^2 t, k p, k q)` scales the value
/// by `k^20`.
pub fn cuboid_char_eval(t: &BigInt, p: &BigInt, q: &BigInt) -> CuboidEval {
    let mut warnings = Vec::new();
    if p == q {
        warnings.push("parameters p and q should be distinct".to_string());
    }
    if !p.is_zero() && !q.is_zero() && !p.gcd(q).is_one() {
        warnings.push(format!("parameters p = {p}, q = {q} are not coprime"));
    }
    if !t.is_positive() || !p.is_positive() || !q.is_positive() {
        warnings.push("t, p, q are positive integers in the intended application".to_string());
    }

    let t2 = t * t;
    let p2 = p * p;
    let q2 = q * q;
    let p4 = &p2 * &p2;
    let q4 = &q2 * &q2;
    let p6 = &p4 * &p2;
    let q6 = &q4 * &q2;
    let p8 = &p6 * &p2;
    let q8 = &q6 * &q2;

    let c8 = (2 * &q2 + &p2) * (3 * &q2 - 2 * &p2);
    let c6 = &q8 + 10 * &p2 * &q6 + 4 * &p4 * &q4 - 14 * &p6 * &q2 + &p8;
    let c4 = -(&p2 * &q2) * (&q8 - 14 * &p2 * &q6 + 4 * &p4 * &q4 + 10 * &p6 * &q2 + &p8);
    let c2 = -(&p6 * &q6) * (&q2 + 2 * &p2) * (3 * &p2 - 2 * &q2);
    let c0 = -(&q8 * &q2) * (&p8 * &p2);

    // Horner in t^2
    let mut value = t2.clone();
    value += c8;
    value *= &t2;
    value += c6;
    value *= &t2;
    value += c4;
    value *= &t2;
    value += c2;
    value *= &t2;
    value += c0;

    CuboidEval { value, warnings }
}

/// The involutive parameter transform `p~ = B q^3 - p, q~ = q`.
pub fn cubic_param_transform(b: &BigInt, p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
    (b * q * q * q - p, q.clone())
}
