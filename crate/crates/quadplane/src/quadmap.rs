//! The quadratic transformation value type and its composition algebra.
//!
//! A map sends `(p, q)` to
//!
//! ```text
//! p~ = a20 p^2 + 2 a11 p q + a02 q^2 + 2 a10 p + 2 a01 q + a00
//! q~ = b20 p^2 + 2 b11 p q + b02 q^2 + 2 b10 p + 2 b01 q + b00
//! ```
//!
//! The stored `a11, a10, a01, b11, b10, b01` are the halved symbols: the
//! factors of 2 live in evaluation, not in storage. The JSON schema mirrors
//! storage and documents the same convention.

use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::quadform::FormTriple;
use crate::rat::Rat;

/// Coefficient row of one component (`r20 p^2 + 2 r11 pq + r02 q^2 + 2 r10 p + 2 r01 q + r00`).
pub type Row = [Rat; 6];

/// A quadratic transformation of the plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadMap {
    pub a: Row,
    pub b: Row,
}

/// An invertible affine change of coordinates
/// `(p, q) -> (m11 p + m12 q + s1, m21 p + m22 q + s2)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap2 {
    pub m11: Rat,
    pub m12: Rat,
    pub m21: Rat,
    pub m22: Rat,
    pub s1: Rat,
    pub s2: Rat,
}

impl AffineMap2 {
    pub fn new(m11: Rat, m12: Rat, m21: Rat, m22: Rat, s1: Rat, s2: Rat) -> Result<Self, Error> {
        let t = AffineMap2 {
            m11,
            m12,
            m21,
            m22,
            s1,
            s2,
        };
        if t.det().is_zero() {
            return Err(Error::Precondition("affine map must be invertible".into()));
        }
        Ok(t)
    }

    pub fn linear(m11: Rat, m12: Rat, m21: Rat, m22: Rat) -> Result<Self, Error> {
        AffineMap2::new(m11, m12, m21, m22, Rat::zero(), Rat::zero())
    }

    pub fn identity() -> Self {
        AffineMap2 {
            m11: Rat::one(),
            m12: Rat::zero(),
            m21: Rat::zero(),
            m22: Rat::one(),
            s1: Rat::zero(),
            s2: Rat::zero(),
        }
    }

    /// Exchange of the two coordinates.
    pub fn swap() -> Self {
        AffineMap2 {
            m11: Rat::zero(),
            m12: Rat::one(),
            m21: Rat::one(),
            m22: Rat::zero(),
            s1: Rat::zero(),
            s2: Rat::zero(),
        }
    }

    pub fn scale(sx: Rat, sy: Rat) -> Result<Self, Error> {
        AffineMap2::linear(sx, Rat::zero(), Rat::zero(), sy)
    }

    pub fn shift(s1: Rat, s2: Rat) -> Self {
        AffineMap2 {
            m11: Rat::one(),
            m12: Rat::zero(),
            m21: Rat::zero(),
            m22: Rat::one(),
            s1,
            s2,
        }
    }

    /// Row shear `(x, y) -> (x, y - r x)`.
    pub fn shear_second_by_first(r: Rat) -> Self {
        AffineMap2 {
            m11: Rat::one(),
            m12: Rat::zero(),
            m21: -r,
            m22: Rat::one(),
            s1: Rat::zero(),
            s2: Rat::zero(),
        }
    }

    /// Row shear `(x, y) -> (x - r y, y)`.
    pub fn shear_first_by_second(r: Rat) -> Self {
        AffineMap2 {
            m11: Rat::one(),
            m12: -r,
            m21: Rat::zero(),
            m22: Rat::one(),
            s1: Rat::zero(),
            s2: Rat::zero(),
        }
    }

    pub fn det(&self) -> Rat {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn is_linear(&self) -> bool {
        self.s1.is_zero() && self.s2.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self == &AffineMap2::identity()
    }

    pub fn apply(&self, p: &Rat, q: &Rat) -> (Rat, Rat) {
        (
            &self.m11 * p + &self.m12 * q + &self.s1,
            &self.m21 * p + &self.m22 * q + &self.s2,
        )
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &AffineMap2) -> AffineMap2 {
        let (s1, s2) = self.apply(&other.s1, &other.s2);
        AffineMap2 {
            m11: &self.m11 * &other.m11 + &self.m12 * &other.m21,
            m12: &self.m11 * &other.m12 + &self.m12 * &other.m22,
            m21: &self.m21 * &other.m11 + &self.m22 * &other.m21,
            m22: &self.m21 * &other.m12 + &self.m22 * &other.m22,
            s1,
            s2,
        }
    }

    pub fn inverse(&self) -> AffineMap2 {
        let d = self.det();
        let inv = d.recip().expect("affine map is invertible");
        let m11 = &self.m22 * &inv;
        let m12 = -&self.m12 * &inv;
        let m21 = -&self.m21 * &inv;
        let m22 = &self.m11 * &inv;
        let s1 = -(&m11 * &self.s1 + &m12 * &self.s2);
        let s2 = -(&m21 * &self.s1 + &m22 * &self.s2);
        AffineMap2 {
            m11,
            m12,
            m21,
            m22,
            s1,
            s2,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "matrix": [
                [self.m11.to_string(), self.m12.to_string()],
                [self.m21.to_string(), self.m22.to_string()],
            ],
            "shift": [self.s1.to_string(), self.s2.to_string()],
        })
    }
}

fn row_eval(r: &Row, p: &Rat, q: &Rat) -> Rat {
    let two = Rat::int(2);
    &r[0] * p * p
        + &two * &r[1] * p * q
        + &r[2] * q * q
        + &two * &r[3] * p
        + &two * &r[4] * q
        + &r[5]
}

/// Substitute `p = m11 p' + m12 q' + s1, q = m21 p' + m22 q' + s2` into a row.
fn row_substitute(r: &Row, t: &AffineMap2) -> Row {
    let (m11, m12, m21, m22, s1, s2) = (&t.m11, &t.m12, &t.m21, &t.m22, &t.s1, &t.s2);
    let two = Rat::int(2);
    let r20 = &r[0] * m11 * m11 + &two * &r[1] * m11 * m21 + &r[2] * m21 * m21;
    let r11 = &r[0] * m11 * m12 + &r[1] * (m11 * m22 + m12 * m21) + &r[2] * m21 * m22;
    let r02 = &r[0] * m12 * m12 + &two * &r[1] * m12 * m22 + &r[2] * m22 * m22;
    let r10 = &r[0] * m11 * s1
        + &r[1] * (m11 * s2 + m21 * s1)
        + &r[2] * m21 * s2
        + &r[3] * m11
        + &r[4] * m21;
    let r01 = &r[0] * m12 * s1
        + &r[1] * (m12 * s2 + m22 * s1)
        + &r[2] * m22 * s2
        + &r[3] * m12
        + &r[4] * m22;
    let r00 = &r[0] * s1 * s1
        + &two * &r[1] * s1 * s2
        + &r[2] * s2 * s2
        + &two * &r[3] * s1
        + &two * &r[4] * s2
        + &r[5];
    [r20, r11, r02, r10, r01, r00]
}

impl QuadMap {
    pub fn new(a: Row, b: Row) -> Self {
        QuadMap { a, b }
    }

    pub fn from_ints(a: [i64; 6], b: [i64; 6]) -> Self {
        QuadMap {
            a: a.map(Rat::int),
            b: b.map(Rat::int),
        }
    }

    /// The invertible canonical shear `p~ = p + q^2, q~ = q`.
    pub fn shear() -> Self {
        let mut a = [0i64; 6].map(Rat::int);
        a[2] = Rat::one(); // q^2
        a[3] = Rat::frac(1, 2); // 2*a10 = 1
        let mut b = [0i64; 6].map(Rat::int);
        b[4] = Rat::frac(1, 2); // 2*b01 = 1
        QuadMap { a, b }
    }

    /// Pre-canonical indefinite representative `p~ = p^2 + q, q~ = q^2 + p`.
    pub fn canonical_indefinite() -> Self {
        let mut a = [0i64; 6].map(Rat::int);
        a[0] = Rat::one();
        a[4] = Rat::frac(1, 2);
        let mut b = [0i64; 6].map(Rat::int);
        b[2] = Rat::one();
        b[3] = Rat::frac(1, 2);
        QuadMap { a, b }
    }

    /// Pre-canonical semi-definite representative
    /// `p~ = p q + 2 a10 p, q~ = q^2 + p`.
    pub fn canonical_semidefinite(a10: Rat) -> Self {
        let mut a = [0i64; 6].map(Rat::int);
        a[1] = Rat::frac(1, 2);
        a[3] = a10;
        let mut b = [0i64; 6].map(Rat::int);
        b[2] = Rat::one();
        b[3] = Rat::frac(1, 2);
        QuadMap { a, b }
    }

    /// Pre-canonical definite representative
    /// `p~ = p^2 - q^2 + 2 a10 p + 2 a01 q, q~ = p q`.
    pub fn canonical_definite(a10: Rat, a01: Rat) -> Self {
        let mut a = [0i64; 6].map(Rat::int);
        a[0] = Rat::one();
        a[2] = Rat::int(-1);
        a[3] = a10;
        a[4] = a01;
        let mut b = [0i64; 6].map(Rat::int);
        b[1] = Rat::frac(1, 2);
        QuadMap { a, b }
    }

    /// Exact evaluation with the factor-2 convention.
    pub fn eval(&self, p: &Rat, q: &Rat) -> (Rat, Rat) {
        (row_eval(&self.a, p, q), row_eval(&self.b, p, q))
    }

    pub fn quadratic_part_is_zero(&self) -> bool {
        self.a[..3].iter().chain(self.b[..3].iter()).all(Rat::is_zero)
    }

    pub fn linear_part_is_zero(&self) -> bool {
        self.a[3..5].iter().chain(self.b[3..5].iter()).all(Rat::is_zero)
    }

    /// `self ∘ t`: change of source coordinates.
    pub fn compose_source(&self, t: &AffineMap2) -> QuadMap {
        QuadMap {
            a: row_substitute(&self.a, t),
            b: row_substitute(&self.b, t),
        }
    }

    /// `t ∘ self`: change of target coordinates.
    pub fn compose_target(&self, t: &AffineMap2) -> QuadMap {
        let comb = |c1: &Rat, c2: &Rat, shift: &Rat| -> Row {
            let mut row: Row = std::array::from_fn(|k| c1 * &self.a[k] + c2 * &self.b[k]);
            row[5] = row[5].clone() + shift;
            row
        };
        QuadMap {
            a: comb(&t.m11, &t.m12, &t.s1),
            b: comb(&t.m21, &t.m22, &t.s2),
        }
    }

    /// The half-minor triple of the quadratic parts:
    /// `2 alpha = a20 b11 - a11 b20`, `2 beta = a20 b02 - a02 b20`,
    /// `2 gamma = a11 b02 - a02 b11`.
    pub fn associated_form(&self) -> FormTriple {
        let half = Rat::frac(1, 2);
        let alpha = (&self.a[0] * &self.b[1] - &self.a[1] * &self.b[0]) * &half;
        let beta = (&self.a[0] * &self.b[2] - &self.a[2] * &self.b[0]) * &half;
        let gamma = (&self.a[1] * &self.b[2] - &self.a[2] * &self.b[1]) * &half;
        FormTriple::new(alpha, beta, gamma)
    }

    /// Swap the roles of the source variables in both rows (conjugation by
    /// the source swap; used to re-run eliminations in the other direction).
    pub fn swap_source_vars(&self) -> QuadMap {
        let sw = |r: &Row| -> Row {
            [
                r[2].clone(),
                r[1].clone(),
                r[0].clone(),
                r[4].clone(),
                r[3].clone(),
                r[5].clone(),
            ]
        };
        QuadMap {
            a: sw(&self.a),
            b: sw(&self.b),
        }
    }

    /// Render one component as a polynomial string in `p` and `q`.
    fn row_string(r: &Row) -> String {
        let two = Rat::int(2);
        let terms: [(Rat, &str); 6] = [
            (r[0].clone(), "p^2"),
            (&two * &r[1], "p*q"),
            (r[2].clone(), "q^2"),
            (&two * &r[3], "p"),
            (&two * &r[4], "q"),
            (r[5].clone(), ""),
        ];
        let mut out = String::new();
        for (c, sym) in terms {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if sym.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(sym);
            } else {
                out.push_str(&format!("{mag}*{sym}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn display_rows(&self) -> (String, String) {
        (Self::row_string(&self.a), Self::row_string(&self.b))
    }

    pub fn to_json(&self) -> Value {
        let row = |r: &Row| {
            json!({
                "20": r[0].to_string(),
                "11": r[1].to_string(),
                "02": r[2].to_string(),
                "10": r[3].to_string(),
                "01": r[4].to_string(),
                "00": r[5].to_string(),
            })
        };
        json!({ "a": row(&self.a), "b": row(&self.b) })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let parse_row = |side: &str| -> Result<Row, Error> {
            let obj = v
                .get(side)
                .and_then(Value::as_object)
                .ok_or_else(|| Error::MalformedInput(format!("missing object field {side:?}")))?;
            let mut row: Row = std::array::from_fn(|_| Rat::zero());
            for (idx, key) in ["20", "11", "02", "10", "01", "00"].iter().enumerate() {
                match obj.get(*key) {
                    None => {} // omitted coefficients default to zero
                    Some(Value::String(s)) => {
                        row[idx] = s.parse().map_err(|e: Error| {
                            Error::MalformedInput(format!("{side}.{key}: {e}"))
                        })?;
                    }
                    Some(Value::Number(n)) if n.is_i64() => {
                        row[idx] = Rat::int(n.as_i64().unwrap());
                    }
                    Some(other) => {
                        return Err(Error::MalformedInput(format!(
                            "{side}.{key}: expected rational string, got {other}"
                        )));
                    }
                }
            }
            for key in obj.keys() {
                if !["20", "11", "02", "10", "01", "00"].contains(&key.as_str()) {
                    return Err(Error::MalformedInput(format!(
                        "unknown coefficient key {side}.{key}"
                    )));
                }
            }
            Ok(row)
        };
        Ok(QuadMap {
            a: parse_row("a")?,
            b: parse_row("b")?,
        })
    }
}

impl fmt::Display for QuadMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.display_rows();
        write!(f, "p~ = {a}; q~ = {b}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::FormClassTag;

    #[test]
    fn eval_examples() {
        // shear at (2, 3) -> (11, 3)
        assert_eq!(
            QuadMap::shear().eval(&Rat::int(2), &Rat::int(3)),
            (Rat::int(11), Rat::int(3))
        );
        // indefinite representative at (1, 1) -> (2, 2)
        assert_eq!(
            QuadMap::canonical_indefinite().eval(&Rat::one(), &Rat::one()),
            (Rat::int(2), Rat::int(2))
        );
        // zero map
        let z = QuadMap::from_ints([0; 6], [0; 6]);
        assert_eq!(z.eval(&Rat::int(5), &Rat::int(-7)), (Rat::zero(), Rat::zero()));
    }

    #[test]
    fn compose_source_identity_and_swap() {
        let m = QuadMap::shear();
        assert_eq!(m.compose_source(&AffineMap2::identity()), m);
        // shear precomposed with the swap: p~ = q + p^2, q~ = p
        let s = m.compose_source(&AffineMap2::swap());
        assert_eq!(
            s.eval(&Rat::int(2), &Rat::int(3)),
            (Rat::int(3) + Rat::int(4), Rat::int(2))
        );
    }

    #[test]
    fn compose_pointwise_agreement() {
        let m = QuadMap::from_ints([1, 2, -1, 0, 3, 5], [0, 1, 1, -2, 0, 7]);
        let t = AffineMap2::new(
            Rat::int(2),
            Rat::int(1),
            Rat::int(1),
            Rat::int(1),
            Rat::frac(1, 2),
            Rat::int(-3),
        )
        .unwrap();
        let src = m.compose_source(&t);
        let tgt = m.compose_target(&t);
        for (p, q) in [(0, 0), (1, 2), (-3, 5), (7, -11)] {
            let (p, q) = (Rat::int(p), Rat::frac(q, 3));
            let (tp, tq) = t.apply(&p, &q);
            assert_eq!(src.eval(&p, &q), m.eval(&tp, &tq));
            let (mp, mq) = m.eval(&p, &q);
            assert_eq!(tgt.eval(&p, &q), t.apply(&mp, &mq));
        }
    }

    #[test]
    fn target_shear_kills_cross_term() {
        // map with a11 != 0, b11 != 0: composing with the (2.3)-style shear
        // q^ = q~ - (b11/a11) p~ zeroes the new b11
        let m = QuadMap::new(
            [
                Rat::int(1),
                Rat::int(2),
                Rat::int(3),
                Rat::zero(),
                Rat::zero(),
                Rat::zero(),
            ],
            [
                Rat::int(4),
                Rat::int(3),
                Rat::int(1),
                Rat::zero(),
                Rat::zero(),
                Rat::zero(),
            ],
        );
        let r = m.b[1].checked_div(&m.a[1]).unwrap();
        let sheared = m.compose_target(&AffineMap2::shear_second_by_first(r));
        assert!(sheared.b[1].is_zero());
        assert_eq!(sheared.a, m.a);
    }

    #[test]
    fn associated_form_of_canonical_maps() {
        // shear: all minors zero
        assert!(QuadMap::shear().associated_form().is_zero());
        // indefinite representative: (0, 1/2, 0)
        let t = QuadMap::canonical_indefinite().associated_form();
        assert_eq!(
            (t.alpha.clone(), t.beta.clone(), t.gamma.clone()),
            (Rat::zero(), Rat::frac(1, 2), Rat::zero())
        );
        assert_eq!(t.classify().tag, FormClassTag::Indefinite);
        // semi-definite representative
        let t = QuadMap::canonical_semidefinite(Rat::zero()).associated_form();
        assert_eq!(t.classify().tag, FormClassTag::SemiDefinite);
        assert!(t.alpha.is_zero() && t.beta.is_zero() && !t.gamma.is_zero());
        // definite representative
        let t = QuadMap::canonical_definite(Rat::zero(), Rat::zero()).associated_form();
        assert_eq!(t.classify().tag, FormClassTag::Definite);
        assert!(t.det_omega1().is_positive());
    }

    #[test]
    fn affine_inverse_round_trip() {
        let t = AffineMap2::new(
            Rat::int(3),
            Rat::int(1),
            Rat::int(5),
            Rat::int(2),
            Rat::frac(-7, 2),
            Rat::int(4),
        )
        .unwrap();
        let inv = t.inverse();
        assert!(t.compose(&inv).is_identity());
        assert!(inv.compose(&t).is_identity());
        let (p, q) = (Rat::frac(22, 7), Rat::int(-9));
        let (x, y) = t.apply(&p, &q);
        assert_eq!(inv.apply(&x, &y), (p, q));
    }

    #[test]
    fn json_round_trip() {
        let m = QuadMap::new(
            [
                Rat::frac(1, 2),
                Rat::int(0),
                Rat::int(-3),
                Rat::frac(-7, 3),
                Rat::int(1),
                Rat::zero(),
            ],
            [
                Rat::zero(),
                Rat::frac(1, 2),
                Rat::zero(),
                Rat::zero(),
                Rat::zero(),
                Rat::int(9),
            ],
        );
        let v = m.to_json();
        assert_eq!(QuadMap::from_json(&v).unwrap(), m);
        // malformed: denominator zero
        let bad = json!({"a": {"20": "1/0"}, "b": {}});
        assert!(QuadMap::from_json(&bad).is_err());
        // malformed: unknown key
        let bad = json!({"a": {"21": "1"}, "b": {}});
        assert!(QuadMap::from_json(&bad).is_err());
    }
}
