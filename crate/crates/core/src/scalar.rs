//! Exact scalars: rationals, and elements of a real quadratic field `Q(√d)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_to_f64(x: &Q) -> f64 {
    ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

/// Coefficient field for forms and matrices. Everything here is exact; `signum` is
/// exact too, which is what the Sylvester tests rely on.
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_q(x: &Q) -> Self;
    fn signum_exact(&self) -> i32;
    fn to_f64(&self) -> f64;
    fn to_text(&self) -> String;
    fn from_text(s: &str) -> Result<Self>;
    /// Rational value, if the element happens to be rational.
    fn as_q(&self) -> Option<Q>;
}

impl Field for Q {
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn signum_exact(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
    fn to_f64(&self) -> f64 {
        q_to_f64(self)
    }
    fn to_text(&self) -> String {
        fmt_q(self)
    }
    fn from_text(s: &str) -> Result<Self> {
        parse_q(s)
    }
    fn as_q(&self) -> Option<Q> {
        Some(self.clone())
    }
}

/// `a + b√d` with `d` a positive non-square integer. `d == 0` marks a value that is
/// known to be rational (`b == 0`) and can mix with any field.
#[derive(Clone, Debug)]
pub struct QuadQ {
    pub a: Q,
    pub b: Q,
    pub d: u64,
}

impl QuadQ {
    pub fn new(a: Q, b: Q, d: u64) -> Self {
        let mut x = QuadQ { a, b, d };
        x.norm();
        x
    }
    pub fn rational(a: Q) -> Self {
        QuadQ { a, b: Q::zero(), d: 0 }
    }
    /// `√d` itself.
    pub fn sqrt(d: u64) -> Self {
        QuadQ::new(Q::zero(), Q::one(), d)
    }
    fn norm(&mut self) {
        if self.b.is_zero() {
            self.d = 0;
        }
    }
    fn field(&self, o: &QuadQ) -> u64 {
        match (self.d, o.d) {
            (0, d) | (d, 0) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("mixing Q(√{x}) with Q(√{y})"),
        }
    }
    pub fn conj(&self) -> Self {
        QuadQ { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }
}

impl PartialEq for QuadQ {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_zero() || self.d == o.d)
    }
}

impl Zero for QuadQ {
    fn zero() -> Self {
        QuadQ::rational(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadQ {
    fn one() -> Self {
        QuadQ::rational(Q::one())
    }
}

impl Add for QuadQ {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let d = self.field(&o);
        QuadQ::new(self.a + o.a, self.b + o.b, d)
    }
}

impl Sub for QuadQ {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let d = self.field(&o);
        QuadQ::new(self.a - o.a, self.b - o.b, d)
    }
}

impl Neg for QuadQ {
    type Output = Self;
    fn neg(self) -> Self {
        QuadQ { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Mul for QuadQ {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = self.field(&o);
        let dq = Q::from_integer(BigInt::from(d));
        let a = &self.a * &o.a + &self.b * &o.b * dq;
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadQ::new(a, b, d)
    }
}

impl Div for QuadQ {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        let dq = Q::from_integer(BigInt::from(o.d));
        let n = &o.a * &o.a - &o.b * &o.b * dq;
        let c = o.conj();
        let p = self * c;
        QuadQ::new(p.a / &n, p.b / &n, p.d)
    }
}

impl Field for QuadQ {
    fn from_q(x: &Q) -> Self {
        QuadQ::rational(x.clone())
    }
    fn signum_exact(&self) -> i32 {
        let sa = self.a.signum_exact();
        let sb = self.b.signum_exact();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let dq = Q::from_integer(BigInt::from(self.d));
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * dq;
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }
    fn to_f64(&self) -> f64 {
        q_to_f64(&self.a) + q_to_f64(&self.b) * (self.d as f64).sqrt()
    }
    fn to_text(&self) -> String {
        if self.b.is_zero() {
            fmt_q(&self.a)
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            format!("{}{sign}{}*sqrt({})", fmt_q(&self.a), fmt_q(&self.b.abs()), self.d)
        }
    }
    /// Accepts `p/q` or `p/q+r/s*sqrt(d)`.
    fn from_text(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(idx) = s.find("*sqrt(") else {
            return Ok(QuadQ::rational(parse_q(&s)?));
        };
        let bad = || Error::Parse(format!("bad quadratic scalar `{s}`"));
        let head = &s[..idx];
        let d: u64 = s[idx + 6..].strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        // split head into a and signed b at the last top-level +/- that is not leading
        let cut = head
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-') && !head[..i].ends_with('/'))
            .map(|(i, _)| i)
            .ok_or_else(bad)?;
        let a = parse_q(&head[..cut])?;
        let b = parse_q(head[cut..].trim_start_matches('+'))?;
        Ok(QuadQ::new(a, b, d))
    }
    fn as_q(&self) -> Option<Q> {
        self.b.is_zero().then(|| self.a.clone())
    }
}

impl fmt::Display for QuadQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_arith() {
        let s5 = QuadQ::sqrt(5);
        let x = s5.clone() * s5.clone();
        assert_eq!(x, QuadQ::rational(q(5)));
        let y = QuadQ::new(q(1), q(1), 5);
        let inv = QuadQ::one() / y.clone();
        assert_eq!(inv * y, QuadQ::one());
    }

    #[test]
    fn quad_sign() {
        assert_eq!(QuadQ::new(q(2), q(-1), 5).signum_exact(), -1);
        assert_eq!(QuadQ::new(q(3), q(-1), 5).signum_exact(), 1);
        assert_eq!(QuadQ::new(q(-3), q(1), 10).signum_exact(), 1);
        assert_eq!(QuadQ::new(q(-4), q(1), 10).signum_exact(), -1);
        assert_eq!(QuadQ::new(q(-3), q(1), 10).to_f64().signum(), 1.0);
    }

    #[test]
    fn text_roundtrip() {
        for v in [QuadQ::new(qf(-4, 3), qf(2, 5), 5), QuadQ::rational(qf(7, 2)), QuadQ::new(q(0), q(-1), 10)] {
            assert_eq!(QuadQ::from_text(&v.to_text()).unwrap(), v);
        }
        assert_eq!(parse_q(" -3/6 ").unwrap(), qf(-1, 2));
        assert!(parse_q("1/0").is_err());
    }
}
