//! Extended-Euclid certificates for the greatest common divisor.
//!
//! `g` divides both inputs and `g = s·a + t·b`; then every common divisor of
//! `a` and `b` divides `g`, so `g` is the greatest one.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::verdict::{CheckError, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdTriple {
    pub a: BigInt,
    pub b: BigInt,
    pub g: BigInt,
    pub s: BigInt,
    pub t: BigInt,
}

impl GcdTriple {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        g: impl Into<BigInt>,
        s: impl Into<BigInt>,
        t: impl Into<BigInt>,
    ) -> Self {
        GcdTriple {
            a: a.into(),
            b: b.into(),
            g: g.into(),
            s: s.into(),
            t: t.into(),
        }
    }
}

/// `d | x` on the integers; zero divides only zero.
pub fn divides(d: &BigInt, x: &BigInt) -> bool {
    if d.is_zero() {
        x.is_zero()
    } else {
        (x % d).is_zero()
    }
}

pub fn check_gcd(t: &GcdTriple) -> Result<Verdict, CheckError> {
    if t.a.is_negative() || t.b.is_negative() {
        return Err(CheckError::PreconditionViolated(format!(
            "inputs must be nonnegative, got a = {}, b = {}",
            t.a, t.b
        )));
    }
    if t.a.is_zero() && t.b.is_zero() {
        return Err(CheckError::PreconditionViolated("a and b are both zero".into()));
    }
    if t.g.is_negative() {
        return Ok(Verdict::reject("nonneg", format!("g = {} is negative", t.g)));
    }
    if !divides(&t.g, &t.a) {
        return Ok(Verdict::reject("divides_a", format!("{} does not divide {}", t.g, t.a)));
    }
    if !divides(&t.g, &t.b) {
        return Ok(Verdict::reject("divides_b", format!("{} does not divide {}", t.g, t.b)));
    }
    let combo = &t.s * &t.a + &t.t * &t.b;
    if combo != t.g {
        return Ok(Verdict::reject(
            "bezout",
            format!("{}·{} + {}·{} = {combo}, not {}", t.s, t.a, t.t, t.b, t.g),
        ));
    }
    Ok(Verdict::Accept)
}
