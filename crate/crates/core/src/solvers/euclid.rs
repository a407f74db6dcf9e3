use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{SolverError, SolverResult};
use crate::gcd::GcdTriple;

/// Extended Euclid: `g = gcd(a, b)` with Bézout coefficients `(s, t)` as the
/// witness.
pub fn solve_gcd(a: &BigInt, b: &BigInt) -> Result<SolverResult<BigInt, (BigInt, BigInt)>, SolverError> {
    if a.is_negative() || b.is_negative() || (a.is_zero() && b.is_zero()) {
        return Err(SolverError::PreconditionViolated(format!(
            "need a, b >= 0 and a + b > 0, got a = {a}, b = {b}"
        )));
    }
    // invariant: r0 = s0·a + t0·b and r1 = s1·a + t1·b
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    Ok(SolverResult {
        output: r0,
        witness: (s0, t0),
    })
}

impl GcdTriple {
    pub fn from_solution(a: &BigInt, b: &BigInt, r: SolverResult<BigInt, (BigInt, BigInt)>) -> Self {
        GcdTriple {
            a: a.clone(),
            b: b.clone(),
            g: r.output,
            s: r.witness.0,
            t: r.witness.1,
        }
    }
}
