//! Exact rational helpers shared by every module.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(n: BigInt) -> Q {
    Q::from_integer(n)
}

/// Parses `"3"`, `"-5/2"` and the typographic minus `"−5/2"`.
pub fn parse_rational(text: &str) -> Result<Q> {
    let t = text.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.as_str(), "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.len() <= 4096 && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Q::new(n, d))
}

/// `p/q`, or just `p` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

/// Integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Writes `n = s^2 * f` with `f` squarefree and returns `(s, f)`; `n > 0`.
///
/// Trial division runs up to the cube root of what is left. Past that point
/// the cofactor has at most two prime factors, so it is either squarefree or
/// a perfect square.
pub fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "square_part needs a positive integer");
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        outside *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    match exact_sqrt(&rest) {
        Some(r) => outside *= r,
        None => free *= rest,
    }
    (outside, free)
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn sign_of(x: &Q) -> Sign {
    x.numer().sign()
}
