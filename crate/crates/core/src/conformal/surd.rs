//! Exact quadratic surds `(a + b sqrt(d)) / c`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{fmt_q, parse_rational, square_part, Q};

/// `(a + b sqrt(d)) / c` with `d` squarefree, `c > 0`, `gcd(a, b, c) = 1`.
/// Rationals have `b = 0` and `d = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelSolution {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl LevelSolution {
    pub fn rational(x: &Q) -> Self {
        LevelSolution {
            a: x.numer().clone(),
            b: BigInt::zero(),
            c: x.denom().clone(),
            d: BigInt::zero(),
        }
    }

    /// `x + y sqrt(n)` for any integer `n >= 0`, normalised.
    pub fn from_parts(x: &Q, y: &Q, n: &BigInt) -> Result<Self> {
        if n.is_negative() {
            return Err(Error::Invalid(format!("sqrt of negative {n}")));
        }
        if y.is_zero() || n.is_zero() {
            return Ok(LevelSolution::rational(x));
        }
        let (s, f) = square_part(n);
        let y = y * Q::from_integer(s);
        if f.is_one() {
            return Ok(LevelSolution::rational(&(x + y)));
        }
        let c = x.denom().lcm(y.denom());
        let mut a = x.numer() * (&c / x.denom());
        let mut b = y.numer() * (&c / y.denom());
        let mut c = c;
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        Ok(LevelSolution { a, b, c, d: f })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() || self.d.is_zero()
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.is_rational()
            .then(|| Q::new(self.a.clone(), self.c.clone()))
    }

    /// The value as an element of `Q(sqrt(d))`.
    pub fn to_field(&self) -> QSqrt {
        let d = if self.is_rational() {
            BigInt::zero()
        } else {
            self.d.clone()
        };
        QSqrt {
            x: Q::new(self.a.clone(), self.c.clone()),
            y: Q::new(self.b.clone(), self.c.clone()),
            d,
        }
    }

    /// Sign of the value: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        self.to_field().signum()
    }
}

impl From<Q> for LevelSolution {
    fn from(x: Q) -> Self {
        LevelSolution::rational(&x)
    }
}

impl PartialOrd for LevelSolution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LevelSolution {
    /// Numeric order where the radicands agree or one side is rational;
    /// otherwise falls back to comparing the radicands.
    fn cmp(&self, other: &Self) -> Ordering {
        let (x, y) = (self.to_field(), other.to_field());
        if x.d == y.d || x.y.is_zero() || y.y.is_zero() {
            let d = if x.y.is_zero() {
                y.d.clone()
            } else {
                x.d.clone()
            };
            let diff = QSqrt {
                x: x.x - y.x,
                y: x.y - y.y,
                d,
            };
            diff.signum().cmp(&0)
        } else {
            x.d.cmp(&y.d)
                .then_with(|| x.x.cmp(&y.x))
                .then_with(|| x.y.cmp(&y.y))
        }
    }
}

impl fmt::Display for LevelSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return f.write_str(&fmt_q(&r));
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let mag = self.b.abs();
        let coeff = if mag.is_one() {
            String::new()
        } else {
            format!("{mag}*")
        };
        let surd = format!("{coeff}sqrt({})", self.d);
        let body = if self.a.is_zero() {
            if sign == '-' {
                format!("-{surd}")
            } else {
                surd
            }
        } else {
            format!("{}{sign}{surd}", self.a)
        };
        if self.c.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.c)
        }
    }
}

impl FromStr for LevelSolution {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) forms: `p/q`, `(a+b*sqrt(d))/c`,
    /// `a-sqrt(d)`, `b*sqrt(d)/c`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('\u{2212}', "-");
        if !t.contains("sqrt(") {
            return Ok(LevelSolution::rational(&parse_rational(&t)?));
        }
        let bad = || Error::Parse(format!("not a surd: {s:?}"));
        let (body, den) = match (t.strip_prefix('('), t.rfind(")/")) {
            (Some(_), Some(pos)) => (t[1..pos].to_string(), t[pos + 2..].to_string()),
            _ => (t.clone(), "1".to_string()),
        };
        let c = parse_rational(&den)?;
        if c.is_zero() {
            return Err(bad());
        }
        let at = body.find("sqrt(").ok_or_else(bad)?;
        let close = body[at..].find(')').ok_or_else(bad)? + at;
        let digits = &body[at + 5..close];
        // squarefree reduction is trial division; keep radicands modest
        if digits.is_empty() || digits.len() > 15 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let radicand: BigInt = digits.parse().map_err(|_| bad())?;
        if !body[close + 1..].is_empty() {
            return Err(bad());
        }
        let head = &body[..at];
        let (a_text, b_text) = match head.rfind(['+', '-']) {
            Some(0) | None => ("0", head),
            Some(i) => (&head[..i], &head[i..]),
        };
        let a = parse_rational(a_text)?;
        let b_text = b_text.strip_suffix('*').unwrap_or(b_text);
        let b = match b_text {
            "" | "+" => Q::one(),
            "-" => -Q::one(),
            other => parse_rational(other)?,
        };
        LevelSolution::from_parts(&(a / &c), &(b / &c), &radicand)
    }
}

/// Element `x + y sqrt(d)` of a real quadratic field (`d = 0` for `Q`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSqrt {
    pub x: Q,
    pub y: Q,
    pub d: BigInt,
}

impl QSqrt {
    pub fn from_q(x: Q, d: &BigInt) -> Self {
        QSqrt {
            x,
            y: Q::zero(),
            d: d.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && (self.y.is_zero() || self.d.is_zero())
    }

    pub fn signum(&self) -> i32 {
        let sx = sign(&self.x);
        let sy = if self.d.is_zero() { 0 } else { sign(&self.y) };
        if sx == 0 || sy == 0 || sx == sy {
            return if sx != 0 { sx } else { sy };
        }
        // opposite signs: compare x^2 with y^2 d
        let lhs = &self.x * &self.x;
        let rhs = &self.y * &self.y * Q::from_integer(self.d.clone());
        match lhs.cmp(&rhs) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => 0,
        }
    }

    fn radicand(&self, other: &QSqrt) -> BigInt {
        if self.d.is_zero() {
            other.d.clone()
        } else {
            debug_assert!(other.d.is_zero() || other.d == self.d);
            self.d.clone()
        }
    }

    pub fn inv(&self) -> Result<QSqrt> {
        let d = Q::from_integer(self.d.clone());
        let norm = &self.x * &self.x - &self.y * &self.y * d;
        if norm.is_zero() {
            return Err(Error::Invalid("division by zero in Q(sqrt d)".into()));
        }
        Ok(QSqrt {
            x: &self.x / &norm,
            y: -&self.y / &norm,
            d: self.d.clone(),
        })
    }
}

fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for &QSqrt {
    type Output = QSqrt;
    fn add(self, o: &QSqrt) -> QSqrt {
        QSqrt {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
            d: self.radicand(o),
        }
    }
}

impl Sub for &QSqrt {
    type Output = QSqrt;
    fn sub(self, o: &QSqrt) -> QSqrt {
        QSqrt {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
            d: self.radicand(o),
        }
    }
}

impl Mul for &QSqrt {
    type Output = QSqrt;
    fn mul(self, o: &QSqrt) -> QSqrt {
        let d = self.radicand(o);
        let dq = Q::from_integer(d.clone());
        QSqrt {
            x: &self.x * &o.x + &self.y * &o.y * dq,
            y: &self.x * &o.y + &self.y * &o.x,
            d,
        }
    }
}

impl Neg for &QSqrt {
    type Output = QSqrt;
    fn neg(self) -> QSqrt {
        QSqrt {
            x: -&self.x,
            y: -&self.y,
            d: self.d.clone(),
        }
    }
}
