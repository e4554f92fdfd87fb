//! Truncated series in `q^{1/D}` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{fmt_q, frac, q, Q};

/// Default exponent denominator.
pub const DENOM: i64 = 8;

/// `sum_n c_n q^{n / denom}`, known for all `n < order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxSeries {
    denom: i64,
    coeffs: BTreeMap<i64, Q>,
    order: i64,
}

fn ceil_div(a: &Q) -> i64 {
    let c = a.ceil().to_integer();
    i64::try_from(c).expect("exponent fits in i64")
}

impl PuiseuxSeries {
    /// Zero, known below `q^{order / denom}`.
    pub fn zero(denom: i64, order: i64) -> Self {
        assert!(denom > 0, "exponent denominator must be positive");
        PuiseuxSeries {
            denom,
            coeffs: BTreeMap::new(),
            order,
        }
    }

    /// `1 + O(q^{order / denom})`.
    pub fn one(denom: i64, order: i64) -> Self {
        Self::monomial(denom, 0, Q::one(), order)
    }

    /// `c q^{num / denom}`.
    pub fn monomial(denom: i64, num: i64, c: Q, order: i64) -> Self {
        let mut s = Self::zero(denom, order);
        s.set(num, c);
        s
    }

    /// Builds from `(numerator, coefficient)` pairs; pairs at or above
    /// `order` are dropped and repeated numerators add up.
    pub fn from_terms(denom: i64, order: i64, terms: impl IntoIterator<Item = (i64, Q)>) -> Self {
        let mut s = Self::zero(denom, order);
        for (n, c) in terms {
            let cur = s.coeff(n);
            s.set(n, cur + c);
        }
        s
    }

    fn set(&mut self, num: i64, c: Q) {
        if num >= self.order || c.is_zero() {
            self.coeffs.remove(&num);
        } else {
            self.coeffs.insert(num, c);
        }
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Exclusive bound on known exponent numerators.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// The truncation point as an exponent.
    pub fn order_exponent(&self) -> Q {
        frac(self.order, self.denom)
    }

    /// Coefficient of `q^{num / denom}`.
    pub fn coeff(&self, num: i64) -> Q {
        self.coeffs.get(&num).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of `q^e`; zero when `e` is not on the grid.
    pub fn coeff_at(&self, e: &Q) -> Q {
        let n = e * q(self.denom);
        if !n.is_integer() {
            return Q::zero();
        }
        i64::try_from(n.to_integer()).map_or_else(|_| Q::zero(), |n| self.coeff(n))
    }

    /// `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Q, &Q)> + '_ {
        self.coeffs.iter().map(|(n, c)| (frac(*n, self.denom), c))
    }

    pub fn raw_terms(&self) -> impl Iterator<Item = (i64, &Q)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest numerator with a non-zero coefficient, or the order when
    /// nothing below it is non-zero.
    pub fn valuation(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.order)
    }

    /// Re-expresses over denominator `denom`, a multiple of the current one.
    pub fn with_denom(&self, denom: i64) -> Self {
        assert!(
            denom % self.denom == 0,
            "new denominator must be a multiple"
        );
        let f = denom / self.denom;
        PuiseuxSeries {
            denom,
            coeffs: self
                .coeffs
                .iter()
                .map(|(n, c)| (n * f, c.clone()))
                .collect(),
            order: self.order * f,
        }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let d = a.denom.lcm(&b.denom);
        (a.with_denom(d), b.with_denom(d))
    }

    /// Drops everything at or above `order`, which may only decrease.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        PuiseuxSeries {
            denom: self.denom,
            coeffs: self
                .coeffs
                .range(..order)
                .map(|(n, c)| (*n, c.clone()))
                .collect(),
            order,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::aligned(self, other);
        let mut out = a.truncate(b.order);
        for (n, c) in b.coeffs.range(..out.order) {
            let cur = out.coeff(*n);
            out.set(*n, cur + c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.denom, self.order);
        for (n, x) in &self.coeffs {
            out.set(*n, x * c);
        }
        out
    }

    /// Multiplies by `q^{num / denom}`; the order moves with it.
    pub fn shift(&self, num: i64) -> Self {
        PuiseuxSeries {
            denom: self.denom,
            coeffs: self
                .coeffs
                .iter()
                .map(|(n, c)| (n + num, c.clone()))
                .collect(),
            order: self.order + num,
        }
    }

    /// Multiplies by `q^e`, raising the denominator if needed.
    pub fn shift_by(&self, e: &Q) -> Self {
        let d = self
            .denom
            .lcm(&i64::try_from(e.denom().clone()).expect("small denominator"));
        let s = self.with_denom(d);
        let n = (e * q(d)).to_integer();
        s.shift(i64::try_from(n).expect("small exponent"))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::aligned(self, other);
        // A = q^va (...) known below oa: the product is known below
        // min(oa + vb, ob + va)
        let order = (a.order + b.valuation()).min(b.order + a.valuation());
        let mut acc: BTreeMap<i64, Q> = BTreeMap::new();
        for (i, x) in &a.coeffs {
            if i + b.valuation() >= order {
                break;
            }
            for (j, y) in &b.coeffs {
                let n = i + j;
                if n >= order {
                    break;
                }
                *acc.entry(n).or_insert_with(Q::zero) += x * y;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        PuiseuxSeries {
            denom: a.denom,
            coeffs: acc,
            order,
        }
    }

    /// Multiplicative inverse; the lowest known coefficient must be non-zero.
    pub fn inv(&self) -> Result<Self> {
        let Some((&v, c0)) = self.coeffs.iter().next() else {
            return Err(Error::Series(
                "cannot invert a series with no known terms".into(),
            ));
        };
        // self = c0 q^v (1 + u), u known below order - v
        let rel = self.order - v;
        let c0_inv = c0.recip();
        let unit: Vec<(i64, Q)> = self
            .coeffs
            .iter()
            .skip(1)
            .map(|(n, c)| (n - v, c * &c0_inv))
            .collect();
        // b_0 = 1, b_n = -sum_{k >= 1} u_k b_{n-k}
        let mut b: BTreeMap<i64, Q> = BTreeMap::new();
        b.insert(0, Q::one());
        let mut n_vals: Vec<i64> = Vec::new();
        // exponents of the inverse lie in the additive monoid generated by
        // the exponents of u; walk all grid points below rel
        let step = unit.iter().map(|(n, _)| *n).fold(0i64, |g, n| g.gcd(&n));
        if step > 0 {
            let mut n = step;
            while n < rel {
                n_vals.push(n);
                n += step;
            }
        }
        for n in n_vals {
            let mut s = Q::zero();
            for (k, u) in &unit {
                if *k > n {
                    break;
                }
                if let Some(bv) = b.get(&(n - k)) {
                    s -= u * bv;
                }
            }
            if !s.is_zero() {
                b.insert(n, s);
            }
        }
        let mut out = Self::zero(self.denom, rel - v);
        for (n, c) in b {
            out.set(n - v, c * &c0_inv);
        }
        Ok(out)
    }

    /// Integer power; negative exponents go through [`Self::inv`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.denom, i64::MAX / 4);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        if acc.order == i64::MAX / 4 {
            // e = 0: as precise as the input, relative to its valuation
            acc.order = (self.order - self.valuation()).max(1);
        }
        Ok(acc)
    }

    /// `q -> q^{a/b}` for `a/b > 0`; raises the denominator when the new
    /// exponents leave the grid.
    pub fn substitute(&self, a: i64, b: i64) -> Result<Self> {
        if a <= 0 || b <= 0 {
            return Err(Error::Series(format!(
                "substitution q -> q^({a}/{b}) needs a positive exponent"
            )));
        }
        let r = frac(a, b);
        let mut d = self.denom;
        for n in self.coeffs.keys() {
            let e = frac(*n, self.denom) * &r;
            d = d.lcm(&i64::try_from(e.denom().clone()).expect("small denominator"));
        }
        let mut out = Self::zero(d, ceil_div(&(frac(self.order, self.denom) * &r * q(d))));
        for (n, c) in &self.coeffs {
            let e = frac(*n, self.denom) * &r * q(d);
            out.set(
                i64::try_from(e.to_integer()).expect("small exponent"),
                c.clone(),
            );
        }
        Ok(out)
    }

    /// First exponent below both orders where the coefficients differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<Q> {
        let (a, b) = Self::aligned(self, other);
        let order = a.order.min(b.order);
        let keys: std::collections::BTreeSet<i64> = a
            .coeffs
            .range(..order)
            .chain(b.coeffs.range(..order))
            .map(|(n, _)| *n)
            .collect();
        keys.into_iter()
            .find(|n| a.coeff(*n) != b.coeff(*n))
            .map(|n| frac(n, a.denom))
    }

    /// Every stored exponent numerator is below the order and every stored
    /// coefficient is non-zero.
    pub fn is_well_formed(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(n, c)| *n < self.order && !c.is_zero())
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Sign of the lowest coefficient.
    pub fn leading_sign(&self) -> i32 {
        self.coeffs
            .values()
            .next()
            .map_or(0, |c| if c.is_negative() { -1 } else { 1 })
    }
}

/// `q`, `q^3`, `q^-2` or `q^(15/8)`.
fn power(e: &Q) -> String {
    if e.is_one() {
        "q".into()
    } else if e.is_integer() {
        format!("q^{e}")
    } else {
        format!("q^({})", fmt_q(e))
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = fmt_q(&mag);
            if e.is_zero() {
                f.write_str(&coeff)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{coeff}*")?;
                }
                f.write_str(&power(&e))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({})", power(&self.order_exponent()))
    }
}
