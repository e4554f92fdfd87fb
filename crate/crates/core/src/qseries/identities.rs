//! Characters of the `sl(2)` modules in the decomposition of the rank-three
//! Weyl vertex algebra, and the identities relating them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::series::{PuiseuxSeries, DENOM};
use crate::error::{Error, Result};
use crate::number::{fmt_q, frac, q, Q};

/// Numerator bound covering every exponent up to and including `q^order`.
fn bound(order: i64) -> i64 {
    DENOM * order + 1
}

/// `phi(q) = prod_{n >= 1} (1 - q^n)`, known below numerator `b`, via the
/// pentagonal number theorem.
fn phi_to(b: i64) -> PuiseuxSeries {
    let mut terms = vec![(0, q(1))];
    let mut k = 1i64;
    loop {
        let sign = if k % 2 == 0 { q(1) } else { q(-1) };
        let lo = k * (3 * k - 1) / 2 * DENOM;
        let hi = k * (3 * k + 1) / 2 * DENOM;
        if lo >= b {
            break;
        }
        terms.push((lo, sign.clone()));
        terms.push((hi, sign));
        k += 1;
    }
    PuiseuxSeries::from_terms(DENOM, b, terms)
}

/// `phi(q)` with every exponent up to `q^order`.
pub fn euler_phi(order: i64) -> PuiseuxSeries {
    phi_to(bound(order))
}

/// `prod_{n=1}^{order} (1 - q^n)` multiplied out term by term.
pub fn euler_phi_product(order: i64) -> PuiseuxSeries {
    let b = bound(order);
    let mut acc = PuiseuxSeries::one(DENOM, b);
    for n in 1..=order {
        let f = PuiseuxSeries::from_terms(DENOM, b, [(0, q(1)), (n * DENOM, q(-1))]);
        acc = acc.mul(&f);
    }
    acc
}

/// `phi(q^{a/c})` known below numerator `b`.
fn phi_sub_to(a: i64, c: i64, b: i64) -> Result<PuiseuxSeries> {
    // exponents of the argument scale by a/c
    let inner = (b * c + a - 1) / a;
    Ok(phi_to(inner).substitute(a, c)?.truncate(b))
}

fn delta_to(b: i64) -> PuiseuxSeries {
    let mut terms = Vec::new();
    let mut n = 0i64;
    while n * (n + 1) / 2 * DENOM < b {
        terms.push((n * (n + 1) / 2 * DENOM, q(1)));
        n += 1;
    }
    PuiseuxSeries::from_terms(DENOM, b, terms)
}

/// `Delta(q) = sum_{n >= 0} q^{n(n+1)/2}`.
pub fn delta(order: i64) -> PuiseuxSeries {
    delta_to(bound(order))
}

fn phi_inv3_to(b: i64) -> Result<PuiseuxSeries> {
    phi_to(b.max(1)).pow(-3)
}

/// `q^{3/8} phi^{-3} (l+1) q^{l(l+2)/2}` from a sufficiently long
/// `phi^{-3}`.
fn m32_from(phi_inv3: &PuiseuxSeries, l: i64, b: i64) -> PuiseuxSeries {
    let s = 3 + DENOM / 2 * l * (l + 2);
    if s >= b {
        return PuiseuxSeries::zero(DENOM, b);
    }
    debug_assert!(phi_inv3.order() >= b - s);
    phi_inv3.truncate(b - s).scale(&q(l + 1)).shift(s)
}

/// `q^{-1/4} phi^{-3} sum_{i=0}^{l} (-1)^{l-i} (2i+1) q^{-i(i+1)/2}`.
fn m4_from(phi_inv3: &PuiseuxSeries, l: i64, b: i64) -> PuiseuxSeries {
    let low = -2 - DENOM / 2 * l * (l + 1);
    let need = b - low;
    debug_assert!(phi_inv3.order() >= need);
    let poly = PuiseuxSeries::from_terms(
        DENOM,
        1,
        (0..=l).map(|i| {
            let sign = if (l - i) % 2 == 0 { 1 } else { -1 };
            (-DENOM / 2 * i * (i + 1), q(sign * (2 * i + 1)))
        }),
    );
    // the polynomial is exact: give it room past every product term
    let poly =
        PuiseuxSeries::from_terms(DENOM, need, poly.raw_terms().map(|(n, c)| (n, c.clone())));
    let poly = poly.shift(-2);
    phi_inv3.truncate(need).mul(&poly).truncate(b)
}

/// Which character to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    /// `L(-(3/2 + l) L0 + l L1)` at level `-3/2`.
    Sl2M32,
    /// `L(-(4 + 2l) L0 + 2l L1)` at level `-4`.
    Sl2M4,
    /// The rank-three Weyl vertex algebra.
    WeylM3,
    Delta,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Sl2M32 => "sl2_m32",
            Model::Sl2M4 => "sl2_m4",
            Model::WeylM3 => "weyl_m3",
            Model::Delta => "delta",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sl2_m32" | "m32" => Ok(Model::Sl2M32),
            "sl2_m4" | "m4" => Ok(Model::Sl2M4),
            "weyl_m3" | "m3" => Ok(Model::WeylM3),
            "delta" => Ok(Model::Delta),
            other => Err(Error::Parse(format!(
                "unknown model `{other}` (expected sl2_m32, sl2_m4, weyl_m3 or delta)"
            ))),
        }
    }
}

fn weyl_m3_to(b: i64) -> Result<PuiseuxSeries> {
    // q^{1/8} (phi(q) / phi(q^{1/2}))^6
    let inner = b - 1;
    let num = phi_to(inner.max(1));
    let den = phi_sub_to(1, 2, inner.max(1))?;
    Ok(num.mul(&den.inv()?).pow(6)?.shift(1).truncate(b))
}

fn weyl_m3_alt_to(b: i64) -> Result<PuiseuxSeries> {
    // q^{1/8} phi(q)^{-6} Delta(q^{1/2})^6
    let inner = (b - 1).max(1);
    let d_half = delta_to(2 * inner).substitute(1, 2)?.truncate(inner);
    Ok(phi_to(inner)
        .pow(-6)?
        .mul(&d_half.pow(6)?)
        .shift(1)
        .truncate(b))
}

/// `ch_q M_(3)` written through `Delta(q^{1/2})`.
pub fn weyl_m3_alt(order: i64) -> Result<PuiseuxSeries> {
    weyl_m3_alt_to(bound(order))
}

/// The character of `model` with every exponent up to `q^order`; `l` is
/// ignored for `WeylM3` and `Delta`.
pub fn character(model: Model, l: i64, order: i64) -> Result<PuiseuxSeries> {
    if l < 0 {
        return Err(Error::Invalid(format!("l must be non-negative, got {l}")));
    }
    let b = bound(order);
    match model {
        Model::Sl2M32 => Ok(m32_from(&phi_inv3_to(b)?, l, b)),
        Model::Sl2M4 => {
            let need = b + 2 + DENOM / 2 * l * (l + 1);
            Ok(m4_from(&phi_inv3_to(need)?, l, b))
        }
        Model::WeylM3 => weyl_m3_to(b),
        Model::Delta => Ok(delta_to(b)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `Delta(q) = phi(q^2)^2 / phi(q)`.
    DeltaEta,
    /// `phi(q)^12 / phi(q^{1/2})^6` as a double sum.
    Eq92,
    /// The Kac-Wakimoto expansion of `Delta(q)^6`.
    Kw,
    /// `ch M_(3) = sum_l ch L_{-3/2}(l) ch L_{-4}(l)`.
    Thm92,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::DeltaEta,
        Identity::Eq92,
        Identity::Kw,
        Identity::Thm92,
    ];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::DeltaEta => "delta_eta",
            Identity::Eq92 => "eq92",
            Identity::Kw => "kw",
            Identity::Thm92 => "thm92",
        })
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "delta_eta" => Ok(Identity::DeltaEta),
            "eq92" => Ok(Identity::Eq92),
            "kw" => Ok(Identity::Kw),
            "thm92" => Ok(Identity::Thm92),
            other => Err(Error::Parse(format!(
                "unknown identity `{other}` (expected delta_eta, eq92, kw or thm92)"
            ))),
        }
    }
}

/// `sum_{l >= 0} sum_{i=0}^{l} (-1)^{l-i} (l+1)(2i+1) q^{(l(l+2) - i(i+1))/2}`
/// over every pair whose exponent is below the bound.
fn eq92_sum(b: i64) -> PuiseuxSeries {
    let mut terms = Vec::new();
    // the smallest exponent for a given l is l/2, at i = l
    let mut l = 0i64;
    while DENOM / 2 * l < b {
        for i in 0..=l {
            let n = DENOM / 2 * (l * (l + 2) - i * (i + 1));
            if n < b {
                let sign = if (l - i) % 2 == 0 { 1 } else { -1 };
                terms.push((n, q(sign * (l + 1) * (2 * i + 1))));
            }
        }
        l += 1;
    }
    PuiseuxSeries::from_terms(DENOM, b, terms)
}

/// `-(1/8) sum_{(j,k) in S} (-1)^{(j-1)(k+1)/4} (j^2 - k^2) q^{(jk-3)/4}` with
/// `j > k >= 1` odd and `(j-k)/2` odd.
fn kw_sum(b: i64) -> Result<PuiseuxSeries> {
    let mut terms = Vec::new();
    let num = |j: i64, k: i64| DENOM / 4 * (j * k - 3);
    let mut k = 1i64;
    while num(k + 2, k) < b {
        let mut j = k + 2;
        while num(j, k) < b {
            let e = (j - 1) * (k + 1);
            if e % 4 != 0 {
                return Err(Error::Inconsistent(format!(
                    "(j-1)(k+1)/4 is not an integer at j = {j}, k = {k}"
                )));
            }
            let sign = if (e / 4) % 2 == 0 { 1 } else { -1 };
            terms.push((num(j, k), frac(-sign * (j * j - k * k), 8)));
            j += 4;
        }
        k += 2;
    }
    Ok(PuiseuxSeries::from_terms(DENOM, b, terms))
}

fn thm92_sum(b: i64) -> Result<PuiseuxSeries> {
    // the l-th product starts at q^{1/8 + l/2}; each factor is expanded
    // just far enough for the product to be known below the bound
    let phi_inv3 = phi_inv3_to(b)?;
    let mut acc = PuiseuxSeries::zero(DENOM, b);
    let mut l = 0i64;
    while 1 + DENOM / 2 * l < b {
        let v32 = 3 + DENOM / 2 * l * (l + 2);
        let v4 = -2 - DENOM / 2 * l * (l + 1);
        let a = m32_from(&phi_inv3, l, b - v4);
        let c = m4_from(&phi_inv3, l, b - v32);
        acc = acc.add(&a.mul(&c).truncate(b));
        l += 1;
    }
    Ok(acc)
}

/// Both sides of an identity, expanded independently, each known through
/// `q^order`.
pub fn identity_sides(which: Identity, order: i64) -> Result<(PuiseuxSeries, PuiseuxSeries)> {
    let b = bound(order);
    let (lhs, rhs) = match which {
        Identity::DeltaEta => {
            let phi2 = phi_sub_to(2, 1, b)?;
            (delta_to(b), phi2.pow(2)?.mul(&phi_to(b).inv()?))
        }
        Identity::Eq92 => {
            let half = phi_sub_to(1, 2, b)?;
            (phi_to(b).pow(12)?.mul(&half.pow(-6)?), eq92_sum(b))
        }
        Identity::Kw => (delta_to(b).pow(6)?, kw_sum(b)?),
        Identity::Thm92 => (weyl_m3_to(b)?, thm92_sum(b)?),
    };
    if lhs.order() < b || rhs.order() < b {
        return Err(Error::Series(format!(
            "{which}: sides known below q^{} and q^{}, need q^{}",
            fmt_q(&lhs.order_exponent()),
            fmt_q(&rhs.order_exponent()),
            fmt_q(&frac(b, DENOM))
        )));
    }
    Ok((lhs.truncate(b), rhs.truncate(b)))
}

/// Outcome of comparing two expansions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub identity: String,
    pub order: i64,
    pub holds: bool,
    /// Smallest exponent where the sides differ.
    #[serde(serialize_with = "ser_opt_q")]
    pub mismatch: Option<Q>,
}

fn ser_opt_q<S: serde::Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&fmt_q(v)),
        None => s.serialize_none(),
    }
}

pub fn compare_sides(
    identity: &str,
    order: i64,
    lhs: &PuiseuxSeries,
    rhs: &PuiseuxSeries,
) -> Verification {
    let mismatch = lhs.first_mismatch(rhs);
    Verification {
        identity: identity.to_string(),
        order,
        holds: mismatch.is_none(),
        mismatch,
    }
}

/// Expands both sides through `q^order` and compares them coefficientwise.
/// For `thm92` the two expressions of `ch M_(3)` are also compared.
pub fn verify_identity(which: Identity, order: i64) -> Result<Verification> {
    if order < 4 {
        return Err(Error::Invalid(format!(
            "order must be at least 4, got {order}"
        )));
    }
    let (lhs, rhs) = identity_sides(which, order)?;
    if which == Identity::Thm92 {
        let alt = weyl_m3_alt_to(bound(order))?;
        let forms = compare_sides("weyl_m3 forms", order, &lhs, &alt);
        if !forms.holds {
            return Ok(Verification {
                identity: which.to_string(),
                ..forms
            });
        }
    }
    Ok(compare_sides(&which.to_string(), order, &lhs, &rhs))
}
