//! Central charges and candidate conformal levels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::surd::{LevelSolution, QSqrt};
use crate::embed::SubalgebraSpec;
use crate::error::{Error, Result};
use crate::liealg::{algebra, SimpleAlgebra};
use crate::number::{exact_sqrt, fmt_q, q, Q};

/// `c_k(g) = k dim g / (k + h^vee)`.
pub fn central_charge(alg: &SimpleAlgebra, k: &Q) -> Result<Q> {
    let h = q(alg.dual_coxeter() as i64);
    let den = k + &h;
    if den.is_zero() {
        return Err(Error::CriticalLevel {
            algebra: alg.ty().to_string(),
            level: fmt_q(k),
            dual_coxeter: alg.dual_coxeter(),
        });
    }
    Ok(k * q(alg.dim() as i64) / den)
}

/// A root of the central-charge equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateLevel {
    pub value: LevelSolution,
    /// Factors `j` with `index_j * k = -h^vee_j`.
    pub critical_factors: Vec<usize>,
    pub ambient_critical: bool,
}

impl CandidateLevel {
    pub fn is_critical(&self) -> bool {
        self.ambient_critical || !self.critical_factors.is_empty()
    }
}

/// Dense polynomial, lowest degree first.
type Poly = Vec<Q>;

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(acc: &mut Poly, p: &Poly, scale: &Q) {
    if acc.len() < p.len() {
        acc.resize(p.len(), Q::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i] += c * scale;
    }
}

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn eval(p: &Poly, x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

/// Synthetic division by `(k - r)`.
fn deflate(p: &Poly, r: &Q) -> Poly {
    let n = p.len() - 1;
    let mut out = vec![Q::zero(); n];
    let mut carry = Q::zero();
    for i in (0..n).rev() {
        carry = &carry * r + &p[i + 1];
        out[i] = carry.clone();
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// A rational root by the rational root theorem, if any.
fn rational_root(p: &Poly) -> Option<Q> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = ints.first()?;
    let an = ints.last()?;
    if a0.is_zero() {
        return Some(Q::zero());
    }
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1, -1] {
                let r = Q::new(&num * sign, den.clone());
                if eval(p, &r).is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}

/// Real roots of a polynomial with at most a quadratic irrational part.
pub fn real_roots(poly: &[Q]) -> Result<Vec<LevelSolution>> {
    let mut p: Poly = poly.to_vec();
    trim(&mut p);
    if p.iter().all(|c| c.is_zero()) {
        return Err(Error::DegenerateEquation(
            "central-charge equation vanishes identically".into(),
        ));
    }
    let mut roots: Vec<LevelSolution> = Vec::new();
    loop {
        let deg = p.len() - 1;
        match deg {
            0 => break,
            1 => {
                roots.push(LevelSolution::rational(&(-&p[0] / &p[1])));
                break;
            }
            2 => {
                roots.extend(quadratic(&p[2], &p[1], &p[0])?);
                break;
            }
            _ => match rational_root(&p) {
                Some(r) => {
                    p = deflate(&p, &r);
                    roots.push(LevelSolution::rational(&r));
                }
                None => return Err(Error::UnsupportedDegree(deg)),
            },
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn quadratic(a: &Q, b: &Q, c: &Q) -> Result<Vec<LevelSolution>> {
    let disc = b * b - q(4) * a * c;
    if disc.is_negative() {
        return Ok(Vec::new());
    }
    let two_a = q(2) * a;
    let x = -b / &two_a;
    // sqrt(N/D) = sqrt(N D) / D
    let nd = disc.numer() * disc.denom();
    let y = Q::new(BigInt::one(), disc.denom().clone()) / &two_a;
    if let Some(s) = exact_sqrt(&nd) {
        let s = Q::from_integer(s) * &y;
        return Ok(vec![
            LevelSolution::rational(&(&x - &s)),
            LevelSolution::rational(&(&x + &s)),
        ]);
    }
    Ok(vec![
        LevelSolution::from_parts(&x, &-y.clone(), &nd)?,
        LevelSolution::from_parts(&x, &y, &nd)?,
    ])
}

/// The equation `sum_j c_{j_j k}(k_j) = c_k(g)` with all denominators
/// `j_j k + h_j` and `k + h` cleared, divided by `k`.
pub fn level_polynomial(ambient: &SimpleAlgebra, sub: &SubalgebraSpec) -> Vec<Q> {
    // each factor: c_j = dim_j j_j k / (j_j k + h_j)
    let dens: Vec<Poly> = sub
        .factors
        .iter()
        .map(|f| vec![q(algebra(f.ty).dual_coxeter() as i64), f.index.clone()])
        .chain(std::iter::once(vec![
            q(ambient.dual_coxeter() as i64),
            Q::one(),
        ]))
        .collect();
    let t = sub.factors.len();
    let mut acc: Poly = vec![Q::zero()];
    for j in 0..=t {
        let others = dens
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .fold(vec![Q::one()], |acc, (_, d)| mul(&acc, d));
        let coeff = if j < t {
            q(algebra(sub.factors[j].ty).dim() as i64) * &sub.factors[j].index
        } else {
            -q(ambient.dim() as i64)
        };
        add_into(&mut acc, &others, &coeff);
    }
    trim(&mut acc);
    acc
}

/// All non-zero levels at which the central charges of the subalgebra and
/// the ambient agree, with critical ones flagged.
pub fn solve_levels(ambient: &SimpleAlgebra, sub: &SubalgebraSpec) -> Result<Vec<CandidateLevel>> {
    let poly = level_polynomial(ambient, sub);
    let roots = real_roots(&poly)?;
    let h = q(ambient.dual_coxeter() as i64);
    Ok(roots
        .into_iter()
        .filter(|r| r.signum() != 0)
        .map(|value| {
            let (critical_factors, ambient_critical) = match value.as_rational() {
                Some(k) => (
                    sub.factors
                        .iter()
                        .enumerate()
                        .filter(|(_, f)| {
                            &f.index * &k + q(algebra(f.ty).dual_coxeter() as i64) == Q::zero()
                        })
                        .map(|(i, _)| i)
                        .collect(),
                    &k + &h == Q::zero(),
                ),
                None => (Vec::new(), false),
            };
            CandidateLevel {
                value,
                critical_factors,
                ambient_critical,
            }
        })
        .collect())
}

/// `sum_j c(k_j) - c_k(g)` evaluated exactly at a (possibly irrational) level.
pub fn central_charge_residual(
    ambient: &SimpleAlgebra,
    sub: &SubalgebraSpec,
    k: &LevelSolution,
) -> Result<QSqrt> {
    let kf = k.to_field();
    let d = kf.d.clone();
    let term = |dim: usize, index: &Q, h: u32| -> Result<QSqrt> {
        let jk = &kf * &QSqrt::from_q(index.clone(), &d);
        let den = &jk + &QSqrt::from_q(q(h as i64), &d);
        Ok(&(&jk * &QSqrt::from_q(q(dim as i64), &d)) * &den.inv()?)
    };
    let mut acc = QSqrt::from_q(Q::zero(), &d);
    for f in &sub.factors {
        let a = algebra(f.ty);
        acc = &acc + &term(a.dim(), &f.index, a.dual_coxeter())?;
    }
    let whole = term(ambient.dim(), &Q::one(), ambient.dual_coxeter())?;
    Ok(&acc - &whole)
}
