//! Case-elimination searches for simple subalgebras acting irreducibly on
//! the defining module of `so(V)` or `sl(V)`, and the `A1` exclusion test.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::surd::LevelSolution;
use crate::liealg::{algebra, omega_string, AlgebraType, Family, SimpleAlgebra, Weight};
use crate::number::{exact_sqrt, fmt_q, q, Q};
use crate::reps::{
    casimir_int, dynkin_index_int, irreps_of_dimension, square_int, tensor_int, weyl_dim_u64,
    Convention, Limits, SquarePart,
};

/// Coordinate bound for realisability-by-dimension.
pub const REALISATION_BOUND: i64 = 4;

/// Nonzero dominant root-lattice weights with all coordinates at most
/// `coord_bound` and Killing-convention index below 1.
pub fn table1_scan(alg: &SimpleAlgebra, coord_bound: i64) -> Vec<Weight> {
    let r = alg.rank();
    let small = |w: &[i64]| dynkin_index_int(alg, w, Convention::Killing) < Q::one();
    // the index grows with every coordinate, so the admissible set is
    // downward closed and a search upwards from 0 finds all of it
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::from([vec![0i64; r]]);
    seen.insert(vec![0; r]);
    while let Some(w) = queue.pop_front() {
        for i in 0..r {
            let mut next = w.clone();
            next[i] += 1;
            if next[i] > coord_bound || seen.contains(&next) || !small(&next) {
                continue;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    let mut out: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|w| {
            w.iter().any(|&c| c != 0) && alg.in_root_lattice(&alg.weight_from(w)).unwrap_or(false)
        })
        .collect();
    out.sort_by_key(|w| (w.iter().sum::<i64>(), std::cmp::Reverse(w.clone())));
    out.into_iter().map(|w| alg.weight_from(&w)).collect()
}

/// A subalgebra `k` with `V = L(highest)` surviving every test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub algebra: String,
    pub module: String,
    pub dim: u64,
    /// Multiplicity of `L(mu)` in `p`.
    pub p: u64,
    pub mu: String,
}

/// A candidate `(k, mu, v)` eliminated by one of the tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub algebra: String,
    pub mu: String,
    pub dim: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub findings: Vec<Finding>,
    pub rejections: Vec<Rejection>,
}

/// Simple algebras up to `max_rank`, one per isomorphism class among
/// `B2 = C2`.
fn search_types(max_rank: usize) -> Vec<AlgebraType> {
    AlgebraType::all_up_to_rank(max_rank)
        .into_iter()
        .filter(|t| !(t.family() == Family::B && t.rank() == 2))
        .collect()
}

fn wname(w: &[i64]) -> String {
    if w.iter().all(|&c| c == 0) {
        "0".into()
    } else {
        omega_string(w)
    }
}

/// Largest rank scanned by the `so(V)` search.
pub const SO_SEARCH_MAX_RANK: usize = 8;

/// Simple `k` in `so(V)`, `V` irreducible, with `so(V) = k + p L(mu)` at
/// level `-2`: solve the central-charge and Casimir constraints for `v`,
/// then require an irreducible of dimension `v` whose exterior square is
/// exactly `theta + p mu`.
pub fn search_so_irreducible() -> SearchResult {
    let mut out = SearchResult::default();
    for ty in search_types(SO_SEARCH_MAX_RANK) {
        let alg = algebra(ty);
        for mu in table1_scan(&alg, 2) {
            let mu = mu.to_integral().expect("scan yields integral weights");
            so_case(&alg, &mu, &mut out);
        }
    }
    out
}

fn so_case(alg: &Arc<SimpleAlgebra>, mu: &[i64], out: &mut SearchResult) {
    let c = casimir_int(alg, mu);
    let dk = q(alg.dim() as i64);
    let h = q(alg.dual_coxeter() as i64);
    let dim_mu = weyl_dim_u64(alg, mu).expect("small module");
    // c v^2 + (c dk - c - 2 dk h) v + (8 dk h - 4 c dk) = 0
    let a = c.clone();
    let b = &c * &dk - &c - q(2) * &dk * &h;
    let cc = q(8) * &dk * &h - q(4) * &c * &dk;
    let reject = |out: &mut SearchResult, dim: String, reason: String| {
        out.rejections.push(Rejection {
            algebra: alg.ty().to_string(),
            mu: wname(mu),
            dim,
            reason,
        })
    };
    let before = out.findings.len() + out.rejections.len();
    for v in integer_roots(&a, &b, &cc) {
        if v < 5 {
            continue;
        }
        let so_dim = v * (v - 1) / 2;
        let rest = so_dim - alg.dim() as i64;
        if rest <= 0 {
            reject(
                out,
                v.to_string(),
                format!("dim so(V) = {so_dim} leaves no room for p"),
            );
            continue;
        }
        if rest % dim_mu as i64 != 0 {
            reject(
                out,
                v.to_string(),
                format!("dim so(V) - dim k = {rest} is not a multiple of dim L(mu) = {dim_mu}"),
            );
            continue;
        }
        let p = (rest / dim_mu as i64) as u64;
        let modules = irreps_of_dimension(alg, v as u64, REALISATION_BOUND);
        if modules.is_empty() {
            reject(
                out,
                v.to_string(),
                format!(
                    "no irreducible representation of {} has dimension {v}",
                    alg.ty()
                ),
            );
            continue;
        }
        let theta = alg.theta_int().to_vec();
        for m in modules {
            let sq = square_int(
                &[alg.clone()],
                &[m.clone()],
                SquarePart::Alt,
                &Limits::default(),
            );
            let ok = match &sq {
                Ok(d) => {
                    d.len() == if theta == mu { 1 } else { 2 }
                        && d.mult(&[theta.clone()]) == if theta == mu { 1 + p } else { 1 }
                        && (theta == mu || d.mult(&[mu.to_vec()]) == p)
                }
                Err(_) => false,
            };
            if ok {
                out.findings.push(Finding {
                    algebra: alg.ty().to_string(),
                    module: wname(&m),
                    dim: v as u64,
                    p,
                    mu: wname(mu),
                });
            } else {
                reject(
                    out,
                    v.to_string(),
                    format!(
                        "exterior square of L({}) is not theta + {p} L(mu)",
                        wname(&m)
                    ),
                );
            }
        }
    }
    if out.findings.len() + out.rejections.len() == before {
        reject(out, "-".into(), "no integral solution".into());
    }
}

/// Integer roots of `a x^2 + b x + c`.
fn integer_roots(a: &Q, b: &Q, c: &Q) -> Vec<i64> {
    let mut out = Vec::new();
    if a.is_zero() {
        if !b.is_zero() {
            let x = -c / b;
            if x.is_integer() {
                out.extend(x.to_integer().to_i64());
            }
        }
        return out;
    }
    let disc = b * b - q(4) * a * c;
    if disc.is_negative() {
        return out;
    }
    let nd: BigInt = disc.numer() * disc.denom();
    if let Some(s) = exact_sqrt(&nd) {
        let s = Q::from_integer(s) / Q::from_integer(disc.denom().clone());
        for x in [(-b - &s) / (q(2) * a), (-b + &s) / (q(2) * a)] {
            if x.is_integer() {
                if let Some(v) = x.to_integer().to_i64() {
                    if !out.contains(&v) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Simple `k` in `sl(V)`, `V` irreducible, conformal at level `-1`: `v` from
/// the Casimir constraint, then an irreducible of dimension `v` with
/// `V (x) V* = 0 + theta + p mu`.
pub fn search_sl_irreducible(max_rank: usize) -> SearchResult {
    let mut out = SearchResult::default();
    for ty in search_types(max_rank) {
        let alg = algebra(ty);
        for mu in table1_scan(&alg, 2) {
            let mu = mu.to_integral().expect("scan yields integral weights");
            sl_case(&alg, &mu, &mut out);
        }
    }
    out
}

fn sl_case(alg: &Arc<SimpleAlgebra>, mu: &[i64], out: &mut SearchResult) {
    let c = casimir_int(alg, mu);
    let dk = q(alg.dim() as i64);
    let h = q(alg.dual_coxeter() as i64);
    let reject = |out: &mut SearchResult, dim: String, reason: String| {
        out.rejections.push(Rejection {
            algebra: alg.ty().to_string(),
            mu: wname(mu),
            dim,
            reason,
        })
    };
    let v = q(2) * &dk * &h / &c - q(1) - &dk;
    if !v.is_integer() || v < q(2) {
        reject(out, fmt_q(&v), "v is not an integer above 1".into());
        return;
    }
    let v = v.to_integer().to_i64().expect("small");
    let dim_mu = weyl_dim_u64(alg, mu).expect("small module") as i64;
    let rest = v * v - 1 - alg.dim() as i64;
    if rest <= 0 {
        reject(
            out,
            v.to_string(),
            format!("dim sl(V) = {} leaves no room for p", v * v - 1),
        );
        return;
    }
    if rest % dim_mu != 0 {
        reject(
            out,
            v.to_string(),
            format!("dim sl(V) - dim k = {rest} is not a multiple of dim L(mu) = {dim_mu}"),
        );
        return;
    }
    let p = (rest / dim_mu) as u64;
    let modules = irreps_of_dimension(alg, v as u64, REALISATION_BOUND);
    if modules.is_empty() {
        reject(
            out,
            v.to_string(),
            format!(
                "no irreducible representation of {} has dimension {v}",
                alg.ty()
            ),
        );
        return;
    }
    let theta = alg.theta_int().to_vec();
    let zero = vec![0; alg.rank()];
    for m in modules {
        let dual = alg.dual_highest(&m);
        let t = tensor_int(alg, &m, &dual, &Limits::default());
        let bad = match &t {
            Ok(d) => d
                .iter()
                .map(|(w, _)| w.clone())
                .find(|w| *w != zero && *w != theta && w.as_slice() != mu),
            Err(_) => Some(zero.clone()),
        };
        let ok = bad.is_none()
            && t.as_ref().map_or(false, |d| {
                d.mult(&[zero.clone()]) == 1
                    && if theta == mu {
                        d.mult(&[theta.clone()]) == 1 + p
                    } else {
                        d.mult(&[theta.clone()]) == 1 && d.mult(&[mu.to_vec()]) == p
                    }
            });
        if ok {
            out.findings.push(Finding {
                algebra: alg.ty().to_string(),
                module: wname(&m),
                dim: v as u64,
                p,
                mu: wname(mu),
            });
        } else {
            let reason = match bad {
                Some(w) if t.is_ok() => format!(
                    "L({0}) (x) L({0})* has a component L({1})",
                    wname(&m),
                    wname(&w)
                ),
                _ => format!("L({0}) (x) L({0})* is not 0 + theta + {p} L(mu)", wname(&m)),
            };
            reject(out, v.to_string(), reason);
        }
    }
}

/// Outcome of the `A1` test for one `(d, k)`: whether an `l`-dimensional
/// summand can balance the criterion, under the printed quantity
/// `(l^2/2 + l) / (2 (d k + 1))` and under the Casimir eigenvalue
/// `((l^2 - 1)/2) / (2 (d k + 2))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct A1Exclusion {
    pub printed: Option<u64>,
    pub casimir: Option<u64>,
    pub printed_critical: bool,
    pub casimir_critical: bool,
}

impl A1Exclusion {
    pub fn excluded(&self) -> bool {
        self.printed.is_none() && self.casimir.is_none()
    }
}

/// Integer `l >= 2` with `(l + s)^2 = n`, `n` rational.
fn solve_square(n: &Q, s: i64) -> Option<u64> {
    if !n.is_integer() || n.is_negative() {
        return None;
    }
    let r = exact_sqrt(&n.to_integer())?.to_i64()?;
    let l = r - s;
    (l >= 2).then_some(l as u64)
}

pub fn a1_exclusion_check(d: &Q, k: &LevelSolution) -> A1Exclusion {
    let Some(k) = k.as_rational() else {
        // d k irrational: neither side can be an integer
        return A1Exclusion {
            printed: None,
            casimir: None,
            printed_critical: false,
            casimir_critical: false,
        };
    };
    let dk = d * &k;
    let printed_critical = (&dk + q(1)).is_zero();
    let casimir_critical = (&dk + q(2)).is_zero();
    // l^2 + 2l = 4(dk + 1)  <=>  (l + 1)^2 = 4(dk + 1) + 1
    let printed = if printed_critical {
        None
    } else {
        solve_square(&(q(4) * (&dk + q(1)) + q(1)), 1)
    };
    // l^2 - 1 = 4(dk + 2)
    let casimir = if casimir_critical {
        None
    } else {
        solve_square(&(q(4) * (&dk + q(2)) + q(1)), 0)
    };
    A1Exclusion {
        printed,
        casimir,
        printed_critical,
        casimir_critical,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::algebra_from_str;
    use crate::number::frac;

    fn scan(t: &str) -> Vec<String> {
        table1_scan(&algebra_from_str(t).unwrap(), 3)
            .iter()
            .map(|w| w.omega_string())
            .collect()
    }

    #[test]
    fn table1() {
        assert_eq!(scan("B3"), vec!["w1"]);
        assert_eq!(scan("B4"), vec!["w1"]);
        assert_eq!(scan("C3"), vec!["w2"]);
        assert_eq!(scan("C4"), vec!["w2"]);
        assert_eq!(scan("F4"), vec!["w4"]);
        assert_eq!(scan("G2"), vec!["w1"]);
        for t in ["A2", "A3", "D4", "E6", "E7", "E8"] {
            assert!(scan(t).is_empty(), "{t}");
        }
    }

    #[test]
    fn integer_root_helper() {
        assert_eq!(integer_roots(&q(1), &q(-15), &q(56)), vec![7, 8]);
        assert_eq!(integer_roots(&q(1), &q(0), &q(-2)), Vec::<i64>::new());
        assert_eq!(integer_roots(&q(0), &q(2), &q(-6)), vec![3]);
    }

    #[test]
    fn a1_exclusions() {
        for (d, k) in [
            (1240, frac(64, 75)),
            (389, frac(16, 39)),
            (231, frac(872, 2145)),
        ] {
            assert!(a1_exclusion_check(&q(d), &LevelSolution::rational(&k)).excluded());
        }
        // l^2 + 2l = 4 (dk + 1) with l = 3: dk = 11/4
        let r = a1_exclusion_check(&q(11), &LevelSolution::rational(&frac(1, 4)));
        assert_eq!(r.printed, Some(3));
        // l^2 = 4(dk+2) + 1 with l = 5: dk = 4
        let r = a1_exclusion_check(&q(2), &LevelSolution::rational(&q(2)));
        assert_eq!(r.casimir, Some(5));
        let r = a1_exclusion_check(&q(1), &LevelSolution::rational(&q(-2)));
        assert!(r.casimir_critical && r.excluded());
    }

    #[test]
    fn so_search_survivors() {
        let r = search_so_irreducible();
        let got: Vec<(String, String, u64)> = r
            .findings
            .iter()
            .map(|f| (f.algebra.clone(), f.module.clone(), f.dim))
            .collect();
        assert_eq!(
            got,
            vec![("B3".into(), "w3".into(), 8), ("G2".into(), "w1".into(), 7)]
        );
        assert!(r.rejections.iter().any(|x| x.algebra == "G2"
            && x.dim == "8"
            && x.reason
                .contains("no irreducible representation of G2 has dimension 8")));
        assert!(r
            .rejections
            .iter()
            .any(|x| x.algebra == "F4" && x.reason == "no integral solution"));
    }

    #[test]
    fn sl_search_survivors() {
        let r = search_sl_irreducible(6);
        let got: Vec<(String, String)> = r
            .findings
            .iter()
            .map(|f| (f.algebra.clone(), f.module.clone()))
            .collect();
        let want: Vec<(String, String)> = (2..=6).map(|n| (format!("C{n}"), "w1".into())).collect();
        assert_eq!(got, want);
        assert!(r
            .rejections
            .iter()
            .any(|x| x.algebra == "G2" && x.dim == "13"));
        assert!(r
            .rejections
            .iter()
            .any(|x| x.algebra == "B6" && x.reason.contains("component L(2w6)")));
    }
}
