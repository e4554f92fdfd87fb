//! The numerical conformality criterion on the orthocomplement.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::embed::BranchingCase;
use crate::liealg::algebra;
use crate::number::{fmt_q, q, Q};
use crate::reps::casimir_int;

/// LHS of the criterion on one component of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentBalance {
    pub index: usize,
    #[serde(serialize_with = "ser_q")]
    pub lhs: Q,
    pub balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct APReport {
    #[serde(serialize_with = "ser_q")]
    pub level: Q,
    pub per_component: Vec<ComponentBalance>,
    pub all_balanced: bool,
    pub critical_factors: Vec<usize>,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

/// Factors `j` with `j_j k + h_j = 0`.
pub fn critical_factors(case: &BranchingCase, k: &Q) -> Vec<usize> {
    case.sub
        .factors
        .iter()
        .enumerate()
        .filter(|(_, f)| (&f.index * k + q(algebra(f.ty).dual_coxeter() as i64)).is_zero())
        .map(|(i, _)| i)
        .collect()
}

fn report(case: &BranchingCase, k: &Q, term: impl Fn(usize, &[i64]) -> Q) -> APReport {
    let critical = critical_factors(case, k);
    let mut per_component = Vec::new();
    if critical.is_empty() {
        for (i, (parts, _)) in case.p.components().iter().enumerate() {
            let lhs: Q = parts.iter().enumerate().map(|(j, w)| term(j, w)).sum();
            let balanced = lhs.is_one();
            per_component.push(ComponentBalance {
                index: i,
                lhs,
                balanced,
            });
        }
    }
    let all_balanced = critical.is_empty() && per_component.iter().all(|c| c.balanced);
    APReport {
        level: k.clone(),
        per_component,
        all_balanced,
        critical_factors: critical,
    }
}

/// `sum_j (mu_j, mu_j + 2 rho_j)_j / (2 (j_j k + h_j))` per component,
/// normalised forms on each factor.
pub fn ap_check(case: &BranchingCase, k: &Q) -> APReport {
    report(case, k, |j, w| {
        let f = &case.sub.factors[j];
        let alg = algebra(f.ty);
        casimir_int(&alg, w) / (q(2) * (&f.index * k + q(alg.dual_coxeter() as i64)))
    })
}

/// The same criterion with the form restricted from the ambient: Casimir
/// eigenvalues `gamma = c / j` and `g = h / j`, evaluated as
/// `sum_j gamma_j / (2 (k + g_j))`.
pub fn ap_check_restricted(case: &BranchingCase, k: &Q) -> APReport {
    report(case, k, |j, w| {
        let f = &case.sub.factors[j];
        let alg = algebra(f.ty);
        let gamma = casimir_int(&alg, w) / &f.index;
        let g = q(alg.dual_coxeter() as i64) / &f.index;
        gamma / (q(2) * (k + g))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{
        dual_pair_branching, irreducible_branching, Catalog, DualPairFamily, Irreducible,
    };
    use crate::number::frac;

    #[test]
    fn g2_in_b3() {
        let case = irreducible_branching(Irreducible::G2InB3).unwrap();
        let r = ap_check(&case, &q(-2));
        assert!(r.all_balanced);
        assert_eq!(r.per_component.len(), 1);
        assert_eq!(r.per_component[0].lhs, q(1));
        assert!(!ap_check(&case, &q(1)).all_balanced);
    }

    #[test]
    fn g2xf4_in_e8() {
        let cat = Catalog::builtin();
        let case = cat.get("G2xF4-in-E8").unwrap();
        let r = ap_check(case, &q(-6));
        assert!(r.all_balanced, "{r:?}");
    }

    #[test]
    fn spso_rejected_level() {
        let case = dual_pair_branching(DualPairFamily::SpSo, 2, 3).unwrap();
        assert!(!ap_check(&case, &frac(8, 13)).all_balanced);
        assert!(ap_check(&case, &frac(-1, 2)).all_balanced);
    }

    #[test]
    fn critical_is_reported() {
        // spsp n = m = 2: factor levels -3 = -h(C2)
        let case = dual_pair_branching(DualPairFamily::SpSp, 2, 2).unwrap();
        let r = ap_check(&case, &frac(-3, 2));
        assert_eq!(r.critical_factors, vec![0, 1]);
        assert!(r.per_component.is_empty());
        assert!(!r.all_balanced);
    }

    #[test]
    fn routes_agree_on_catalog() {
        for case in Catalog::builtin().cases() {
            let k = case.level.clone().unwrap();
            let r = ap_check(case, &k);
            assert!(r.all_balanced, "{}: {r:?}", case.label);
            assert_eq!(r, ap_check_restricted(case, &k), "{}", case.label);
        }
    }
}
