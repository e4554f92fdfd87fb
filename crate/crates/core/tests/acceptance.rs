//! Acceptance suite. Each test prints one `PASS` or `FAIL` line straight to
//! stdout, so the lines survive the harness's output capture.

use std::io::Write;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

mod common;
use common::*;

use lieconf::conformal::report::{
    admissible, global_cases, Expectation, FAMILY_RANGE, TABLE2_FAMILIES,
};
use lieconf::conformal::{
    a1_exclusion_check, ap_check, ap_check_restricted, search_sl_irreducible,
    search_so_irreducible, solve_levels, table1_scan, LevelSolution,
};
use lieconf::embed::{dual_pair_branching, dual_pair_stated, Catalog, DualPairFamily};
use lieconf::liealg::{algebra, AlgebraType, Family};
use lieconf::number::{frac, q, Q};
use lieconf::qseries::{compare_sides, identity_sides, Identity, PuiseuxSeries, DENOM};
use lieconf::reps::{dynkin_index, Convention};

/// Order to which the character identities are checked.
const QSERIES_ORDER: i64 = 100;
/// Random samples for the oracle equivalences.
const FREUDENTHAL_SAMPLES: usize = 30;
const TENSOR_SAMPLES: usize = 20;
const SQUARE_SAMPLES: usize = 15;
const MAX_IRREP_DIM: u64 = 2000;
const MAX_TENSOR_DIM: u64 = 5000;
/// Types covered by the structural invariants.
const STRUCTURAL_TYPES: usize = 33;

fn verdict(n: u32, name: &str, outcome: Result<String, String>) {
    let line = match &outcome {
        Ok(detail) => format!("PASS criterion {n} ({name}): {detail}\n"),
        Err(detail) => format!("FAIL criterion {n} ({name}): {detail}\n"),
    };
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
    if let Err(detail) = outcome {
        panic!("criterion {n} failed: {detail}");
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The level set of each table2 row and the subset that is critical,
/// written out from the row formulas.
fn table2_expected(family: DualPairFamily, n: i64, m: i64) -> (Vec<Q>, Vec<Q>) {
    let (levels, critical) = match family {
        DualPairFamily::SlSl => (vec![q(1), q(-1)], if n == m { vec![q(-1)] } else { vec![] }),
        DualPairFamily::SpSp => {
            let k = frac(-2 * (m * n - 1), 2 * m * n - m - n);
            let crit = if n == m {
                vec![frac(-(n + 1), n)]
            } else {
                vec![]
            };
            (vec![q(1), k], crit)
        }
        DualPairFamily::SoSo => {
            let k = frac(4 - m * n, m + n + m * n);
            let crit = if n == m { vec![frac(2 - n, n)] } else { vec![] };
            (vec![q(1), k], crit)
        }
        DualPairFamily::SpSo => {
            let k = frac(m * n + 2, 2 * m * n + 2 * n - m);
            let crit = if m == 2 * n + 2 {
                vec![frac(-1, 2)]
            } else {
                vec![]
            };
            (vec![frac(-1, 2), k], crit)
        }
        DualPairFamily::BB => {
            let crit = if n == m { vec![q(1 - 2 * n)] } else { vec![] };
            (vec![q(1), q(1 - m - n)], crit)
        }
        other => panic!("{other:?} is not a table2 row"),
    };
    let mut levels = levels;
    levels.sort();
    levels.dedup();
    (levels, critical)
}

#[test]
fn criterion_1_table2() {
    let run = || -> Result<String, String> {
        let mut rows = 0;
        for family in TABLE2_FAMILIES {
            for n in FAMILY_RANGE {
                for m in FAMILY_RANGE {
                    if !admissible(family, n, m) {
                        continue;
                    }
                    let case = dual_pair_stated(family, n, m).map_err(|e| e.to_string())?;
                    let solved = solve_levels(&algebra(case.ambient), &case.sub)
                        .map_err(|e| e.to_string())?;
                    let mut got = Vec::new();
                    let mut crit = Vec::new();
                    for c in &solved {
                        let v = c
                            .value
                            .as_rational()
                            .ok_or_else(|| format!("{family:?} {n},{m}: surd level {}", c.value))?;
                        if c.is_critical() {
                            crit.push(v.clone());
                        }
                        got.push(v);
                    }
                    got.sort();
                    let (want, want_crit) = table2_expected(family, n as i64, m as i64);
                    ensure(got == want, || {
                        format!(
                            "{} {n},{m}: levels {got:?}, expected {want:?}",
                            family.name()
                        )
                    })?;
                    ensure(crit == want_crit, || {
                        format!(
                            "{} {n},{m}: critical {crit:?}, expected {want_crit:?}",
                            family.name()
                        )
                    })?;
                    rows += 1;
                }
            }
        }
        Ok(format!("{rows} rows match, critical flags included"))
    };
    verdict(1, "table2 levels", run());
}

/// The second candidate of the `spsp`, `soso` and `spso` rows, which must
/// fail the criterion for `n != m`.
fn rejected_candidates() -> Vec<(DualPairFamily, usize, usize, Q)> {
    let mut out = Vec::new();
    for n in 2..=5usize {
        for m in 2..=5usize {
            let (ni, mi) = (n as i64, m as i64);
            if n != m {
                out.push((
                    DualPairFamily::SpSp,
                    n,
                    m,
                    frac(-2 * (mi * ni - 1), 2 * mi * ni - mi - ni),
                ));
            }
            if n != m && admissible(DualPairFamily::SoSo, n, m) {
                out.push((
                    DualPairFamily::SoSo,
                    n,
                    m,
                    frac(4 - mi * ni, mi + ni + mi * ni),
                ));
            }
            if admissible(DualPairFamily::SpSo, n, m) {
                out.push((
                    DualPairFamily::SpSo,
                    n,
                    m,
                    frac(mi * ni + 2, 2 * mi * ni + 2 * ni - mi),
                ));
            }
        }
    }
    out
}

const NON_INTEGRABLE_EXCEPTIONAL: [&str; 5] = [
    "G2xF4-in-E8",
    "F4xA1^3-in-E7",
    "G2xA2^2-in-E6",
    "F4-in-E6",
    "G2xA1^8-in-F4",
];

#[test]
fn criterion_2_ap_balance() {
    let run = || -> Result<String, String> {
        let catalog = Catalog::builtin();
        for label in NON_INTEGRABLE_EXCEPTIONAL {
            ensure(catalog.get(label).is_some(), || {
                format!("{label} missing from the catalog")
            })?;
        }
        let cases = global_cases(&catalog).map_err(|e| e.to_string())?;
        let mut balanced = 0;
        let mut seen = Vec::new();
        for (case, k, expected, _) in &cases {
            if *expected != Expectation::Balanced {
                continue;
            }
            let r = ap_check(case, k);
            ensure(r.all_balanced, || {
                format!("{} at {k}: {:?}", case.label, r.per_component)
            })?;
            ensure(r.per_component.iter().all(|c| c.lhs == q(1)), || {
                format!("{} at {k}", case.label)
            })?;
            seen.push(case.label.clone());
            balanced += 1;
        }
        ensure(balanced >= 20, || format!("only {balanced} balanced cases"))?;
        for label in NON_INTEGRABLE_EXCEPTIONAL {
            ensure(seen.iter().any(|s| s == label), || {
                format!("{label} not checked")
            })?;
        }
        let rejected = rejected_candidates();
        for (family, n, m, k) in &rejected {
            let case = dual_pair_branching(*family, *n, *m).map_err(|e| e.to_string())?;
            let r = ap_check(&case, k);
            ensure(!r.all_balanced && r.critical_factors.is_empty(), || {
                format!("{} {n},{m} at {k}: {r:?}", family.name())
            })?;
        }
        Ok(format!(
            "{balanced} cases balance exactly, {} second candidates rejected",
            rejected.len()
        ))
    };
    verdict(2, "AP balance", run());
}

#[test]
fn criterion_3_search_drivers() {
    let run = || -> Result<String, String> {
        let so: Vec<(String, String)> = search_so_irreducible()
            .findings
            .into_iter()
            .map(|f| (f.algebra, f.module))
            .collect();
        let want = vec![
            ("B3".to_string(), "w3".to_string()),
            ("G2".to_string(), "w1".to_string()),
        ];
        ensure(so == want, || format!("so(V) search gave {so:?}"))?;

        let sl: Vec<(String, String)> = search_sl_irreducible(8)
            .findings
            .into_iter()
            .map(|f| (f.algebra, f.module))
            .collect();
        let want: Vec<(String, String)> = (2..=8)
            .map(|n| (format!("C{n}"), "w1".to_string()))
            .collect();
        ensure(sl == want, || format!("sl(V) search gave {sl:?}"))?;

        let table1 = [
            ("B3", "w1"),
            ("B4", "w1"),
            ("C3", "w2"),
            ("C4", "w2"),
            ("F4", "w4"),
            ("G2", "w1"),
        ];
        for (t, mu) in table1 {
            let got: Vec<String> = table1_scan(&algebra(t.parse().unwrap()), 3)
                .iter()
                .map(|w| w.omega_string())
                .collect();
            ensure(got == [mu], || format!("table1 scan of {t}: {got:?}"))?;
        }
        for t in ["A2", "A3", "D4", "E6", "E7", "E8"] {
            let got = table1_scan(&algebra(t.parse().unwrap()), 3);
            ensure(got.is_empty(), || {
                format!("table1 scan of {t} is not empty")
            })?;
        }
        Ok("so(V): B3 w3, G2 w1; sl(V): C2..C8 w1; table1 reproduced".into())
    };
    verdict(3, "search drivers", run());
}

#[test]
fn criterion_4_a1_exclusions() {
    let run = || -> Result<String, String> {
        let surd = |s: &str| s.parse::<LevelSolution>().unwrap();
        let kp = "(479+3*sqrt(46265))/1524";
        let km = "(479-3*sqrt(46265))/1524";
        let pairs: Vec<(i64, LevelSolution)> = vec![
            (1240, surd("64/75")),
            (760, surd("8488/23275")),
            (520, surd("5788/15925")),
            (389, surd("16/39")),
            (231, surd("872/2145")),
            (16, surd("-119/474")),
            (7, surd("-26/29")),
            (24, surd(kp)),
            (24, surd(km)),
            (15, surd(kp)),
            (15, surd(km)),
            // the levels that actually solve the central-charge equations
            (1240, surd("64/175")),
            (399, surd("16/39")),
        ];
        for (d, k) in &pairs {
            let r = a1_exclusion_check(&q(*d), k);
            ensure(
                r.excluded() && !r.printed_critical && !r.casimir_critical,
                || format!("d = {d}, k = {k}: {r:?}"),
            )?;
        }
        Ok(format!(
            "{} (d, k) pairs excluded under both variants",
            pairs.len()
        ))
    };
    verdict(4, "A1 exclusions", run());
}

#[test]
fn criterion_5_qseries() {
    let run = || -> Result<String, String> {
        for which in Identity::ALL {
            let (lhs, rhs) = identity_sides(which, QSERIES_ORDER).map_err(|e| e.to_string())?;
            let v = compare_sides(&which.to_string(), QSERIES_ORDER, &lhs, &rhs);
            ensure(v.holds, || format!("{which} fails at q^{:?}", v.mismatch))?;
            if which == Identity::Thm92 {
                let alt =
                    lieconf::qseries::weyl_m3_alt(QSERIES_ORDER).map_err(|e| e.to_string())?;
                ensure(lhs.first_mismatch(&alt).is_none(), || {
                    "the two forms of ch M_(3) differ".into()
                })?;
            }
            // bump one coefficient of the left side at an exponent that
            // occurs in the series
            let (n, _) = lhs
                .raw_terms()
                .nth(lhs.len() / 2)
                .ok_or_else(|| format!("{which}: empty expansion"))?;
            let bump = PuiseuxSeries::monomial(DENOM, n, q(1), lhs.order());
            let mutated = compare_sides(&which.to_string(), QSERIES_ORDER, &lhs.add(&bump), &rhs);
            ensure(
                !mutated.holds && mutated.mismatch == Some(frac(n, DENOM)),
                || {
                    format!(
                        "{which}: mutation at {n}/{DENOM} reported {:?}",
                        mutated.mismatch
                    )
                },
            )?;
        }
        Ok(format!(
            "delta_eta, eq92, kw, thm92 hold through q^{QSERIES_ORDER}; mutations caught"
        ))
    };
    verdict(5, "q-series identities", run());
}

fn samples<S: Strategy>(strategy: S, count: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..count)
        .map(|_| strategy.new_tree(&mut runner).unwrap().current())
        .collect()
}

#[test]
fn criterion_6_oracles() {
    let run = || -> Result<String, String> {
        for (ty, l) in samples(irrep(MAX_IRREP_DIM, 4), FREUDENTHAL_SAMPLES) {
            check_freudenthal(ty, &l)?;
        }
        for (ty, a, b) in samples(pair_under(MAX_TENSOR_DIM), TENSOR_SAMPLES) {
            check_tensor(ty, &a, &b)?;
        }
        for (ty, l) in samples(irrep(60, 3), SQUARE_SAMPLES) {
            check_squares(ty, &l)?;
        }
        let catalog = Catalog::builtin();
        let mut n = 0;
        for case in catalog.cases() {
            let k = case
                .level
                .clone()
                .ok_or_else(|| format!("{} has no level", case.label))?;
            let a = ap_check(case, &k);
            let b = ap_check_restricted(case, &k);
            ensure(a == b, || {
                format!("{}: the two evaluations differ", case.label)
            })?;
            n += 1;
        }
        Ok(format!(
            "{FREUDENTHAL_SAMPLES} weight systems, {TENSOR_SAMPLES} tensor products, \
             {SQUARE_SAMPLES} squares, {n} catalog evaluations agree"
        ))
    };
    verdict(6, "oracle equivalences", run());
}

fn known_dim(ty: AlgebraType) -> usize {
    let n = ty.rank();
    match ty.family() {
        Family::A => n * (n + 2),
        Family::B | Family::C => n * (2 * n + 1),
        Family::D => n * (2 * n - 1),
        Family::E => [78, 133, 248][n - 6],
        Family::F => 52,
        Family::G => 14,
    }
}

fn known_dual_coxeter(ty: AlgebraType) -> u32 {
    let n = ty.rank() as u32;
    match ty.family() {
        Family::A | Family::C => n + 1,
        Family::B => 2 * n - 1,
        Family::D => 2 * n - 2,
        Family::E => [12, 18, 30][n as usize - 6],
        Family::F => 9,
        Family::G => 4,
    }
}

#[test]
fn criterion_7_structure() {
    let run = || -> Result<String, String> {
        let types = AlgebraType::all_up_to_rank(8);
        ensure(types.len() == STRUCTURAL_TYPES, || {
            format!("{} types up to rank 8", types.len())
        })?;
        for ty in types {
            let alg = algebra(ty);
            let theta = alg.theta();
            let h = q(alg.dual_coxeter() as i64);
            let tt = alg
                .inner_product(&theta, &theta)
                .map_err(|e| e.to_string())?;
            ensure(tt == q(2), || format!("{ty}: (theta, theta) = {tt}"))?;
            let rt = alg
                .inner_product(&alg.rho(), &theta)
                .map_err(|e| e.to_string())?;
            ensure(h == rt + q(1), || {
                format!("{ty}: h = {h}, (rho, theta) + 1 differs")
            })?;
            ensure(alg.dual_coxeter() == known_dual_coxeter(ty), || {
                format!("{ty}: h = {h}")
            })?;
            ensure(alg.dim() == ty.rank() + 2 * alg.roots().len(), || {
                format!("{ty}: dim {}", alg.dim())
            })?;
            ensure(alg.dim() == known_dim(ty), || {
                format!("{ty}: dim {}", alg.dim())
            })?;
            let idx =
                dynkin_index(&alg, &theta, Convention::Normalized).map_err(|e| e.to_string())?;
            ensure(idx == h, || format!("{ty}: adjoint index {idx}"))?;
        }
        Ok(format!("{STRUCTURAL_TYPES} types"))
    };
    verdict(7, "structural invariants", run());
}
