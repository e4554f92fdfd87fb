//! Brute-force oracles and generators shared by the property and acceptance
//! tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_traits::ToPrimitive;
use proptest::prelude::*;

use lieconf::liealg::{algebra, AlgebraType, SimpleAlgebra};
use lieconf::number::Q;
use lieconf::reps::{weight_system_int, weyl_dim_int, Limits};

pub const SMALL_TYPES: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

pub fn small_type() -> impl Strategy<Value = AlgebraType> {
    prop::sample::select(SMALL_TYPES.to_vec()).prop_map(|s| s.parse().unwrap())
}

pub fn weight_for(ty: AlgebraType, max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=max, ty.rank())
}

pub fn irrep(max_dim: u64, max_coord: i64) -> impl Strategy<Value = (AlgebraType, Vec<i64>)> {
    small_type()
        .prop_flat_map(move |ty| (Just(ty), weight_for(ty, max_coord)))
        .prop_filter("dimension cap", move |(ty, w)| {
            weyl_dim_int(&algebra(*ty), w).to_u64().unwrap() <= max_dim
        })
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Weyl group elements applied to a regular weight, with signs.
pub fn signed_orbit(alg: &SimpleAlgebra, regular: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let mut seen: HashMap<Vec<i64>, i64> = HashMap::new();
    seen.insert(regular.to_vec(), 1);
    let mut stack = vec![regular.to_vec()];
    while let Some(w) = stack.pop() {
        let s = seen[&w];
        for i in 0..w.len() {
            let mut v = w.clone();
            alg.reflect(i, &mut v);
            if !seen.contains_key(&v) {
                seen.insert(v.clone(), -s);
                stack.push(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// Kostant partition function: ways to write `beta` (simple-root coordinates)
/// as a sum of positive roots `roots[i..]`.
pub fn partitions(
    beta: &[i64],
    roots: &[Vec<i64>],
    i: usize,
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> u64 {
    if beta.iter().any(|&c| c < 0) {
        return 0;
    }
    if i == roots.len() {
        return u64::from(beta.iter().all(|&c| c == 0));
    }
    if let Some(&v) = memo.get(&(beta.to_vec(), i)) {
        return v;
    }
    let mut total = 0;
    let mut rest = beta.to_vec();
    while rest.iter().all(|&c| c >= 0) {
        total += partitions(&rest, roots, i + 1, memo);
        rest = sub(&rest, &roots[i]);
    }
    memo.insert((beta.to_vec(), i), total);
    total
}

/// Weight multiplicity from the Weyl character formula expanded through the
/// Kostant partition function.
pub fn kostant_mult(
    alg: &SimpleAlgebra,
    orbit: &[(Vec<i64>, i64)],
    mu: &[i64],
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> i64 {
    let roots: Vec<Vec<i64>> = alg.roots().iter().map(|r| r.alpha.clone()).collect();
    let mr = add(mu, alg.rho_int());
    let mut m = 0i64;
    for (w, s) in orbit {
        let beta = alg.weight(&sub(w, &mr)).unwrap();
        let coords = alg.to_root_basis(&beta).unwrap();
        if coords.iter().any(|c| !c.is_integer()) {
            continue;
        }
        let ints: Vec<i64> = coords
            .iter()
            .map(|c| c.to_integer().to_i64().unwrap())
            .collect();
        m += s * partitions(&ints, &roots, 0, memo) as i64;
    }
    m
}

/// Weight multiset of `L(a) x L(b)` peeled into irreducibles using only
/// weight systems.
pub fn brute_tensor(alg: &SimpleAlgebra, a: &[i64], b: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let lim = Limits::default();
    let wa = weight_system_int(alg, a, &lim).unwrap();
    let wb = weight_system_int(alg, b, &lim).unwrap();
    let mut pool: HashMap<Vec<i64>, i64> = HashMap::new();
    for (x, m) in wa.iter() {
        for (y, n) in wb.iter() {
            *pool.entry(add(x, y)).or_insert(0) += (m * n) as i64;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        pool.retain(|_, m| *m != 0);
        // a weight maximal in the dominance order among those left
        let top = pool
            .keys()
            .filter(|w| w.iter().all(|&c| c >= 0))
            .max_by_key(|w| {
                let c = alg.to_root_basis(&alg.weight(w).unwrap()).unwrap();
                c.iter().fold(Q::from_integer(0.into()), |acc, x| acc + x)
            })
            .cloned();
        let Some(top) = top else { break };
        let m = pool[&top];
        assert!(m > 0, "negative leftover multiplicity at {top:?}");
        out.insert(top.clone(), m as u64);
        for (w, n) in weight_system_int(alg, &top, &lim).unwrap().iter() {
            *pool.entry(w.clone()).or_insert(0) -= m * n as i64;
        }
    }
    assert!(pool.is_empty());
    out
}

pub fn pair_under(cap: u64) -> impl Strategy<Value = (AlgebraType, Vec<i64>, Vec<i64>)> {
    small_type()
        .prop_flat_map(|ty| (Just(ty), weight_for(ty, 2), weight_for(ty, 2)))
        .prop_filter("product cap", move |(ty, a, b)| {
            let alg = algebra(*ty);
            (weyl_dim_int(&alg, a) * weyl_dim_int(&alg, b))
                .to_u64()
                .unwrap()
                <= cap
        })
}

/// Freudenthal multiplicities against the Kostant expansion of the Weyl
/// character, plus the Weyl dimension.
pub fn check_freudenthal(ty: AlgebraType, l: &[i64]) -> Result<(), String> {
    let alg = algebra(ty);
    let ws = weight_system_int(&alg, l, &Limits::default()).map_err(|e| e.to_string())?;
    let dim = weyl_dim_int(&alg, l).to_u64().unwrap();
    if ws.total() != dim {
        return Err(format!(
            "{ty} {l:?}: {} weights, dimension {dim}",
            ws.total()
        ));
    }
    let orbit = signed_orbit(&alg, &add(l, alg.rho_int()));
    let mut memo = HashMap::new();
    let mut checked = std::collections::HashSet::new();
    for (mu, m) in ws.iter() {
        let (dom, _) = alg.to_dominant_chamber(mu);
        if checked.insert(dom.clone()) {
            let k = kostant_mult(&alg, &orbit, &dom, &mut memo);
            if k != m as i64 {
                return Err(format!(
                    "{ty} {l:?} at {dom:?}: Freudenthal {m}, Kostant {k}"
                ));
            }
        }
    }
    Ok(())
}

pub fn check_tensor(ty: AlgebraType, a: &[i64], b: &[i64]) -> Result<(), String> {
    let alg = algebra(ty);
    let wa = alg.weight(a).unwrap();
    let wb = alg.weight(b).unwrap();
    let got = lieconf::reps::tensor_decompose(&alg, &wa, &wb).map_err(|e| e.to_string())?;
    let got: BTreeMap<Vec<i64>, u64> = got.iter().map(|(w, m)| (w.clone(), m)).collect();
    let want = brute_tensor(&alg, a, b);
    if got != want {
        return Err(format!(
            "{ty} {a:?} x {b:?}: Klimyk {got:?}, brute force {want:?}"
        ));
    }
    Ok(())
}

pub fn check_squares(ty: AlgebraType, l: &[i64]) -> Result<(), String> {
    use lieconf::reps::{square_decompose, tensor_decompose, SquarePart};
    let alg = algebra(ty);
    let w = alg.weight(l).unwrap();
    let part = |p| square_decompose(&[alg.clone()], &[w.clone()], p).map_err(|e| e.to_string());
    let mut both = part(SquarePart::Alt)?;
    both.merge(&part(SquarePart::Sym)?)
        .map_err(|e| e.to_string())?;
    let full = tensor_decompose(&alg, &w, &w).map_err(|e| e.to_string())?;
    if both.components() != full.components() {
        return Err(format!("{ty} {l:?}: Lambda^2 + S^2 differs from V x V"));
    }
    Ok(())
}
